#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latgame {

/// Raised when an adaptive numerical routine cannot reach its tolerance.
/// Carries the error estimate that was actually achieved.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const { return achieved_error_; }

  private:
    double achieved_error_;
};

/// Raised by configuration parsing/validation. Collects every violated
/// field so a bad config is reported in one pass.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid configuration:";
        for (const auto& s : v) {
            out += "\n  - ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

} // namespace latgame
