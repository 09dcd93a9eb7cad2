#include "latgame/experiment.hpp"
int main() { return 0; }
