#include "strat/ssd.hpp"

int main(int argc, char** argv) { return strat::run_cli(argc, argv); }
