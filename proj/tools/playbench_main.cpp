#include <iostream>

#include "playbench/frontends/cli.hpp"

int main(int argc, char** argv) { return playbench::frontends::cli_main(argc, argv, std::cout, std::cerr); }
