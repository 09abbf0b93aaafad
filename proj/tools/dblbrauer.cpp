#include <iostream>

#include "dblbrauer/cli/dispatch.hpp"

int main(int argc, char** argv) { return dblbrauer::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
