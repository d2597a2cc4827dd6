#include "cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return fifcli::cli_main(argc, argv, std::cout, std::cerr); }
