#include <iostream>

#include "crane/commands.hpp"

int main(int argc, char** argv) { return crane::run_cli(argc, argv, std::cout, std::cerr); }
