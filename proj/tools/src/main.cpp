#include <iostream>

#include "pluricalc_cli/commands.hpp"

int main(int argc, char** argv) { return pluricalc::cli::run(argc, argv, std::cout, std::cerr); }
