#include "bidisk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bidisk::cli::run(argc, argv, std::cout, std::cerr); }
