#include <iostream>

#include "raf/commands.hpp"

int main(int argc, char** argv) { return raf::cli::run(argc, argv, std::cout, std::cerr); }
