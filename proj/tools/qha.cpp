#include "qha/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return qha::cli::run(argc, argv, std::cout, std::cerr); }
