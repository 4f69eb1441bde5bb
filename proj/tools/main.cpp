#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return gl2gauss::cli::run(argc, argv, std::cout, std::cerr); }
