#include <iostream>

#include "gmlat/cli.hpp"

int main(int argc, char** argv) { return gmlat::cli::run(argc, argv, std::cout, std::cerr); }
