#include "fusionring/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fusionring::cli::run(argc, argv, std::cout, std::cerr); }
