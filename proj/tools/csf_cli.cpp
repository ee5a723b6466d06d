#include <iostream>

#include "csf/cli.hpp"

int main(int argc, char** argv) { return csf::cli::run(argc, argv, std::cout, std::cerr); }
