#include <iostream>

#include "wilfkit/cli.hpp"

int main(int argc, char** argv) { return wilfkit::cli::run(argc, argv, std::cout, std::cerr); }
