#include <iostream>

#include "geogrowth/cli.hpp"

int main(int argc, char** argv) { return geogrowth::cli::run_cli(argc, argv, std::cout, std::cerr); }
