#include <iostream>

#include "hankel_fh/cli_run.hpp"

int main(int argc, char** argv) { return hankel_fh::cli::run_cli(argc, argv, std::cout, std::cerr); }
