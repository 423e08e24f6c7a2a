#include <iostream>

#include "f2rp/cli.hpp"

int main(int argc, char** argv) { return f2rp::cli_run(argc, argv, std::cout, std::cerr); }
