#include "cosym/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cosym::cli::run(argc, argv, std::cout, std::cerr); }
