#include <iostream>

#include "vacpol/cli.hpp"

int main(int argc, char** argv) { return vacpol::cli::run(argc, argv, std::cout, std::cerr); }
