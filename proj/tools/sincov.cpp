#include <iostream>

#include "sincov/cli.hpp"

int main(int argc, char** argv) { return sincov::run(argc, argv, std::cout, std::cerr); }
