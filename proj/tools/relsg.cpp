#include <iostream>

#include "relsg/cli.hpp"

int main(int argc, char** argv) { return relsg::cli::main(argc, argv, std::cout, std::cerr); }
