#include <iostream>

#include "torsuper/cli.hpp"

int main(int argc, char** argv) { return torsuper::cli::run(argc, argv, std::cout, std::cerr); }
