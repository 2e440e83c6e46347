#include <iostream>

#include "latfree/cli.hpp"

int main(int argc, char** argv) { return latfree::run(argc, argv, std::cout, std::cerr); }
