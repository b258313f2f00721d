#include <iostream>

#include "lightsout/cli.hpp"

int main(int argc, char** argv) { return lightsout::run(argc, argv, std::cout, std::cerr); }
