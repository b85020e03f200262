#include <iostream>

#include "excmono/cli.hpp"

int main(int argc, char** argv) { return excmono::run_cli(argc, argv, std::cout, std::cerr); }
