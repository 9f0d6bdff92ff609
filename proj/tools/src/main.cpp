#include <iostream>

#include "gr/tools/cli.hpp"

int main(int argc, char** argv) { return gr::tools::run_cli(argc, argv, std::cout, std::cerr); }
