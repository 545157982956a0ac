#include <iostream>

#include "tailorder/cli.hpp"

int main(int argc, char** argv) { return tailorder::cli::run(argc, argv, std::cout, std::cerr); }
