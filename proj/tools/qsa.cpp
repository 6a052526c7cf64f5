#include <iostream>

#include "qsa/decide.hpp"

int main(int argc, char** argv) { return qsa::run_cli(argc, argv, std::cout, std::cerr); }
