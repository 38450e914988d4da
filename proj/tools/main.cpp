#include <iostream>

#include "seqtau/cli.hpp"

int main(int argc, char** argv) { return seqtau::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
