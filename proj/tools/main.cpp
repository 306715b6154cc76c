#include <iostream>

#include "hazelab/cli.hpp"

int main(int argc, char** argv) {
    return hazelab::cli::run(argc, argv, std::cout, std::cerr);
}
