#include <iostream>

#include "hilbpow/cli.hpp"

int main(int argc, char** argv) {
    return hilbpow::cli::run(argc, argv, std::cout, std::cerr);
}
