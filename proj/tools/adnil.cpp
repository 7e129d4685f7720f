#include <iostream>

#include "adnil/cli.hpp"

int main(int argc, char** argv) {
    return adnil::cli::run(argc, argv, std::cout, std::cerr);
}
