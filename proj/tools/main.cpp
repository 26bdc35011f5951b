#include "ilvr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ilvr::cli::run(argc, argv, std::cout, std::cerr);
}
