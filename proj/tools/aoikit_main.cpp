#include <iostream>

#include "aoi/cli.hpp"

int main(int argc, char** argv) {
    return aoi::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
