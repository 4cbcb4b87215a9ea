#include <iostream>

#include "ruzsakit/cli.hpp"

int main(int argc, char** argv) {
    return ruzsakit::cli::run(argc, argv, std::cout, std::cerr);
}
