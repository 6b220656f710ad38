#include <iostream>

#include "kpan/cli.hpp"

int main(int argc, char** argv) {
    return kpan::cli::run(argc, argv, std::cout, std::cerr);
}
