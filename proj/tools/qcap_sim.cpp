#include <iostream>

#include "qcap/cli.hpp"

int main(int argc, char** argv) {
    return qcap::cli::run(argc, argv, std::cout, std::cerr);
}
