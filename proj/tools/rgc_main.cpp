#include <iostream>

#include "rgc/cli.hpp"

int main(int argc, char** argv) {
    return rgc::cli::run_main(argc, argv, std::cout, std::cerr);
}
