#include <iostream>

#include "dpd/cli.hpp"

int main(int argc, char** argv) {
    return dpd::cli_main(argc, argv, std::cout, std::cerr);
}
