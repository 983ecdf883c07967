#include <iostream>

#include "econokit/cli.hpp"

int main(int argc, char** argv) {
    return econokit::cli::run_command(argc, argv, std::cout, std::cerr);
}
