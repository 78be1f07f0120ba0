/* Thin wrapper around the library CLI entry point. */

#include <iostream>

#include "branchq/cli.hpp"

int main(int argc, char** argv) {
    return branchq::run_cli(argc, argv, std::cout, std::cerr);
}
