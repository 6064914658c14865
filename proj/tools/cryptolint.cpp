#include <iostream>

#include "cryptolint/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cryptolint::cli::run(args, std::cout, std::cerr);
}
