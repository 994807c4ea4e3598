#include "ramcalc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ram::cli::run_command(args, std::cout, std::cerr);
}
