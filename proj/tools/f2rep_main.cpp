#include <iostream>

#include "f2rep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return f2rep::cli::run(args, std::cout, std::cerr);
}
