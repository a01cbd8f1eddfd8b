#include <iostream>
#include <string>
#include <vector>

#include "z4lcd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return z4lcd::cli::run(args, std::cout, std::cerr);
}
