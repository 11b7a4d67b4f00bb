#include <iostream>
#include <vector>

#include "trideg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trideg::run_cli(args, std::cout, std::cerr);
}
