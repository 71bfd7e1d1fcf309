#include <iostream>
#include <vector>

#include "c4gb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return c4gb::run_cli(std::move(args), std::cout, std::cerr);
}
