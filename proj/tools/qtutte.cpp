#include <iostream>

#include "qtutte/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qtutte::run_cli(args, std::cout, std::cerr);
}
