#include <iostream>

#include "natq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return natq::run_command(args, std::cout, std::cerr);
}
