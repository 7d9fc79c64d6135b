#include <iostream>
#include <vector>

#include "crossline/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return crossline::run_cli(args, std::cout, std::cerr);
}
