#include <iostream>
#include <string>
#include <vector>

#include "robdea/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return robdea::run_cli(args, std::cout, std::cerr);
}
