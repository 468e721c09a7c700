#include <iostream>
#include <vector>

#include "qhowe/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhowe::cli::run(args, std::cout, std::cerr);
}
