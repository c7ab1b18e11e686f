#include <iostream>
#include <vector>

#include "locker/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return locker::cli::run(args, std::cout, std::cerr);
}
