#include <iostream>
#include <vector>

#include "slcdual/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return slcdual::run_cli(args, std::cout, std::cerr);
}
