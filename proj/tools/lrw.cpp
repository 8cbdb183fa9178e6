#include <iostream>

#include "lrw/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lrw::cli::run(args, std::cout, std::cerr);
}
