#include <iostream>

#include "monoconv_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return monoconv::cli::run(args, std::cout, std::cerr);
}
