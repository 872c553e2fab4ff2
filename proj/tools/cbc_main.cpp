#include <iostream>
#include <string>
#include <vector>

#include "cbc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cbc::cli::run(args, std::cout, std::cerr);
}
