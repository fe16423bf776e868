#include <iostream>
#include <string>
#include <vector>

#include "superdom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return superdom::cli::run(std::move(args), std::cout, std::cerr);
}
