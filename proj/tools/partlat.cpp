#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return partlat::cli::run(args, partlat::cli::Caps::from_environment(), std::cout, std::cerr);
}
