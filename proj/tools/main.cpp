#include <iostream>
#include <string>
#include <vector>

#include "rlemorph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rlemorph::cli::run(args, std::cout, std::cerr);
}
