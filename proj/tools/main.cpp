#include "cli.h"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lpbn::cli::run(args, std::cin, std::cout, std::cerr, std::getenv("LPBN_BUDGET"));
}
