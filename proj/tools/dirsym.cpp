#include <iostream>

#include "dirsym/cli.hpp"

int main(int argc, char** argv) {
    return dirsym::cli::run(argc, argv, std::cout, std::cerr);
}
