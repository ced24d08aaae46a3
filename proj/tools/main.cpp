#include <iostream>

#include "tvbounds/cli.hpp"

int main(int argc, char** argv) {
    return tvbounds::run_cli(argc, argv, std::cout, std::cerr);
}
