#include <iostream>

#include "mlnet/cli.hpp"

int main(int argc, char** argv) {
    return mlnet::run_cli(argc, argv, std::cout, std::cerr);
}
