#include <iostream>
#include <string>
#include <vector>

#include "fixsub/cli.hpp"

int main(int argc, char** argv) {
    return fixsub::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                           std::cerr, std::cin);
}
