#include "cubicnef/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return cubicnef::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
