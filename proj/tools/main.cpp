#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = tilecheck::cli::run(args);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
