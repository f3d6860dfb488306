#include <iostream>

#include "sbi/cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sbi::run_cli(args, std::cin, std::cout, std::cerr);
}
