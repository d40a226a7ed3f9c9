#include "kunum/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return kunum::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
