#include <iostream>

#include "qjl_cli/commands.hpp"

int main(int argc, char **argv)
{
    return qjl::cli::run(argc, argv, std::cout, std::cerr);
}
