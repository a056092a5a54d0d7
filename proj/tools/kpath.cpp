#include <iostream>

#include "kpath/cli.hpp"

int main(int argc, char** argv)
{
    return kpath::cli::run(argc, argv, std::cout, std::cerr);
}
