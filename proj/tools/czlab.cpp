#include "czlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return czlab::main_entry(argc, argv, std::cout, std::cerr);
}
