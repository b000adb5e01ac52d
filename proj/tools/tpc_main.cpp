#include "tpc/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    return tpc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
