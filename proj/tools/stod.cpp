#include <iostream>

#include "stod/cli.hpp"

int main(int argc, char **argv)
{
  return stod::run_cli(argc, argv, std::cout, std::cerr);
}
