#include <iostream>

#include "sperner_lab/lab.hpp"

int main(int argc, char** argv) {
  return sperner::lab::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
