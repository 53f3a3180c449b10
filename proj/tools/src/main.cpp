#include <iostream>
#include <string>
#include <vector>

#include "foxdiv_app/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return foxdiv::app::run(args, std::cout, std::cerr);
}
