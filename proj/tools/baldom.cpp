#include <iostream>

#include <baldom/cli.hpp>

int main(int argc, char** argv) {
  return baldom::cli::run(argc, argv, std::cout, std::cerr);
}
