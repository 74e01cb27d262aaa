#include <iostream>

#include "fbp/cli/app.hpp"

int main(int argc, char** argv) { return fbp::cli::run(argc, argv, std::cout, std::cerr); }
