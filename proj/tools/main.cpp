#include <iostream>

#include "horadam/cli.hpp"

int main(int argc, char** argv) { return horadam::cli::run(argc, argv, std::cout, std::cerr); }
