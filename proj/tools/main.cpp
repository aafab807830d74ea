#include <iostream>

#include "cyclic_spectra/cli.hpp"

int main(int argc, char** argv) { return cyclic_spectra::run_cli(argc, argv, std::cout, std::cerr); }
