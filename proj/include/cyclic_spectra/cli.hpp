#pragma once

#include <ostream>

namespace cyclic_spectra {

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cyclic_spectra
