#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mrb::cli {

//! Runs one command line (without the program name). Reports go to out; in text mode input
//! errors go to err. Returns 0 on pass, 1 on a mathematical failure, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrb::cli
