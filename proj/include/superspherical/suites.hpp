#pragma once

#include "superspherical/report.hpp"

#include <string>
#include <vector>

namespace superspherical {

// Names accepted by run_suite, without "all".
const std::vector<std::string> &suite_names();

// Runs one named suite at degree bound d on the gl(1|2) pair (plus gl(m|n)
// and q(n) where a suite covers them). Polynomial suites use the fixed bound
// 12 for alpha/beta and 8 for the relation lemmas. Throws
// std::invalid_argument for an unknown name.
CheckReport run_suite(const std::string &name, unsigned d);

// bracket on matrix units == supercommutator of the matrices, all pairs.
bool check_gl_brackets_match_matrices(std::size_t m, std::size_t n);

} // namespace superspherical
