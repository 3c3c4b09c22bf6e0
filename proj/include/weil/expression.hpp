// Plain-text test-function expressions, e.g.
//   loggauss(a=1,mu=0,sigma=1) + 0.5*shift(2, logbump(1,0.5,2))
//   gauss2, oddgauss2, gauss(c=1,k=2,alpha=1.5)
// Arguments are keyword or positional; numbers may use e, pi, i and + - * /.
#pragma once

#include <string>

#include "weil/parity_function.hpp"
#include "weil/test_function.hpp"

namespace weil {

TestFunction parse_test_function(const std::string& text);
ParityFunction parse_parity_function(const std::string& text);

}  // namespace weil
