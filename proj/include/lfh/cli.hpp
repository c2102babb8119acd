#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lfh/error.hpp"
#include "lfh/mobius.hpp"

namespace lfh {

/// "RE[+|-]IMi" with decimal components, or either part alone: "1.5-0.25i",
/// "i", "-2", "2i". ParseError otherwise.
Complex parse_complex(const std::string& text);

/// Comma-separated complex literals, exactly `count` of them.
std::vector<Complex> parse_complex_list(const std::string& text, std::size_t count);

/// "a,b,c,d".
RiemannMap parse_tau(const std::string& text);
/// "lambda,r"; a zero slope gives the constant symbol r.
AffineSymbol parse_symbol(const std::string& text);

/// 0 success, 1 suite failure, 2 bad input, 3 degenerate map or pole in the
/// disc, 4 point outside the domain, 5 any other numerical failure.
int exit_code_for(ErrorCode code);

/// Entry point for the lfh executable. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfh
