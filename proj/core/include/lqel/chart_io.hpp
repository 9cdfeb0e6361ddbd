#pragma once

#include <string>

#include "lqel/chart.hpp"

namespace lqel {

// Expression grammar (explicit '*', no implicit products):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' digits)?
//   base   := rational ['i'] | 'i' | 't'<k> | '(' expr ')' | '-' base
// with rational = digits('/'digits)? and variables t1..tn; a rational
// glued to 'i' (as in 2i or 3/4i) is an imaginary literal.
Poly parse_polynomial(const std::string& text, std::size_t nvars);

// Raw chart file: first data line "n a", then n + a polynomial lines in
// variables t1..tn. '#' starts a comment anywhere; blank lines skipped.
// The chart must be centered and an immersion at the origin.
Chart read_chart_file(const std::string& path);

Chart parse_chart_text(const std::string& text, const std::string& label);

}  // namespace lqel
