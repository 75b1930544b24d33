#ifndef TORSIONLAB_PARSE_HPP
#define TORSIONLAB_PARSE_HPP

#include <string_view>

#include "torsionlab/chart.hpp"

namespace torsionlab {

/// Parses the polynomial expression language:
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' natural)?
///   base     := rational | varname | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// Whitespace is insignificant. Variable names resolve through the chart.
/// Errors carry 1-based line/column and a distinct code for syntax,
/// zero denominator, unknown variable, and negative exponent.
MultiPoly parse_poly(std::string_view src, const ChartPtr& chart);

} // namespace torsionlab

#endif
