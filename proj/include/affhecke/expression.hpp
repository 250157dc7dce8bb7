#pragma once

#include <stdexcept>
#include <string>

#include "affhecke/serialize.hpp"

namespace affhecke {

/// Syntax error in a compute expression; `position` is a 0-based byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position);
    std::size_t position;
};

/// Evaluates one compute expression over the given group and GF(p).
///
///   element     E := [i,j,...] | e{a,b,...} | e{a,b,...}[i,j,...] | w0
///   character   x{n0,n1,...,nl}                 (torus exponents, loop factor first)
///   coefficient c := n | x{...} | n*x{...} | (c + c - ...)
///   Hecke       H := c*Y E + c*Yt E - ...
///   class       V := c*O E + ...                (a bare E means O E)
///
///   mul E ...            len E            word E          words E        bruhat E E
///   hecke-mul H ...      xi H             xi-inv V        theta c*e{..} + ...
///   demazure V D0 D2 D[0,1] ...   (operators applied left to right, on the right)
///   pullback c*e{..} + ...        specialize V     spherical e{..} V
///
/// Hecke results carry GF(p) coefficients unless the input used a character x{...}.
json evaluate_expression(const GroupPtr& group, std::uint32_t prime, const std::string& text);

}  // namespace affhecke
