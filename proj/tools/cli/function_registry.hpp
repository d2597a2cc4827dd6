#pragma once

#include "nnfif/function_input.hpp"
#include "nnfif/scaling.hpp"

#include <string>
#include <vector>

namespace fifcli {

/// Highest derivative order supplied in closed form by registry functions.
inline constexpr int kRegistryDerivatives = 4;

/// Parses a function name from the registry:
///   sin, cos, exp, poly(c0,c1,...), abspow(c,mu), weier, weier(a,b), table:<path>
/// Tabulated input is checked against the uniform grid on [a, b].
nnfif::FunctionInput parse_function(const std::string& spec, double a, double b);

/// A parenthesised argument list "name(v1,v2,...)"; returns false when spec
/// has no parentheses.
bool split_call(const std::string& spec, std::string& name, std::vector<double>& args);

/// Reads a two-column CSV of (x, y) rows; a non-numeric first row is a header.
nnfif::TabulatedFunction read_table(const std::string& path);

/// Parses a scaling spec into N entries on [a, b]:
///   "0.3"                 every alpha_i = 0.3
///   "0.1,0.2,0.3,0.4"     one constant per subinterval
///   "sinbump(amp)"        alpha_i(x) = amp sin(pi (x - a) / (b - a))
///   "linear(c0,c1)"       alpha_i(x) = c0 + (c1 - c0) (x - a) / (b - a)
nnfif::ScalingVector parse_alpha(const std::string& spec, int N, double a, double b);

} // namespace fifcli
