#pragma once

#include <string>
#include <vector>

#include "pvf/vector_field.hpp"

namespace pvf {

// Text grammar (ASCII, whitespace ignored):
//   field := ['-'] term (('+'|'-') term)*
//   term  := [coeff '*']? (var ('^' nat)? '*')* 'd' nat
//   var   := 'x' nat
//   coeff := rational | rational 'i' | 'i' | rational ('+'|'-') rational 'i'
//   rational := nat | nat '/' nat
// Gaussian coefficients only parse in gaussian mode. Example:
//   2*x1^2*x2*d1 - 1/3*d2
PolyVectorField parse_field(const std::string& text, SpaceDescriptor space);

// Canonical form: terms in storage order (degree, then lexicographic),
// signs normalized, coefficient 1 omitted. parse(format(x)) == x.
std::string format_field(const PolyVectorField& x);

// One field per line; '#' starts a comment; blank lines skipped.
std::vector<PolyVectorField> parse_basis_file(const std::string& content, SpaceDescriptor space);

}  // namespace pvf
