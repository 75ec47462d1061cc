#pragma once

#include <vector>

#include "kronmot/bigrational.hpp"

namespace kronmot::poly {

/// Dense integer polynomial, index = degree, no trailing zeros (empty = 0).
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);
BigInt content(const IntPoly& p);
/// p / content(p), with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Exact quotient a / b over Z[x], or false if b does not divide a.
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient);

/// gcd over Q[x] of two nonzero polynomials, returned primitive with positive
/// leading coefficient (this is also the gcd over Z[x] up to content).
/// Heuristic evaluation/interpolation first; primitive PRS as fallback.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive-PRS gcd alone, exposed for testing against the heuristic route.
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);

} // namespace kronmot::poly
