#pragma once

#include "foxdiv/ncpoly.hpp"
#include "foxdiv/words.hpp"

namespace foxdiv {

/// Left Fox derivative in the free algebra on X u X^-1:
///   d(x)/dx = 1,  d(x^-1)/dx = -x^-1,  d(y)/dx = 0 for y != x,
///   d(uv)/dx = d(u)/dx + u d(v)/dx.
/// The word is differentiated as given; no free reduction happens first.
Polynomial fox_derivative(const Word& w, Generator x);

/// Closed form of d(x^n)/dx: 1 + x + ... + x^(n-1) for n >= 0 and
/// -x^-1 - x^-2 - ... - x^n for n < 0.
Polynomial fox_power(long n, Generator x);

/// d(r1)/dx - d(r2)/dx for the relation r1 = r2.
Polynomial fox_of_relator(const Word& r1, const Word& r2, Generator x);

}  // namespace foxdiv
