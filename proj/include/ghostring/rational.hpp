#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ghostring {

/// Exact rational number. GMP handles normalization and arbitrary size.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

/// Serializes as "p/q" in lowest terms with q > 0 (e.g. "-1/6", "3/1").
std::string rat_str(const Rational& r);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on junk.
Rational rat_parse(const std::string& s);

// Dense exact linear algebra, desk scale only.
using Matrix = std::vector<std::vector<Rational>>;

std::size_t matrix_rank(Matrix m);
Rational matrix_det(Matrix m);

}  // namespace ghostring
