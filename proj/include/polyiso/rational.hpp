#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polyiso {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Accepts "p/q" or an integer, optionally signed. Throws Error otherwise
/// (including a zero denominator).
Rational parse_rational(std::string_view text);
/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Finite point set in R^dim with exact coordinates (a V-description).
struct RationalPointSet {
  std::size_t dim = 0;
  std::vector<RationalVector> points;
};

/// a . x <= b, or a . x = b for equalities.
struct LinearRow {
  RationalVector a;
  Rational b;
};

struct HDescription {
  std::size_t dim = 0;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equalities;
};

/// VREP format: "VREP <count> <dim>", then one point per line.
RationalPointSet parse_vrep(std::string_view text);
RationalPointSet read_vrep_file(const std::string& path);
std::string serialize_vrep(const RationalPointSet& v);

/// HREP format: "HREP <rows> <dim>", then rows "a_1 ... a_dim <= b" or
/// "a_1 ... a_dim = b". Inequalities are written before equalities.
HDescription parse_hrep(std::string_view text);
std::string serialize_hrep(const HDescription& h);

}  // namespace polyiso
