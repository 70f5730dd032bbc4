#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "finehyp/graph.hpp"

namespace finehyp {

using Rational = boost::multiprecision::cpp_rational;

/// Canonical "num/den" with positive denominator, e.g. "3/7", "-1/2", "2/1".
std::string rational_str(const Rational& r);

/// Finitely supported probability measure on vertices with exact rational
/// weights. Entries are sorted by vertex id, weights strictly positive, and
/// construction checks that the total mass is exactly 1.
class VertexMeasure {
public:
  VertexMeasure() = default;
  /// Entries need not be sorted; equal-vertex entries are rejected, zero
  /// weights rejected. Mass must be exactly 1.
  static VertexMeasure from_entries(std::vector<std::pair<VertexId, Rational>> entries);
  static VertexMeasure point_mass(VertexId v);
  /// Uniform measure on a nonempty set (the xi_S of the shadow machinery).
  static VertexMeasure uniform(const std::vector<VertexId>& support);

  const std::vector<std::pair<VertexId, Rational>>& entries() const { return entries_; }
  size_t support_size() const { return entries_.size(); }
  Rational at(VertexId v) const;  // 0 when outside support

  bool operator==(const VertexMeasure& o) const { return entries_ == o.entries_; }

  /// Serializes as "v:num/den v:num/den ..." sorted by vertex id.
  std::string str() const;

private:
  std::vector<std::pair<VertexId, Rational>> entries_;
};

/// Exact l1 distance; both measures need not share support.
Rational l1_distance(const VertexMeasure& a, const VertexMeasure& b);

/// Convex combination sum_i coeffs[i] * parts[i]; coefficients must be
/// positive and sum to 1.
VertexMeasure convex_combination(const std::vector<Rational>& coeffs,
                                 const std::vector<VertexMeasure>& parts);

}  // namespace finehyp
