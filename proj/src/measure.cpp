#include "finehyp/measure.hpp"

#include <algorithm>
#include <sstream>

namespace finehyp {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

VertexMeasure VertexMeasure::from_entries(std::vector<std::pair<VertexId, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational mass = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw InputError("duplicate vertex in measure entries");
    if (entries[i].second <= 0) throw InputError("measure weights must be positive");
    mass += entries[i].second;
  }
  if (mass != 1) throw InvariantViolation("measure mass is not 1: " + rational_str(mass));
  VertexMeasure m;
  m.entries_ = std::move(entries);
  return m;
}

VertexMeasure VertexMeasure::point_mass(VertexId v) {
  VertexMeasure m;
  m.entries_.emplace_back(v, Rational(1));
  return m;
}

VertexMeasure VertexMeasure::uniform(const std::vector<VertexId>& support) {
  if (support.empty()) throw InputError("uniform measure needs nonempty support");
  std::vector<VertexId> s(support);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InputError("uniform measure support has duplicates");
  VertexMeasure m;
  Rational w(1, static_cast<int64_t>(s.size()));
  m.entries_.reserve(s.size());
  for (VertexId v : s) m.entries_.emplace_back(v, w);
  return m;
}

Rational VertexMeasure::at(VertexId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, VertexId x) { return e.first < x; });
  if (it != entries_.end() && it->first == v) return it->second;
  return 0;
}

std::string VertexMeasure::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << entries_[i].first << ':' << rational_str(entries_[i].second);
  }
  return os.str();
}

Rational l1_distance(const VertexMeasure& a, const VertexMeasure& b) {
  Rational total = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      total += ea[i].second;
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      total += eb[j].second;
      ++j;
    } else {
      total += abs(ea[i].second - eb[j].second);
      ++i;
      ++j;
    }
  }
  return total;
}

VertexMeasure convex_combination(const std::vector<Rational>& coeffs,
                                 const std::vector<VertexMeasure>& parts) {
  if (coeffs.size() != parts.size() || coeffs.empty())
    throw InputError("convex_combination needs matching nonempty coefficient/measure lists");
  Rational csum = 0;
  for (const Rational& c : coeffs) {
    if (c <= 0) throw InputError("convex coefficients must be positive");
    csum += c;
  }
  if (csum != 1) throw InputError("convex coefficients must sum to 1");

  std::vector<std::pair<VertexId, Rational>> acc;
  for (size_t i = 0; i < parts.size(); ++i)
    for (const auto& [v, w] : parts[i].entries()) acc.emplace_back(v, coeffs[i] * w);
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<VertexId, Rational>> merged;
  for (auto& e : acc) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  return VertexMeasure::from_entries(std::move(merged));
}

}  // namespace finehyp
