#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finehyp/graph.hpp"

namespace finehyp {

/// One maximal run a^e or b^e in a normal form; 1 <= e < order(letter).
struct Syllable {
  char letter;  // 'a' or 'b'
  int32_t exp;
  bool operator==(const Syllable&) const = default;
};

/// Element of a free product, held in normal form: alternating syllables with
/// nontrivial exponents. Equality is normal-form identity. Ordering is
/// structural (syllable count, then lexicographic) and serves only to make
/// containers and serialized output deterministic.
class GroupElement {
public:
  GroupElement() = default;  // identity

  bool is_identity() const { return syls_.empty(); }
  const std::vector<Syllable>& syllables() const { return syls_; }

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const;

  /// "e" for the identity, else concatenated syllables like "ab2a".
  std::string str() const;

private:
  friend class FreeProduct;
  std::vector<Syllable> syls_;
};

/// The free product Z/p * Z/q with generators a (order p) and b (order q).
/// Normal forms are alternating syllables; multiplication folds at the seam,
/// which is a confluent rewriting, so normal forms are canonical.
class FreeProduct {
public:
  FreeProduct(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int order(char letter) const;

  GroupElement identity() const { return {}; }
  /// a^exp or b^exp with exp taken mod the letter's order.
  GroupElement gen(char letter, int64_t exp = 1) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, int64_t e) const;

  /// Letters needed to spell the element from {a, a^-1, b, b^-1}: each
  /// syllable costs min(exp, order-exp). This is the Cayley word metric.
  int64_t word_length(const GroupElement& x) const;

  /// Parses "e" or syllable runs like "a", "b2", "ab2a"; input need not be in
  /// normal form (it is normalized). Throws InputError on foreign characters.
  GroupElement parse(const std::string& s) const;

  /// All elements of word_length <= radius, BFS order from the identity
  /// (deterministic: a, a^-1, b, b^-1 expansion order, deduplicated).
  std::vector<GroupElement> ball(int radius) const;

private:
  void push_syllable(std::vector<Syllable>& syls, Syllable s) const;
  int p_, q_;
};

}  // namespace finehyp
