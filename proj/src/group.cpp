#include "finehyp/group.hpp"

#include <algorithm>
#include <map>

namespace finehyp {

bool GroupElement::operator<(const GroupElement& o) const {
  if (syls_.size() != o.syls_.size()) return syls_.size() < o.syls_.size();
  for (size_t i = 0; i < syls_.size(); ++i) {
    if (syls_[i].letter != o.syls_[i].letter) return syls_[i].letter < o.syls_[i].letter;
    if (syls_[i].exp != o.syls_[i].exp) return syls_[i].exp < o.syls_[i].exp;
  }
  return false;
}

std::string GroupElement::str() const {
  if (syls_.empty()) return "e";
  std::string out;
  for (const Syllable& s : syls_) {
    out += s.letter;
    if (s.exp != 1) out += std::to_string(s.exp);
  }
  return out;
}

FreeProduct::FreeProduct(int p, int q) : p_(p), q_(q) {
  if (p < 2 || q < 2) throw InputError("free product needs p, q >= 2");
}

int FreeProduct::order(char letter) const {
  if (letter == 'a') return p_;
  if (letter == 'b') return q_;
  throw InputError(std::string("unknown generator letter '") + letter + "'");
}

void FreeProduct::push_syllable(std::vector<Syllable>& syls, Syllable s) const {
  int ord = order(s.letter);
  s.exp = static_cast<int32_t>(((s.exp % ord) + ord) % ord);
  if (s.exp == 0) return;
  if (!syls.empty() && syls.back().letter == s.letter) {
    int32_t e = (syls.back().exp + s.exp) % ord;
    syls.pop_back();
    if (e != 0) push_syllable(syls, {s.letter, e});
    return;
  }
  syls.push_back(s);
}

GroupElement FreeProduct::gen(char letter, int64_t exp) const {
  int ord = order(letter);
  int32_t e = static_cast<int32_t>(((exp % ord) + ord) % ord);
  GroupElement g;
  if (e != 0) g.syls_.push_back({letter, e});
  return g;
}

GroupElement FreeProduct::multiply(const GroupElement& x, const GroupElement& y) const {
  GroupElement out = x;
  for (const Syllable& s : y.syls_) push_syllable(out.syls_, s);
  return out;
}

GroupElement FreeProduct::inverse(const GroupElement& x) const {
  GroupElement out;
  out.syls_.reserve(x.syls_.size());
  for (auto it = x.syls_.rbegin(); it != x.syls_.rend(); ++it)
    out.syls_.push_back({it->letter, static_cast<int32_t>(order(it->letter) - it->exp)});
  return out;
}

GroupElement FreeProduct::pow(const GroupElement& x, int64_t e) const {
  GroupElement base = e < 0 ? inverse(x) : x;
  int64_t n = e < 0 ? -e : e;
  GroupElement acc;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return acc;
}

int64_t FreeProduct::word_length(const GroupElement& x) const {
  int64_t len = 0;
  for (const Syllable& s : x.syls_) {
    int ord = order(s.letter);
    len += std::min<int64_t>(s.exp, ord - s.exp);
  }
  return len;
}

GroupElement FreeProduct::parse(const std::string& s) const {
  if (s == "e" || s.empty()) return identity();
  GroupElement out;
  size_t i = 0;
  while (i < s.size()) {
    char letter = s[i];
    if (letter != 'a' && letter != 'b')
      throw InputError("cannot parse group element '" + s + "': bad letter at " +
                       std::to_string(i));
    ++i;
    int64_t exp = 0;
    bool any = false;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      exp = exp * 10 + (s[i] - '0');
      if (exp > 1000000) throw InputError("exponent too large in '" + s + "'");
      ++i;
      any = true;
    }
    if (!any) exp = 1;
    push_syllable(out.syls_, {letter, static_cast<int32_t>(exp % order(letter))});
  }
  return out;
}

std::vector<GroupElement> FreeProduct::ball(int radius) const {
  if (radius < 0) throw InputError("group ball radius must be >= 0");
  const GroupElement steps[4] = {gen('a', 1), gen('a', -1), gen('b', 1), gen('b', -1)};
  std::map<GroupElement, int> seen;
  std::vector<GroupElement> order{identity()};
  seen[identity()] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    GroupElement cur = order[head];  // copy: order may reallocate below
    int d = seen[cur];
    if (d == radius) continue;
    for (const GroupElement& s : steps) {
      if (s.is_identity()) continue;  // p or q equal 2 makes a == a^-1
      GroupElement nxt = multiply(cur, s);
      if (seen.emplace(nxt, d + 1).second) order.push_back(nxt);
    }
  }
  return order;
}

}  // namespace finehyp
