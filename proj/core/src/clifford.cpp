#include "lpacket/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpacket::clifford {

Rank::Rank(int n_) : n(n_) {
  if (n < kMinRank || n > kMaxRank) {
    throw std::invalid_argument("rank must be between " +
                                std::to_string(kMinRank) + " and " +
                                std::to_string(kMaxRank));
  }
}

Element identity() { return Element{+1, {}}; }

Element minus_one() { return Element{-1, {}}; }

Element generator(int i) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  return Element{+1, {i}};
}

Element monomial(std::vector<int> support) {
  Element x{+1, std::move(support)};
  for (std::size_t k = 0; k + 1 < x.support.size(); ++k) {
    if (x.support[k] >= x.support[k + 1]) {
      throw std::invalid_argument("support must be strictly increasing");
    }
  }
  return x;
}

void validate(const Element& x, Rank rank) {
  if (x.sign != +1 && x.sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  for (std::size_t k = 0; k < x.support.size(); ++k) {
    if (x.support[k] < 1 || x.support[k] > rank.n) {
      throw std::invalid_argument("support index out of range for rank");
    }
    if (k > 0 && x.support[k - 1] >= x.support[k]) {
      throw std::invalid_argument("support must be strictly increasing");
    }
  }
}

Element mul(const Element& a, const Element& b, Rank rank) {
  validate(a, rank);
  validate(b, rank);

  // Count inversions: each pair (s, t) with s in a.support, t in b.support,
  // s > t costs one anticommutation swap. Merge-count since both are sorted.
  std::int64_t inversions = 0;
  {
    std::size_t i = 0;
    for (int t : b.support) {
      while (i < a.support.size() && a.support[i] <= t) ++i;
      inversions += static_cast<std::int64_t>(a.support.size() - i);
    }
  }

  Element out;
  out.sign = a.sign * b.sign * ((inversions % 2 == 0) ? +1 : -1);
  out.support.reserve(a.support.size() + b.support.size());
  std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                b.support.begin(), b.support.end(),
                                std::back_inserter(out.support));
  return out;
}

Element negate(Element x) {
  x.sign = -x.sign;
  return x;
}

int square_sign(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("square_sign needs k >= 0");
  return (k * (k - 1) / 2) % 2 == 0 ? +1 : -1;
}

int order(const Element& x) {
  if (x.is_identity()) return 1;
  if (x.support.empty()) return 2;  // -1
  // x^2 = square_sign(|support|) as a scalar.
  return square_sign(static_cast<std::int64_t>(x.support.size())) == +1 ? 2 : 4;
}

Element inverse(const Element& x) {
  Element out = x;
  out.sign = x.sign * square_sign(static_cast<std::int64_t>(x.support.size()));
  return out;
}

bool canonical_less(const Element& a, const Element& b) {
  if (a.support.size() != b.support.size()) {
    return a.support.size() < b.support.size();
  }
  if (a.support != b.support) return a.support < b.support;
  return a.sign > b.sign;  // +1 before -1
}

std::string to_string(const Element& x) {
  std::string out = x.sign > 0 ? "+" : "-";
  if (x.support.empty()) {
    out += "1";
    return out;
  }
  out += "e{";
  for (std::size_t k = 0; k < x.support.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(x.support[k]);
  }
  out += "}";
  return out;
}

}  // namespace lpacket::clifford
