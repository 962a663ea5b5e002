#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Signed monomials over n anticommuting generators e_1..e_n with e_i^2 = +1.
// The even-support monomials at rank n realize the compact pin/spin elements
// that the component-group machinery is built from. All values are immutable
// and all operations are pure.

namespace lpacket::clifford {

// Number of generators. Rank 3 is the smallest the engine uses (the Siegel
// Levi reduction), 8 is a hard cap that bounds closure sizes downstream.
struct Rank {
  int n;
  explicit Rank(int n_);
};

constexpr int kMinRank = 3;
constexpr int kMaxRank = 8;

struct Element {
  int sign = +1;             // +1 or -1
  std::vector<int> support;  // strictly increasing indices in 1..rank

  bool is_identity() const { return sign == +1 && support.empty(); }

  friend bool operator==(const Element& a, const Element& b) = default;
};

Element identity();
Element minus_one();
Element generator(int i);

// Monomial with the given support and positive sign.
Element monomial(std::vector<int> support);

// Validates the canonical form at the given rank; throws std::invalid_argument.
void validate(const Element& x, Rank rank);

// Product: sign picks up one -1 per inversion (pairs s in a.support,
// t in b.support with s > t), support is the symmetric difference.
Element mul(const Element& a, const Element& b, Rank rank);

Element negate(Element x);

// Sign of the square of any monomial with support size k: (-1)^{k(k-1)/2}.
int square_sign(std::int64_t k);

// Element order in the monomial group; always 1, 2 or 4.
int order(const Element& x);

Element inverse(const Element& x);

// Canonical ordering: support length, then support lexicographic, then
// sign with +1 first. Used for deterministic closure generation.
bool canonical_less(const Element& a, const Element& b);

// "+1", "-1", "+e{1,2}", ...
std::string to_string(const Element& x);

}  // namespace lpacket::clifford
