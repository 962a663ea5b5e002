#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpacket/groups.hpp"

// Exact character tables over the Gaussian integers. Every group in scope
// has exponent dividing 4, so all character values live in Z[i] and every
// orthogonality relation is checked with integer arithmetic, no tolerances.

namespace lpacket::chartab {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussInt& a, const GaussInt& b) = default;
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

GaussInt conj(const GaussInt& a);

// i^k for k taken mod 4.
GaussInt root_of_unity(int k);

// Exact division by a positive integer; throws if not divisible.
GaussInt divide_exact(const GaussInt& a, std::int64_t d);

std::string to_string(const GaussInt& a);

// Reduced fraction; denominators stay positive.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  bool is_integer(std::int64_t v) const { return den == 1 && num == v; }
  friend bool operator==(const Rational& a, const Rational& b) = default;
};

std::string to_string(const Rational& r);

// Thrown when a group's exponent exceeds 4 and values would leave Z[i].
struct UnsupportedExponent : std::domain_error {
  using std::domain_error::domain_error;
};

class CharacterTable {
 public:
  // Linear characters come from the abelianization; higher-degree rows are
  // induced from linear characters of abelian subgroups and certified by
  // the sum-of-squares count. Requires |g| <= 64 and exponent dividing 4.
  static CharacterTable build(const groups::FiniteGroup& g);

  const groups::FiniteGroup& group() const { return *group_; }
  const std::vector<groups::ConjClass>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }

  int row_count() const { return static_cast<int>(rows_.size()); }
  int degree(int row) const { return degrees_[row]; }
  const std::vector<GaussInt>& row(int r) const { return rows_[r]; }
  GaussInt value(int row, int element) const {
    return rows_[row][class_of_[element]];
  }

  bool check_row_orthogonality() const;
  bool check_column_orthogonality() const;
  bool check_degree_sum() const;

 private:
  const groups::FiniteGroup* group_ = nullptr;
  std::vector<groups::ConjClass> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<GaussInt>> rows_;
  std::vector<int> degrees_;
};

// (1/|G|) sum over classes of |c| f(c) conj(g(c)); exact rational. The
// imaginary part must vanish, which holds for inner products of characters.
Rational inner_product(std::span<const GaussInt> f, std::span<const GaussInt> g,
                       const std::vector<groups::ConjClass>& classes,
                       int group_order);

// A character of a central subgroup with values in the 4th roots of unity,
// stored as exponents of i parallel to the sorted domain element list.
struct CentralCharacter {
  std::vector<int> domain;  // element indices in the ambient group, sorted
  std::vector<int> exps;    // value on domain[k] is i^exps[k]
  std::string label;

  int exp_on(int element) const;
  friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
    return a.domain == b.domain && a.exps == b.exps;
  }
};

// Central character of a table row on a central subgroup z0: the scalar by
// which each z acts, verified to be an exact 4th root of unity.
CentralCharacter central_character(const CharacterTable& table, int row,
                                   const groups::Subgroup& z0);

// Row indices whose central character on zeta.domain equals zeta.
std::vector<int> irr_with_central_character(const CharacterTable& table,
                                            const CentralCharacter& zeta);

// Values of a row of `table` on the classes of a subgroup realized as its
// own group.
std::vector<GaussInt> restrict_character(
    const CharacterTable& table, int row, const groups::SubgroupAsGroup& sub,
    const std::vector<groups::ConjClass>& sub_classes);

}  // namespace lpacket::chartab
