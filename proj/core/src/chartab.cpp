#include "lpacket/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lpacket::chartab {

namespace {

using groups::ConjClass;
using groups::FiniteGroup;
using groups::Subgroup;

// Linear characters of an abelian group with exponent dividing 4, as
// exponent-of-i vectors indexed by element. Built by extending characters
// along a chain of cyclic extensions.
std::vector<std::vector<int>> linear_characters(const FiniteGroup& a) {
  const int n = a.order();
  struct Partial {
    std::vector<int> exp;  // -1 where undefined
  };
  std::vector<int> members = {a.identity()};
  std::vector<Partial> chars(1);
  chars[0].exp.assign(n, -1);
  chars[0].exp[a.identity()] = 0;

  std::vector<bool> in_h(n, false);
  in_h[a.identity()] = true;

  for (int x = 0; x < n; ++x) {
    if (in_h[x]) continue;
    // Smallest m >= 1 with x^m inside the current subgroup.
    int m = 1;
    int xm = x;
    while (!in_h[xm]) {
      xm = a.product(xm, x);
      ++m;
    }
    std::vector<Partial> extended;
    extended.reserve(chars.size() * m);
    for (const Partial& chi : chars) {
      const int base = chi.exp[xm];
      for (int t = 0; t < 4; ++t) {
        if ((t * m) % 4 != base % 4) continue;
        Partial next = chi;
        int xj = a.identity();
        for (int j = 0; j < m; ++j) {
          for (int h : members) {
            next.exp[a.product(h, xj)] = (chi.exp[h] + j * t) % 4;
          }
          xj = a.product(xj, x);
        }
        extended.push_back(std::move(next));
      }
    }
    chars = std::move(extended);
    std::vector<int> new_members;
    int xj = a.identity();
    for (int j = 0; j < m; ++j) {
      for (int h : members) {
        int y = a.product(h, xj);
        if (!in_h[y]) {
          in_h[y] = true;
          new_members.push_back(y);
        }
      }
      xj = a.product(xj, x);
    }
    members.insert(members.end(), new_members.begin(), new_members.end());
  }
  if (static_cast<int>(chars.size()) != n) {
    throw std::logic_error("linear character count mismatch");
  }
  std::vector<std::vector<int>> out;
  out.reserve(chars.size());
  for (Partial& p : chars) out.push_back(std::move(p.exp));
  return out;
}

// Abelian subgroups as closures of single elements, commuting pairs and
// pairwise commuting triples; deduplicated by member set.
std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](std::span<const int> gens) {
    Subgroup s = g.subgroup_closure(gens);
    if (seen.insert(s.members).second) out.push_back(std::move(s));
  };
  const int n = g.order();
  for (int x = 0; x < n; ++x) add(std::vector<int>{x});
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.commutes(x, y)) add(std::vector<int>{x, y});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!g.commutes(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (g.commutes(x, z) && g.commutes(y, z)) {
          add(std::vector<int>{x, y, z});
        }
      }
    }
  }
  return out;
}

bool row_less(const std::pair<int, std::vector<GaussInt>>& a,
              const std::pair<int, std::vector<GaussInt>>& b) {
  if (a.first != b.first) return a.first < b.first;
  // Descending lexicographic on (re, im), so the trivial character leads.
  for (std::size_t k = 0; k < a.second.size(); ++k) {
    if (a.second[k].re != b.second[k].re) return a.second[k].re > b.second[k].re;
    if (a.second[k].im != b.second[k].im) return a.second[k].im > b.second[k].im;
  }
  return false;
}

}  // namespace

GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }

GaussInt root_of_unity(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussInt divide_exact(const GaussInt& a, std::int64_t d) {
  if (d <= 0 || a.re % d != 0 || a.im % d != 0) {
    throw std::logic_error("inexact Gaussian integer division");
  }
  return {a.re / d, a.im / d};
}

std::string to_string(const GaussInt& a) {
  if (a.im == 0) return std::to_string(a.re);
  if (a.re == 0) {
    if (a.im == 1) return "i";
    if (a.im == -1) return "-i";
    return std::to_string(a.im) + "i";
  }
  std::string out = std::to_string(a.re);
  out += a.im > 0 ? "+" : "-";
  std::int64_t m = a.im > 0 ? a.im : -a.im;
  if (m != 1) out += std::to_string(m);
  out += "i";
  return out;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

CharacterTable CharacterTable::build(const FiniteGroup& g) {
  if (g.order() > groups::kMaxIdentifyOrder) {
    throw std::invalid_argument("character tables only for orders <= 64");
  }
  if (g.exponent() > 4) {
    throw UnsupportedExponent(
        "group exponent exceeds 4; values would leave the Gaussian integers");
  }

  CharacterTable t;
  t.group_ = &g;
  t.classes_ = g.conjugacy_classes();
  t.class_of_.assign(g.order(), -1);
  for (std::size_t c = 0; c < t.classes_.size(); ++c) {
    for (int m : t.classes_[c].members) t.class_of_[m] = static_cast<int>(c);
  }
  const int num_classes = static_cast<int>(t.classes_.size());

  std::vector<std::pair<int, std::vector<GaussInt>>> rows;
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
  auto row_key = [](const std::vector<GaussInt>& row) {
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    key.reserve(row.size());
    for (const GaussInt& v : row) key.emplace_back(v.re, v.im);
    return key;
  };
  auto add_row = [&](int deg, std::vector<GaussInt> row) {
    if (seen.insert(row_key(row)).second) rows.emplace_back(deg, std::move(row));
  };

  // Linear characters via the abelianization.
  groups::QuotientGroup ab = groups::quotient(g, g.derived_subgroup());
  for (const auto& exps : linear_characters(ab.group)) {
    std::vector<GaussInt> row(num_classes);
    for (int c = 0; c < num_classes; ++c) {
      row[c] = root_of_unity(exps[ab.projection[t.classes_[c].representative]]);
    }
    add_row(1, std::move(row));
  }

  auto degree_sum = [&rows] {
    std::int64_t s = 0;
    for (const auto& [deg, row] : rows) s += std::int64_t{deg} * deg;
    return s;
  };

  if (degree_sum() != g.order()) {
    // Monomial induction from abelian subgroups.
    for (const Subgroup& h : abelian_subgroups(g)) {
      if (h.order() == g.order()) continue;
      groups::SubgroupAsGroup hg = groups::subgroup_as_group(g, h);
      std::vector<int> to_local(g.order(), -1);
      for (int i = 0; i < hg.group.order(); ++i) to_local[hg.to_parent[i]] = i;

      for (const auto& lam : linear_characters(hg.group)) {
        std::vector<GaussInt> row(num_classes);
        bool divisible = true;
        for (int c = 0; c < num_classes && divisible; ++c) {
          GaussInt sum{0, 0};
          const int rep = t.classes_[c].representative;
          for (int x = 0; x < g.order(); ++x) {
            int y = g.conjugate(x, rep);
            if (to_local[y] >= 0) sum = sum + root_of_unity(lam[to_local[y]]);
          }
          if (sum.re % h.order() != 0 || sum.im % h.order() != 0) {
            divisible = false;
            break;
          }
          row[c] = divide_exact(sum, h.order());
        }
        if (!divisible) continue;
        Rational norm =
            lpacket::chartab::inner_product(row, row, t.classes_, g.order());
        if (!norm.is_integer(1)) continue;
        int deg = static_cast<int>(row[t.class_of_[g.identity()]].re);
        add_row(deg, std::move(row));
        if (degree_sum() == g.order()) break;
      }
      if (degree_sum() == g.order()) break;
    }
  }

  if (degree_sum() != g.order()) {
    throw std::logic_error("character table completion failed");
  }
  if (static_cast<int>(rows.size()) != num_classes) {
    throw std::logic_error("row count does not match class count");
  }

  std::sort(rows.begin(), rows.end(), row_less);
  for (auto& [deg, row] : rows) {
    t.degrees_.push_back(deg);
    t.rows_.push_back(std::move(row));
  }
  if (!t.check_row_orthogonality() || !t.check_column_orthogonality()) {
    throw std::logic_error("orthogonality failed on a completed table");
  }
  return t;
}

bool CharacterTable::check_row_orthogonality() const {
  const int n = row_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      GaussInt sum{0, 0};
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        GaussInt term = rows_[i][c] * conj(rows_[j][c]);
        sum = sum + GaussInt{term.re * classes_[c].size(),
                             term.im * classes_[c].size()};
      }
      GaussInt want{i == j ? group_->order() : 0, 0};
      if (sum != want) return false;
    }
  }
  return true;
}

bool CharacterTable::check_column_orthogonality() const {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t d = c; d < classes_.size(); ++d) {
      GaussInt sum{0, 0};
      for (int r = 0; r < row_count(); ++r) {
        sum = sum + rows_[r][c] * conj(rows_[r][d]);
      }
      GaussInt want{c == d ? group_->order() / classes_[c].size() : 0, 0};
      if (sum != want) return false;
    }
  }
  return true;
}

bool CharacterTable::check_degree_sum() const {
  std::int64_t s = 0;
  for (int d : degrees_) s += std::int64_t{d} * d;
  return s == group_->order();
}

Rational inner_product(std::span<const GaussInt> f, std::span<const GaussInt> g,
                       const std::vector<ConjClass>& classes, int group_order) {
  if (f.size() != classes.size() || g.size() != classes.size()) {
    throw std::invalid_argument("class function length mismatch");
  }
  GaussInt sum{0, 0};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    GaussInt term = f[c] * conj(g[c]);
    sum = sum +
          GaussInt{term.re * classes[c].size(), term.im * classes[c].size()};
  }
  if (sum.im != 0) {
    throw std::logic_error("inner product of characters must be real");
  }
  return Rational(sum.re, group_order);
}

int CentralCharacter::exp_on(int element) const {
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (domain[k] == element) return exps[k];
  }
  throw std::invalid_argument("element not in central character domain");
}

CentralCharacter central_character(const CharacterTable& table, int row,
                                   const Subgroup& z0) {
  const FiniteGroup& g = table.group();
  Subgroup center = g.center();
  for (int z : z0.members) {
    if (!center.contains(z)) {
      throw std::invalid_argument("z0 is not contained in the center");
    }
  }
  CentralCharacter out;
  out.domain = z0.members;
  const int deg = table.degree(row);
  for (int z : z0.members) {
    GaussInt v = table.value(row, z);
    int found = -1;
    for (int k = 0; k < 4; ++k) {
      GaussInt u = root_of_unity(k);
      if (GaussInt{u.re * deg, u.im * deg} == v) {
        found = k;
        break;
      }
    }
    if (found < 0) {
      throw std::logic_error("central value is not a root of unity multiple");
    }
    out.exps.push_back(found);
  }
  // Multiplicativity on the domain.
  for (std::size_t a = 0; a < out.domain.size(); ++a) {
    for (std::size_t b = 0; b < out.domain.size(); ++b) {
      int prod = g.product(out.domain[a], out.domain[b]);
      if ((out.exps[a] + out.exps[b]) % 4 != out.exp_on(prod) % 4) {
        throw std::logic_error("central character is not multiplicative");
      }
    }
  }
  return out;
}

std::vector<int> irr_with_central_character(const CharacterTable& table,
                                            const CentralCharacter& zeta) {
  Subgroup z0;
  z0.parent = &table.group();
  z0.members = zeta.domain;
  std::vector<int> out;
  for (int r = 0; r < table.row_count(); ++r) {
    if (central_character(table, r, z0).exps == zeta.exps) out.push_back(r);
  }
  return out;
}

std::vector<GaussInt> restrict_character(
    const CharacterTable& table, int row, const groups::SubgroupAsGroup& sub,
    const std::vector<ConjClass>& sub_classes) {
  std::vector<GaussInt> out;
  out.reserve(sub_classes.size());
  for (const ConjClass& c : sub_classes) {
    out.push_back(table.value(row, sub.to_parent[c.representative]));
  }
  return out;
}

}  // namespace lpacket::chartab
