#include "lpacket/groups.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lpacket::groups {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

std::string to_string(const OrderCensus& census) {
  std::string out = "{";
  bool first = true;
  for (const auto& [ord, count] : census) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(ord) + ":" + std::to_string(count);
  }
  out += "}";
  return out;
}

bool Subgroup::contains(int element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    int identity, std::vector<int> table,
                                    ElementSource source) {
  FiniteGroup g;
  g.n_ = static_cast<int>(labels.size());
  if (g.n_ == 0 || g.n_ > kMaxGroupOrder) fail("group order out of range");
  if (static_cast<int>(table.size()) != g.n_ * g.n_) fail("table size mismatch");
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.source_ = source;

  for (int v : g.table_) {
    if (v < 0 || v >= g.n_) fail("table entry out of range");
  }
  // Identity law and unique inverse per element, full scan.
  g.inverse_.assign(g.n_, -1);
  for (int a = 0; a < g.n_; ++a) {
    if (g.product(a, g.identity_) != a || g.product(g.identity_, a) != a) {
      fail("identity law violated");
    }
    for (int b = 0; b < g.n_; ++b) {
      if (g.product(a, b) == g.identity_ && g.product(b, a) == g.identity_) {
        if (g.inverse_[a] != -1 && g.inverse_[a] != b) fail("inverse not unique");
        g.inverse_[a] = b;
      }
    }
    if (g.inverse_[a] == -1) fail("element without inverse");
  }
  // Latin-square check (each row/column a permutation) plus associativity
  // for small tables. Larger groups are built by closure, where
  // associativity is inherited from the element arithmetic.
  for (int a = 0; a < g.n_; ++a) {
    std::vector<bool> seen_row(g.n_, false), seen_col(g.n_, false);
    for (int b = 0; b < g.n_; ++b) {
      seen_row[g.product(a, b)] = true;
      seen_col[g.product(b, a)] = true;
    }
    for (int b = 0; b < g.n_; ++b) {
      if (!seen_row[b] || !seen_col[b]) fail("table is not a latin square");
    }
  }
  if (g.n_ <= kMaxIdentifyOrder) {
    for (int a = 0; a < g.n_; ++a)
      for (int b = 0; b < g.n_; ++b)
        for (int c = 0; c < g.n_; ++c)
          if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c))) {
            fail("table is not associative");
          }
  }
  return g;
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != identity_) {
    x = product(x, a);
    ++ord;
    if (ord > n_) fail("element order exceeds group order");
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!commutes(a, b)) return false;
  return true;
}

Subgroup FiniteGroup::whole() const {
  Subgroup s;
  s.parent = this;
  s.members.resize(n_);
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subgroup FiniteGroup::center() const {
  Subgroup s;
  s.parent = this;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = commutes(a, b);
    if (central) s.members.push_back(a);
  }
  return s;
}

Subgroup FiniteGroup::derived_subgroup() const {
  std::vector<int> commutators;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      commutators.push_back(
          product(product(a, b), inverse_[product(b, a)]));
    }
  }
  return subgroup_closure(commutators);
}

std::vector<ConjClass> FiniteGroup::conjugacy_classes() const {
  std::vector<ConjClass> classes;
  std::vector<bool> seen(n_, false);
  for (int x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.representative = x;
    std::set<int> orbit;
    for (int g = 0; g < n_; ++g) orbit.insert(conjugate(g, x));
    c.members.assign(orbit.begin(), orbit.end());
    for (int m : c.members) seen[m] = true;
    classes.push_back(std::move(c));
  }
  return classes;
}

OrderCensus FiniteGroup::order_census() const {
  OrderCensus census;
  for (int a = 0; a < n_; ++a) ++census[element_order(a)];
  return census;
}

Subgroup FiniteGroup::subgroup_closure(std::span<const int> elements) const {
  std::set<int> members = {identity_};
  std::vector<int> frontier = {identity_};
  std::vector<int> gens(elements.begin(), elements.end());
  for (int g : gens) {
    if (members.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        int y = product(x, g);
        if (members.insert(y).second) next.push_back(y);
        y = product(g, x);
        if (members.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  Subgroup s;
  s.parent = this;
  s.members.assign(members.begin(), members.end());
  return s;
}

Subgroup FiniteGroup::subgroup(std::vector<int> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.parent = this;
  s.members = std::move(members);
  if (!s.contains(identity_)) fail("subgroup must contain the identity");
  for (int a : s.members) {
    if (!s.contains(inverse_[a])) fail("subgroup not closed under inverse");
    for (int b : s.members) {
      if (!s.contains(product(a, b))) fail("subgroup not closed under product");
    }
  }
  return s;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

int index(const Subgroup& sub) {
  if (sub.parent == nullptr) fail("subgroup has no parent");
  // Revalidate closure so a hand-built member list cannot slip through.
  Subgroup checked = sub.parent->subgroup(sub.members);
  int parent_order = sub.parent->order();
  if (checked.order() == 0 || parent_order % checked.order() != 0) {
    fail("subgroup order does not divide group order");
  }
  return parent_order / checked.order();
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& parent,
                                  const Subgroup& sub) {
  if (sub.parent != &parent) fail("subgroup belongs to a different group");
  Subgroup checked = parent.subgroup(sub.members);
  const int m = checked.order();
  std::vector<int> to_local(parent.order(), -1);
  for (int i = 0; i < m; ++i) to_local[checked.members[i]] = i;

  std::vector<std::string> labels(m);
  std::vector<int> table(m * m);
  int identity = to_local[parent.identity()];
  for (int i = 0; i < m; ++i) {
    labels[i] = parent.label(checked.members[i]);
    for (int j = 0; j < m; ++j) {
      table[i * m + j] =
          to_local[parent.product(checked.members[i], checked.members[j])];
    }
  }
  SubgroupAsGroup out{
      FiniteGroup::from_table(std::move(labels), identity, std::move(table),
                              parent.source()),
      checked.members};
  return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& normal) {
  if (normal.parent != &g) fail("subgroup belongs to a different group");
  Subgroup n = g.subgroup(normal.members);
  for (int x = 0; x < g.order(); ++x) {
    for (int h : n.members) {
      if (!n.contains(g.conjugate(x, h))) fail("subgroup is not normal");
    }
  }
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.members) coset_of[g.product(x, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> labels(m);
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "[" + g.label(reps[i]) + "]";
    for (int j = 0; j < m; ++j) {
      table[i * m + j] = coset_of[g.product(reps[i], reps[j])];
    }
  }
  QuotientGroup out{FiniteGroup::from_table(std::move(labels),
                                            coset_of[g.identity()],
                                            std::move(table), g.source()),
                    std::move(coset_of)};
  return out;
}

FiniteGroup central_product(const FiniteGroup& a, int z_a,
                            const FiniteGroup& b, int z_b) {
  if (a.element_order(z_a) != 2 || b.element_order(z_b) != 2) {
    fail("central product glue elements must have order 2");
  }
  if (!a.center().contains(z_a) || !b.center().contains(z_b)) {
    fail("central product glue elements must be central");
  }
  const int na = a.order();
  const int nb = b.order();
  auto pair_id = [nb](int x, int y) { return x * nb + y; };
  // Canonical coset representative: the lexicographically smaller of
  // (x, y) and (z_a x, z_b y).
  auto rep = [&](int x, int y) {
    int x2 = a.product(z_a, x);
    int y2 = b.product(z_b, y);
    if (x2 < x || (x2 == x && y2 < y)) return pair_id(x2, y2);
    return pair_id(x, y);
  };
  std::vector<int> coset_of(na * nb, -1);
  std::vector<std::pair<int, int>> reps;
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      if (rep(x, y) == pair_id(x, y)) {
        coset_of[pair_id(x, y)] = static_cast<int>(reps.size());
        reps.emplace_back(x, y);
      }
    }
  }
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      if (coset_of[pair_id(x, y)] == -1) {
        coset_of[pair_id(x, y)] = coset_of[rep(x, y)];
      }
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> labels(m);
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "(" + a.label(reps[i].first) + "," + b.label(reps[i].second) + ")";
    for (int j = 0; j < m; ++j) {
      int px = a.product(reps[i].first, reps[j].first);
      int py = b.product(reps[i].second, reps[j].second);
      table[i * m + j] = coset_of[pair_id(px, py)];
    }
  }
  int identity = coset_of[pair_id(a.identity(), b.identity())];
  return FiniteGroup::from_table(std::move(labels), identity, std::move(table),
                                 ElementSource::kProduct);
}

int CliffordGroup::index_of(const clifford::Element& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == x) return static_cast<int>(i);
  }
  return -1;
}

CliffordGroup generate(std::span<const clifford::Element> generators,
                       clifford::Rank rank) {
  if (generators.empty()) fail("generator list must be non-empty");
  for (const auto& g : generators) clifford::validate(g, rank);

  auto less = [](const clifford::Element& a, const clifford::Element& b) {
    return clifford::canonical_less(a, b);
  };
  std::set<clifford::Element, decltype(less)> seen(less);
  std::vector<clifford::Element> ordered;

  // Breadth-first levels; each new level sorted canonically before append,
  // so the element ordering is a function of the generated set alone.
  std::vector<clifford::Element> level = {clifford::identity()};
  seen.insert(clifford::identity());
  ordered.push_back(clifford::identity());
  while (!level.empty()) {
    std::vector<clifford::Element> next;
    for (const auto& x : level) {
      for (const auto& g : generators) {
        clifford::Element y = clifford::mul(x, g, rank);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end(), less);
    for (const auto& y : next) ordered.push_back(y);
    if (static_cast<int>(ordered.size()) > kMaxGroupOrder) {
      throw std::length_error("closure exceeds the group size cap");
    }
    level = std::move(next);
  }

  const int n = static_cast<int>(ordered.size());
  std::map<clifford::Element, int, decltype(less)> index_of(less);
  for (int i = 0; i < n; ++i) index_of[ordered[i]] = i;

  std::vector<std::string> labels(n);
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i) {
    labels[i] = clifford::to_string(ordered[i]);
    for (int j = 0; j < n; ++j) {
      auto it = index_of.find(clifford::mul(ordered[i], ordered[j], rank));
      if (it == index_of.end()) fail("closure not closed under product");
      table[i * n + j] = it->second;
    }
  }
  CliffordGroup out;
  out.group = FiniteGroup::from_table(std::move(labels), 0, std::move(table),
                                      ElementSource::kClifford);
  out.elements = std::move(ordered);
  out.rank = rank.n;
  return out;
}

int SignVectorGroup::index_of(const std::vector<int>& v) const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i] == v) return static_cast<int>(i);
  }
  return -1;
}

SignVectorGroup generate_sign_vectors(
    std::span<const std::vector<int>> generators) {
  if (generators.empty()) fail("generator list must be non-empty");
  const std::size_t r = generators.front().size();
  for (const auto& v : generators) {
    if (v.size() != r) fail("sign vectors must share one length");
    for (int s : v) {
      if (s != +1 && s != -1) fail("sign vector entries must be ±1");
    }
  }
  // Canonical order: treat + as 0, - as 1 and sort lexicographically.
  auto less = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  };
  auto mulv = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
  };
  std::set<std::vector<int>, decltype(less)> seen(less);
  std::vector<int> id(r, +1);
  seen.insert(id);
  std::vector<std::vector<int>> level = {id};
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : level) {
      for (const auto& g : generators) {
        auto y = mulv(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<int>> ordered(seen.begin(), seen.end());

  const int n = static_cast<int>(ordered.size());
  std::vector<std::string> labels(n);
  std::vector<int> table(n * n);
  auto find = [&](const std::vector<int>& v) {
    auto it = seen.find(v);
    return static_cast<int>(std::distance(seen.begin(), it));
  };
  for (int i = 0; i < n; ++i) {
    std::string lab = "(";
    for (std::size_t k = 0; k < r; ++k) {
      lab += ordered[i][k] > 0 ? "+" : "-";
    }
    lab += ")";
    labels[i] = lab;
    for (int j = 0; j < n; ++j) {
      table[i * n + j] = find(mulv(ordered[i], ordered[j]));
    }
  }
  SignVectorGroup out;
  out.group = FiniteGroup::from_table(std::move(labels), find(id),
                                      std::move(table),
                                      ElementSource::kSignVector);
  out.vectors = std::move(ordered);
  return out;
}

std::string to_string(GroupId id) {
  switch (id) {
    case GroupId::kC2: return "C2";
    case GroupId::kC4: return "C4";
    case GroupId::kC8: return "C8";
    case GroupId::kC2xC2: return "C2xC2";
    case GroupId::kC2xC4: return "C2xC4";
    case GroupId::kC2p3: return "C2^3";
    case GroupId::kC2p4: return "C2^4";
    case GroupId::kD8: return "D8";
    case GroupId::kQ8: return "Q8";
    case GroupId::kPauli16: return "Pauli16";
    case GroupId::kD8castQ8: return "D8castQ8";
    case GroupId::kD8castD8: return "D8castD8";
    case GroupId::kUnrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

std::optional<GroupId> parse_group_id(const std::string& label) {
  static const std::vector<GroupId> all = {
      GroupId::kC2,      GroupId::kC4,       GroupId::kC8,
      GroupId::kC2xC2,   GroupId::kC2xC4,    GroupId::kC2p3,
      GroupId::kC2p4,    GroupId::kD8,       GroupId::kQ8,
      GroupId::kPauli16, GroupId::kD8castQ8, GroupId::kD8castD8,
  };
  for (GroupId id : all) {
    if (to_string(id) == label) return id;
  }
  return std::nullopt;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.census = g.order_census();
  Subgroup z = g.center();
  f.center_order = z.order();
  SubgroupAsGroup zg = subgroup_as_group(g, z);
  f.center_census = zg.group.order_census();
  f.derived_order = g.derived_subgroup().order();
  return f;
}

namespace {

FiniteGroup make_cyclic(int n) {
  std::vector<std::string> labels(n);
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(labels), 0, std::move(table),
                                 ElementSource::kTable);
}

FiniteGroup make_elementary_abelian(int r) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<int> v(r, +1);
    v[i] = -1;
    gens.push_back(std::move(v));
  }
  return generate_sign_vectors(gens).group;
}

FiniteGroup realize(GroupId id) {
  using clifford::Element;
  using clifford::Rank;
  auto gen = [](std::vector<Element> gens, int rank) {
    return generate(gens, Rank(rank)).group;
  };
  switch (id) {
    case GroupId::kC2:
      return gen({clifford::minus_one()}, 3);
    case GroupId::kC4:
      return gen({clifford::monomial({1, 2})}, 3);
    case GroupId::kC8:
      return make_cyclic(8);
    case GroupId::kC2xC2:
      return make_elementary_abelian(2);
    case GroupId::kC2xC4:
      return gen({clifford::minus_one(), clifford::monomial({1, 2}),
                  clifford::monomial({3, 4})},
                 4);
    case GroupId::kC2p3:
      return make_elementary_abelian(3);
    case GroupId::kC2p4:
      return make_elementary_abelian(4);
    case GroupId::kD8:
      return gen({clifford::generator(1), clifford::generator(2)}, 3);
    case GroupId::kQ8:
      return gen({clifford::monomial({1, 2}), clifford::monomial({1, 3})}, 3);
    case GroupId::kPauli16:
      return gen({clifford::minus_one(), clifford::monomial({1, 2}),
                  clifford::monomial({1, 3}), clifford::monomial({4, 5})},
                 5);
    case GroupId::kD8castQ8:
      // The full rank-4 monomial group is extraspecial of order 32 with
      // twenty elements of order 4.
      return gen({clifford::generator(1), clifford::generator(2),
                  clifford::generator(3), clifford::generator(4)},
                 4);
    case GroupId::kD8castD8: {
      FiniteGroup d8 = gen({clifford::generator(1), clifford::generator(2)}, 3);
      int z = -1;
      for (int i = 0; i < d8.order(); ++i) {
        if (d8.element_order(i) == 2 && d8.center().contains(i)) z = i;
      }
      return central_product(d8, z, d8, z);
    }
    case GroupId::kUnrecognized:
      break;
  }
  fail("no realization for Unrecognized");
}

struct Catalog {
  std::vector<std::pair<Fingerprint, GroupId>> entries;
};

const Catalog& catalog() {
  static const Catalog instance = [] {
    Catalog c;
    const std::vector<GroupId> all = {
        GroupId::kC2,      GroupId::kC4,       GroupId::kC8,
        GroupId::kC2xC2,   GroupId::kC2xC4,    GroupId::kC2p3,
        GroupId::kC2p4,    GroupId::kD8,       GroupId::kQ8,
        GroupId::kPauli16, GroupId::kD8castQ8, GroupId::kD8castD8,
    };
    for (GroupId id : all) {
      c.entries.emplace_back(fingerprint(realize(id)), id);
    }
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      for (std::size_t j = i + 1; j < c.entries.size(); ++j) {
        if (c.entries[i].first == c.entries[j].first) {
          throw std::logic_error("group catalog fingerprints collide");
        }
      }
    }
    return c;
  }();
  return instance;
}

}  // namespace

GroupId identify(const FiniteGroup& g) {
  if (g.order() > kMaxIdentifyOrder) {
    fail("identify only handles groups of order <= 64");
  }
  Fingerprint f = fingerprint(g);
  for (const auto& [fp, id] : catalog().entries) {
    if (fp == f) return id;
  }
  return GroupId::kUnrecognized;
}

FiniteGroup catalog_realization(GroupId id) {
  if (id == GroupId::kUnrecognized) fail("no realization for Unrecognized");
  return realize(id);
}

}  // namespace lpacket::groups
