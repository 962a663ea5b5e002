#include "lpacket/sgroups.hpp"

#include <algorithm>
#include <numeric>

namespace lpacket::sgroups {

namespace {

using clifford::Element;
using groups::FiniteGroup;

[[noreturn]] void violated(const std::string& what) {
  throw InvariantViolation(what);
}

}  // namespace

int PartitionSpec::rank() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<std::pair<int, int>> PartitionSpec::blocks() const {
  std::vector<std::pair<int, int>> out;
  int lo = 1;
  for (int p : parts) {
    out.emplace_back(lo, lo + p - 1);
    lo += p;
  }
  return out;
}

int PartitionSpec::odd_part_count() const {
  return static_cast<int>(
      std::count_if(parts.begin(), parts.end(), [](int p) { return p % 2; }));
}

int PartitionSpec::even_part_count() const {
  return size() - odd_part_count();
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
  PartitionSpec p;
  int current = 0;
  bool has_digit = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      current = current * 10 + (ch - '0');
      has_digit = true;
    } else if (ch == '+' || ch == ',') {
      if (!has_digit) throw std::invalid_argument("malformed partition");
      p.parts.push_back(current);
      current = 0;
      has_digit = false;
    } else if (ch != ' ') {
      throw std::invalid_argument("malformed partition");
    }
  }
  if (!has_digit) throw std::invalid_argument("malformed partition");
  p.parts.push_back(current);
  for (int part : p.parts) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
  }
  return p;
}

std::string PartitionSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(parts[i]);
  }
  return out;
}

SPhiGroup build_s_phi(const PartitionSpec& p) {
  const int r = p.size();
  // Enumerate sign vectors satisfying the determinant condition and feed
  // them all as generators; the set is already a group.
  std::vector<std::vector<int>> vectors;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> v(r, +1);
    int det = +1;
    for (int i = 0; i < r; ++i) {
      if (mask & (1 << i)) v[i] = -1;
      if (v[i] == -1 && p.parts[i] % 2 == 1) det = -det;
    }
    if (det == +1) vectors.push_back(std::move(v));
  }
  SPhiGroup out{groups::generate_sign_vectors(vectors)};
  const int expected =
      p.odd_part_count() > 0 ? (1 << (r - 1)) : (1 << r);
  if (out.group().order() != expected) {
    violated("sign-vector group has unexpected order");
  }
  return out;
}

groups::Subgroup SGroupData::z0_subgroup() const {
  return sc.group.subgroup(z0);
}

SGroupData build_s_phi_sc(const PartitionSpec& p) {
  const int rank = p.rank();
  if (rank < clifford::kMinRank || rank > 6) {
    throw std::invalid_argument("builder supports ranks 3 through 6");
  }
  SGroupData d;
  d.partition = p;
  d.s_phi = build_s_phi(p);

  const auto blocks = p.blocks();
  auto support_of = [&](const std::vector<int>& eps) {
    std::vector<int> support;
    for (int i = 0; i < p.size(); ++i) {
      if (eps[i] == -1) {
        for (int k = blocks[i].first; k <= blocks[i].second; ++k) {
          support.push_back(k);
        }
      }
    }
    return support;
  };

  std::vector<Element> generators = {clifford::minus_one()};
  for (const auto& eps : d.s_phi.realization.vectors) {
    std::vector<int> support = support_of(eps);
    if (support.size() % 2 != 0) {
      violated("determinant condition must force even supports");
    }
    generators.push_back(clifford::monomial(std::move(support)));
  }
  d.sc = groups::generate(generators, clifford::Rank(rank));

  d.minus_one = d.sc.index_of(clifford::minus_one());
  std::vector<int> full(rank);
  std::iota(full.begin(), full.end(), 1);
  d.omega = d.sc.index_of(clifford::monomial(full));

  if (rank % 2 == 1) {
    d.z0 = {d.sc.index_of(clifford::identity()), d.minus_one};
  } else {
    if (d.omega < 0) violated("even-rank cover must contain the full monomial");
    d.z0 = {d.sc.index_of(clifford::identity()), d.minus_one, d.omega,
            d.sc.group.product(d.minus_one, d.omega)};
  }
  std::sort(d.z0.begin(), d.z0.end());

  // Projection: forget the sign, read the block pattern.
  d.projection.reserve(d.sc.group.order());
  for (const Element& x : d.sc.elements) {
    std::vector<int> eps(p.size(), +1);
    for (int i = 0; i < p.size(); ++i) {
      bool any = false;
      bool all = true;
      for (int k = blocks[i].first; k <= blocks[i].second; ++k) {
        bool in = std::binary_search(x.support.begin(), x.support.end(), k);
        any = any || in;
        all = all && in;
      }
      if (any != all) violated("monomial support is not a union of blocks");
      if (all) eps[i] = -1;
    }
    int idx = d.s_phi.realization.index_of(eps);
    if (idx < 0) violated("projected sign vector misses the base group");
    d.projection.push_back(idx);
  }
  // Structural checks shared with exact_sequence_report; fail fast here.
  if (d.sc.group.order() != 2 * d.s_phi.group().order()) {
    violated("cover order must be twice the base order");
  }
  return d;
}

ExactSequenceWitness exact_sequence_report(const SGroupData& d,
                                           bool elliptic_two_lift) {
  const FiniteGroup& sc = d.sc.group;
  const FiniteGroup& base = d.s_phi.group();

  // Homomorphism.
  for (int a = 0; a < sc.order(); ++a) {
    for (int b = 0; b < sc.order(); ++b) {
      int lhs = d.projection[sc.product(a, b)];
      int rhs = base.product(d.projection[a], d.projection[b]);
      if (lhs != rhs) violated("projection is not a homomorphism");
    }
  }
  // Kernel exactly {±1}.
  std::vector<int> kernel;
  for (int a = 0; a < sc.order(); ++a) {
    if (d.projection[a] == base.identity()) kernel.push_back(a);
  }
  std::vector<int> expected_kernel = {sc.identity(), d.minus_one};
  std::sort(expected_kernel.begin(), expected_kernel.end());
  if (kernel != expected_kernel) violated("kernel is not {±1}");
  // Surjectivity.
  std::vector<bool> hit(base.order(), false);
  for (int a = 0; a < sc.order(); ++a) hit[d.projection[a]] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    violated("projection is not surjective");
  }
  // z0 central.
  groups::Subgroup center = sc.center();
  for (int z : d.z0) {
    if (!center.contains(z)) violated("designated z0 is not central");
  }
  if (sc.order() != 2 * base.order()) {
    violated("cover order must be twice the base order");
  }

  ExactSequenceWitness w;
  w.sc_order = sc.order();
  w.s_phi_order = base.order();
  w.kernel_order = 2;
  w.z0_order = static_cast<int>(d.z0.size());
  w.gsp_sc_order = elliptic_two_lift ? 4 : 2;
  if (w.sc_order % w.gsp_sc_order != 0) {
    violated("similitude-side order does not divide the cover order");
  }
  w.i_tilde_phi = w.sc_order / w.gsp_sc_order;
  return w;
}

namespace {

// Greedy minimal generating chain of a group: elements that strictly grow
// the closure, scanned in index order.
std::vector<int> generating_chain(const FiniteGroup& g) {
  std::vector<int> gens;
  groups::Subgroup span = g.subgroup_closure(std::vector<int>{});
  while (span.order() < g.order()) {
    for (int x = 0; x < g.order(); ++x) {
      if (!span.contains(x)) {
        gens.push_back(x);
        span = g.subgroup_closure(gens);
        break;
      }
    }
  }
  return gens;
}

struct EmbeddingSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  const std::vector<int>& gens;
  std::vector<int> forced;  // a index -> required b index or -1

  std::vector<int> image;  // a index -> b index or -1
  std::optional<std::vector<int>> result;

  bool assign(int a_elt, int b_elt) {
    if (image[a_elt] != -1) return image[a_elt] == b_elt;
    if (forced[a_elt] != -1 && forced[a_elt] != b_elt) return false;
    image[a_elt] = b_elt;
    return true;
  }

  // Close the partial map under products; detects conflicts.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < a.order(); ++x) {
        if (image[x] == -1) continue;
        for (int y = 0; y < a.order(); ++y) {
          if (image[y] == -1) continue;
          int xy = a.product(x, y);
          int target = b.product(image[x], image[y]);
          if (image[xy] == -1) {
            if (!assign(xy, target)) return false;
            changed = true;
          } else if (image[xy] != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool injective_so_far() {
    std::vector<bool> used(b.order(), false);
    for (int x = 0; x < a.order(); ++x) {
      if (image[x] == -1) continue;
      if (used[image[x]]) return false;
      used[image[x]] = true;
    }
    return true;
  }

  void search(std::size_t k) {
    if (result) return;
    if (k == gens.size()) {
      if (std::find(image.begin(), image.end(), -1) != image.end()) return;
      if (!injective_so_far()) return;
      result = image;
      return;
    }
    const int g = gens[k];
    std::vector<int> saved = image;
    for (int candidate = 0; candidate < b.order(); ++candidate) {
      // Candidate images must match element orders.
      if (b.element_order(candidate) != a.element_order(g)) continue;
      image = saved;
      if (!assign(g, candidate)) continue;
      if (!propagate()) continue;
      if (!injective_so_far()) continue;
      search(k + 1);
      if (result) return;
    }
    image = saved;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(
    const FiniteGroup& a, const FiniteGroup& b,
    const std::vector<std::pair<int, int>>& constraints) {
  if (a.order() > b.order() || b.order() > groups::kMaxIdentifyOrder) {
    throw std::invalid_argument("embedding search needs |a| <= |b| <= 64");
  }
  std::vector<int> gens = generating_chain(a);
  EmbeddingSearch s{a, b, gens, std::vector<int>(a.order(), -1),
                    std::vector<int>(a.order(), -1), std::nullopt};
  for (const auto& [from, to] : constraints) s.forced[from] = to;
  s.image[a.identity()] = b.identity();
  if (s.forced[a.identity()] != -1 &&
      s.forced[a.identity()] != b.identity()) {
    return std::nullopt;
  }
  for (const auto& [from, to] : constraints) {
    if (!s.assign(from, to)) return std::nullopt;
  }
  if (!s.propagate() || !s.injective_so_far()) return std::nullopt;
  s.search(0);
  return s.result;
}

std::vector<KottwitzCharacter> kottwitz_catalog(const SGroupData& d) {
  const int rank = d.partition.rank();
  std::vector<KottwitzCharacter> out;
  auto make = [&](std::string label, std::string form,
                  const std::map<int, int>& exps_by_element) {
    KottwitzCharacter k;
    k.character.domain = d.z0;
    for (int z : d.z0) k.character.exps.push_back(exps_by_element.at(z));
    k.character.label = std::move(label);
    k.form = std::move(form);
    k.exp_on_minus_one = k.character.exp_on(d.minus_one);
    return k;
  };
  const int one = d.sc.group.identity();
  const int minus = d.minus_one;

  if (rank % 2 == 1) {
    out.push_back(make("1", "sp4", {{one, 0}, {minus, 0}}));
    out.push_back(make("sgn", "sp11", {{one, 0}, {minus, 2}}));
    return out;
  }
  const int omega = d.omega;
  const int minus_omega = d.sc.group.product(minus, omega);
  if (rank == 4) {
    // Klein center: the two factor characters and their twists. The order
    // of the two mixed characters is a convention; only the unordered pair
    // is canonical.
    out.push_back(make("zeta_2,2=1x1", "so(2,2)",
                       {{one, 0}, {minus, 0}, {omega, 0}, {minus_omega, 0}}));
    out.push_back(make("zeta_4,0=sgnxsgn", "so(4,0)",
                       {{one, 0}, {minus, 0}, {omega, 2}, {minus_omega, 2}}));
    out.push_back(make("zeta*_1,1=sgnx1", "so*(1,1)-+",
                       {{one, 0}, {minus, 2}, {omega, 2}, {minus_omega, 0}}));
    out.push_back(make("1xsgn", "so*(1,1)+-",
                       {{one, 0}, {minus, 2}, {omega, 0}, {minus_omega, 2}}));
    return out;
  }
  if (rank == 6) {
    // Cyclic order-4 center generated by the full monomial.
    out.push_back(make("zeta_3,3", "so(3,3)",
                       {{one, 0}, {minus, 0}, {omega, 0}, {minus_omega, 0}}));
    out.push_back(make("zeta_V_D", "so(v_d)",
                       {{one, 0}, {minus, 0}, {omega, 2}, {minus_omega, 2}}));
    out.push_back(make("zeta*_3,0", "so*(3,0)",
                       {{one, 0}, {minus, 2}, {omega, 1}, {minus_omega, 3}}));
    out.push_back(make("zeta*_3,0^-1", "so*(3,0)op",
                       {{one, 0}, {minus, 2}, {omega, 3}, {minus_omega, 1}}));
    return out;
  }
  throw std::invalid_argument("no character catalog at this rank");
}

}  // namespace lpacket::sgroups
