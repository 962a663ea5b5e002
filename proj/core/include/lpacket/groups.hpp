#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpacket/clifford.hpp"

// Concrete finite groups as fully materialized multiplication tables.
// Every group here has at most 512 elements, so closure generation, centers,
// derived subgroups and conjugacy classes are all plain table scans.

namespace lpacket::groups {

constexpr int kMaxGroupOrder = 512;
constexpr int kMaxIdentifyOrder = 64;

enum class ElementSource { kClifford, kSignVector, kProduct, kTable };

// Map element order -> number of elements of that order.
using OrderCensus = std::map<int, int>;

std::string to_string(const OrderCensus& census);

class FiniteGroup;

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted ascending, contains identity

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element) const;
};

struct ConjClass {
  int representative = 0;
  std::vector<int> members;  // sorted ascending

  int size() const { return static_cast<int>(members.size()); }
};

class FiniteGroup {
 public:
  // Builds a group from an explicit table. table[a * n + b] = a * b.
  // Checks identity/inverse laws and, for orders <= 64, associativity.
  static FiniteGroup from_table(std::vector<std::string> labels, int identity,
                                std::vector<int> table, ElementSource source);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int product(int a, int b) const { return table_[a * n_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int x) const {  // g x g^-1
    return product(product(g, x), inverse_[g]);
  }
  int element_order(int a) const;
  const std::string& label(int a) const { return labels_[a]; }
  ElementSource source() const { return source_; }

  bool is_abelian() const;
  bool commutes(int a, int b) const { return product(a, b) == product(b, a); }

  Subgroup whole() const;
  Subgroup center() const;
  Subgroup derived_subgroup() const;
  std::vector<ConjClass> conjugacy_classes() const;
  OrderCensus order_census() const;

  // Closure of the given elements inside this group.
  Subgroup subgroup_closure(std::span<const int> elements) const;

  // Validates that the member set is closed and contains the identity.
  Subgroup subgroup(std::vector<int> members) const;

  // Exponent of the group (lcm of element orders).
  int exponent() const;

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  ElementSource source_ = ElementSource::kTable;
};

// |parent| / |sub|; throws on a non-subgroup input.
int index(const Subgroup& sub);

// The subgroup realized as a standalone group, plus the map back to parent
// element indices.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& parent,
                                  const Subgroup& sub);

// Quotient by a normal subgroup: elements are cosets labeled by their
// minimal representative; proj maps parent indices to coset indices.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;
};
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& normal);

// Central product (A x B) / <(z_a, z_b)> for central involutions z_a, z_b.
FiniteGroup central_product(const FiniteGroup& a, int z_a,
                            const FiniteGroup& b, int z_b);

// Closure generation with deterministic breadth-first element ordering,
// tie-broken by the canonical monomial ordering.
struct CliffordGroup {
  FiniteGroup group;
  std::vector<clifford::Element> elements;  // parallel to group indices
  int rank = 0;

  int index_of(const clifford::Element& x) const;
};
CliffordGroup generate(std::span<const clifford::Element> generators,
                       clifford::Rank rank);

// Sign-vector groups ({±1}^r under componentwise product).
struct SignVectorGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> vectors;  // entries ±1, parallel to indices

  int index_of(const std::vector<int>& v) const;
};
SignVectorGroup generate_sign_vectors(
    std::span<const std::vector<int>> generators);

// Identification against the fixed catalog of groups the engine meets.
enum class GroupId {
  kC2,
  kC4,
  kC8,
  kC2xC2,
  kC2xC4,
  kC2p3,
  kC2p4,
  kD8,
  kQ8,
  kPauli16,
  kD8castQ8,
  kD8castD8,
  kUnrecognized,
};

std::string to_string(GroupId id);
std::optional<GroupId> parse_group_id(const std::string& label);

struct Fingerprint {
  int order = 0;
  bool abelian = false;
  OrderCensus census;
  int center_order = 0;
  OrderCensus center_census;
  int derived_order = 0;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;
  friend auto operator<=>(const Fingerprint& a, const Fingerprint& b) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

// Returns the unique catalog label with the group's fingerprint, or
// kUnrecognized. The catalog is realized concretely and self-tested for
// pairwise distinct fingerprints on first use.
GroupId identify(const FiniteGroup& g);

// Canonical realization of a catalog group (for chartab rendering and tests).
FiniteGroup catalog_realization(GroupId id);

}  // namespace lpacket::groups
