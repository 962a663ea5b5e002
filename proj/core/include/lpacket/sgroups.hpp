#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpacket/chartab.hpp"
#include "lpacket/groups.hpp"

// Component groups from partition data: the sign-vector group the partition
// cuts out of the special orthogonal dual side, its monomial double cover,
// the designated central subgroup at each rank, and the exact-sequence
// bookkeeping the packet layer consumes.

namespace lpacket::sgroups {

// Thrown when a constructed object violates one of its structural checks.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PartitionSpec {
  std::vector<int> parts;  // ordered, each >= 1

  int rank() const;
  int size() const { return static_cast<int>(parts.size()); }
  // Consecutive 1-based index blocks [lo, hi] in partition order.
  std::vector<std::pair<int, int>> blocks() const;
  int odd_part_count() const;   // |I_o|
  int even_part_count() const;  // |I_e|

  // Accepts "a+b+c" or "a,b,c".
  static PartitionSpec parse(std::string_view text);
  std::string to_string() const;  // "a+b+c"

  friend bool operator==(const PartitionSpec& a, const PartitionSpec& b) =
      default;
};

// Sign vectors e in {±1}^r with prod e_i^{N_i} = 1 under componentwise
// product. When some part is odd this has order 2^{r-1}.
struct SPhiGroup {
  groups::SignVectorGroup realization;

  const groups::FiniteGroup& group() const { return realization.group; }
};

SPhiGroup build_s_phi(const PartitionSpec& p);

struct SGroupData {
  PartitionSpec partition;
  SPhiGroup s_phi;
  groups::CliffordGroup sc;

  int minus_one = -1;             // index of (-, {}) in sc
  int omega = -1;                 // index of (+, full support), when present
  std::vector<int> z0;            // designated central subgroup, sorted
  std::vector<int> projection;    // sc index -> s_phi index

  const groups::FiniteGroup& group() const { return sc.group; }
  groups::Subgroup z0_subgroup() const;
};

// The double cover generated by (-, {}) and one monomial per sign vector,
// supported on the union of its negative blocks. Ranks 3..6; the designated
// central subgroup is {±1} at odd rank, {±1, ±w} at rank 4 and <w> at
// rank 6, with w the full monomial.
SGroupData build_s_phi_sc(const PartitionSpec& p);

struct ExactSequenceWitness {
  int sc_order = 0;
  int s_phi_order = 0;
  int kernel_order = 0;
  int z0_order = 0;
  int gsp_sc_order = 0;   // 4 for an elliptic two-lift case, 2 otherwise
  int i_tilde_phi = 0;    // sc_order / gsp_sc_order
};

// Verifies that the projection is a surjective homomorphism with kernel
// exactly {±1}, that z0 is central, and records the order bookkeeping.
// Throws InvariantViolation on any failure.
ExactSequenceWitness exact_sequence_report(const SGroupData& d,
                                           bool elliptic_two_lift);

// Brute-force search for an injective homomorphism a -> b respecting the
// given element constraints (a-index -> required b-index). Returns the image
// of every a element, or nullopt when exhaustive search certifies absence.
std::optional<std::vector<int>> find_embedding(
    const groups::FiniteGroup& a, const groups::FiniteGroup& b,
    const std::vector<std::pair<int, int>>& constraints);

// One Kottwitz character: a character of the designated central subgroup
// together with the inner form it classifies.
struct KottwitzCharacter {
  chartab::CentralCharacter character;
  std::string form;
  // Restriction to {±1}: 0 for the trivial character, 2 for sgn.
  int exp_on_minus_one = 0;
};

// The center characters with form labels at the given rank, bound to the
// z0 of a concrete builder output. Rank 5 gives the split/non-split pair,
// rank 4 the four characters of the Klein center, rank 6 the four
// characters of the cyclic order-4 center.
std::vector<KottwitzCharacter> kottwitz_catalog(const SGroupData& d);

}  // namespace lpacket::sgroups
