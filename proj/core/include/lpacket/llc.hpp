#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpacket/sgroups.hpp"

// Case taxonomy, case-to-partition mapping, packet sizes, restriction
// multiplicities and the twist-group bookkeeping, for both the split form
// and its non-quasi-split inner form.

namespace lpacket::llc {

enum class Form { kSp4, kSp11 };

std::string to_string(Form f);
std::optional<Form> parse_form(const std::string& text);

enum class CaseId {
  kIA,
  kIB,
  kII,
  kIIIA,
  kIIIB,
  kIIIC1,
  kIIIC2,
  kIIIC3,
  kIIIC4,
  kIIIC5,
  kIIIC6,
  kIIID1,
  kIIID2,
};

std::string to_string(CaseId c);
std::optional<CaseId> parse_case_id(const std::string& text);
std::vector<CaseId> all_case_ids();

// True for the two-lift elliptic family (both subcases of Case I).
bool is_case_i(CaseId c);
// Every case except Case II is elliptic.
bool is_elliptic(CaseId c);

// Admissible partitions for each case. Case II bypasses the partition
// machinery and is rejected here.
std::vector<sgroups::PartitionSpec> case_to_partitions(CaseId c);

struct CaseSpec {
  CaseId case_id = CaseId::kIIIA;
  std::optional<sgroups::PartitionSpec> partition;  // required when ambiguous
  bool dihedral_det = true;                         // Case II only
  Form form = Form::kSp11;
};

struct CheckEntry {
  std::string name;
  bool pass = false;
};

struct PacketReport {
  std::string case_id;
  std::string partition;
  std::optional<bool> dihedral_det;  // Case II only
  std::string form;

  int gsp_packet_size = 1;

  std::string s_phi_id;     // "1" for the trivial group
  std::string s_phi_sc_id;
  std::string center_structure;
  groups::OrderCensus census;
  int sc_order = 0;
  int s_phi_order = 0;

  std::string zeta_label;
  std::vector<int> irr_degrees;  // degrees of the packet rows

  int packet_size = 0;
  int dim_rho = 0;
  int mult_per_lift = 0;
  int mult_packet_total = 0;

  int i_tilde_phi = 0;           // twist group of the lifted parameter
  int i_tilde_sigma = 0;         // per-lift twist group
  int per_lift_constituents = 0;

  // Quoted constants for elliptic shapes; carried, not recomputed.
  std::optional<int> delta_phi;
  std::optional<int> epsilon_phi;

  std::vector<CheckEntry> checks;

  bool all_checks_pass() const;
  std::vector<std::string> failed_checks() const;
};

// Full report for one case/partition/form; the check ledger is embedded
// rather than thrown so callers can render failures.
PacketReport packet_report(const CaseSpec& spec);

// Case II from its rank-3 reduction: the order-4 cyclic cover when the
// two-dimensional piece is dihedral with matching determinant, the minimal
// cover otherwise.
PacketReport case_ii_report(bool dihedral_det, Form form);

// The identity m^2 * (per-lift constituent count) = |per-lift twist group|,
// from the fields the report already carries.
bool multiplicity_identity_check(const PacketReport& report);

// For a group with a designated central cyclic order-4 subgroup and an
// index-2 subgroup meeting it in its order-2 part: true iff every
// irreducible with faithful central character restricts irreducibly.
bool case_iii_restriction_check(const groups::FiniteGroup& b,
                                const groups::Subgroup& mu4,
                                const groups::Subgroup& a);

// The worked two-form example on the 1+1+3 shape: split side has four
// one-dimensional rows, the inner form a single two-dimensional row, with
// the dihedral cover over the Klein base. Throws on any mismatch.
std::pair<PacketReport, PacketReport> worked_example();

// Every (case, partition/flag, form) triple in canonical order.
std::vector<CaseSpec> all_case_specs();

// Expected values per partition transcribed once; exposed for the fixture
// writer and tests.
struct ExpectedRow {
  std::string s_phi_sc_id;
  std::string s_phi_id;
  groups::OrderCensus census;
  int sc_order = 0;
  int packet_size_sp4 = 0;
  int packet_size_sp11 = 0;
  int dim_rho_sp4 = 1;
  int dim_rho_sp11 = 1;
};
const ExpectedRow* expected_for_partition(const std::string& partition);

}  // namespace lpacket::llc
