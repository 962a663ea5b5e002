// Acceptance suite: one line per criterion, exact integer checks throughout.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpacket/chartab.hpp"
#include "lpacket/llc.hpp"
#include "lpacket/report.hpp"

using namespace lpacket;
using chartab::CharacterTable;
using chartab::GaussInt;
using groups::FiniteGroup;
using groups::GroupId;
using llc::CaseId;
using llc::CaseSpec;
using llc::Form;
using llc::PacketReport;
using sgroups::PartitionSpec;
using sgroups::SGroupData;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

PartitionSpec part(std::vector<int> parts) {
  PartitionSpec p;
  p.parts = std::move(parts);
  return p;
}

PacketReport report_for(CaseId c, std::vector<int> parts, Form form) {
  CaseSpec spec;
  spec.case_id = c;
  spec.partition = part(std::move(parts));
  spec.form = form;
  return llc::packet_report(spec);
}

struct TableRow {
  CaseId case_id;
  std::vector<int> parts;
  std::string group_id;
  int packet_size;
  int dim_rho;
  int mult_per_lift;
  int mult_packet_total;
};

const std::vector<TableRow>& classification_rows() {
  static const std::vector<TableRow> rows = {
      {CaseId::kIIIA, {5}, "C2", 1, 1, 1, 1},
      {CaseId::kIIIB, {2, 3}, "C4", 2, 1, 1, 1},
      {CaseId::kIA, {1, 4}, "C2xC2", 2, 1, 1, 1},
      {CaseId::kIA, {1, 2, 2}, "C2xC4", 4, 1, 1, 1},
      {CaseId::kIB, {1, 1, 3}, "D8", 1, 2, 1, 2},
      {CaseId::kIB, {1, 1, 1, 2}, "Pauli16", 2, 2, 1, 2},
      {CaseId::kIB, {1, 1, 1, 1, 1}, "D8castQ8", 1, 4, 2, 4},
  };
  return rows;
}

// 1. Classification table for the inner form: group ids, packet sizes,
// dimensions, per-lift and packet-total multiplicities, exact.
void criterion_1() {
  for (const TableRow& row : classification_rows()) {
    PacketReport r = report_for(row.case_id, row.parts, Form::kSp11);
    std::string at = " at " + r.partition;
    require(r.s_phi_sc_id == row.group_id, "group id" + at);
    require(r.packet_size == row.packet_size, "packet size" + at);
    require(r.dim_rho == row.dim_rho, "dim rho" + at);
    require(r.mult_per_lift == row.mult_per_lift, "per-lift mult" + at);
    require(r.mult_packet_total == row.mult_packet_total,
            "packet-total mult" + at);
    require(r.all_checks_pass(), "check ledger" + at);
  }
}

// 2. Order censuses, exact.
void criterion_2() {
  const std::vector<std::pair<std::vector<int>, groups::OrderCensus>> expected =
      {
          {{5}, {{1, 1}, {2, 1}}},
          {{2, 3}, {{1, 1}, {2, 1}, {4, 2}}},
          {{1, 4}, {{1, 1}, {2, 3}}},
          {{1, 2, 2}, {{1, 1}, {2, 3}, {4, 4}}},
          {{1, 1, 3}, {{1, 1}, {2, 5}, {4, 2}}},
          {{1, 1, 1, 2}, {{1, 1}, {2, 7}, {4, 8}}},
          {{1, 1, 1, 1, 1}, {{1, 1}, {2, 11}, {4, 20}}},
      };
  for (const auto& [parts, census] : expected) {
    SGroupData d = sgroups::build_s_phi_sc(part(parts));
    require(d.group().order_census() == census,
            "census at " + d.partition.to_string());
  }
}

// 3. Character tables: exact orthogonality, degree sums, and the half-order
// rule for the sign slice.
void criterion_3() {
  for (const auto& [parts, census] : std::vector<
           std::pair<std::vector<int>, int>>{{{5}, 0},
                                             {{2, 3}, 0},
                                             {{1, 4}, 0},
                                             {{1, 2, 2}, 0},
                                             {{1, 1, 3}, 0},
                                             {{1, 1, 1, 2}, 0},
                                             {{1, 1, 1, 1, 1}, 0}}) {
    SGroupData d = sgroups::build_s_phi_sc(part(parts));
    CharacterTable t = CharacterTable::build(d.group());
    std::string at = " at " + d.partition.to_string();
    require(t.check_row_orthogonality(), "row orthogonality" + at);
    require(t.check_column_orthogonality(), "column orthogonality" + at);
    require(t.check_degree_sum(), "degree sum" + at);

    chartab::CentralCharacter sgn;
    sgn.domain = {d.group().identity(), d.minus_one};
    std::sort(sgn.domain.begin(), sgn.domain.end());
    for (int z : sgn.domain) sgn.exps.push_back(z == d.minus_one ? 2 : 0);
    long long sum = 0;
    for (int row : chartab::irr_with_central_character(t, sgn)) {
      sum += 1LL * t.degree(row) * t.degree(row);
    }
    require(sum == d.group().order() / 2, "sign-slice degree sum" + at);
  }
}

// 4. Structure laws when at least three parts are odd.
void criterion_4() {
  const std::vector<std::pair<std::vector<int>, int>> expected_centers = {
      {{1, 1, 3}, 2}, {{1, 1, 1, 2}, 4}, {{1, 1, 1, 1, 1}, 2}};
  for (const auto& [parts, center_order] : expected_centers) {
    SGroupData d = sgroups::build_s_phi_sc(part(parts));
    std::string at = " at " + d.partition.to_string();
    require(d.partition.odd_part_count() >= 3, "odd-part precondition" + at);
    groups::Subgroup derived = d.group().derived_subgroup();
    require(derived.order() == 2 && derived.contains(d.minus_one),
            "derived subgroup" + at);
    require(d.group().center().order() == center_order, "center order" + at);
    require(center_order == (1 << (d.partition.even_part_count() + 1)),
            "center order formula" + at);
  }
}

// 5. The squared-multiplicity identity in every generated report.
void criterion_5() {
  for (const CaseSpec& spec : llc::all_case_specs()) {
    PacketReport r = llc::packet_report(spec);
    require(llc::multiplicity_identity_check(r),
            "identity at " + r.case_id + " " + r.partition + " " + r.form);
  }
}

// 6. Restriction irreducibility across faithful central characters for
// every constructed pair.
void criterion_6() {
  int pairs_checked = 0;

  // The cyclic order-4 group and its half.
  {
    FiniteGroup c4 = groups::catalog_realization(GroupId::kC4);
    int involution = -1;
    for (int a = 0; a < 4; ++a) {
      if (c4.element_order(a) == 2) involution = a;
    }
    require(llc::case_iii_restriction_check(
                c4, c4.whole(), c4.subgroup({c4.identity(), involution})),
            "cyclic base pair");
    ++pairs_checked;
  }

  // The order-16 cover with its cyclic center.
  {
    FiniteGroup pauli = groups::catalog_realization(GroupId::kPauli16);
    groups::Subgroup center = pauli.center();
    for (int a = 0; a < pauli.order(); ++a) {
      for (int b = a + 1; b < pauli.order(); ++b) {
        groups::Subgroup h = pauli.subgroup_closure(std::vector<int>{a, b});
        if (h.order() != 8) continue;
        bool meets_generator = false;
        for (int z : center.members) {
          if (pauli.element_order(z) == 4 && h.contains(z)) {
            meets_generator = true;
          }
        }
        if (meets_generator) continue;
        require(llc::case_iii_restriction_check(pauli, center, h),
                "order-16 pair");
        ++pairs_checked;
      }
    }
  }

  // Every rank-6 cover, restricted along every index-2 subgroup meeting
  // the order-4 center in its half.
  const std::vector<std::vector<int>> partitions_of_6 = {
      {6},          {1, 5},          {2, 4},       {3, 3},
      {1, 1, 4},    {1, 2, 3},       {2, 2, 2},    {1, 1, 1, 3},
      {1, 1, 2, 2}, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 1, 1}};
  for (const auto& parts : partitions_of_6) {
    SGroupData d = sgroups::build_s_phi_sc(part(parts));
    const FiniteGroup& b = d.group();
    groups::Subgroup mu4 = d.z0_subgroup();
    CharacterTable t = CharacterTable::build(b);
    for (int r = 0; r < t.row_count(); ++r) {
      if (t.degree(r) != 1) continue;
      std::vector<int> kernel;
      for (int a = 0; a < b.order(); ++a) {
        if (t.value(r, a) == GaussInt{1, 0}) kernel.push_back(a);
      }
      if (static_cast<int>(kernel.size()) != b.order() / 2) continue;
      groups::Subgroup h = b.subgroup(kernel);
      if (h.contains(d.omega) || !h.contains(d.minus_one)) continue;
      require(llc::case_iii_restriction_check(b, mu4, h),
              "rank-6 pair at " + d.partition.to_string());
      ++pairs_checked;
    }
  }
  require(pairs_checked >= 14, "expected more constructed pairs");
}

// 7. Split-form mode: packet sizes 2^(r-1) for elliptic shapes, and the
// worked example end-to-end.
void criterion_7() {
  for (const TableRow& row : classification_rows()) {
    PacketReport r = report_for(row.case_id, row.parts, Form::kSp4);
    require(r.packet_size == (1 << (static_cast<int>(row.parts.size()) - 1)),
            "split packet size at " + r.partition);
  }
  auto [sp4, sp11] = llc::worked_example();
  require(sp4.packet_size == 4 && sp11.packet_size == 1,
          "example packet sizes");
  require(sp11.dim_rho == 2, "example dimension");
  require(sp4.s_phi_sc_id == "D8" && sp4.s_phi_id == "C2xC2",
          "example identifications");
}

// 8. Embedding search: the even-rank covers land in their odd-rank
// partners with -1 mapped to -1 (index 2 for the constituent-sharing
// family, onto for the two-lift family), and the quaternion group does not
// embed in the dihedral group. All certified by exhaustive search.
void criterion_8() {
  struct Pair {
    std::vector<int> small, big;
    int expected_index;
  };
  const std::vector<Pair> pairs = {
      {{1, 3}, {1, 1, 3}, 2},
      {{1, 1, 2}, {1, 1, 1, 2}, 2},
      {{1, 1, 1, 1}, {1, 1, 1, 1, 1}, 2},
      {{2, 2}, {1, 2, 2}, 1},
      {{4}, {1, 4}, 1},
  };
  for (const Pair& pr : pairs) {
    SGroupData small = sgroups::build_s_phi_sc(part(pr.small));
    SGroupData big = sgroups::build_s_phi_sc(part(pr.big));
    auto image = sgroups::find_embedding(
        small.group(), big.group(), {{small.minus_one, big.minus_one}});
    std::string at = " for " + small.partition.to_string() + " -> " +
                     big.partition.to_string();
    require(image.has_value(), "embedding exists" + at);
    std::vector<int> members = *image;
    std::sort(members.begin(), members.end());
    require(groups::index(big.group().subgroup(members)) == pr.expected_index,
            "embedding index" + at);
  }
  require(!sgroups::find_embedding(groups::catalog_realization(GroupId::kQ8),
                                   groups::catalog_realization(GroupId::kD8),
                                   {})
               .has_value(),
          "quaternion into dihedral must fail");
}

// 9. Monomial arithmetic oracle: formula order equals iterated order for
// every element at ranks 4-6, plus a 1000-triple associativity fuzz.
void criterion_9() {
  for (int rank = 4; rank <= 6; ++rank) {
    clifford::Rank r(rank);
    for (int mask = 0; mask < (1 << rank); ++mask) {
      std::vector<int> support;
      for (int i = 0; i < rank; ++i) {
        if (mask & (1 << i)) support.push_back(i + 1);
      }
      for (int sign : {+1, -1}) {
        clifford::Element x{sign, support};
        clifford::Element acc = x;
        int iterated = 1;
        while (!acc.is_identity()) {
          acc = clifford::mul(acc, x, r);
          ++iterated;
          require(iterated <= 8, "runaway order");
        }
        require(clifford::order(x) == iterated,
                "order mismatch at rank " + std::to_string(rank));
      }
    }
  }
  std::mt19937 rng(987654321);
  for (int rank : {4, 5, 6}) {
    clifford::Rank r(rank);
    auto random_element = [&] {
      std::uniform_int_distribution<int> mask_dist(0, (1 << rank) - 1);
      std::uniform_int_distribution<int> sign_dist(0, 1);
      std::vector<int> support;
      int mask = mask_dist(rng);
      for (int i = 0; i < rank; ++i) {
        if (mask & (1 << i)) support.push_back(i + 1);
      }
      return clifford::Element{sign_dist(rng) ? +1 : -1, support};
    };
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = random_element();
      auto b = random_element();
      auto c = random_element();
      require(clifford::mul(clifford::mul(a, b, r), c, r) ==
                  clifford::mul(a, clifford::mul(b, c, r), r),
              "associativity fuzz");
    }
  }
}

// 10. Byte-identical classify-all output across runs and worker counts.
void criterion_10() {
  auto text1 = report::classify_all(report::Format::kText, 1);
  auto text2 = report::classify_all(report::Format::kText, 1);
  auto text4 = report::classify_all(report::Format::kText, 4);
  auto json1 = report::classify_all(report::Format::kJson, 1);
  auto json4 = report::classify_all(report::Format::kJson, 4);
  require(text1.rendered == text2.rendered, "repeat run differs");
  require(text1.rendered == text4.rendered, "worker count changes text");
  require(json1.rendered == json4.rendered, "worker count changes json");
  require(text1.all_pass && json1.all_pass, "classify-all checks fail");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"classification table for the inner form", criterion_1},
      {"order censuses", criterion_2},
      {"exact character-table laws", criterion_3},
      {"derived subgroup and center laws", criterion_4},
      {"squared-multiplicity identity", criterion_5},
      {"restriction irreducibility pairs", criterion_6},
      {"split-form packet sizes and worked example", criterion_7},
      {"embedding search", criterion_8},
      {"monomial arithmetic oracle", criterion_9},
      {"deterministic classify-all", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("  [") + e.what() + "]";
      ++failures;
    }
    std::cout << verdict << "  criterion " << (i + 1) << ": "
              << criteria[i].first << detail << "\n";
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria pass\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED\n";
  }
  return failures;
}
