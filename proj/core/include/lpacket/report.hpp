#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpacket/chartab.hpp"
#include "lpacket/llc.hpp"

// Rendering and fixture verification. Text and JSON renderings of one
// report carry identical field values; JSON is schema-versioned.

namespace lpacket::report {

enum class Format { kText, kJson };

std::string render_report(const llc::PacketReport& r, Format format);

// Character table rendering for a named group.
std::string render_character_table(const std::string& title,
                                   const chartab::CharacterTable& table,
                                   Format format);

// All (case, partition/flag, form) reports in canonical order. Reports are
// computed in parallel across `jobs` workers and rendered serially, so the
// output bytes do not depend on the parallelism degree.
struct ClassifyAllResult {
  std::string rendered;
  bool all_pass = false;
  std::vector<std::string> failures;  // "case partition form: check" lines
};
ClassifyAllResult classify_all(Format format, int jobs);

// One golden row: the key selecting a report plus the expected values.
struct FixtureRow {
  std::string case_id;
  std::string partition;
  std::optional<bool> dihedral;
  std::string form;

  std::string s_phi_sc_id;
  std::string s_phi_id;
  groups::OrderCensus census;
  int packet_size = 0;
  int dim_rho = 0;
  int mult_per_lift = 0;
  int mult_packet_total = 0;
  int i_tilde = 0;

  std::string note;
};

// Throws std::invalid_argument on malformed input.
std::vector<FixtureRow> load_fixtures(const std::string& path);

struct FixtureOutcome {
  std::string key;
  std::vector<std::string> diffs;  // empty = row passes

  bool pass() const { return diffs.empty(); }
};

struct VerifySummary {
  std::vector<FixtureOutcome> rows;
  int failed = 0;
  bool empty = false;

  bool all_pass() const { return failed == 0; }
};

// Recomputes every fixture row from scratch and compares all fields.
VerifySummary verify_fixtures(const std::vector<FixtureRow>& rows, int jobs);

std::string render_verify(const VerifySummary& summary);

}  // namespace lpacket::report
