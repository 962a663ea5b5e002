// Command-line surface for the packet engine.
//
//   lpacket classify     one report by partition or case id
//   lpacket classify-all every case/partition/form triple
//   lpacket chartab      exact character table of a catalog group or cover
//   lpacket verify       recompute a golden fixture file and diff it
//
// Exit codes: 0 success, 1 invariant violation, 2 usage or parse error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lpacket/report.hpp"

namespace {

using lpacket::llc::CaseSpec;
using lpacket::llc::PacketReport;
using lpacket::report::Format;
using lpacket::sgroups::PartitionSpec;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

Format parse_format_or_throw(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  throw CLI::ValidationError("--format must be text or json");
}

// The case each bare partition of 5 is reported under.
const std::map<std::string, std::string>& canonical_cases() {
  static const std::map<std::string, std::string> table = {
      {"5", "III-a"},       {"2+3", "III-b"},     {"1+4", "I-a"},
      {"1+2+2", "I-a"},     {"1+1+3", "I-b"},     {"1+1+1+2", "I-b"},
      {"1+1+1+1+1", "I-b"},
  };
  return table;
}

int run_classify(const std::string& partition_arg, const std::string& case_arg,
                 bool dihedral, const std::string& form_arg,
                 const std::string& format_arg) {
  Format format = parse_format_or_throw(format_arg);
  auto form = lpacket::llc::parse_form(form_arg);
  if (!form) {
    std::cerr << "error: unknown form '" << form_arg << "'\n";
    return kExitUsage;
  }

  CaseSpec spec;
  spec.form = *form;
  spec.dihedral_det = dihedral;
  if (!case_arg.empty()) {
    auto case_id = lpacket::llc::parse_case_id(case_arg);
    if (!case_id) {
      std::cerr << "error: unknown case id '" << case_arg << "'\n";
      return kExitUsage;
    }
    spec.case_id = *case_id;
    if (!partition_arg.empty()) {
      if (spec.case_id == lpacket::llc::CaseId::kII) {
        std::cerr << "error: case II takes --dihedral/--no-dihedral, "
                     "not a partition\n";
        return kExitUsage;
      }
      spec.partition = PartitionSpec::parse(partition_arg);
    }
  } else if (!partition_arg.empty()) {
    auto it = canonical_cases().find(
        PartitionSpec::parse(partition_arg).to_string());
    if (it == canonical_cases().end()) {
      std::cerr << "error: '" << partition_arg
                << "' is not a partition of 5; pass --case for other shapes\n";
      return kExitUsage;
    }
    spec.case_id = *lpacket::llc::parse_case_id(it->second);
    spec.partition = PartitionSpec::parse(partition_arg);
  } else {
    std::cerr << "error: pass --partition or --case\n";
    return kExitUsage;
  }

  PacketReport report = lpacket::llc::packet_report(spec);
  std::cout << lpacket::report::render_report(report, format);
  if (!report.all_checks_pass()) {
    for (const std::string& name : report.failed_checks()) {
      std::cerr << "invariant violation: " << name << "\n";
    }
    return kExitInvariant;
  }
  return kExitOk;
}

int run_classify_all(const std::string& format_arg, int jobs) {
  Format format = parse_format_or_throw(format_arg);
  lpacket::report::ClassifyAllResult result =
      lpacket::report::classify_all(format, jobs);
  std::cout << result.rendered;
  if (!result.all_pass) {
    for (const std::string& line : result.failures) {
      std::cerr << "invariant violation: " << line << "\n";
    }
    return kExitInvariant;
  }
  return kExitOk;
}

int run_chartab(const std::string& group_arg, const std::string& partition_arg,
                const std::string& format_arg) {
  Format format = parse_format_or_throw(format_arg);
  if (group_arg.empty() == partition_arg.empty()) {
    std::cerr << "error: pass exactly one of --group or --partition\n";
    return kExitUsage;
  }
  try {
    if (!group_arg.empty()) {
      auto id = lpacket::groups::parse_group_id(group_arg);
      if (!id) {
        std::cerr << "error: unrecognized group label '" << group_arg << "'\n";
        return kExitUsage;
      }
      lpacket::groups::FiniteGroup g = lpacket::groups::catalog_realization(*id);
      auto table = lpacket::chartab::CharacterTable::build(g);
      std::cout << lpacket::report::render_character_table(group_arg, table,
                                                           format);
      return kExitOk;
    }
    PartitionSpec p = PartitionSpec::parse(partition_arg);
    lpacket::sgroups::SGroupData data = lpacket::sgroups::build_s_phi_sc(p);
    auto table = lpacket::chartab::CharacterTable::build(data.group());
    std::cout << lpacket::report::render_character_table(
        "cover for " + p.to_string(), table, format);
    return kExitOk;
  } catch (const lpacket::chartab::UnsupportedExponent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_verify(const std::string& path, int jobs) {
  std::vector<lpacket::report::FixtureRow> rows;
  try {
    rows = lpacket::report::load_fixtures(path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  lpacket::report::VerifySummary summary =
      lpacket::report::verify_fixtures(rows, jobs);
  std::cout << lpacket::report::render_verify(summary);
  return summary.all_pass() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact component-group and packet bookkeeping engine"};
  app.require_subcommand(1);

  std::string partition_arg, case_arg, group_arg, fixtures_arg;
  std::string form_arg = "sp11";
  std::string format_arg = "text";
  bool dihedral = true;
  int jobs = 1;

  CLI::App* classify = app.add_subcommand("classify", "one packet report");
  classify->add_option("--partition", partition_arg, "partition, e.g. 1+1+3");
  classify->add_option("--case", case_arg, "case id, e.g. I-b or III-c4");
  classify->add_flag("--dihedral,!--no-dihedral", dihedral,
                     "Case II branch selector (default dihedral)");
  classify->add_option("--form", form_arg, "sp4 or sp11")->required();
  classify->add_option("--format", format_arg, "text or json");

  CLI::App* classify_all =
      app.add_subcommand("classify-all", "reports for every case and form");
  classify_all->add_option("--format", format_arg, "text or json");
  classify_all->add_option("--jobs", jobs, "worker threads");

  CLI::App* chartab = app.add_subcommand("chartab", "exact character table");
  chartab->add_option("--group", group_arg, "catalog label, e.g. D8");
  chartab->add_option("--partition", partition_arg,
                      "partition selecting a cover, e.g. 1+1+1+1+1");
  chartab->add_option("--format", format_arg, "text or json");

  CLI::App* verify = app.add_subcommand("verify", "diff against golden rows");
  verify->add_option("--fixtures", fixtures_arg, "fixture JSON path")
      ->required();
  verify->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      return run_classify(partition_arg, case_arg, dihedral, form_arg,
                          format_arg);
    }
    if (classify_all->parsed()) return run_classify_all(format_arg, jobs);
    if (chartab->parsed()) return run_chartab(group_arg, partition_arg,
                                              format_arg);
    if (verify->parsed()) return run_verify(fixtures_arg, jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
