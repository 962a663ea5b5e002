#include "lpacket/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lpacket::report {

namespace {

using nlohmann::ordered_json;

ordered_json census_json(const groups::OrderCensus& census) {
  ordered_json out = ordered_json::object();
  for (const auto& [ord, count] : census) out[std::to_string(ord)] = count;
  return out;
}

ordered_json report_json(const llc::PacketReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["case"] = r.case_id;
  j["partition"] = r.partition;
  if (r.dihedral_det.has_value()) j["dihedral"] = *r.dihedral_det;
  j["form"] = r.form;
  j["groups"] = {{"s_phi", r.s_phi_id},
                 {"s_phi_sc", r.s_phi_sc_id},
                 {"center", r.center_structure}};
  j["census"] = census_json(r.census);
  ordered_json irr = ordered_json::array();
  for (int d : r.irr_degrees) {
    irr.push_back({{"degree", d}, {"central_character", r.zeta_label}});
  }
  j["irr"] = irr;
  j["packet_size"] = r.packet_size;
  j["dim_rho"] = r.dim_rho;
  j["mult_per_lift"] = r.mult_per_lift;
  j["mult_packet_total"] = r.mult_packet_total;
  j["i_tilde"] = r.i_tilde_phi;
  j["i_tilde_sigma"] = r.i_tilde_sigma;
  j["per_lift_constituents"] = r.per_lift_constituents;
  j["gsp_packet_size"] = r.gsp_packet_size;
  if (r.delta_phi.has_value()) j["delta_phi"] = *r.delta_phi;
  if (r.epsilon_phi.has_value()) j["epsilon_phi"] = *r.epsilon_phi;
  ordered_json checks = ordered_json::object();
  for (const auto& c : r.checks) checks[c.name] = c.pass ? "pass" : "fail";
  j["checks"] = checks;
  return j;
}

std::string report_text(const llc::PacketReport& r) {
  std::ostringstream out;
  out << "case " << r.case_id << "  partition " << r.partition;
  if (r.dihedral_det.has_value()) {
    out << "  dihedral " << (*r.dihedral_det ? "yes" : "no");
  }
  out << "  form " << r.form << "\n";
  out << "  s_phi      : " << r.s_phi_id << " (order " << r.s_phi_order
      << ")\n";
  out << "  s_phi_sc   : " << r.s_phi_sc_id << " (order " << r.sc_order
      << ", census " << groups::to_string(r.census) << ")\n";
  out << "  center     : " << r.center_structure << "\n";
  out << "  irr(" << r.zeta_label << ")     : degrees [";
  for (std::size_t i = 0; i < r.irr_degrees.size(); ++i) {
    if (i) out << ",";
    out << r.irr_degrees[i];
  }
  out << "]\n";
  out << "  packet     : size " << r.packet_size << ", dim_rho " << r.dim_rho
      << ", gsp packet " << r.gsp_packet_size << "\n";
  out << "  mult       : per-lift " << r.mult_per_lift << ", packet-total "
      << r.mult_packet_total << "\n";
  out << "  twists     : i_tilde " << r.i_tilde_phi << ", per-lift "
      << r.i_tilde_sigma << ", per-lift constituents "
      << r.per_lift_constituents << "\n";
  if (r.delta_phi.has_value() && r.epsilon_phi.has_value()) {
    out << "  constants  : delta_phi " << *r.delta_phi << ", epsilon_phi "
        << *r.epsilon_phi << "\n";
  }
  out << "  checks     :";
  for (const auto& c : r.checks) {
    out << " " << c.name << "=" << (c.pass ? "pass" : "fail");
  }
  out << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const llc::PacketReport& r, Format format) {
  if (format == Format::kJson) return report_json(r).dump(2) + "\n";
  return report_text(r);
}

std::string render_character_table(const std::string& title,
                                   const chartab::CharacterTable& table,
                                   Format format) {
  const auto& classes = table.classes();
  if (format == Format::kJson) {
    ordered_json j;
    j["schema"] = 1;
    j["group"] = title;
    j["order"] = table.group().order();
    ordered_json cls = ordered_json::array();
    for (const auto& c : classes) {
      cls.push_back({{"representative", table.group().label(c.representative)},
                     {"size", c.size()}});
    }
    j["classes"] = cls;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < table.row_count(); ++r) {
      ordered_json values = ordered_json::array();
      for (const auto& v : table.row(r)) {
        values.push_back({{"re", v.re}, {"im", v.im}});
      }
      rows.push_back({{"degree", table.degree(r)}, {"values", values}});
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }

  // Aligned text grid.
  std::vector<std::string> headers;
  headers.reserve(classes.size());
  for (const auto& c : classes) {
    headers.push_back(table.group().label(c.representative) + "(" +
                      std::to_string(c.size()) + ")");
  }
  std::vector<std::size_t> widths(headers.size());
  std::vector<std::vector<std::string>> cells(table.row_count());
  for (std::size_t c = 0; c < headers.size(); ++c) widths[c] = headers[c].size();
  for (int r = 0; r < table.row_count(); ++r) {
    cells[r].reserve(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
      cells[r].push_back(chartab::to_string(table.row(r)[c]));
      widths[c] = std::max(widths[c], cells[r][c].size());
    }
  }
  std::ostringstream out;
  out << title << "  (order " << table.group().order() << ", "
      << classes.size() << " classes)\n";
  out << "chi\\class";
  for (std::size_t c = 0; c < headers.size(); ++c) {
    out << "  " << std::string(widths[c] - headers[c].size(), ' ')
        << headers[c];
  }
  out << "\n";
  for (int r = 0; r < table.row_count(); ++r) {
    std::string name = "chi_" + std::to_string(r);
    out << name << std::string(9 > name.size() ? 9 - name.size() : 0, ' ');
    for (std::size_t c = 0; c < headers.size(); ++c) {
      out << "  " << std::string(widths[c] - cells[r][c].size(), ' ')
          << cells[r][c];
    }
    out << "\n";
  }
  return out.str();
}

namespace {

template <typename T, typename Fn>
std::vector<T> parallel_map(int count, int jobs, Fn&& fn) {
  std::vector<T> out(count);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> workers;
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          out[i] = fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

std::string spec_key(const llc::CaseSpec& spec) {
  std::string key = llc::to_string(spec.case_id);
  if (spec.case_id == llc::CaseId::kII) {
    key += spec.dihedral_det ? " dihedral" : " non-dihedral";
  } else if (spec.partition.has_value()) {
    key += " " + spec.partition->to_string();
  }
  key += " " + llc::to_string(spec.form);
  return key;
}

}  // namespace

ClassifyAllResult classify_all(Format format, int jobs) {
  std::vector<llc::CaseSpec> specs = llc::all_case_specs();
  std::vector<llc::PacketReport> reports =
      parallel_map<llc::PacketReport>(static_cast<int>(specs.size()), jobs,
                                      [&](int i) {
                                        return llc::packet_report(specs[i]);
                                      });
  ClassifyAllResult result;
  result.all_pass = true;
  std::ostringstream out;
  if (format == Format::kJson) {
    ordered_json j;
    j["schema"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    j["reports"] = arr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << report_text(r) << "\n";
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const std::string& name : reports[i].failed_checks()) {
      result.all_pass = false;
      result.failures.push_back(spec_key(specs[i]) + ": " + name);
    }
  }
  result.rendered = out.str();
  return result;
}

std::vector<FixtureRow> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fixture JSON: ") +
                                e.what());
  }
  try {
    std::vector<FixtureRow> rows;
    const nlohmann::json& items = j.is_array() ? j : j.at("rows");
    for (const auto& item : items) {
      FixtureRow row;
      row.case_id = item.at("case").get<std::string>();
      row.partition = item.at("partition").get<std::string>();
      if (item.contains("dihedral")) row.dihedral = item["dihedral"].get<bool>();
      row.form = item.at("form").get<std::string>();
      const auto& expect = item.at("expect");
      row.s_phi_sc_id = expect.at("s_phi_sc").get<std::string>();
      row.s_phi_id = expect.at("s_phi").get<std::string>();
      for (const auto& [key, value] : expect.at("census").items()) {
        row.census[std::stoi(key)] = value.get<int>();
      }
      row.packet_size = expect.at("packet_size").get<int>();
      row.dim_rho = expect.at("dim_rho").get<int>();
      row.mult_per_lift = expect.at("mult_per_lift").get<int>();
      row.mult_packet_total = expect.at("mult_packet_total").get<int>();
      row.i_tilde = expect.at("i_tilde").get<int>();
      if (item.contains("note")) row.note = item["note"].get<std::string>();
      rows.push_back(std::move(row));
    }
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fixture row: ") +
                                e.what());
  }
}

VerifySummary verify_fixtures(const std::vector<FixtureRow>& rows, int jobs) {
  VerifySummary summary;
  summary.empty = rows.empty();
  summary.rows = parallel_map<FixtureOutcome>(
      static_cast<int>(rows.size()), jobs, [&](int i) {
        const FixtureRow& row = rows[i];
        FixtureOutcome outcome;
        outcome.key = row.case_id + " " + row.partition +
                      (row.dihedral.has_value()
                           ? (*row.dihedral ? " dihedral" : " non-dihedral")
                           : "") +
                      " " + row.form;
        llc::CaseSpec spec;
        auto case_id = llc::parse_case_id(row.case_id);
        auto form = llc::parse_form(row.form);
        if (!case_id || !form) {
          outcome.diffs.push_back("unknown case or form");
          return outcome;
        }
        spec.case_id = *case_id;
        spec.form = *form;
        if (spec.case_id != llc::CaseId::kII) {
          spec.partition = sgroups::PartitionSpec::parse(row.partition);
        }
        spec.dihedral_det = row.dihedral.value_or(true);

        llc::PacketReport r;
        try {
          r = llc::packet_report(spec);
        } catch (const std::exception& e) {
          outcome.diffs.push_back(std::string("recomputation failed: ") +
                                  e.what());
          return outcome;
        }
        auto diff_int = [&](const char* name, int want, int got) {
          if (want != got) {
            outcome.diffs.push_back(std::string(name) + ": expected " +
                                    std::to_string(want) + ", got " +
                                    std::to_string(got));
          }
        };
        auto diff_str = [&](const char* name, const std::string& want,
                            const std::string& got) {
          if (want != got) {
            outcome.diffs.push_back(std::string(name) + ": expected " + want +
                                    ", got " + got);
          }
        };
        diff_str("partition", row.partition, r.partition);
        diff_str("s_phi_sc", row.s_phi_sc_id, r.s_phi_sc_id);
        diff_str("s_phi", row.s_phi_id, r.s_phi_id);
        if (row.census != r.census) {
          outcome.diffs.push_back("census: expected " +
                                  groups::to_string(row.census) + ", got " +
                                  groups::to_string(r.census));
        }
        diff_int("packet_size", row.packet_size, r.packet_size);
        diff_int("dim_rho", row.dim_rho, r.dim_rho);
        diff_int("mult_per_lift", row.mult_per_lift, r.mult_per_lift);
        diff_int("mult_packet_total", row.mult_packet_total,
                 r.mult_packet_total);
        diff_int("i_tilde", row.i_tilde, r.i_tilde_phi);
        if (!r.all_checks_pass()) {
          for (const std::string& name : r.failed_checks()) {
            outcome.diffs.push_back("engine check failed: " + name);
          }
        }
        return outcome;
      });
  for (const auto& outcome : summary.rows) {
    if (!outcome.pass()) ++summary.failed;
  }
  return summary;
}

std::string render_verify(const VerifySummary& summary) {
  std::ostringstream out;
  if (summary.empty) {
    out << "warning: fixture file has no rows; vacuous pass\n";
    return out.str();
  }
  for (const auto& row : summary.rows) {
    out << (row.pass() ? "ok   " : "FAIL ") << row.key << "\n";
    for (const std::string& diff : row.diffs) {
      out << "       " << diff << "\n";
    }
  }
  out << summary.rows.size() - summary.failed << "/" << summary.rows.size()
      << " fixture rows match\n";
  return out.str();
}

}  // namespace lpacket::report
