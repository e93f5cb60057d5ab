#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partmod/alternating.hpp"
#include "partmod/branching.hpp"
#include "partmod/classifier.hpp"
#include "partmod/io.hpp"
#include "partmod/mullineux.hpp"
#include "partmod/partition.hpp"
#include "partmod/selftest.hpp"
#include "partmod/specht.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace partmod;

constexpr int kSchemaVersion = 1;

ordered_json record(const std::string& command, ordered_json payload) {
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = command;
  rec["payload"] = std::move(payload);
  return rec;
}

void emit(const ordered_json& rec) { std::cout << rec.dump() << "\n"; }

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json node_json(Node node) { return ordered_json::array({node.row, node.col}); }

ordered_json report_json(const BasicSpinReport& report) {
  ordered_json out;
  out["subcase"] = report.subcase == SpinSubcase::SplitNonSplit ? "SplitNonSplit" : "BothSplit";
  out["non_spin_factor"] = format_partition(report.non_spin_factor);
  out["normal_node_count"] = report.normal_node_count;
  out["bound"] = report.bound;
  out["passes"] = report.passes;
  out["product_height_bound"] = report.product_height_bound;
  out["product_height_floor"] = report.product_height_floor;
  return out;
}

ordered_json classification_json(int p, int n, const AltLabel& lhs, const AltLabel& rhs,
                                 const Classification& c) {
  ordered_json out;
  out["p"] = p;
  out["n"] = n;
  out["lhs"] = format_label(lhs);
  out["rhs"] = format_label(rhs);
  out["verdict"] = verdict_name(c.verdict);
  if (c.product) out["product"] = format_label(*c.product);
  if (c.mullineux_partner) out["mullineux_partner"] = format_partition(*c.mullineux_partner);
  out["citations"] = c.citations;
  if (c.report) out["report"] = report_json(*c.report);
  return out;
}

std::string citations_text(const Classification& c) {
  std::string out;
  for (const auto& tag : c.citations) {
    if (!out.empty()) out += ", ";
    out += tag;
  }
  return out;
}

void print_classification_pretty(const AltLabel& lhs, const AltLabel& rhs,
                                 const Classification& c) {
  std::cout << format_label(lhs) << " x " << format_label(rhs) << " -> "
            << verdict_name(c.verdict);
  if (c.product) std::cout << " product=" << format_label(*c.product);
  if (c.mullineux_partner)
    std::cout << " partner=" << format_partition(*c.mullineux_partner);
  std::cout << " [" << citations_text(c) << "]";
  if (c.report) {
    const auto& r = *c.report;
    std::cout << " report{" << (r.subcase == SpinSubcase::SplitNonSplit ? "split/non-split" : "both split")
              << ", normal nodes " << r.normal_node_count << " vs bound " << r.bound << ", "
              << (r.passes ? "passes" : "fails") << "}";
  }
  std::cout << "\n";
}

std::string csv_row(int p, int n, const AltLabel& lhs, const AltLabel& rhs,
                    const Classification& c) {
  std::string citations;
  for (const auto& tag : c.citations) {
    if (!citations.empty()) citations += ';';
    citations += tag;
  }
  std::string row = std::to_string(p) + "," + std::to_string(n) + "," +
                    csv_quote(format_label(lhs)) + "," + csv_quote(format_label(rhs)) + "," +
                    verdict_name(c.verdict) + ",";
  row += c.product ? csv_quote(format_label(*c.product)) : "";
  row += ",";
  row += c.mullineux_partner ? csv_quote(format_partition(*c.mullineux_partner)) : "";
  row += "," + csv_quote(citations) + ",";
  if (c.report) {
    const auto& r = *c.report;
    row += std::string(r.subcase == SpinSubcase::SplitNonSplit ? "SplitNonSplit" : "BothSplit") +
           "," + std::to_string(r.normal_node_count) + "," + std::to_string(r.bound) + "," +
           (r.passes ? "true" : "false");
  } else {
    row += ",,,";
  }
  return row;
}

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void report_elapsed(const Timer& timer) {
  std::fprintf(stderr, "elapsed %.3fs\n", timer.seconds());
}

bool verdict_selected(const std::string& only, Verdict v) {
  if (only.empty()) return true;
  if (only == "trivial") return v == Verdict::Trivial;
  if (only == "notirreducible") return v == Verdict::NotIrreducible;
  if (only == "irreducible") return v == Verdict::Irreducible;
  if (only == "open") return v == Verdict::BasicSpinOpen;
  return true;  // the flag is validated before dispatch
}

int run_classify(int p, int n, const std::string& lhs_text, const std::string& rhs_text,
                 const std::string& format) {
  AltLabel lhs, rhs;
  try {
    ParsedLabel a = parse_label(lhs_text);
    ParsedLabel b = parse_label(rhs_text);
    lhs = make_label(a.partition, p, a.variant);
    rhs = make_label(b.partition, p, b.variant);
    if (lhs.partition.size() != n)
      fail(Errc::SizeMismatch, lhs_text + " is not a partition of " + std::to_string(n));
    if (rhs.partition.size() != n)
      fail(Errc::SizeMismatch, rhs_text + " is not a partition of " + std::to_string(n));
  } catch (const Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  }
  Timer timer;
  Classification c = classify(p, n, lhs, rhs);
  if (format == "json")
    emit(record("classify", classification_json(p, n, lhs, rhs, c)));
  else
    print_classification_pretty(lhs, rhs, c);
  report_elapsed(timer);
  return 0;
}

int run_scan(int p, int n, const std::string& only, const std::string& format, int jobs) {
  Timer timer;
  auto rows = classify_all(p, n, jobs);
  if (format == "csv")
    std::cout << "p,n,lhs,rhs,verdict,product,mullineux_partner,citations,subcase,"
                 "normal_node_count,bound,passes\n";
  long shown = 0;
  for (const auto& row : rows) {
    if (!verdict_selected(only, row.result.verdict)) continue;
    ++shown;
    if (format == "json")
      emit(record("scan", classification_json(p, n, row.lhs, row.rhs, row.result)));
    else if (format == "csv")
      std::cout << csv_row(p, n, row.lhs, row.rhs, row.result) << "\n";
    else
      print_classification_pretty(row.lhs, row.rhs, row.result);
  }
  std::fprintf(stderr, "%ld of %zu rows shown\n", shown, rows.size());
  report_elapsed(timer);
  return 0;
}

int run_nodes(int p, const std::string& text, const std::string& format) {
  Partition la;
  try {
    la = parse_partition(text);
  } catch (const Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  }
  Timer timer;
  for (int res = 0; res < p; ++res) {
    SignatureReport report = signature(la, p, res);
    if (format == "json") {
      ordered_json payload;
      payload["partition"] = format_partition(la);
      payload["residue"] = report.residue;
      ordered_json seq = ordered_json::array();
      for (const auto& entry : report.sequence) {
        ordered_json item;
        item["node"] = node_json(entry.node);
        item["sign"] = std::string(1, entry.sign);
        item["survives"] = entry.survives;
        seq.push_back(std::move(item));
      }
      payload["sequence"] = std::move(seq);
      payload["epsilon"] = report.epsilon;
      payload["phi"] = report.phi;
      payload["good"] = report.good ? node_json(*report.good) : ordered_json(nullptr);
      payload["cogood"] = report.cogood ? node_json(*report.cogood) : ordered_json(nullptr);
      emit(record("nodes", payload));
    } else {
      std::cout << "residue " << res << ": ";
      if (report.sequence.empty()) std::cout << "(no nodes)";
      for (const auto& entry : report.sequence) {
        std::cout << entry.sign << format_node(entry.node);
        if (!entry.survives) std::cout << "~";
        std::cout << " ";
      }
      std::cout << "| epsilon " << report.epsilon << ", phi " << report.phi;
      if (report.good) std::cout << ", good " << format_node(*report.good);
      if (report.cogood) std::cout << ", cogood " << format_node(*report.cogood);
      std::cout << "\n";
    }
  }
  report_elapsed(timer);
  return 0;
}

int run_mullineux(int p, const std::string& text, const std::string& format) {
  Partition la;
  try {
    la = parse_partition(text);
  } catch (const Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  }
  Timer timer;
  MullineuxSymbol symbol = la.empty() ? MullineuxSymbol{} : mullineux_symbol(la, p);
  Partition image = mullineux(la, p);
  bool fixed = image == la;
  if (format == "json") {
    ordered_json payload;
    payload["input"] = format_partition(la);
    payload["symbol"] = ordered_json{{"a", symbol.sizes}, {"r", symbol.rows}};
    payload["image"] = format_partition(image);
    payload["fixed"] = fixed;
    emit(record("mullineux", payload));
  } else {
    auto joined = [](const std::vector<int>& values) {
      std::string out;
      for (int v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
      }
      return out.empty() ? std::string("-") : out;
    };
    std::cout << "input:  " << format_partition(la) << "\n";
    std::cout << "symbol: a = " << joined(symbol.sizes) << " | r = " << joined(symbol.rows)
              << "\n";
    std::cout << "image:  " << format_partition(image) << "\n";
    std::cout << "fixed:  " << (fixed ? "true" : "false") << "\n";
  }
  report_elapsed(timer);
  return 0;
}

int run_oracle_dim(int p, const std::string& text, const std::string& format) {
  Partition la;
  try {
    la = parse_partition(text);
  } catch (const Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  }
  Timer timer;
  GramCertificate cert = gram_rank(la, p);
  if (format == "json") {
    ordered_json payload;
    payload["partition"] = format_partition(la);
    payload["p"] = p;
    payload["syt"] = cert.syt;
    payload["rank"] = cert.rank;
    emit(record("oracle.dim", payload));
  } else {
    std::cout << format_partition(la) << " at p = " << p << ": standard tableaux " << cert.syt
              << ", gram rank " << cert.rank << "\n";
  }
  report_elapsed(timer);
  return 0;
}

int run_oracle_branching(int p, int max_n, const std::string& format) {
  Timer timer;
  long checked = 0;
  std::vector<std::string> failures;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      Partition la({n - k, k});
      if (!is_p_regular(la, p)) continue;
      bool ok = true;
      try {
        ok = verify_two_row(la, p);
      } catch (const Error& e) {
        if (e.code() == Errc::OutsideLemmaScope) continue;
        throw;
      }
      ++checked;
      if (!ok) failures.push_back(format_partition(la));
    }
  if (format == "json") {
    ordered_json payload;
    payload["p"] = p;
    payload["max_n"] = max_n;
    payload["checked"] = checked;
    payload["failures"] = failures;
    emit(record("oracle.verify-branching", payload));
  } else {
    std::cout << "checked " << checked << " two-row restrictions at p = " << p << ": "
              << (failures.empty() ? "all ranks match" : "FAILURES") << "\n";
    for (const auto& text : failures) std::cout << "  mismatch at " << text << "\n";
  }
  report_elapsed(timer);
  return failures.empty() ? 0 : 2;
}

int run_oracle_classifier(int p, int max_n, const std::string& format) {
  Timer timer;
  long checked = 0;
  std::vector<std::string> failures;
  for (int n = 5; n <= max_n; ++n) {
    if (n % p == 0) continue;
    for (const Partition& la : p_regular_partitions(n, p)) {
      if (!splits(la, p) || !is_js(la, p) || is_dim_one(la, p)) continue;
      ++checked;
      if (!verify_case_i(la, p)) failures.push_back(format_partition(la));
    }
  }
  if (p == 3 && max_n >= 6) {
    ++checked;
    if (!verify_case_i(Partition({4, 1, 1}), 3)) failures.push_back("4,1,1");
  }
  if (format == "json") {
    ordered_json payload;
    payload["p"] = p;
    payload["max_n"] = max_n;
    payload["checked"] = checked;
    payload["failures"] = failures;
    emit(record("oracle.verify-classifier", payload));
  } else {
    std::cout << "checked " << checked << " product identities at p = " << p << ": "
              << (failures.empty() ? "all ranks match" : "FAILURES") << "\n";
    for (const auto& text : failures) std::cout << "  mismatch at " << text << "\n";
  }
  report_elapsed(timer);
  return failures.empty() ? 0 : 2;
}

int run_selftest(const std::string& format) {
  Timer total;
  bool all_pass = true;
  for (const SelfCheck& check : selftest_checks()) {
    Timer timer;
    CheckResult result = check.run();
    double seconds = timer.seconds();
    bool ok = result.pass && seconds < check.budget_seconds;
    all_pass = all_pass && ok;
    if (format == "json") {
      ordered_json payload;
      payload["number"] = check.number;
      payload["tag"] = check.tag;
      payload["summary"] = check.summary;
      payload["pass"] = ok;
      payload["detail"] = result.detail;
      emit(record("selftest", payload));
    } else {
      std::printf("%s  %d  %-40s  %s\n", ok ? "PASS" : "FAIL", check.number, check.tag.c_str(),
                  result.detail.c_str());
    }
    std::fprintf(stderr, "check %d (%s): %.2fs against budget %.0fs\n", check.number,
                 check.tag.c_str(), seconds, check.budget_seconds);
  }
  report_elapsed(total);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition combinatorics for modular representations of alternating groups"};
  app.require_subcommand(1);

  std::string format = "pretty";
  const std::vector<std::string> formats{"pretty", "json", "csv"};

  int p = 2;
  int n = 0;
  int jobs = 1;
  int max_n = 10;
  int cap = 0;
  std::string lhs_text, rhs_text, partition_text, only;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "pretty, json, or csv")
        ->check(CLI::IsMember(formats));
    cmd->add_flag_callback("--json", [&format]() { format = "json"; },
                           "shorthand for --format json");
  };

  auto* classify_cmd = app.add_subcommand("classify", "decide one tensor product");
  classify_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
  classify_cmd->add_option("--n", n, "rank")->required();
  classify_cmd->add_option("--lhs", lhs_text, "left label, e.g. 5,3,1+")->required();
  classify_cmd->add_option("--rhs", rhs_text, "right label")->required();
  add_format(classify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "classify every pair of labels");
  scan_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
  scan_cmd->add_option("--n", n, "rank")->required();
  scan_cmd->add_option("--only", only, "filter by verdict")
      ->check(CLI::IsMember({"trivial", "notirreducible", "irreducible", "open"}));
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_format(scan_cmd);

  auto* nodes_cmd = app.add_subcommand("nodes", "signature report for every residue");
  nodes_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::Range(2, 1000));
  nodes_cmd->add_option("partition", partition_text, "partition, e.g. 5,3,1")->required();
  add_format(nodes_cmd);

  auto* mull_cmd = app.add_subcommand("mullineux", "sign twist image and symbol");
  mull_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::Range(2, 1000));
  mull_cmd->add_option("partition", partition_text, "partition, e.g. 7,3,2")->required();
  add_format(mull_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Gram-rank dimension oracle");
  oracle_cmd->require_subcommand(1);
  auto* dim_cmd = oracle_cmd->add_subcommand("dim", "tableau count and gram rank");
  dim_cmd->add_option("--p", p, "characteristic (prime)")->required()->check(CLI::Range(2, 97));
  dim_cmd->add_option("partition", partition_text, "partition")->required();
  dim_cmd->add_option("--cap", cap, "override the oracle size cap")->check(CLI::PositiveNumber);
  add_format(dim_cmd);
  auto* vb_cmd = oracle_cmd->add_subcommand("verify-branching", "check two-row certificates");
  vb_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
  vb_cmd->add_option("--max-n", max_n, "largest rank to sweep")->check(CLI::PositiveNumber);
  vb_cmd->add_option("--cap", cap, "override the oracle size cap")->check(CLI::PositiveNumber);
  add_format(vb_cmd);
  auto* vc_cmd = oracle_cmd->add_subcommand("verify-classifier", "check product rank identities");
  vc_cmd->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
  vc_cmd->add_option("--max-n", max_n, "largest rank to sweep")->check(CLI::PositiveNumber);
  vc_cmd->add_option("--cap", cap, "override the oracle size cap")->check(CLI::PositiveNumber);
  add_format(vc_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suite");
  add_format(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (cap > 0) set_oracle_cap(cap);

  try {
    if (*classify_cmd) return run_classify(p, n, lhs_text, rhs_text, format);
    if (*scan_cmd) return run_scan(p, n, only, format, jobs);
    if (*nodes_cmd) return run_nodes(p, partition_text, format);
    if (*mull_cmd) return run_mullineux(p, partition_text, format);
    if (*dim_cmd) return run_oracle_dim(p, partition_text, format);
    if (*vb_cmd) return run_oracle_branching(p, max_n, format);
    if (*vc_cmd) return run_oracle_classifier(p, max_n, format);
    if (*selftest_cmd) return run_selftest(format);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 1;
}
