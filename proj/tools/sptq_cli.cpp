#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptq/checks.hpp"

using json = nlohmann::ordered_json;
using namespace sptq;

namespace {

struct Output {
  std::string format = "text";  // text | csv | json
  std::string path;             // empty = stdout

  void emit(const std::string& text_body, const std::string& csv_body, const json& j) const {
    std::ostringstream os;
    if (format == "json")
      os << j.dump(2) << "\n";
    else if (format == "csv")
      os << csv_body;
    else
      os << text_body;
    if (path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(path);
      if (!f) throw CLI::RuntimeError("cannot open output file: " + path, 2);
      f << os.str();
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", out.path, "Write to file instead of stdout");
}

int run_spt(const std::string& variant, long n_max, const Output& out) {
  SptVariant v = spt_variant_from_name(variant);
  std::ostringstream text, csv;
  csv << "n,value\n";
  json rows = json::array();
  for (long n = 1; n <= n_max; ++n) {
    Int val = spt_count(int(n), v);
    text << n << " " << val.get_str() << "\n";
    csv << n << "," << val.get_str() << "\n";
    rows.push_back({{"n", n}, {"value", val.get_str()}});
  }
  json j = {{"command", "spt"}, {"variant", variant}, {"n_max", n_max}, {"rows", rows}};
  out.emit(text.str(), csv.str(), j);
  return 0;
}

bool is_sb_name(const std::string& f) {
  return f == "NSB" || f == "NSB1" || f == "NSB2" || f == "NS2B";
}

int run_table(const std::string& family, long n_max, long t, const Output& out) {
  TwoVarTable tab = is_sb_name(family)
                        ? nsb_table_series(sb_family_from_name(family), int(n_max))
                        : stat_table(stat_family_from_name(family), int(n_max));
  std::ostringstream text, csv;
  json rows = json::array();
  if (t > 0) {
    csv << "k,t,n,value\n";
    for (int n = 0; n <= int(n_max); ++n) {
      if (tab.row_sum(n) == 0 && tab.rows[size_t(n)].is_zero()) continue;
      for (long k = 0; k < t; ++k) {
        Int val = tab.class_sum(k, int(t), n);
        text << k << " " << t << " " << n << " " << val.get_str() << "\n";
        csv << k << "," << t << "," << n << "," << val.get_str() << "\n";
        rows.push_back({{"k", k}, {"t", t}, {"n", n}, {"value", val.get_str()}});
      }
    }
  } else {
    csv << "m,n,value\n";
    for (int n = 0; n <= int(n_max); ++n)
      for (long m = -n; m <= n; ++m) {
        Int val = tab.entry(m, n);
        if (val == 0) continue;
        text << m << " " << n << " " << val.get_str() << "\n";
        csv << m << "," << n << "," << val.get_str() << "\n";
        rows.push_back({{"m", m}, {"n", n}, {"value", val.get_str()}});
      }
  }
  json j = {{"command", "table"}, {"family", family}, {"n_max", n_max}, {"rows", rows}};
  if (t > 0) j["t"] = t;
  out.emit(text.str(), csv.str(), j);
  return 0;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int run_verify(const std::vector<std::string>& ids, long order, const Output& out) {
  std::ostringstream text, csv;
  csv << "id,order,pass,witness_n,witness_m,expected,got\n";
  json reports = json::array();
  json meta = json::object();
  bool all_pass = true;
  for (const std::string& id : ids) {
    CheckReport rep = run_check(id, order);
    all_pass = all_pass && rep.pass;
    text << rep.id << ": " << (rep.pass ? "pass" : "FAIL") << " (order " << rep.order_checked
         << ")";
    if (rep.witness)
      text << " witness n=" << rep.witness->n << " m=" << rep.witness->m << " expected "
           << rep.witness->expected << " got " << rep.witness->got;
    text << "\n";
    csv << rep.id << "," << rep.order_checked << "," << (rep.pass ? "true" : "false");
    if (rep.witness)
      csv << "," << rep.witness->n << "," << rep.witness->m << ","
          << csv_quote(rep.witness->expected) << "," << csv_quote(rep.witness->got);
    else
      csv << ",,,,";
    csv << "\n";
    json r = {{"id", rep.id}, {"order", rep.order_checked}, {"pass", rep.pass}};
    if (rep.witness)
      r["witness"] = {{"n", rep.witness->n},
                      {"m", rep.witness->m},
                      {"expected", rep.witness->expected},
                      {"got", rep.witness->got}};
    reports.push_back(r);
    meta[rep.id] = rep.elapsed_ms;
  }
  json j = {{"command", "verify"}, {"reports", reports}, {"meta", {{"elapsed_ms", meta}}}};
  out.emit(text.str(), csv.str(), j);
  return all_pass ? 0 : 1;
}

int run_bijection(const std::string& which, long n, long size, const Output& out) {
  std::ostringstream text, csv;
  json rows = json::array();
  if (which == "phi") {
    csv << "pi,j,pi1,pi2,nu,k,kbar,sptcrank,image,crank_bar\n";
    for (const MarkedOverpartition& m : enumerate_marked(int(n))) {
      Partition p1 = m.pi.non_overlined_sub();
      Partition p2 = m.pi.overlined_sub();
      long k = k_partition(p2, *p1.smallest());
      long kb = k_bar(m);
      int sc = sptcrank(m);
      PartitionPair img = phi_map(m);
      int cb = crank_bar(img);
      text << "(" << m.pi.str() << ", " << m.j << "): pi1=" << p1.str() << " pi2=" << p2.str()
           << " nu=" << p1.mult_smallest() << " k=" << k << " kbar=" << kb << " sptcrank=" << sc
           << " -> " << img.str() << " crank_bar=" << cb << "\n";
      csv << csv_quote(m.pi.str()) << "," << m.j << "," << csv_quote(p1.str()) << ","
          << csv_quote(p2.str()) << "," << p1.mult_smallest() << "," << k << "," << kb << "," << sc
          << "," << csv_quote(img.str()) << "," << cb << "\n";
      rows.push_back({{"pi", m.pi.str()},
                      {"j", m.j},
                      {"pi1", p1.str()},
                      {"pi2", p2.str()},
                      {"nu", p1.mult_smallest()},
                      {"k", k},
                      {"kbar", kb},
                      {"sptcrank", sc},
                      {"image", img.str()},
                      {"crank_bar", cb}});
    }
  } else {  // psi
    csv << "partition,image\n";
    PartitionConstraints cons;
    cons.min_part = int(n) + 1;
    cons.distinct = true;
    for (const Partition& pi : enumerate_partitions(int(size), cons)) {
      Partition img = psi(int(n), pi);
      text << pi.str() << " -> " << img.str() << "\n";
      csv << csv_quote(pi.str()) << "," << csv_quote(img.str()) << "\n";
      rows.push_back({{"partition", pi.str()}, {"image", img.str()}});
    }
  }
  json j = {{"command", "bijection"}, {"which", which}, {"n", n}, {"rows", rows}};
  if (which == "psi") j["size"] = size;
  out.emit(text.str(), csv.str(), j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series and spt-crank workbench"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  Output out_spt, out_table, out_verify, out_bij;

  auto* spt = app.add_subcommand("spt", "Tabulate an spt variant");
  std::string variant;
  long spt_n_max = 20;
  spt->add_option("--variant", variant, "spt variant")
      ->required()
      ->check(CLI::IsMember({"spt", "sptbar", "sptbar1", "sptbar2", "m2spt"}));
  spt->add_option("--n-max", spt_n_max, "largest n")->check(CLI::PositiveNumber);
  add_output_flags(spt, out_spt);

  auto* table = app.add_subcommand("table", "Emit a two-variable statistic table");
  std::string family;
  long tab_n_max = 20, tab_t = 0;
  table->add_option("--family", family, "statistic family")
      ->required()
      ->check(CLI::IsMember({"Nbar", "Mbar", "N2", "M2", "NSB", "NSB1", "NSB2", "NS2B"}));
  table->add_option("--n-max", tab_n_max, "largest n")->check(CLI::NonNegativeNumber);
  table->add_option("--t", tab_t, "emit class sums mod t instead of entries")
      ->check(CLI::PositiveNumber);
  add_output_flags(table, out_table);

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> ids;
  bool all = false;
  long order = 0;
  verify->add_option("ids", ids, "check ids");
  verify->add_flag("--all", all, "run the whole catalog");
  verify->add_option("--order,--n-max", order, "override the default order")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--list", "list catalog ids and exit");
  add_output_flags(verify, out_verify);

  auto* bij = app.add_subcommand("bijection", "Print a bijection table");
  std::string which;
  long bij_n = 0, bij_size = 0;
  bij->add_option("which", which, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
  bij->add_option("--n", bij_n, "weight (phi) or subscript (psi)")
      ->required()
      ->check(CLI::PositiveNumber);
  bij->add_option("--size", bij_size, "total being partitioned (psi only)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(bij, out_bij);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (spt->parsed()) return run_spt(variant, spt_n_max, out_spt);
    if (table->parsed()) return run_table(family, tab_n_max, tab_t, out_table);
    if (verify->parsed()) {
      if (verify->count("--list")) {
        for (const std::string& id : catalog_ids()) std::cout << id << "\n";
        return 0;
      }
      if (all) ids = catalog_ids();
      if (ids.empty()) {
        std::cerr << "verify: no check ids given (use --all or --list)\n";
        return 2;
      }
      for (const std::string& id : ids)
        if (!known_check(id)) {
          std::cerr << "verify: unknown check id: " << id << "\n";
          return 2;
        }
      return run_verify(ids, order, out_verify);
    }
    if (bij->parsed()) {
      if (which == "psi" && bij->count("--size") == 0) {
        std::cerr << "bijection psi: --size is required\n";
        return 2;
      }
      return run_bijection(which, bij_n, bij_size, out_bij);
    }
  } catch (const CLI::RuntimeError& e) {
    std::cerr << e.what() << "\n";
    return e.get_exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
