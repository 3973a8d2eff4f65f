// duha: Hochschild and cyclic homology of down-up algebras A(alpha, beta, 0).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "duha/acceptance.hpp"
#include "duha/errors.hpp"
#include "duha/presets.hpp"
#include "duha/verify.hpp"

namespace {

using namespace duha;
using nlohmann::json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kConsistency = 3 };

struct Config {
  std::optional<std::string> preset;
  std::optional<RationalPolynomial> minpoly;
  std::optional<RationalPolynomial> r1;
  std::optional<RationalPolynomial> r2;
  std::optional<int> min_deg;
  std::optional<int> max_deg;
  std::string format = "table";
  std::string out;
  int jobs = 1;
};

RationalPolynomial parse_list(const std::string& text) {
  RationalPolynomial p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" []");
    const auto e = item.find_last_not_of(" []");
    if (b == std::string::npos) continue;
    p.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (p.empty()) throw UsageError("empty coefficient list '" + text + "'");
  return p;
}

RationalPolynomial parse_list(const json& j, const char* key) {
  if (!j.is_array()) throw UsageError(std::string("config: ") + key + " must be a list");
  RationalPolynomial p;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      p.push_back(Rational(c.get<long long>()));
    } else if (c.is_string()) {
      p.push_back(parse_rational(c.get<std::string>()));
    } else {
      throw UsageError(std::string("config: ") + key + " entries must be integers or \"p/q\"");
    }
  }
  return p;
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "preset") {
      cfg.preset = value.get<std::string>();
    } else if (key == "minpoly" || key == "r1" || key == "r2") {
      auto& slot = key == "minpoly" ? cfg.minpoly : key == "r1" ? cfg.r1 : cfg.r2;
      slot = parse_list(value, key.c_str());
    } else if (key == "window") {
      if (value.contains("min_deg")) cfg.min_deg = value["min_deg"].get<int>();
      if (value.contains("max_deg")) cfg.max_deg = value["max_deg"].get<int>();
    } else if (key == "output") {
      if (value.contains("format")) cfg.format = value["format"].get<std::string>();
      if (value.contains("path")) cfg.out = value["path"].get<std::string>();
    } else if (key == "jobs") {
      cfg.jobs = value.get<int>();
    } else {
      throw UsageError("config file: unknown key '" + key + "'");
    }
  }
}

CaseSpec resolve_case(const Config& cfg) {
  const bool explicit_field = cfg.minpoly || cfg.r1 || cfg.r2;
  if (cfg.preset && explicit_field) {
    throw UsageError("--preset and --minpoly/--r1/--r2 are mutually exclusive");
  }
  if (explicit_field) {
    if (!cfg.r1 || !cfg.r2) throw UsageError("--r1 and --r2 are both required");
    return custom_case(cfg.minpoly.value_or(RationalPolynomial{0, 1}), *cfg.r1, *cfg.r2);
  }
  if (!cfg.preset) throw UsageError("give --preset or --r1/--r2 (with --minpoly)");
  return resolve_preset(*cfg.preset);
}

Window window_for(const Config& cfg, Window defaults) {
  Window w{cfg.min_deg.value_or(defaults.min_deg), cfg.max_deg.value_or(defaults.max_deg)};
  if (w.max_deg < w.min_deg) throw UsageError("--max-deg is below --min-deg");
  return w;
}

// What a command produced, in a shape all three formats can render.
struct LabelledTable {
  DimensionTable table;
  std::string theory;  ///< CSV theory column
  std::string prefix;  ///< comparison quantity is prefix + i
  bool indexed = true;  ///< false when there is a single level named prefix

  std::string quantity(int i) const { return indexed ? prefix + std::to_string(i) : prefix; }
};

struct Outcome {
  json document;
  std::vector<LabelledTable> tables;
  std::vector<VerificationReport> reports;
  bool ok = true;
};

std::string csv_cell(const std::optional<Comparison>& c, bool predicted) {
  if (!c) return "";
  return predicted ? to_string(c->predicted) : (c->match ? "true" : "false");
}

LabelledTable labelled(DimensionTable t) {
  std::string prefix = t.theory == Theory::Homology     ? "HH_"
                       : t.theory == Theory::Cohomology ? "HH^"
                                                        : "HC_";
  std::string theory = to_string(t.theory);
  return {std::move(t), std::move(theory), std::move(prefix)};
}

void write_csv(std::ostream& os, const Outcome& o) {
  os << "theory,i,deg,sdeg,dim,predicted,match\n";
  std::map<std::pair<std::string, int>, Comparison> lookup;
  for (const auto& r : o.reports) {
    for (const auto& c : r.comparisons) lookup.emplace(std::pair{c.quantity, c.degree}, c);
  }
  for (const auto& lt : o.tables) {
    const auto& [t, theory, prefix, indexed] = lt;
    for (const auto& row : t.rows) {
      os << theory << ',' << row.i << ',' << row.deg << ',' << row.sdeg << ',' << row.dim
         << ",,\n";
    }
    std::map<std::pair<int, int>, long> totals;
    for (const auto& row : t.rows) totals[{row.i, row.deg}] += row.dim;
    for (const auto& [key, dim] : totals) {
      if (key.second < t.window.min_deg) continue;
      std::optional<Comparison> c;
      const auto it = lookup.find({lt.quantity(key.first), key.second});
      if (it != lookup.end()) c = it->second;
      os << theory << ',' << key.first << ',' << key.second << ",total," << dim << ','
         << csv_cell(c, true) << ',' << csv_cell(c, false) << '\n';
    }
  }
}

void write_table(std::ostream& os, const Outcome& o) {
  for (const auto& lt : o.tables) {
    const DimensionTable& t = lt.table;
    os << lt.theory << " for " << t.case_name << ", degrees " << t.window.min_deg
       << ".." << t.window.max_deg << '\n';
    for (int i = 0; i < 4; ++i) {
      bool any = false;
      for (const auto& row : t.rows) any = any || row.i == i;
      if (!any) continue;
      os << "  " << lt.quantity(i) << ":";
      const LaurentSeries s = t.series(i);
      for (int e = s.lo(); e <= s.hi(); ++e) os << ' ' << to_string(s[e]);
      os << '\n';
    }
  }
  for (const auto& r : o.reports) {
    long matched = 0;
    for (const auto& c : r.comparisons) {
      if (c.match) {
        ++matched;
      } else {
        os << "  MISMATCH " << c.quantity << " degree " << c.degree << ": computed "
           << to_string(c.computed) << ", predicted " << to_string(c.predicted) << '\n';
      }
    }
    if (!r.comparisons.empty()) {
      os << "  " << matched << "/" << r.comparisons.size() << " comparisons match\n";
    }
    for (const auto& c : r.certificates) {
      os << "  " << (c.certified ? "certified " : "FAILED    ") << c.claim << '\n';
    }
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
  }
  os << (o.ok ? "ok" : "FAILED") << '\n';
}

DimensionTable algebra_table(const CaseSpec& c, Window w) {
  DimensionTable t{c.name, Theory::Homology, w, {}};
  for (int deg = std::max(w.min_deg, 0); deg <= w.max_deg; ++deg) {
    for (int s = -deg; s <= deg; s += 2) t.rows.push_back({0, deg, s, dim_bigraded({deg, s})});
  }
  return t;
}

Outcome run_command(const std::string& command, const Config& cfg) {
  Outcome o;
  if (command == "check") {
    AcceptanceOptions opts;
    opts.jobs = cfg.jobs;
    if (cfg.max_deg) opts.homology.max_deg = *cfg.max_deg;
    json criteria = json::array();
    std::ostringstream lines;
    for (int id = 1; id <= kCriterionCount; ++id) {
      const CriterionResult r = run_criterion(id, opts);
      o.ok = o.ok && r.passed;
      json j = to_json(r);
      j.erase("seconds");  // keeps JSON output reproducible
      criteria.push_back(j);
      lines << summary_line(r) << '\n';
    }
    o.document = {{"criteria", criteria}, {"ok", o.ok}};
    o.document["_lines"] = lines.str();
    return o;
  }

  const CaseSpec spec = resolve_case(cfg);
  const DownUpAlgebra A(spec);
  if (command == "dims") {
    const Window w = window_for(cfg, {0, 16});
    VerificationReport rep = verify_algebra_dims(spec, w.max_deg);
    DimensionTable t = algebra_table(spec, w);
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back({{"deg", row.deg}, {"sdeg", row.sdeg}, {"dim", row.dim}});
    o.document = {{"algebra", {{"window", {{"min_deg", w.min_deg}, {"max_deg", w.max_deg}}}, {"rows", rows}}},
                  {"report", to_json(rep)}};
    o.tables.push_back({std::move(t), "algebra", "dim A", false});
    o.reports.push_back(std::move(rep));
  } else if (command == "homology") {
    const Window w = window_for(cfg, {0, 12});
    std::vector<ComplexCheck> checks;
    DimensionTable t = compute_hh_dims(A, w, cfg.jobs, &checks);
    for (const auto& ch : checks) {
      if (!ch.zero) throw ConsistencyError(ch.composite + " is nonzero");
    }
    VerificationReport rep = compare_homology_with_catalog(spec, t);
    o.document = {{"table", to_json(t)}, {"report", to_json(rep)}};
    o.tables.push_back(labelled(std::move(t)));
    o.reports.push_back(std::move(rep));
  } else if (command == "cohomology") {
    const Window w = window_for(cfg, {-6, 12});
    std::vector<ComplexCheck> checks;
    DimensionTable t = compute_hh_cohomology_dims(A, w, cfg.jobs, &checks);
    for (const auto& ch : checks) {
      if (!ch.zero) throw ConsistencyError(ch.composite + " is nonzero");
    }
    VerificationReport rep = compare_cohomology_with_catalog(spec, t);
    o.document = {{"table", to_json(t)}, {"report", to_json(rep)}};
    o.tables.push_back(labelled(std::move(t)));
    o.reports.push_back(std::move(rep));
  } else if (command == "cyclic") {
    const Window w = window_for(cfg, {0, 12});
    const DimensionTable hh = compute_hh_dims(A, w, cfg.jobs);
    CyclicResult cyc = verify_cyclic(spec, hh);
    o.document = {{"homology", to_json(hh)}, {"table", to_json(cyc.hc)}, {"report", to_json(cyc.report)}};
    o.tables.push_back(labelled(hh));
    o.tables.push_back(labelled(std::move(cyc.hc)));
    o.reports.push_back(std::move(cyc.report));
  } else if (command == "certify") {
    const Window hw = window_for(cfg, {0, 12});
    const Window cw = window_for(cfg, {-6, 12});
    VerificationReport rep;
    rep.case_name = spec.name;
    rep.case_info = to_json(spec);
    rep.window = hw;
    rep.certificates.push_back(certify_hh0_basis(A, hw));
    rep.certificates.push_back(certify_hh3_basis(A, hw));
    if (spec.family == Family::F1) {
      for (auto& c : certify_cohomology_bases(A, cw)) rep.certificates.push_back(std::move(c));
    } else {
      rep.notes.push_back("explicit cohomology bases are claimed only for F1");
    }
    o.document = {{"report", to_json(rep)}};
    o.reports.push_back(std::move(rep));
  } else {
    throw UsageError("unknown command " + command);
  }
  for (const auto& r : o.reports) o.ok = o.ok && r.ok();
  o.document["ok"] = o.ok;
  return o;
}

void emit(const std::string& command, const Config& cfg, const Outcome& o) {
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw UsageError("cannot write " + cfg.out);
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  if (command == "check") {
    if (cfg.format == "json") {
      json doc = o.document;
      doc.erase("_lines");
      os << doc.dump(2) << '\n';
    } else {
      os << o.document["_lines"].get<std::string>() << (o.ok ? "ok" : "FAILED") << '\n';
    }
    return;
  }
  if (cfg.format == "json") {
    os << o.document.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_csv(os, o);
  } else {
    write_table(os, o);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild and cyclic homology of down-up algebras A(alpha, beta, 0)", "duha"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("DUHA_JOBS")) {
    try {
      cfg.jobs = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "duha: DUHA_JOBS must be a positive integer\n";
      return kUsage;
    }
  }

  std::string config_path, preset, minpoly, r1, r2, format, out;
  int min_deg = 0, max_deg = 0, jobs = 0;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"dims", "bigraded dimensions of A and the Hilbert series check"},
      {"homology", "HH_i dimensions and the printed series"},
      {"cohomology", "HH^i dimensions and the printed series"},
      {"cyclic", "reduced cyclic homology, Goodwillie and Euler characteristic checks"},
      {"certify", "explicit basis certificates"},
      {"check", "acceptance suite over all presets"}};
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto& o = opts[name];
    o["config"] = sub->add_option("--config", config_path, "JSON config file; flags override it");
    o["preset"] = sub->add_option("--preset", preset, "named case")
                      ->check(CLI::IsMember(preset_names()));
    o["minpoly"] = sub->add_option("--minpoly", minpoly, "modulus coefficients, lowest first");
    o["r1"] = sub->add_option("--r1", r1, "r1 as coefficients in theta");
    o["r2"] = sub->add_option("--r2", r2, "r2 as coefficients in theta");
    o["min-deg"] = sub->add_option("--min-deg", min_deg, "lowest usual degree");
    o["max-deg"] = sub->add_option("--max-deg", max_deg, "highest usual degree");
    o["output"] = sub->add_option("--output", format, "json, csv or table")
                      ->check(CLI::IsMember({"json", "csv", "table"}));
    o["out"] = sub->add_option("--out", out, "write to FILE instead of stdout");
    o["jobs"] = sub->add_option("--jobs", jobs, "concurrent bidegrees (default DUHA_JOBS or 1)")
                    ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto& o = opts[command];
  try {
    if (*o["config"]) load_config_file(config_path, cfg);
    if (*o["preset"]) {
      cfg.preset = preset;
      cfg.minpoly.reset();
      cfg.r1.reset();
      cfg.r2.reset();
    }
    if (*o["minpoly"]) cfg.minpoly = parse_list(minpoly);
    if (*o["r1"]) cfg.r1 = parse_list(r1);
    if (*o["r2"]) cfg.r2 = parse_list(r2);
    if ((*o["minpoly"] || *o["r1"] || *o["r2"]) && !*o["preset"]) cfg.preset.reset();
    if (*o["min-deg"]) cfg.min_deg = min_deg;
    if (*o["max-deg"]) cfg.max_deg = max_deg;
    if (*o["output"]) cfg.format = format;
    if (*o["out"]) cfg.out = out;
    if (*o["jobs"]) cfg.jobs = jobs;
    if (cfg.jobs < 1) throw UsageError("jobs must be positive");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "table") {
      throw UsageError("output format must be json, csv or table");
    }
    if (command == "check" && cfg.format == "csv") {
      throw UsageError("check reports criteria, not dimension tables; use json or table");
    }

    const Outcome outcome = run_command(command, cfg);
    emit(command, cfg, outcome);
    return outcome.ok ? kOk : kMismatch;
  } catch (const ConsistencyError& e) {
    std::cerr << "duha: internal consistency violation: " << e.what() << '\n';
    return kConsistency;
  } catch (const UsageError& e) {
    std::cerr << "duha: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedCase& e) {
    std::cerr << "duha: unsupported case: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "duha: invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "duha: config: " << e.what() << '\n';
    return kUsage;
  }
}
