#include "starring/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "starring/report.hpp"

namespace starring {

namespace {

struct Options {
  std::string file;
  std::string ring;
  bool json = false;
  std::size_t bound = kDefaultCarrierBound;
  std::string seed = "0xA15E";
  unsigned jobs = 1;
  bool timing = false;
  bool full_witnesses = false;
  // command-specific
  std::string mode = "complete";
  std::size_t samples = kDefaultSampleCount;
  std::string element;
  std::string theorem = "all";
  std::uint32_t n_max = 2;
  std::uint64_t m_max = 12;
  std::uint64_t order_max = kNonunitalSearchBudget;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  std::optional<double> ms() const {
    if (!on_) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSizeLimit:
    case ErrorKind::kBudgetExceeded:
      return kExitResource;
    case ErrorKind::kPreconditionViolated:
    case ErrorKind::kMissingCover:
    case ErrorKind::kNotAnIdeal:
    case ErrorKind::kEmptyFamily:
    case ErrorKind::kRingMismatch:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

std::uint64_t parse_seed(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 16 || digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw Error(ErrorKind::kInvalidParameter, "--seed expects a hexadecimal 64-bit value, got '" + text + "'");
  }
  return std::stoull(digits, nullptr, 16);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidParameter, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The ring named by --ring, or the last definition in the file.
struct Loaded {
  std::string name;
  BuiltRing built;
};

Loaded load(const Options& o) {
  RingEnvironment env(parse_ringspec(read_file(o.file)), o.bound);
  if (env.definitions().empty()) throw Error(ErrorKind::kUnknownIdentifier, o.file + " defines no rings");
  const std::string name = o.ring.empty() ? env.definitions().back().name : o.ring;
  if (!env.contains(name)) throw Error(ErrorKind::kUnknownIdentifier, "unknown ring '" + name + "'");
  return {name, env.get(name)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void header_text(const Json& j, std::ostream& out) {
  out << j["ring"].get<std::string>();
  if (!j["expr"].is_null()) out << " = " << j["expr"].get<std::string>();
  out << "  (order " << j["order"] << ")\n";
}

void timing_text(const Json& j, std::ostream& out) {
  const auto& t = j["timing_ms"];
  if (t.is_null()) return;
  out << "time: " << std::fixed << std::setprecision(1) << (t.is_object() ? t["total"] : t).get<double>() << " ms\n";
}

void flag_table_text(const Json& verdicts, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : verdicts.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : verdicts.items()) out << "  " << std::left << std::setw(int(width)) << k << "  " << scalar(v) << "\n";
}

void emit(const Options& o, const Json& j, std::ostream& out, void (*text)(const Json&, std::ostream&)) {
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    text(j, out);
  }
}

ReportConfig config_of(const Options& o) { return {parse_seed(o.seed), o.bound, o.full_witnesses}; }

AnalysisOptions analysis_options(const Options& o) { return {o.jobs, PrincipalIdealReading::kProductSet}; }

// -- commands -----------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  ValidationMode mode;
  if (o.mode == "full") {
    mode = ValidationMode::full();
  } else if (o.mode == "complete") {
    mode = ValidationMode::complete();
  } else {
    mode = ValidationMode::sampled(o.samples, cfg.seed);
  }
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  const auto report = validate_axioms(*loaded.built.ring, mode);
  const auto j = validation_json(loaded.name, *loaded.built.ring, report, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    header_text(j, out);
    Json shown;
    for (const auto& [k, v] : j["verdicts"].items()) {
      const auto& ce = j["witnesses"][k]["counterexample"];
      shown[k] = v.get<bool>() ? "ok" : "FAILS at " + ce.dump();
    }
    flag_table_text(shown, out);
    out << (j["passed"].get<bool>() ? "all axioms hold\n" : "axioms violated\n");
    timing_text(j, out);
  });
  return report.passed() ? kExitSuccess : kExitFailure;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  const auto& ring = *loaded.built.ring;
  const auto validation = validate_axioms(ring, ValidationMode::complete());
  if (!validation.passed()) {
    err << "error: " << loaded.name << " fails the *-ring axioms; run validate for details\n";
    return kExitFailure;
  }
  const auto subject = Subject::from(loaded.built, loaded.name, analysis_options(o));
  const auto& report = subject.report();
  const auto j = classification_json(loaded.name, ring, report, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    header_text(j, out);
    flag_table_text(j["verdicts"], out);
    for (const auto& v : j["hierarchy_violations"]) out << "hierarchy violation: " << v.get<std::string>() << "\n";
    timing_text(j, out);
  });
  return j["hierarchy_violations"].empty() ? kExitSuccess : kExitFailure;
}

int cmd_projections(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  RingAnalysis analysis(loaded.built.ring, analysis_options(o));
  const auto j = projections_json(loaded.name, analysis, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    header_text(j, out);
    for (const auto& p : j["projections"]) {
      out << "  " << p["element"].get<std::string>() << (p["central"].get<bool>() ? "  central" : "") << "\n";
    }
    out << j["count"] << " projections, " << j["central_count"] << " central\n";
    timing_text(j, out);
  });
  return kExitSuccess;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  const Index x = loaded.built.ring->parse(o.element);
  RingAnalysis analysis(loaded.built.ring, analysis_options(o));
  const auto j = cover_json(loaded.name, analysis, x, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    header_text(j, out);
    out << "C(" << j["element"].get<std::string>() << ") = ";
    if (j["cover"].is_null()) {
      out << "none\n";
    } else {
      out << j["cover"].get<std::string>() << "\n";
      out << "central projections fixing it:";
      for (const auto& h : j["certificate"]["fixing_central_projections"]) out << " " << h.get<std::string>();
      out << "\n";
      for (const auto& w : j["certificate"]["smaller_central_projections"]) {
        out << "  " << w["central"].get<std::string>() << " gives " << w["product"].get<std::string>() << "\n";
      }
    }
    timing_text(j, out);
  });
  return j["cover"].is_null() ? kExitFailure : kExitSuccess;
}

void verdicts_text(const Json& j, std::ostream& out) {
  header_text(j, out);
  for (const auto& [id, v] : j["verdicts"].items()) {
    const char* status = !v["applicable"].get<bool>() ? "n/a " : v["passed"].get<bool>() ? "PASS" : "FAIL";
    out << "  " << std::left << std::setw(8) << id << status << "  " << v["detail"].get<std::string>() << "\n";
  }
  const auto& s = j["summary"];
  out << s["total"] << " checked, " << s["applicable"] << " applicable, " << s["failed"] << " failed\n";
  timing_text(j, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  if (o.theorem != "all" && !is_theorem_id(o.theorem)) {
    throw Error(ErrorKind::kUnknownTheorem, "unknown theorem '" + o.theorem + "'");
  }
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  const auto subject = Subject::from(loaded.built, loaded.name, analysis_options(o));
  std::vector<TheoremVerdict> verdicts;
  if (o.theorem == "all") {
    verdicts = verify_all(subject, o.jobs);
  } else {
    verdicts.push_back(verify(o.theorem, subject));
  }
  const auto j = verdicts_json(loaded.name, *loaded.built.ring, verdicts, cfg, sw.ms());
  emit(o, j, out, verdicts_text);
  return j["summary"]["failed"].get<std::size_t>() == 0 ? kExitSuccess : kExitFailure;
}

int cmd_unitify_check(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto loaded = load(o);
  if (!loaded.built.extension) {
    throw Error(ErrorKind::kSubjectKindMismatch, loaded.name + " is not a unitify(...) ring");
  }
  const auto subject = Subject::from(loaded.built, loaded.name, analysis_options(o));
  const auto check = check_unitification(subject);
  const auto j = unitification_json(loaded.name, subject, check, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    header_text(j, out);
    out << "base " << j["base"]["ring"].get<std::string>() << ", scalars " << j["scalars"].get<std::string>() << "\n";
    flag_table_text(j["verdicts"], out);
    for (const auto& [id, v] : j["theorems"].items()) {
      const char* status = !v["applicable"].get<bool>() ? "n/a " : v["passed"].get<bool>() ? "PASS" : "FAIL";
      out << "  " << std::left << std::setw(8) << id << status << "  " << v["detail"].get<std::string>() << "\n";
    }
    timing_text(j, out);
  });
  bool ok = check.laws.passed();
  for (const auto& key : {"r1_axioms", "unity", "star_ideal"}) ok = ok && j["verdicts"][key].get<bool>();
  for (const auto& v : check.verdicts) ok = ok && !v.failed();
  return ok ? kExitSuccess : kExitFailure;
}

int cmd_c031(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto rows = verify_c031_table(o.n_max, o.m_max, o.bound, o.jobs);
  const auto j = c031_json(rows, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    out << "   n    m   order  predicted  computed\n";
    for (const auto& r : j["rows"]) {
      out << std::right << std::setw(4) << r["n"] << std::setw(5) << r["m"] << std::setw(8)
          << (r["order"].is_null() ? std::string("-") : r["order"].dump()) << std::setw(11)
          << yes_no(r["predicted"].get<bool>()) << std::setw(10)
          << (r["skipped"].get<bool>() ? std::string("skipped") : yes_no(r["computed"].get<bool>()))
          << (r["skipped"].get<bool>() || r["computed"] == r["predicted"] ? "" : "  DISAGREES") << "\n";
    }
    const auto& s = j["summary"];
    out << s["rows"] << " rows, " << s["skipped"] << " skipped, " << s["disagreements"] << " disagreements\n";
    timing_text(j, out);
  });
  return j["summary"]["disagreements"].get<std::size_t>() == 0 ? kExitSuccess : kExitFailure;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto cfg = config_of(o);
  Stopwatch sw(o.timing);
  const auto search = search_nonunital_weakly_pqbaer(o.order_max, o.jobs);
  const auto j = search_json(search, cfg, sw.ms());
  emit(o, j, out, [](const Json& j, std::ostream& out) {
    out << "orders <= " << j["order_max"] << ": " << j["candidates"] << " rings, " << j["nonunital"]
        << " without unity\n";
    if (j["findings"].empty()) out << "no weakly p.q.-Baer *-ring without unity found\n";
    for (const auto& f : j["findings"]) {
      out << "  " << f["name"].get<std::string>() << " (order " << f["order"] << ")\n";
    }
    timing_text(j, out);
  });
  return kExitSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite rings with involution: projections, classification and theorem checks", "starring"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) {
      sub->add_option("ringspec", o.file, "Ringspec file")->required();
      sub->add_option("--ring", o.ring, "Ring to use (default: the last definition)");
    }
    sub->add_flag("--json", o.json, "Write a JSON report to stdout");
    sub->add_option("--bound", o.bound, "Carrier bound")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Sampling seed, hexadecimal");
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    sub->add_flag("--timing", o.timing, "Record wall-clock times in the report");
    sub->add_flag("--full-witnesses", o.full_witnesses, "Print witness maps in full");
    return sub;
  };

  auto* validate = common(app.add_subcommand("validate", "Check the *-ring axioms"), true);
  validate->add_option("--mode", o.mode, "full, complete or sampled")
      ->check(CLI::IsMember({"full", "complete", "sampled"}));
  validate->add_option("--samples", o.samples, "Tuples per axiom in sampled mode")->check(CLI::PositiveNumber);
  auto* classify = common(app.add_subcommand("classify", "Classify along the Baer/Rickart hierarchy"), true);
  auto* projections = common(app.add_subcommand("projections", "List the projections"), true);
  auto* cover = common(app.add_subcommand("cover", "Central cover of an element, with certificate"), true);
  cover->add_option("--element", o.element, "Element literal")->required();
  auto* verify_cmd = common(app.add_subcommand("verify", "Check theorem instances"), true);
  verify_cmd->add_option("--theorem", o.theorem, "Theorem id or 'all'");
  auto* unitify_check = common(app.add_subcommand("unitify-check", "Check a unitify(...) ring and its action"), true);
  auto* c031 = common(app.add_subcommand("c031-table", "Baer criterion for M_n(Z_m) against the prediction"), false);
  c031->add_option("--n-max", o.n_max, "Largest matrix size")->check(CLI::Range(1, 64));
  c031->add_option("--m-max", o.m_max, "Largest modulus")->check(CLI::Range(2, 1 << 20));
  auto* search = common(app.add_subcommand("search-nonunital", "Search for weakly p.q.-Baer rings without unity"), false);
  search->add_option("--order-max", o.order_max, "Largest order to enumerate")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*classify) return cmd_classify(o, out, err);
    if (*projections) return cmd_projections(o, out);
    if (*cover) return cmd_cover(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*unitify_check) return cmd_unitify_check(o, out);
    if (*c031) return cmd_c031(o, out);
    if (*search) return cmd_search(o, out);
  } catch (const SpecError& e) {
    err << o.file << ":" << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace starring
