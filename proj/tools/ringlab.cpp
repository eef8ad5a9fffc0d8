// ringlab: build finite *-rings from specs, decide their regularity
// properties, cross-check the equivalence suites, and run atlas searches.
//
// Exit codes: 0 ok, 1 usage, 2 axiom or construction failure, 3 parse error,
// 4 equivalence breach or failed witness replay, 5 cap or I/O error.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kAxiom = 2, kParse = 3, kBreach = 4, kResource = 5 };

struct Options {
  std::string spec;
  std::vector<std::string> specs;
  std::string corpus = "default";
  std::string properties = "all";
  std::string profile;
  std::vector<std::string> bases;
  unsigned k = 2;
  std::optional<std::size_t> cap;
  std::string format = "table";
  std::string out;
  double replay_sample = 1.0;
  std::uint64_t seed = 0;
  std::string stamp;
  std::string source = "corpus";
  bool all_involutions = false;
  std::size_t sweep_max = 32;
  std::string atlas;
};

Caps effective_caps(const Options& o) {
  Caps caps = Caps::from_env();
  if (o.cap) caps.order = *o.cap;
  return caps;
}

const char* yn(bool b) { return b ? "true" : "false"; }
char tf(bool b) { return b ? 'T' : 'F'; }

std::vector<std::string> selected_properties(const std::string& list) {
  if (list == "all") return property_names();
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name.empty()) continue;
    const auto& names = property_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw SpecParseError("unknown property: " + name);
    out.push_back(name);
  }
  return out;
}

std::string detail_of(const Json& p) {
  std::ostringstream out;
  if (p.contains("counterexample")) {
    out << "counterexample " << p.at("counterexample").dump();
  } else if (p.contains("witnesses")) {
    out << p.at("witnesses").size() << " witnesses";
  } else if (p.contains("subconditions")) {
    out << "pi_regular=" << yn(p.at("pi_regular").get<bool>()) << " sub=" << p.at("subconditions").dump();
  } else if (p.contains("lhs")) {
    out << "lhs=" << yn(p.at("lhs").get<bool>()) << " rhs=" << yn(p.at("rhs").get<bool>());
  }
  if (p.contains("star_abelian") && !p.contains("lhs"))
    out << (out.tellp() > 0 ? " " : "") << "star_abelian=" << yn(p.at("star_abelian").get<bool>());
  return out.str();
}

bool holds_of(const Json& p) { return p.contains("holds") ? p.at("holds").get<bool>() : p.at("lhs").get<bool>(); }

void print_report(const Json& report, const std::vector<std::string>& names, const std::string& format) {
  if (format == "json") {
    Json filtered = report;
    Json props = Json::object();
    for (const auto& n : names) props[n] = report.at("properties").at(n);
    filtered["properties"] = std::move(props);
    std::cout << filtered.dump(2) << '\n';
    return;
  }
  std::cout << report.at("label").get<std::string>() << "  order " << report.at("order").get<std::size_t>()
            << '\n';
  for (const auto& n : names) {
    const auto& p = report.at("properties").at(n);
    std::ostringstream line;
    line << "  " << std::left << std::setw(30) << n << std::setw(7) << yn(holds_of(p)) << detail_of(p);
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    std::cout << text << '\n';
  }
}

/// Report with every witness replayed first; a failed replay never prints.
Json verified_report(const StarRing& S) {
  const Json report = to_json(make_report(S));
  if (const auto failures = verify_report(S, report); !failures.empty()) {
    std::string msg = "witness replay failed for " + S.label();
    for (const auto& f : failures) msg += "\n  " + f;
    throw EquivalenceBreach(msg);
  }
  return report;
}

void emit_records(const std::vector<AtlasRecord>& records, const Options& o) {
  if (!o.out.empty()) persist_atlas(records, o.out);
  if (o.format == "json") {
    persist_atlas(records, std::cout);
    return;
  }
  for (const auto& r : records) {
    const auto& p = r.report.at("properties");
    std::cout << std::left << std::setw(34) << (r.ring_label + "|" + r.involution_label) << std::setw(6)
              << r.order << "strongly_pi_star_regular=" << yn(p.at("strongly_pi_star_regular").at("holds").get<bool>())
              << '\n';
  }
  std::cout << records.size() << " record(s)";
  if (!o.out.empty()) std::cout << " written to " << o.out;
  std::cout << '\n';
}

// -----------------------------------------------------------------------------
// subcommands
// -----------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  const auto spec = parse_spec_argument(o.spec);
  const auto S = build_star(spec, effective_caps(o));
  std::cout << "valid: " << S.label() << " (order " << S.ring().order() << ")\n";
  return kOk;
}

int cmd_check(const Options& o, const std::string& spec_text) {
  const auto names = selected_properties(o.properties);
  const auto S = build_star(parse_spec_argument(spec_text), effective_caps(o));
  print_report(verified_report(S), names, o.format);
  return kOk;
}

int cmd_equivalences(const Options& o) {
  const auto caps = effective_caps(o);
  const auto specs = o.corpus == "default" ? default_corpus_specs() : read_corpus_file(o.corpus);
  Json rows = Json::array();
  bool all_agree = true;
  std::vector<std::string> dumps;
  for (const auto& spec : specs) {
    const auto S = build_star(spec, caps);
    Json row{{"label", S.label()}, {"order", S.ring().order()}};
    bool agree = true;
    try {
      const auto l3 = lemma3_conditions(S);
      const auto l4 = lemma4_conditions(S);
      row["lemma3"] = l3;
      row["lemma4"] = l4;
      const bool lemmas = l3[0] == l3[1] && l3[1] == l3[2] && l4[0] == l4[1] && l4[1] == l4[2] && l3 == l4;
      if (!lemmas) dumps.push_back(S.label() + ": lemma triples disagree");
      const auto c = star_regularity_conditions(S);
      row["conditions"] = c.values();
      if (!c.agree()) dumps.push_back(describe(S, c));
      const auto p8 = proposition8_check(S);
      row["proposition8"] = {p8.lhs, p8.rhs};
      const bool clean = !c.condition1.holds || is_strongly_star_clean(S).holds;
      row["clean_implication"] = clean;
      if (!clean) dumps.push_back(S.label() + ": strongly pi-*-regular but not strongly *-clean");
      agree = lemmas && c.agree() && clean;
    } catch (const EquivalenceBreach& e) {
      dumps.push_back(e.what());
      agree = false;
    }
    row["agree"] = agree;
    all_agree = all_agree && agree;
    rows.push_back(std::move(row));
  }

  if (o.format == "json") {
    std::cout << Json{{"rings", rows}, {"all_agree", all_agree}}.dump(2) << '\n';
  } else {
    std::cout << std::left << std::setw(34) << "ring" << std::setw(7) << "order" << std::setw(8) << "lemma3"
              << std::setw(8) << "lemma4" << std::setw(8) << "c1-c4" << std::setw(8) << "prop8" << "agree\n";
    for (const auto& r : rows) {
      std::string l3, l4, c, p8 = "-";
      if (r.contains("lemma3"))
        for (bool b : r["lemma3"]) l3 += tf(b);
      if (r.contains("lemma4"))
        for (bool b : r["lemma4"]) l4 += tf(b);
      if (r.contains("conditions"))
        for (bool b : r["conditions"]) c += tf(b);
      if (r.contains("proposition8"))
        p8 = std::string(1, tf(r["proposition8"][0])) + "=" + tf(r["proposition8"][1]);
      std::cout << std::left << std::setw(34) << r["label"].get<std::string>() << std::setw(7)
                << r["order"].get<std::size_t>() << std::setw(8) << l3 << std::setw(8) << l4 << std::setw(8) << c
                << std::setw(8) << p8 << (r["agree"].get<bool>() ? "yes" : "NO") << '\n';
    }
    std::cout << rows.size() << " star ring(s); " << (all_agree ? "all suites agree" : "BREACH") << '\n';
  }
  for (const auto& d : dumps) std::cerr << "breach: " << d << '\n';
  return all_agree ? kOk : kBreach;
}

int cmd_search(const Options& o) {
  SearchTask task;
  task.caps = effective_caps(o);
  task.profile = Profile::parse(o.profile);
  task.all_involutions = o.all_involutions;
  task.sweep_max_order = o.sweep_max;
  task.timestamp = o.stamp;
  if (o.source == "corpus") {
    task.source = SearchTask::Source::Corpus;
    if (o.corpus != "default") task.specs = read_corpus_file(o.corpus);
  } else if (o.source == "sweep") {
    task.source = SearchTask::Source::Sweep;
  } else {
    task.source = SearchTask::Source::Specs;
    for (const auto& s : o.specs) task.specs.push_back(parse_spec_argument(s));
  }
  emit_records(run_profile_search(task), o);
  return kOk;
}

int cmd_problem10(const Options& o) {
  std::vector<StarSpec> bases;
  for (const auto& b : o.bases) bases.push_back(parse_spec_argument(b));
  if (bases.empty()) bases = {parse_spec_argument("zn:2"), parse_spec_argument("zn:3")};
  emit_records(problem10_scan(bases, o.k, effective_caps(o), o.stamp), o);
  return kOk;
}

int cmd_atlas(const Options& o) {
  const auto records = load_atlas(o.atlas, o.replay_sample, effective_caps(o), o.seed);
  std::cout << records.size() << " record(s) loaded from " << o.atlas << "; replay sample rate "
            << o.replay_sample << "; no mismatches\n";
  return kOk;
}

int run(const std::function<int()>& body) {
  try {
    return body();
  } catch (const AxiomViolation& e) {
    std::cerr << e.what() << '\n';
    return kAxiom;
  } catch (const IdentityEqualsZero& e) {
    std::cerr << "invalid ring: " << e.what() << '\n';
    return kAxiom;
  } catch (const InvalidTables& e) {
    std::cerr << "invalid ring: " << e.what() << '\n';
    return kAxiom;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kAxiom;
  } catch (const SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const EquivalenceBreach& e) {
    std::cerr << "equivalence breach: " << e.what() << '\n';
    return kBreach;
  } catch (const ReplayMismatch& e) {
    std::cerr << e.what() << '\n';
    return kBreach;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kBreach;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const IoFailure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite *-rings: construction, regularity predicates, equivalence checks and searches"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Global order cap (overrides RINGLAB_CAP)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Build a star ring from a spec and check every axiom");
  validate->add_option("--spec", o.spec, "Spec file, inline JSON, or short form such as zn:4")->required();
  add_common(validate);

  auto* check = app.add_subcommand("check", "Print the property report of a star ring");
  check->add_option("--spec", o.spec, "Spec file, inline JSON, or short form")->required();
  check->add_option("--properties", o.properties, "Comma-separated property names or 'all'");
  add_common(check);

  auto* equivalences = app.add_subcommand("equivalences", "Cross-check every equivalence suite over a corpus");
  equivalences->add_option("--corpus", o.corpus, "'default' or a corpus file");
  add_common(equivalences);

  auto* example6 = app.add_subcommand("example6", "Report for T2(Z2) with the antidiagonal involution");
  example6->add_option("--properties", o.properties, "Comma-separated property names or 'all'");
  add_common(example6);

  auto* search = app.add_subcommand("search", "Find star rings matching a property profile");
  search->add_option("--profile", o.profile, "Literals such as star_abelian,!strongly_pi_star_regular");
  search->add_option("--source", o.source, "Where rings come from")
      ->check(CLI::IsMember({"corpus", "sweep", "specs"}));
  search->add_option("--corpus", o.corpus, "'default' or a corpus file (source corpus)");
  search->add_option("--spec", o.specs, "Spec for source specs (repeatable)");
  search->add_flag("--all-involutions", o.all_involutions, "Use every involution of rings within the enumeration cap");
  search->add_option("--sweep-max", o.sweep_max, "Largest order generated by the sweep source");
  search->add_option("--out", o.out, "Write atlas records to this file");
  search->add_option("--stamp", o.stamp, "Timestamp stored in every record");
  add_common(search);

  auto* problem10 = app.add_subcommand("problem10", "Scan full matrix rings over commutative bases");
  problem10->add_option("--base", o.bases, "Base star ring spec (repeatable; default zn:2 and zn:3)");
  problem10->add_option("--k", o.k, "Matrix size")->check(CLI::PositiveNumber);
  problem10->add_option("--out", o.out, "Write atlas records to this file");
  problem10->add_option("--stamp", o.stamp, "Timestamp stored in every record");
  add_common(problem10);

  auto* atlas = app.add_subcommand("atlas", "Load an atlas file and replay its records");
  atlas->add_option("atlas", o.atlas, "Atlas file (one JSON record per line)")->required();
  atlas->add_option("--replay-sample", o.replay_sample, "Fraction of records replayed")
      ->check(CLI::Range(0.0, 1.0));
  atlas->add_option("--seed", o.seed, "Sampling seed");
  add_common(atlas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (validate->parsed()) return run([&] { return cmd_validate(o); });
  if (check->parsed()) return run([&] { return cmd_check(o, o.spec); });
  if (equivalences->parsed()) return run([&] { return cmd_equivalences(o); });
  if (example6->parsed())
    return run([&] { return cmd_check(o, to_json(example6_spec()).dump()); });
  if (search->parsed()) return run([&] { return cmd_search(o); });
  if (problem10->parsed()) return run([&] { return cmd_problem10(o); });
  if (atlas->parsed()) return run([&] { return cmd_atlas(o); });
  return kUsage;
}
