// sspec: batch front end. Reports are JSON on stdout (or --out); a one-line
// summary goes to stderr.
//
// exit 0  all verdicts pass
//      1  a verification verdict failed
//      2  parse or validation failure
//      3  budget or cap exceeded

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "sspec/constructions.hpp"
#include "sspec/corpus.hpp"
#include "sspec/cospectrum.hpp"
#include "sspec/errors.hpp"
#include "sspec/json_io.hpp"
#include "sspec/limits.hpp"
#include "sspec/smash_product.hpp"

using namespace sspec;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string q = "floor-half";
  std::string q2;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::uint64_t seed = 1;
  int size = 10;
  int k = 3;
  int n = 0;
  std::string space = "S0";
  bool no_timings = false;
};

constexpr int partition_levels = 64;

struct Report {
  Json body = Json::object();
  Json checks = Json::array();

  void check(Json c, bool pass) {
    c["pass"] = pass;
    checks.push_back(std::move(c));
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

TruncatedSpectrum load_spectrum(const std::string& path) {
  return spectrum_from_json(read_json_file(path));
}

std::vector<std::pair<std::string, TruncatedSpectrum>> load_or_generate(const Options& o) {
  std::vector<std::pair<std::string, TruncatedSpectrum>> out;
  if (!o.inputs.empty()) {
    for (const auto& p : o.inputs) out.emplace_back(p, load_spectrum(p));
    return out;
  }
  for (auto& e : generate_corpus(o.seed, o.size)) out.emplace_back(e.name, std::move(e.spectrum));
  return out;
}

std::uint64_t budget_of(const Options& o) { return o.budget.value_or(limits().enumeration_budget); }

SSetPtr named_space(const std::string& name) {
  if (name == "S0") return sphere0();
  if (name == "S1") return circle();
  if (name == "S2") return simplicial_sphere(2);
  if (name == "C3") return three_edge_circle();
  if (name == "D1+") return add_disjoint_basepoint(standard_simplex(1));
  throw InvalidInput("unknown space '" + name + "' (S0, S1, S2, C3, D1+)");
}

std::string kind_of(const Json& j) {
  if (j.contains("objects")) return "cospectrum";
  if (j.contains("components")) return "spectrum_map";
  if (j.contains("truncation")) return "spectrum";
  if (j.contains("dims")) return "simplicial_set";
  if (j.contains("images")) return "simplicial_map";
  throw InvalidInput("unrecognised document");
}

void run_validate(const Options& o, Report& r) {
  if (o.inputs.empty()) throw InvalidInput("validate needs --input");
  for (const auto& p : o.inputs) {
    auto j = read_json_file(p);
    auto kind = kind_of(j);
    Json c{{"input", p}, {"kind", kind}};
    std::string detail;
    if (kind == "spectrum") {
      auto rep = spectrum_from_json(j).validate();
      detail = rep.summary();
      if (!rep.ok()) throw InvalidInput(p + ": " + detail);
    } else if (kind == "spectrum_map") {
      auto rep = spectrum_map_from_json(j).validate();
      detail = rep.summary();
      if (!rep.ok()) throw InvalidInput(p + ": " + detail);
    } else if (kind == "cospectrum") {
      cospectrum_from_json(j);
    } else if (kind == "simplicial_set") {
      sset_from_json(j);
    } else {
      simplicial_map_from_json(j);
    }
    r.check(std::move(c), true);
  }
}

void run_homology(const Options& o, Report& r) {
  if (o.inputs.empty()) throw InvalidInput("homology needs --input");
  for (const auto& p : o.inputs) {
    auto j = read_json_file(p);
    auto kind = kind_of(j);
    GradedHomology h;
    if (kind == "spectrum")
      h = stable_homology(spectrum_from_json(j));
    else if (kind == "simplicial_set")
      h = homology(reduced_chain_complex(*sset_from_json(j)));
    else
      throw InvalidInput(p + ": homology needs a spectrum or a simplicial set");
    r.check({{"input", p}, {"kind", kind}, {"homology", to_json(h)}}, true);
  }
}

std::pair<TruncatedSpectrum, TruncatedSpectrum> pair_inputs(const Options& o, const char* cmd) {
  if (o.inputs.size() != 2) throw InvalidInput(std::string(cmd) + " needs exactly two --input files");
  return {load_spectrum(o.inputs[0]), load_spectrum(o.inputs[1])};
}

void run_smash(const Options& o, Report& r) {
  auto [a, b] = pair_inputs(o, "smash");
  auto q = make_partition(o.q, partition_levels);
  auto s = naive_smash(a, b, q);
  auto twist = twist_check(a, b, q);
  Json dims = Json::array();
  for (int m = 0; m <= s.result.truncation(); ++m) dims.push_back(s.result.level(m)->dims());
  r.body["result"] = {{"truncation", s.result.truncation()}, {"level_dims", dims}};
  r.check({{"pair", o.inputs}, {"q", q.name()}, {"check", "validate"}}, s.result.validate().ok());
  r.check({{"pair", o.inputs},
           {"q", q.name()},
           {"check", "twist"},
           {"valid", twist.valid},
           {"two_sided", twist.two_sided},
           {"homology_iso", twist.homology_iso}},
          twist.ok());
  r.check({{"pair", o.inputs}, {"q", q.name()}, {"check", "homology"},
           {"homology", to_json(stable_homology(s.result))}},
          true);
}

void run_kunneth(const Options& o, Report& r) {
  auto [a, b] = pair_inputs(o, "kunneth");
  auto q = make_partition(o.q, partition_levels);
  auto c = kunneth_compare(a, b, q);
  r.check({{"pair", o.inputs},
           {"q", q.name()},
           {"homology_left", to_json(c.left)},
           {"homology_right", to_json(c.right)},
           {"equal", c.equal}},
          c.equal);
  if (!o.q2.empty()) {
    auto q2 = make_partition(o.q2, partition_levels);
    auto cc = commute_check(a, b, q, q2);
    r.check({{"pair", o.inputs},
             {"q", q.name()},
             {"q2", q2.name()},
             {"check", "commute"},
             {"homology_left", to_json(cc.left)},
             {"homology_right", to_json(cc.right)},
             {"equal", cc.equal}},
            cc.equal);
  }
}

Json coeq_check(const std::string& id, const TruncatedSpectrum& a) {
  auto p = coequalizer_presentation(a);
  return {{"input", id}, {"witness_is_iso", p.witness_is_iso}};
}

void run_verify_coeq(const Options& o, Report& r) {
  for (const auto& [id, a] : load_or_generate(o)) {
    auto c = coeq_check(id, a);
    const bool ok = c["witness_is_iso"].get<bool>();
    r.check(std::move(c), ok);
  }
}

void run_verify_adjunction(const Options& o, Report& r) {
  if (o.inputs.empty()) throw InvalidInput("verify-adjunction needs --input (the target spectrum)");
  auto k = named_space(o.space);
  for (const auto& p : o.inputs) {
    auto b = load_spectrum(p);
    auto rep = adjunction_check(o.n, k, b, budget_of(o));
    r.check({{"input", p},
             {"n", o.n},
             {"K", o.space},
             {"spectrum_maps", rep.spectrum_maps},
             {"level_maps", rep.level_maps},
             {"pairing", rep.pairing},
             {"bijection", rep.bijection}},
            rep.bijection);
  }
}

void run_verify_frame(const Options& o, Report& r) {
  auto frame = standard_frame(o.k);
  auto pred = frame_predicate(frame);
  r.check({{"frame", "standard"},
           {"degree", o.k},
           {"label", pred.label},
           {"cofibrant", pred.cofibrant},
           {"structure_map_iso", pred.structure_map_iso}},
          pred.overall);
  for (const auto& p : o.inputs) {
    auto a = load_spectrum(p);
    auto real = realize_left_adjoint(frame, a);
    auto cmp = frame_comparison(real, a);
    r.check({{"input", p}, {"realization_iso", is_levelwise_iso(cmp)}},
            is_levelwise_iso(cmp) && cmp.validate().ok());
  }
}

// Independent jobs, results keyed by index so assembly is order-independent.
void run_corpus(const Options& o, Report& r) {
  auto corpus = generate_corpus(o.seed, o.size);
  const int n = static_cast<int>(corpus.size());
  std::vector<Json> results(n);
  std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      const auto& a = corpus[i].spectrum;
      auto c = coeq_check(corpus[i].name, a);
      c["id"] = i;
      c["valid"] = a.validate().ok();
      c["homology"] = to_json(stable_homology(a));
      results[i] = std::move(c);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!errors[i].empty()) throw VerificationFailure(corpus[i].name + ": " + errors[i]);
    const bool ok = results[i]["valid"].get<bool>() && results[i]["witness_is_iso"].get<bool>();
    r.check(std::move(results[i]), ok);
  }
}

void run_generate(const Options& o, Report& r) {
  if (o.out.empty()) throw InvalidInput("generate-corpus needs --out (a directory)");
  std::filesystem::create_directories(o.out);
  auto corpus = generate_corpus(o.seed, o.size);
  Json index = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char file[32];
    std::snprintf(file, sizeof file, "spectrum_%03zu.json", i);
    write_json_file((std::filesystem::path(o.out) / file).string(), to_json(corpus[i].spectrum));
    index.push_back({{"file", file}, {"name", corpus[i].name}});
    r.check({{"file", file}, {"name", corpus[i].name}}, corpus[i].spectrum.validate().ok());
  }
  write_json_file((std::filesystem::path(o.out) / "index.json").string(), index);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial spectra: homology, smash products and verification suites"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.inputs, "input JSON file (repeatable)");
    sub->add_option("--out", o.out, "report path (directory for generate-corpus)");
    sub->add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
    sub->add_flag("--no-timings", o.no_timings, "omit the timings field");
  };
  std::map<std::string, void (*)(const Options&, Report&)> handlers{
      {"validate", run_validate},
      {"homology", run_homology},
      {"smash", run_smash},
      {"kunneth", run_kunneth},
      {"verify-coeq", run_verify_coeq},
      {"verify-adjunction", run_verify_adjunction},
      {"verify-frame", run_verify_frame},
      {"corpus-run", run_corpus},
      {"generate-corpus", run_generate},
  };
  const std::map<std::string, std::string> help{
      {"validate", "parse and validate JSON documents"},
      {"homology", "stable homology of a spectrum, reduced homology of a simplicial set"},
      {"smash", "naive smash of two spectra over a partition"},
      {"kunneth", "compare H(A ^_q B) with H(C(A) (x) C(B))"},
      {"verify-coeq", "coequalizer presentation witnesses"},
      {"verify-adjunction", "|Hom(F_n K, B)| = |Hom(K, B_n)| by enumeration"},
      {"verify-frame", "frame predicate and left adjoint of the standard frame"},
      {"corpus-run", "verification jobs over a generated corpus"},
      {"generate-corpus", "write a deterministic corpus of spectrum files"},
  };
  for (const auto& [name, _] : handlers) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name == "smash" || name == "kunneth") {
      sub->add_option("--q", o.q, "partition: floor-half, interleave(a,b) or a comma table");
      if (name == "kunneth") sub->add_option("--q2", o.q2, "second partition for a commutation check");
    }
    if (name == "verify-coeq" || name == "corpus-run" || name == "generate-corpus") {
      sub->add_option("--seed", o.seed, "corpus seed");
      sub->add_option("--size", o.size, "corpus size (<= 100)");
    }
    if (name == "verify-frame") sub->add_option("--k", o.k, "frame degree");
    if (name == "verify-adjunction") {
      sub->add_option("--n", o.n, "level of the free spectrum");
      sub->add_option("--k", o.space, "space K: S0, S1, S2, C3, D1+");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Report r;
  r.body["command"] = command;
  r.body["inputs"] = {{"files", o.inputs}, {"q", o.q}, {"seed", o.seed}, {"size", o.size}};
  if (o.budget) {
    auto l = limits();
    l.enumeration_budget = *o.budget;
    set_limits(l);
  }

  int status = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    handlers.at(command)(o, r);
    status = r.pass() ? 0 : 1;
  } catch (const InvalidPartition& e) {
    r.body["error"] = {{"kind", "invalid_partition"}, {"message", e.what()}, {"index", e.index()}};
    status = 2;
  } catch (const InvalidInput& e) {
    r.body["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    status = 2;
  } catch (const BudgetExceeded& e) {
    r.body["error"] = {{"kind", "budget_exceeded"}, {"message", e.what()}};
    status = 3;
  } catch (const CapExceeded& e) {
    r.body["error"] = {{"kind", "cap_exceeded"}, {"message", e.what()}};
    status = 3;
  } catch (const std::exception& e) {
    r.body["error"] = {{"kind", "verification_failure"}, {"message", e.what()}};
    status = 1;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  r.body["checks"] = r.checks;
  r.body["pass"] = status == 0;
  r.body["exit_code"] = status;
  if (!o.no_timings) r.body["timings"] = {{"total_ms", ms}};

  const bool to_file = !o.out.empty() && command != "generate-corpus";
  if (to_file) {
    write_json_file(o.out, r.body);
  } else {
    std::cout << r.body.dump(2) << '\n';
  }
  std::cerr << command << ": " << r.checks.size() << " checks, "
            << (status == 0 ? "pass" : "exit " + std::to_string(status));
  if (r.body.contains("error")) std::cerr << " (" << r.body["error"]["message"].get<std::string>() << ")";
  std::cerr << '\n';
  return status;
}
