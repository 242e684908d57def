// postimp: classify bases, decide implication instances, emit hardness
// constructions, list bounded-arity closures and run a randomized
// fragment-vs-oracle self test.

#include "postimp/classify.hpp"
#include "postimp/decide.hpp"
#include "postimp/error.hpp"
#include "postimp/io.hpp"
#include "postimp/reductions.hpp"

#include "selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace postimp;

namespace {

enum class Format { Human, Record };

struct Config {
  std::string base_path;
  std::string instance_path;
  bool single_premise = false;
  std::optional<Fragment> force;
  std::size_t max_vars = 24;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  Format format = Format::Human;
  unsigned arity = 2;
  std::string kind;
  std::string input;
  std::string word;
  std::string out;
};

void emit(const Config& cfg, const json& record, const std::string& human) {
  if (cfg.format == Format::Record)
    std::cout << record.dump() << '\n';
  else
    std::cout << human;
}

BasePtr load_base(const std::string& path) { return io::parse_base(io::read_file(path), path); }

int run_classify(const Config& cfg) {
  const auto base = load_base(cfg.base_path);
  const auto verdict = cfg.single_premise ? classify_base_single_premise(*base) : classify_base(*base);
  const std::string problem = cfg.single_premise ? "IMP'" : "IMP";
  json r;
  r["problem"] = problem;
  r["class"] = to_string(verdict.complexity);
  r["fragment"] = to_string(verdict.fragment);
  r["witness"] = verdict.witness;
  emit(cfg, r,
       problem + "(B) is " + std::string(to_string(verdict.complexity)) + " [" +
           std::string(to_string(verdict.fragment)) + "]\n  " + verdict.witness + "\n");
  return 0;
}

int run_decide(const Config& cfg) {
  const auto inst = io::load_instance(cfg.instance_path, cfg.base_path.empty() ? nullptr : load_base(cfg.base_path));
  const auto d = dispatch(inst, cfg.single_premise ? PremiseMode::Single : PremiseMode::Set, cfg.force,
                          OracleOptions{cfg.max_vars, cfg.threads});
  json r;
  r["implies"] = d.implies;
  r["fragment_used"] = to_string(d.fragment_used);
  std::string human = std::string(d.implies ? "implies" : "does not imply") + " [" +
                      std::string(to_string(d.fragment_used)) + "]: " + d.detail + "\n";
  if (d.counterexample) {
    json sigma = json::object();
    for (std::size_t i = 0; i < inst.num_variables(); ++i)
      sigma[inst.variables()[i]] = (*d.counterexample)[i] ? 1 : 0;
    r["counterexample"] = sigma;
    human += "counterexample: " + format_assignment(inst.variables(), *d.counterexample) + "\n";
  }
  emit(cfg, r, human);
  return 0;
}

int run_reduce(const Config& cfg) {
  std::optional<Instance> inst;
  std::string goal;
  if (cfg.kind == "tautdnf-monotone" || cfg.kind == "tautdnf-d2") {
    const auto dnf = io::parse_dnf(io::read_file(cfg.input), cfg.input);
    inst = cfg.kind == "tautdnf-monotone" ? reduce_tautdnf_monotone(dnf) : reduce_tautdnf_d2(dnf);
  } else if (cfg.kind == "linsys") {
    auto r = reduce_linsys_to_imp(io::parse_system(io::read_file(cfg.input), cfg.input));
    goal = r.goal;
    inst = std::move(r.instance);
  } else if (cfg.kind == "mod2-unary") {
    inst = reduce_mod2_unary(cfg.word);
  } else {
    inst = reduce_mod2_single_linear(cfg.word);
  }

  fs::path inst_path = cfg.out;
  fs::path base_path = inst_path;
  base_path.replace_extension(".base");
  io::write_file(base_path, io::format_base(inst->base()));
  io::write_file(inst_path, io::format_instance(*inst, base_path.filename().string()));

  json r;
  r["kind"] = cfg.kind;
  r["instance"] = inst_path.string();
  r["base"] = base_path.string();
  r["variables"] = inst->num_variables();
  r["premises"] = inst->premises().size();
  if (!goal.empty())
    r["goal"] = goal;
  emit(cfg, r,
       "wrote " + inst_path.string() + " (" + std::to_string(inst->premises().size()) + " premise(s), " +
           std::to_string(inst->num_variables()) + " variable(s)) and " + base_path.string() + "\n");
  return 0;
}

int run_closure(const Config& cfg) {
  const auto base = load_base(cfg.base_path);
  const auto members = closure_fixed_arity(*base, cfg.arity);
  json r;
  r["arity"] = cfg.arity;
  r["size"] = members.size();
  json tables = json::array();
  std::string human =
      std::to_string(members.size()) + " function(s) of arity " + std::to_string(cfg.arity) + " in the clone\n";
  for (const auto& f : members) {
    tables.push_back(f.bits());
    human += "  " + f.bits() + "\n";
  }
  r["functions"] = tables;
  emit(cfg, r, human);
  return 0;
}

int run_selftest(const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = selftest::run(cfg.seed, cfg.cases, cfg.force, OracleOptions{cfg.max_vars, cfg.threads});
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json r;
  r["seed"] = cfg.seed;
  json rows = json::array();
  std::string human = "seed " + std::to_string(cfg.seed) + "\n";
  std::size_t total = 0;
  for (const auto& row : report) {
    rows.push_back({{"fragment", row.name}, {"cases", row.cases}, {"disagreements", row.disagreements}});
    human += "  " + row.name + ": " + std::to_string(row.cases) + " case(s), " + std::to_string(row.disagreements) +
             " disagreement(s)\n";
    total += row.disagreements;
  }
  r["fragments"] = rows;
  r["disagreements"] = total;
  emit(cfg, r, human);
  // Timing varies run to run; keep it off stdout.
  std::cerr << "elapsed " << elapsed << " s\n";
  return total == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implication problems over Post's lattice"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, Format> formats{{"human", Format::Human}, {"record", Format::Record}};
  const std::map<std::string, Fragment> fragments{{"general", Fragment::General},
                                                  {"linear", Fragment::Linear},
                                                  {"or", Fragment::Or},
                                                  {"and", Fragment::And},
                                                  {"unary", Fragment::Unary}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  std::string forced;
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--force-fragment", forced, "Bypass classification")
        ->check(CLI::IsMember({"general", "linear", "or", "and", "unary"}));
    sub->add_option("--max-vars", cfg.max_vars, "Variable cap for exhaustive enumeration")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Enumeration threads (0 = all cores)")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Complexity of the implication problem for a base");
  classify->add_option("--base", cfg.base_path, "Base file")->required()->check(CLI::ExistingFile);
  classify->add_flag("--single-premise", cfg.single_premise, "Exactly one premise");
  add_format(classify);

  auto* decide = app.add_subcommand("decide", "Decide whether the premises entail the conclusion");
  decide->add_option("--instance", cfg.instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  decide->add_option("--base", cfg.base_path, "Base file (overrides the instance's base: header)")
      ->check(CLI::ExistingFile);
  decide->add_flag("--single-premise", cfg.single_premise, "Use the single-premise classification");
  add_oracle(decide);
  add_format(decide);

  auto* reduce = app.add_subcommand("reduce", "Write a hardness construction as an instance and base file");
  reduce->add_option("kind", cfg.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"tautdnf-monotone", "tautdnf-d2", "linsys", "mod2-unary", "mod2-single"}));
  reduce->add_option("--input", cfg.input, "DNF or linear-system file")->check(CLI::ExistingFile);
  reduce->add_option("--word", cfg.word, "Bit string for the MOD2 constructions");
  reduce->add_option("--out", cfg.out, "Instance path; the base goes next to it with extension .base")->required();
  add_format(reduce);

  auto* closure = app.add_subcommand("closure", "List the clone's functions of a fixed arity");
  closure->add_option("--base", cfg.base_path, "Base file")->required()->check(CLI::ExistingFile);
  closure->add_option("--arity", cfg.arity, "Arity, 1..4")->capture_default_str()->check(CLI::Range(1, 4));
  add_format(closure);

  auto* selftest = app.add_subcommand("selftest", "Compare fragment deciders with exhaustive enumeration");
  selftest->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  selftest->add_option("--cases", cfg.cases, "Instances per fragment")->capture_default_str();
  add_oracle(selftest);
  add_format(selftest);

  CLI11_PARSE(app, argc, argv);
  if (!forced.empty())
    cfg.force = fragments.at(forced);

  try {
    if (*classify)
      return run_classify(cfg);
    if (*decide)
      return run_decide(cfg);
    if (*reduce) {
      const bool needs_input = cfg.kind.rfind("tautdnf", 0) == 0 || cfg.kind == "linsys";
      if (needs_input && cfg.input.empty())
        throw Error("reduce " + cfg.kind + " requires --input");
      if (!needs_input && reduce->count("--word") == 0)
        throw Error("reduce " + cfg.kind + " requires --word");
      return run_reduce(cfg);
    }
    if (*closure)
      return run_closure(cfg);
    return run_selftest(cfg);
  } catch (const std::exception& e) {
    std::cerr << "postimp: error: " << e.what() << '\n';
    return 1;
  }
}
