#include "sincov/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "sincov/report.hpp"

namespace sincov {

namespace {

const std::vector<std::string> kCommands{
    "validate", "audit",   "tilde",  "extremal", "represent", "reconstruct", "solve-eq", "invert",
    "zeros",    "bridge",  "quotient", "closure", "generate", "oracle",      "bench"};

struct Config {
  std::string command;
  std::string in, out, emit;
  std::string law, mode, format, kind, claim, direction = "sup", kernel = "auto";
  std::string x0, y0;
  double rel = Tolerance{}.rel;
  double zero_tol = Tolerance{}.zero_tol;
  bool exact = false;
  std::size_t n = 0, reps = 3;
  std::uint64_t seed = 0;
  std::optional<double> c;
  std::optional<std::size_t> family_size;
  std::vector<std::size_t> partition;
  std::vector<double> grid, potential;

  Tolerance tol() const { return {rel, zero_tol, exact}; }
};

// Exit code plus the "result" member of the report.
struct Outcome {
  int code = kExitOk;
  Json result;
};

class Runner {
 public:
  explicit Runner(const Config& cfg) : cfg_(cfg) {}

  Format input_format() const {
    return format_from_path(cfg_.in, cfg_.format.empty() ? Format::csv : parse_format(cfg_.format));
  }

  ReadOptions read_options() const {
    ReadOptions o;
    if (!cfg_.mode.empty()) o.mode = parse_mode(cfg_.mode);
    bool additive_default = cfg_.command == "quotient" ||
                            (!cfg_.law.empty() && parse_law(cfg_.law) == Law::triangle);
    o.csv_mode = additive_default ? Mode::additive : Mode::multiplicative;
    o.source = cfg_.in;
    return o;
  }

  void require_in() const {
    if (cfg_.in.empty()) throw UsageError(cfg_.command + " requires --in");
  }

  template <class T>
  BasicInstance<T> load() const {
    require_in();
    return parse_instance<T>(read_file(cfg_.in), input_format(), read_options());
  }

  template <class T>
  BasicPotentialFamily<T> load_family() const {
    require_in();
    return parse_family<T>(read_file(cfg_.in), input_format(), read_options());
  }

  Format emit_format() const {
    return format_from_path(cfg_.emit,
                            cfg_.format.empty() ? Format::json : parse_format(cfg_.format));
  }

  template <class T>
  void emit(const BasicInstance<T>& inst) const {
    if (!cfg_.emit.empty()) write_file(cfg_.emit, format_instance(inst, emit_format()));
  }

  template <class T>
  void emit(const BasicPotentialFamily<T>& fam) const {
    if (!cfg_.emit.empty()) write_file(cfg_.emit, format_family(fam, emit_format()));
  }

  Json input_json() const {
    Json j;
    if (cfg_.in.empty()) {
      j = nullptr;
    } else {
      j["path"] = cfg_.in;
      j["format"] = std::string(to_string(input_format()));
    }
    return j;
  }

  GenSpec gen_spec() const {
    if (cfg_.kind.empty()) throw UsageError(cfg_.command + " requires --kind");
    GenSpec s;
    s.kind = parse_gen_kind(cfg_.kind);
    s.n = cfg_.n;
    s.seed = cfg_.seed;
    s.params.c = cfg_.c;
    s.params.partition = cfg_.partition;
    s.params.grid = cfg_.grid;
    s.params.potential = cfg_.potential;
    s.params.family_size = cfg_.family_size;
    return s;
  }

  Json gen_json(const GenSpec& s) const {
    Json j;
    j["kind"] = std::string(to_string(s.kind));
    j["n"] = s.n;
    j["seed"] = s.seed;
    return j;
  }

  template <class T>
  Outcome dispatch(Json& input) const;

  Outcome bridge_cmd() const {
    if (cfg_.exact) throw UsageError("bridge uses exp/log and has no exact mode");
    Instance out = bridge(load<double>());
    emit(out);
    return {kExitOk, instance_json(out)};
  }

  Outcome bench_cmd(Json& input) const {
    BenchReport r = bench_closure(cfg_.n == 0 ? 256 : cfg_.n, cfg_.reps, cfg_.seed);
    input = nullptr;
    return {r.identical ? kExitOk : kExitFailure, bench_json(r)};
  }

 private:
  template <class T>
  std::size_t label_index(const BasicInstance<T>& inst, const std::string& label,
                          const char* flag) const {
    if (label.empty()) throw UsageError(cfg_.command + " requires " + flag);
    return inst.index_of(label);
  }

  template <class T>
  Outcome oracle_cmd(Json& input) const {
    std::optional<BasicInstance<T>> inst;
    if (!cfg_.in.empty()) {
      inst.emplace(load<T>());
    } else {
      GenSpec s = gen_spec();
      inst.emplace(generate<T>(s));
      input = gen_json(s);
    }
    std::vector<std::string> claims =
        cfg_.claim.empty() ? registered_claims() : std::vector<std::string>{cfg_.claim};
    Json verdicts = Json::array();
    bool violated = false;
    for (const auto& claim : claims) {
      Json v;
      try {
        OracleResult r = oracle_check(*inst, claim, cfg_.tol());
        violated = violated || r.verdict == Verdict::violated;
        v = oracle_json(claim, r, inst->labels());
      } catch (const UsageError&) {
        if (!cfg_.claim.empty()) throw;
        v["claim"] = claim;
        v["verdict"] = "skipped";
        v["detail"] = "instance above the quartic size cap";
        v["witness"] = Json::array();
      }
      verdicts.push_back(std::move(v));
    }
    Json result;
    result["violated"] = violated;
    result["verdicts"] = std::move(verdicts);
    return {violated ? kExitFailure : kExitOk, std::move(result)};
  }

  const Config& cfg_;
};

template <class T>
Outcome Runner::dispatch(Json& input) const {
  const Tolerance tol = cfg_.tol();
  const std::string& cmd = cfg_.command;

  if (cmd == "validate") {
    if (cfg_.law.empty()) throw UsageError("validate requires --law");
    auto inst = load<T>();
    ViolationReport r = validate(inst, parse_law(cfg_.law), tol);
    return {r.pass ? kExitOk : kExitFailure, violations_json(r, inst.labels())};
  }
  if (cmd == "audit") return {kExitOk, audit_json(audit(load<T>(), tol))};
  if (cmd == "tilde") {
    auto out = tilde(load<T>());
    emit(out);
    return {kExitOk, instance_json(out)};
  }
  if (cmd == "extremal") {
    auto inst = load<T>();
    auto x0 = label_index(inst, cfg_.x0, "--x0");
    auto y0 = label_index(inst, cfg_.y0, "--y0");
    auto s = extremal_solution(inst, x0, y0, tol);
    emit(s.solution);
    Json j;
    j["x0"] = cfg_.x0;
    j["y0"] = cfg_.y0;
    j["witness"] = inst.label(s.witness);
    j["solution"] = instance_json(s.solution);
    return {kExitOk, std::move(j)};
  }
  if (cmd == "represent") {
    auto fam = canonical_family(load<T>(), tol);
    emit(fam);
    return {kExitOk, family_json(fam)};
  }
  if (cmd == "reconstruct") {
    auto out = reconstruct(load_family<T>(), parse_direction(cfg_.direction));
    emit(out);
    return {kExitOk, instance_json(out)};
  }
  if (cmd == "solve-eq") {
    auto inst = load<T>();
    auto s = solve_equation(inst, tol);
    Json j;
    using Kind = typename EquationSolution<T>::Kind;
    j["kind"] = s.kind == Kind::potential ? "potential" : s.kind == Kind::zero ? "zero" : "none";
    j["potential"] = s.kind == Kind::potential ? potential_json(s.potential, inst.labels())
                                               : Json(nullptr);
    return {s.kind == Kind::none ? kExitFailure : kExitOk, std::move(j)};
  }
  if (cmd == "invert") {
    auto out = invert(load<T>(), tol);
    emit(out);
    return {kExitOk, instance_json(out)};
  }
  if (cmd == "zeros") {
    auto inst = load<T>();
    FspReport f = fsp_audit(inst, tol);
    Json j;
    j["fsp"] = fsp_json(f);
    int code = f.theorem_violation ? kExitFailure : kExitOk;
    if (f.nonnegative) {
      ZeroStructure s = zero_structure(inst, tol);
      if (s.violated_count > 0) code = kExitFailure;
      j["structure"] = zero_structure_json(s, inst.labels());
    } else {
      j["structure"] = nullptr;
    }
    return {code, std::move(j)};
  }
  if (cmd == "quotient") {
    auto inst = load<T>();
    auto q = quotient(inst, tol);
    emit(q.reduced);
    return {kExitOk, quotient_json(q, inst.labels())};
  }
  if (cmd == "closure") {
    auto inst = load<T>();
    ClosureKernel kernel = cfg_.kernel == "plain"     ? ClosureKernel::plain
                           : cfg_.kernel == "blocked" ? ClosureKernel::blocked
                           : cfg_.kernel == "auto"    ? ClosureKernel::automatic
                                                      : throw UsageError("unknown kernel '" +
                                                                         cfg_.kernel + "'");
    try {
      auto out = closure(inst, kernel);
      emit(out);
      return {kExitOk, instance_json(out)};
    } catch (const CycleError& e) {
      return {kExitFailure, cycle_json(e, inst.labels())};
    }
  }
  if (cmd == "generate") {
    GenSpec s = gen_spec();
    input = gen_json(s);
    auto out = generate<T>(s);
    emit(out);
    return {kExitOk, instance_json(out)};
  }
  if (cmd == "oracle") return oracle_cmd<T>(input);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Sincov inequality toolkit", "sincov"};
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--in", cfg.in, "Input instance (or family for reconstruct)");
  app.add_option("--out", cfg.out, "Report path (default: stdout)");
  app.add_option("--emit", cfg.emit, "Write the resulting instance or family here");
  app.add_option("--law", cfg.law, "mult-eq | mult-ineq | reverse-ineq | triangle");
  app.add_option("--mode", cfg.mode, "multiplicative | additive (overrides the file)");
  app.add_option("--tol", cfg.rel, "Relative slack")->check(CLI::NonNegativeNumber);
  app.add_option("--zero-tol", cfg.zero_tol, "Absolute zero threshold")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--exact", cfg.exact, "Exact rational arithmetic");
  app.add_option("--x0", cfg.x0, "Row label for extremal");
  app.add_option("--y0", cfg.y0, "Column label for extremal");
  app.add_option("--kind", cfg.kind, "Generator kind");
  app.add_option("--n", cfg.n, "Instance size");
  app.add_option("--seed", cfg.seed, "Generator seed");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--claim", cfg.claim, "Oracle claim id (default: all)");
  app.add_option("--direction", cfg.direction, "sup | inf for reconstruct");
  app.add_option("--reps", cfg.reps, "Benchmark repetitions");
  app.add_option("--kernel", cfg.kernel, "auto | plain | blocked for closure");
  app.add_option("--c", cfg.c, "bounded generator: entries in [c, c^2]");
  app.add_option("--family-size", cfg.family_size, "additive-potential generator");
  app.add_option("--partition", cfg.partition, "component generator: block id per point")
      ->delimiter(',');
  app.add_option("--grid", cfg.grid, "reverse-f3 generator: grid points")->delimiter(',');
  app.add_option("--potential", cfg.potential, "ratio generator: f values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cfg.tol().check();
    Runner runner(cfg);
    Json input = runner.input_json();
    Outcome o;
    if (cfg.command == "bridge") {
      o = runner.bridge_cmd();
    } else if (cfg.command == "bench") {
      o = runner.bench_cmd(input);
    } else if (cfg.exact) {
      o = runner.dispatch<Rational>(input);
    } else {
      o = runner.dispatch<double>(input);
    }
    std::string report = envelope(cfg.command, std::move(input), std::move(o.result), cfg.tol())
                             .dump(2) + "\n";
    if (cfg.out.empty()) {
      out << report;
    } else {
      write_file(cfg.out, report);
    }
    return o.code;
  } catch (const CycleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sincov
