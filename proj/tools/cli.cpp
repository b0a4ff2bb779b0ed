#include "cli.hpp"

#include "charlab/render.hpp"
#include "charlab/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace charlab {

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kSingular = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  return parts;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct EvalArgs {
  std::string family, shape, at;
  std::size_t vars = 0;
  bool principal = false, negate = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  Shape shape = Shape::parse(a.shape);
  if (shape.length() > a.vars) throw UsageError("shape has more parts than --vars");
  if (shape.length() < a.vars) shape = shape.padded(a.vars);
  const CharacterSpec spec(parse_family(a.family), shape, a.vars);
  if (a.principal) {
    const Integer v = principal_specialization(spec, a.negate);
    err << a.family << " (" << to_string(shape) << ") principal" << (a.negate ? " negated" : "") << ": " << to_string(v) << '\n';
    emit(out, eval_json(spec, a.negate, v));
    return kOk;
  }
  if (a.negate) throw UsageError("--negate needs --principal");
  std::vector<Rational> point;
  for (const auto& p : split(a.at)) point.push_back(parse_rational(p));
  if (point.size() != a.vars) throw UsageError("--at needs exactly --vars coordinates");
  const Rational v = character_at(spec, point);
  err << a.family << " (" << to_string(shape) << ") at (" << a.at << "): " << to_string(v) << '\n';
  emit(out, eval_json(spec, point, v));
  return kOk;
}

struct VerifyArgs {
  std::string identity, mode = "symbolic";
  int m = 0, n = 0, which = 0, N = 0, trials = 20;
  std::uint64_t seed = 0;
};

int report_verdict(const VerificationReport& r, std::ostream& out, std::ostream& err) {
  err << r.identity;
  for (const auto& [k, v] : r.params) err << ' ' << k << '=' << v;
  err << ": " << (r.equal() ? "equal" : "counterexample") << " (" << to_string(r.mode) << ")\n";
  if (r.note) err << "note: " << *r.note << '\n';
  emit(out, to_json(r));
  return r.equal() ? kOk : kMismatch;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Mode mode = parse_mode(a.mode);
  if (a.trials < 1) throw UsageError("--trials must be positive");
  if (a.identity == "eq13" || a.identity == "eq14") {
    if (a.m < 0 || a.n < 1) throw UsageError("bridge identities need m >= 0 and n >= 1");
    const auto b = parse_bridge(a.identity);
    return report_verdict(verify_bridge(b, rectangle(HalfExp::integer(a.m), static_cast<std::size_t>(a.n)), mode, a.trials, a.seed), out, err);
  }
  return report_verdict(verify_theorem(parse_theorem(a.identity), a.m, a.n, mode, a.trials, a.seed), out, err);
}

int cmd_lemma(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.trials < 1) throw UsageError("--trials must be positive");
  return report_verdict(verify_lemma(a.which, a.N, parse_mode(a.mode), a.trials, a.seed), out, err);
}

struct CountArgs {
  std::string family;
  int m = 0, n = -1, b = -1, c = -1;
  std::vector<std::string> methods;
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  const CountFamily f = parse_count_family(a.family);
  if (f != CountFamily::pp && (a.b >= 0 || a.c >= 0)) throw UsageError("--b and --c apply to pp only");
  const int rows = a.b >= 0 ? a.b : a.n, cols = a.c >= 0 ? a.c : a.n;
  if (rows < 0 || cols < 0) throw UsageError("--n (or --b and --c for pp) is required");
  std::vector<CountMethod> methods;
  for (const auto& name : a.methods) methods.push_back(parse_count_method(name));
  if (methods.empty()) methods = applicable_methods(f);
  const auto r = count(f, 2 * a.m, rows, cols, methods);
  for (const auto& [method, v] : r.methods) err << to_string(method) << ": " << (v ? to_string(*v) : "skipped (enumeration guard)") << '\n';
  emit(out, to_json(r));
  return r.consistent() ? kOk : kMismatch;
}

struct RenderArgs {
  std::string family = "pp", out;
  int m = 0, n = 0;
  std::uint64_t index = 0;
};

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  if (a.family != "pp") throw UsageError("render supports --family pp only");
  if (a.m < 0 || a.n < 0) throw UsageError("--m and --n must be non-negative");
  const auto p = nth_pp(2 * a.m, a.n, a.n, a.index);
  if (!p) throw UsageError("--index is out of range (the box has " + to_string(pp_product(2 * a.m, a.n, a.n)) + " plane partitions)");
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + a.out);
  file << render_svg(*p);
  if (!file.flush()) throw std::runtime_error("cannot write " + a.out);
  err << "wrote " << a.out << '\n';
  Json j;
  j["family"] = "pp";
  j["params"] = {{"m", std::to_string(a.m)}, {"n", std::to_string(a.n)}};
  j["index"] = std::to_string(a.index);
  j["out"] = a.out;
  emit(out, j);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classical group characters, factorization identities and plane partition counts", "charlab"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a character at a point or at the principal specialization");
  eval->add_option("--family", ev.family, "gl, so-odd, sp, o-even or so-even")->required();
  eval->add_option("--shape", ev.shape, "comma separated parts, a/2 for half-integers")->required();
  eval->add_option("--vars", ev.vars, "number of variables")->required();
  auto* at = eval->add_option("--at", ev.at, "comma separated rational coordinates");
  auto* principal = eval->add_flag("--principal", ev.principal, "x_h = q^h with q -> 1");
  eval->add_flag("--negate", ev.negate, "x_h = -q^(h-1) instead");
  at->excludes(principal);
  eval->callback([&] {
    if (ev.at.empty() && !ev.principal) throw CLI::ValidationError("eval", "one of --at or --principal is required");
  });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify a factorization identity");
  verify->add_option("--identity", va.identity, "thm1, thm2, thm3, thm4, uniform15, uniform65, eq13 or eq14")->required();
  verify->add_option("--m", va.m)->required();
  verify->add_option("--n", va.n)->required();
  verify->add_option("--mode", va.mode, "symbolic or random")->capture_default_str();
  verify->add_option("--trials", va.trials)->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();

  VerifyArgs la;
  auto* lemma = app.add_subcommand("lemma", "Verify one of the subset sum lemmas");
  lemma->add_option("--which", la.which, "1, 2 or 3")->required();
  lemma->add_option("--N", la.N)->required();
  lemma->add_option("--mode", la.mode, "symbolic or random")->capture_default_str();
  lemma->add_option("--trials", la.trials)->capture_default_str();
  lemma->add_option("--seed", la.seed)->capture_default_str();

  CountArgs ca;
  auto* countc = app.add_subcommand("count", "Count plane partitions in a symmetry class");
  countc->add_option("--family", ca.family, "pp, spp, tcpp or spp-star")->required();
  countc->add_option("--m", ca.m, "the box height is 2m")->required();
  countc->add_option("--n", ca.n, "the base is n x n");
  countc->add_option("--b", ca.b, "pp base rows");
  countc->add_option("--c", ca.c, "pp base columns");
  countc->add_option("--methods", ca.methods, "bruteforce, character, product")->delimiter(',');

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Draw the lozenge tiling of a plane partition as SVG");
  render->add_option("--family", ra.family)->capture_default_str();
  render->add_option("--m", ra.m, "the box height is 2m")->required();
  render->add_option("--n", ra.n, "the base is n x n")->required();
  render->add_option("--index", ra.index, "position in enumeration order")->required();
  render->add_option("--out", ra.out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(ev, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*lemma) return cmd_lemma(la, out, err);
    if (*countc) return cmd_count(ca, out, err);
    return cmd_render(ra, out, err);
  } catch (const SingularDenominator& e) {
    err << "error: " << e.what() << "\nhint: the denominator vanishes at this point; use --principal for values at 1\n";
    return kSingular;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\nhint: use --mode random\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace charlab
