/* SPDX-License-Identifier: Apache-2.0 */
// ipart: command-line front end. With no verb it reads commands from stdin, one per line.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipart/cuts.hpp"
#include "ipart/error.hpp"
#include "ipart/integer_part.hpp"
#include "ipart/kpoly.hpp"
#include "ipart/parse.hpp"
#include "ipart/sections.hpp"
#include "ipart/verify.hpp"
#include "json.hpp"

using namespace ipart;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Config {
  std::size_t rank = 1;
  std::string coeff = "alg";
  std::string order = "10";
  std::uint64_t seed = 7;
  bool json = false;

  ParseOptions parse_options() const { return {rank, coeff == "rat" ? CoeffField::Rational : CoeffField::Algebraic}; }
};

// Thrown for bad command-line input that is not a library error.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  explicit Runner(const Config& cfg) : cfg_(cfg) {}

  HahnElem expr(const std::string& text) const {
    current_ = text;
    HahnElem x = parse_expr(text, cfg_.parse_options());
    current_.clear();
    return x;
  }

  std::vector<HahnElem> file(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::vector<HahnElem> out;
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(expr(line));
    }
    return out;
  }

  ExponentVec bound(const std::string& text) const {
    std::string t = text;
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<mpq_class> coords;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part.erase(0, part.find_first_not_of(' '));
      part.erase(part.find_last_not_of(' ') + 1);
      coords.push_back(parse_rational(part));
    }
    if (coords.size() == 1) return ExponentVec::unit(cfg_.rank, 0, coords[0]);
    if (coords.size() != cfg_.rank) throw Usage("order needs 1 or " + std::to_string(cfg_.rank) + " coordinates");
    return ExponentVec(std::move(coords));
  }

  // Prints a key/value result, as text lines or as one JSON object.
  void emit(const std::string& verb, const std::vector<std::pair<std::string, std::string>>& fields) const {
    if (cfg_.json) {
      json j;
      j["verb"] = verb;
      for (const auto& [k, v] : fields) j[k] = v;
      std::cout << j.dump() << "\n";
      return;
    }
    for (const auto& [k, v] : fields) std::cout << (fields.size() == 1 || k.empty() ? "" : k + ": ") << v << "\n";
  }

  int laws(const std::string& verb, const LawReport& r) const {
    if (cfg_.json) {
      std::cout << r.to_jsonl();
    } else {
      for (const auto& l : r.laws())
        std::cout << l.law << ": " << (l.passed ? "pass" : "FAIL") << " (" << l.checks << " checks)"
                  << (l.counterexample ? "  counterexample: " + *l.counterexample : "") << "\n";
    }
    (void)verb;
    return r.passed() ? kPass : kFail;
  }

  const std::string& current() const { return current_; }
  const Config& cfg() const { return cfg_; }

 private:
  const Config& cfg_;
  mutable std::string current_;
};

std::string sign_word(int s) { return s < 0 ? "-" : s > 0 ? "+" : "0"; }

PolyFamilySpec family_spec(const Runner& run, unsigned degree, long height, const std::vector<std::string>& gens) {
  PolyFamilySpec spec;
  spec.degree_bound = degree;
  spec.height_bound = height;
  spec.rank = run.cfg().rank;
  for (const auto& g : gens) spec.coeff_generators.push_back(run.expr(g));
  if (degree < 1 || height < 1) throw Usage("--degree and --height must be positive");
  return spec;
}

KBound kbound(const Runner& run, const std::string& text) {
  if (text == "-inf") return KBound::neg_inf();
  if (text == "inf" || text == "+inf") return KBound::pos_inf();
  return KBound::at(run.expr(text));
}

bool is_usage_kind(ErrorKind k) {
  return k == ErrorKind::SyntaxError || k == ErrorKind::UnsupportedExponent || k == ErrorKind::UnknownVariable ||
         k == ErrorKind::InvalidDescriptor || k == ErrorKind::CoefficientFieldRestricted || k == ErrorKind::UnknownPredicate;
}

int run_command(std::vector<std::string> args, bool repl);

int repl() {
  std::string line;
  int status = kPass;
  while (std::getline(std::cin, line)) {
    std::vector<std::string> words;
    std::string w;
    bool quoted = false, any = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
        any = true;
      } else if (!quoted && (c == ' ' || c == '\t')) {
        if (any) words.push_back(w);
        w.clear();
        any = false;
      } else {
        w += c;
        any = true;
      }
    }
    if (any) words.push_back(w);
    if (words.empty() || words[0].front() == '#') continue;
    // unquoted "floor t^-1 + 1/2": everything up to the first flag is one expression
    static const std::vector<std::string> one_expr = {"eval", "floor", "floor-dense", "val", "expand"};
    if (line.find('"') == std::string::npos && words.size() > 2 &&
        std::find(one_expr.begin(), one_expr.end(), words[0]) != one_expr.end()) {
      std::vector<std::string> merged{words[0], ""};
      std::size_t k = 1;
      for (; k < words.size() && words[k].rfind("--", 0) != 0; ++k) merged[1] += (merged[1].empty() ? "" : " ") + words[k];
      merged.insert(merged.end(), words.begin() + k, words.end());
      words = std::move(merged);
    }
    if (words[0] == "quit" || words[0] == "exit") break;
    status = std::max(status, run_command(words, true));
  }
  return status;
}

int run_command(std::vector<std::string> args, bool in_repl) {
  static const std::vector<std::string> verbs = {"eval", "cmp", "floor", "floor-dense", "val", "expand", "root", "sturm",
                                                 "vgs-build", "vgs-check", "rfs-check", "ipcheck", "typecmp", "epsilon",
                                                 "auto", "demo", "verify"};
  // in the REPL a bare expression is evaluated
  if (in_repl && std::find(verbs.begin(), verbs.end(), args[0]) == verbs.end() && args[0].front() != '-') {
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    args = {"eval", joined};
  }

  CLI::App app{"Exact arithmetic for integer parts of non-archimedean fields", "ipart"};
  app.require_subcommand(in_repl ? 1 : 0, 1);
  app.fallthrough();
  Config cfg;
  app.add_option("--rank", cfg.rank, "number of variables t1..tn")->check(CLI::Range(1, 8));
  app.add_option("--coeff", cfg.coeff, "coefficient field")->check(CLI::IsMember({"rat", "alg"}));
  app.add_option("--order", cfg.order, "expansion bound: q or (q1,...,qn)");
  app.add_option("--seed", cfg.seed, "seed for verification suites");
  app.add_flag("--json", cfg.json, "JSON-lines output");
  Runner run(cfg);
  int status = kPass;

  std::string a1, a2, file, desc, apply_text, m_text, suite;
  std::vector<std::string> inputs, gens, probes, extras, samples;
  unsigned degree = 1, root_n = 2;
  long height = 1, radius = 1;
  bool escalate = false;
  std::string candidate = "canonical", lo_text = "-inf", hi_text = "inf";

  auto* eval = app.add_subcommand("eval", "normalize and print expressions");
  eval->add_option("expr", inputs, "expressions");
  eval->add_option("--file", file, "one expression per line");
  eval->callback([&] {
    std::vector<HahnElem> xs = file.empty() ? std::vector<HahnElem>{} : run.file(file);
    for (const auto& t : inputs) xs.push_back(run.expr(t));
    for (const auto& x : xs) run.emit("eval", {{"value", x.to_string()}});
  });

  auto* cmp = app.add_subcommand("cmp", "compare two elements");
  cmp->add_option("x", a1)->required();
  cmp->add_option("y", a2)->required();
  cmp->callback([&] {
    const int c = compare(run.expr(a1), run.expr(a2));
    run.emit("cmp", {{"result", c < 0 ? "<" : c > 0 ? ">" : "="}});
  });

  auto* fl = app.add_subcommand("floor", "round down into the canonical integer part");
  fl->add_option("x", a1)->required();
  fl->callback([&] {
    const FloorResult f = ip_floor(run.expr(a1));
    if (cfg.json) {
      run.emit("floor", {{"floor", f.floor.to_string()}, {"remainder", f.remainder.to_string()}});
    } else {
      std::cout << f.floor.to_string() << "\nremainder " << f.remainder.to_string() << "\n";
    }
  });

  auto* fd = app.add_subcommand("floor-dense", "floor through the dense subfield with exponents in (1/m)Z");
  fd->add_option("x", a1)->required();
  fd->add_option("--m", m_text, "ramification (default: the least one that works)");
  fd->callback([&] {
    const HahnElem x = run.expr(a1);
    const long m = m_text.empty() ? required_ramification(x) : std::stol(m_text);
    const DenseFloorTrace t = ip_floor_via_dense_trace(x, m);
    run.emit("floor-dense", {{"m", std::to_string(m)},
                             {"x'", t.x_prime.to_string()},
                             {"i", t.i.to_string()},
                             {"interval", std::to_string(t.interval)},
                             {"floor", t.result.floor.to_string()},
                             {"remainder", t.result.remainder.to_string()}});
  });

  auto* val = app.add_subcommand("val", "natural valuation");
  val->add_option("x", a1)->required();
  val->callback([&] {
    const auto v = valuation(run.expr(a1));
    run.emit("val", {{"valuation", v ? v->to_string() : "inf"}});
  });

  auto* ex = app.add_subcommand("expand", "series terms up to --order");
  ex->add_option("x", a1)->required();
  ex->callback([&] {
    const TruncatedExpansion e = expand(run.expr(a1), run.bound(cfg.order));
    run.emit("expand", {{"expansion", e.to_string()}, {"exact", e.exact ? "true" : "false"}});
  });

  auto* rt = app.add_subcommand("root", "truncated positive n-th root");
  rt->add_option("x", a1)->required();
  rt->add_option("n", root_n, "root index")->check(CLI::PositiveNumber);
  rt->callback([&] {
    const TruncatedExpansion e = nth_root_trunc(run.expr(a1), root_n, run.bound(cfg.order));
    run.emit("root", {{"root", e.to_string()}});
  });

  auto* st = app.add_subcommand("sturm", "count roots in (lo, hi] of c0 + c1 X + ...; coefficients separated by ';'");
  st->add_option("coeffs", a1)->required();
  st->add_option("lo", lo_text);
  st->add_option("hi", hi_text);
  st->callback([&] {
    std::vector<HahnElem> cs;
    std::stringstream ss(a1);
    std::string part;
    while (std::getline(ss, part, ';')) cs.push_back(run.expr(part));
    const KPoly p(cfg.rank, cs);
    const int n = poly_sturm_count(p, kbound(run, lo_text), kbound(run, hi_text));
    run.emit("sturm", {{"poly", p.to_string()}, {"roots", std::to_string(n)}});
  });

  auto* vb = app.add_subcommand("vgs-build", "greedy value group section of an enumeration file");
  vb->add_option("file", file)->required();
  vb->callback([&] {
    const ValueGroupSection s = vgs_build(run.file(file), cfg.rank);
    if (cfg.json) {
      json j;
      j["verb"] = "vgs-build";
      j["generators"] = json::array();
      for (const auto& g : s.generators()) j["generators"].push_back(g.to_string());
      std::cout << j.dump() << "\n";
    } else {
      std::cout << s.to_string() << "\n";
    }
  });

  auto* vc = app.add_subcommand("vgs-check", "build a section and verify it on integral products");
  vc->add_option("file", file)->required();
  vc->add_option("--radius", radius, "exponent box radius")->check(CLI::Range(0, 4));
  vc->callback([&] {
    const ValueGroupSection s = vgs_build(run.file(file), cfg.rank);
    const auto box = integral_products(s, radius);
    std::vector<std::pair<FormalProduct, FormalProduct>> pairs;
    for (const auto& a : box)
      for (const auto& b : box) pairs.emplace_back(a, b);
    status = run.laws("vgs-check", vgs_verify(s, pairs));
  });

  auto* rc = app.add_subcommand("rfs-check", "verify the constant residue section on a sample file");
  rc->add_option("file", file)->required();
  rc->add_option("--extra", extras, "add elements to the candidate section");
  rc->callback([&] {
    std::optional<ResidueCandidate> cand;
    if (!extras.empty()) {
      cand = ResidueCandidate{};
      for (const auto& e : extras) cand->extra.push_back(run.expr(e));
    }
    status = run.laws("rfs-check", rfs_verify(run.file(file), cand));
  });

  auto* ic = app.add_subcommand("ipcheck", "verify integer-part laws on a sample file");
  ic->add_option("file", file)->required();
  ic->add_option("--candidate", candidate)->check(CLI::IsMember({"canonical", "integers"}));
  ic->callback([&] {
    const auto xs = run.file(file);
    std::vector<std::pair<HahnElem, HahnElem>> ring;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) ring.emplace_back(ip_floor(xs[i]).floor, ip_floor(xs[i + 1]).floor);
    status = run.laws("ipcheck", ip_verify(xs, ring, candidate == "canonical" ? canonical_integer_part() : integers_only()));
  });

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--degree", degree, "degree bound")->check(CLI::PositiveNumber);
    sub->add_option("--height", height, "coefficient height bound")->check(CLI::PositiveNumber);
    sub->add_option("--gen", gens, "coefficient generator (repeatable)");
  };

  auto* tc = app.add_subcommand("typecmp", "compare signs of a bounded polynomial family at x and y");
  tc->add_option("x", a1)->required();
  tc->add_option("y", a2)->required();
  add_family(tc);
  tc->callback([&] {
    const TypeComparison c = bounded_type_eq(family_spec(run, degree, height, gens), run.expr(a1), run.expr(a2));
    if (c.equal) {
      run.emit("typecmp", {{"result", "EQUAL"}});
    } else {
      run.emit("typecmp", {{"result", "DIFFERENT"},
                           {"distinguisher", c.distinguisher->poly.to_string()},
                           {"sign_x", sign_word(c.sign_x)},
                           {"sign_y", sign_word(c.sign_y)}});
    }
  });

  auto* ep = app.add_subcommand("epsilon", "radius around x free of family roots");
  ep->add_option("x", a1)->required();
  add_family(ep);
  ep->callback([&] { run.emit("epsilon", {{"eps", eps_witness(family_spec(run, degree, height, gens), run.expr(a1)).to_string()}}); });

  auto* au = app.add_subcommand("auto", "apply an automorphism");
  au->add_option("--desc", desc, "scale:q1,...,qn or moebius:a,c,d[;...]")->required();
  au->add_option("--apply", inputs, "expressions")->required();
  au->callback([&] {
    const AutoDescriptor phi = parse_descriptor(desc);
    for (const auto& t : inputs) run.emit("auto", {{"image", auto_apply(phi, run.expr(t)).to_string()}});
  });

  auto* demo = app.add_subcommand("demo", "demonstrations");
  demo->require_subcommand(1);
  auto* esc = demo->add_subcommand("ip-escape", "find x in I whose image leaves I");
  desc = "moebius:1,1,1";
  esc->add_option("--desc", desc, "automorphism");
  esc->add_option("--probe", probes, "probe elements of I (default t1^-1, 1/2*t1^-1)");
  esc->add_flag("--escalate", escalate, "retry with halved leading coefficients");
  esc->callback([&] {
    const AutoDescriptor phi = parse_descriptor(desc);
    std::vector<HahnElem> ps;
    if (probes.empty()) probes = {"t1^-1", "1/2*t1^-1"};
    for (const auto& p : probes) ps.push_back(run.expr(p));
    const EscapeResult r = ip_escape_demo(phi, ps, escalate);
    if (r.witness) {
      run.emit("demo ip-escape", {{"result", "escape"},
                                  {"x", r.witness->x.to_string()},
                                  {"image", r.witness->image.to_string()},
                                  {"remainder", r.witness->remainder.to_string()},
                                  {"probes", std::to_string(r.probes_tried)}});
    } else {
      run.emit("demo ip-escape", {{"result", "invariant"}, {"probes", std::to_string(r.probes_tried)}});
    }
  });
  auto* du = demo->add_subcommand("discrete", "discreteness and unboundedness of a named set");
  du->add_option("predicate", a1, "canonical_I, constants or section_powers")->required();
  du->add_option("--sample", samples, "sample elements")->required();
  du->add_option("--gen", gens, "section enumeration for section_powers");
  du->callback([&] {
    std::vector<HahnElem> xs;
    for (const auto& t : samples) xs.push_back(run.expr(t));
    std::optional<ValueGroupSection> sec;
    if (!gens.empty()) {
      std::vector<HahnElem> e;
      for (const auto& g : gens) e.push_back(run.expr(g));
      sec = vgs_build(e, cfg.rank);
    } else if (a1 == "section_powers") {
      throw Usage("section_powers needs --gen");
    }
    const DiscreteUnboundedResult r = discrete_unbounded_check(a1, xs, sec);
    if (!cfg.json) {
      for (const auto& [x, y] : r.above) std::cout << "above " << x.to_string() << ": " << (y ? y->to_string() : "none") << "\n";
      for (const auto& [m, rad] : r.radius) std::cout << "radius " << m.to_string() << ": " << rad.to_string() << "\n";
    }
    status = run.laws("demo discrete", r.laws);
  });

  auto* ve = app.add_subcommand("verify", "run acceptance suites");
  ve->add_option("suite", suite, "suite name or all")->required();
  ve->callback([&] {
    std::vector<std::string> names;
    if (suite == "all") {
      names = suite_names();
    } else {
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), suite) == known.end()) throw Usage("unknown suite '" + suite + "'");
      names = {suite};
    }
    for (const auto& n : names) {
      const SuiteReport r = run_suite(n, cfg.seed);
      if (cfg.json) {
        std::cout << r.to_json_line() << "\n";
      } else {
        std::cout << n << ": " << r.passed() << "/" << r.cases.size() << " pass" << (r.ok() ? "" : "  FAILED") << "\n";
        for (const auto& c : r.cases)
          if (!c.passed) std::cout << "  fail: " << c.input << " -> " << c.got << "\n";
      }
      std::cout.flush();
      if (!r.ok()) status = kFail;
    }
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (!in_repl && app.get_subcommands().empty()) return repl();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!run.current().empty()) std::cerr << " (in '" << run.current() << "')";
    std::cerr << "\n";
    return is_usage_kind(e.kind()) ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::cout.setf(std::ios::unitbuf);
  return run_command(args, false);
}
