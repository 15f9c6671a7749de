#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "golod/corpus.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/koszul.hpp"
#include "golod/parse.hpp"
#include "golod/poincare.hpp"
#include "golod/resolution.hpp"
#include "golod/serialize.hpp"
#include "golod/session.hpp"

namespace golodkit {
namespace {

using namespace golod;

struct Options {
  std::string session_path;
  std::string ring_text;
  std::string weights_text;
  std::string order = "grevlex";
  std::string L;
  bool json = false;
  std::optional<int> homological;
  std::optional<int> internal;
  std::optional<int> k;
  std::uint64_t seed = kCorpusSeed;
  std::size_t n = 5;
  std::size_t trials = 20;
  std::vector<std::string> operands;
};

MonomialOrder parse_order(const std::string& text) {
  if (text == "grevlex") return {};
  if (text.rfind("elim:", 0) == 0) {
    int block = std::stoi(text.substr(5));
    if (block < 0) throw DomainError("elimination block must be non-negative");
    return {OrderKind::BlockElimination, static_cast<std::size_t>(block)};
  }
  throw DomainError("unknown order '" + text + "' (grevlex or elim:<k>)");
}

Ideal remap(const Ideal& I, const RingPtr& target) {
  std::vector<std::size_t> identity(target->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(target, identity));
  return Ideal(target, std::move(gens));
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

class Env {
 public:
  Env(Options opt, std::ostream& out) : opt_(std::move(opt)), out_(out) {
    if (!opt_.session_path.empty()) {
      session_ = load_session(opt_.session_path);
    } else if (!opt_.ring_text.empty()) {
      std::string text = "ring " + opt_.ring_text;
      if (!opt_.weights_text.empty()) text += " weights " + opt_.weights_text;
      session_ = parse_session(text);
    }
    MonomialOrder order = parse_order(opt_.order);
    if (session_.ring && !(order == session_.ring->order())) {
      RingPtr target = session_.ring->with_order(order);
      for (auto& [name, I] : session_.ideals) I = remap(I, target);
      session_.ring = target;
    }
  }

  const Options& opt() const { return opt_; }
  std::ostream& out() { return out_; }

  const std::string& operand(std::size_t i) const {
    if (i >= opt_.operands.size()) throw DomainError("missing operand " + std::to_string(i + 1));
    return opt_.operands[i];
  }

  void expect_operands(std::size_t n) const {
    if (opt_.operands.size() != n)
      throw DomainError("expected " + std::to_string(n) + " operand(s), got " +
                        std::to_string(opt_.operands.size()));
  }

  /// A session ideal name, or an inline generator list in the session ring.
  Ideal ideal(const std::string& arg) const {
    if (session_.has_ideal(arg)) return session_.ideal(arg);
    if (!session_.ring) throw DomainError("unknown ideal '" + arg + "' (no --session or --ring given)");
    Ideal I = Ideal::parse(session_.ring, arg);
    if (!I.is_homogeneous()) throw NotHomogeneous("ideal (" + arg + ") is not homogeneous");
    return I;
  }

  /// A session graph name, cycle:N, path:N, complete:N, or a graph file.
  Graph graph(const std::string& arg) const {
    for (const auto& [name, G] : session_.graphs)
      if (name == arg) return G;
    auto colon = arg.find(':');
    if (colon != std::string::npos) {
      std::string kind = arg.substr(0, colon);
      std::size_t n = std::stoul(arg.substr(colon + 1));
      if (kind == "cycle") return Graph::cycle(n);
      if (kind == "path") return Graph::path(n);
      if (kind == "complete") return Graph::complete(n);
    }
    return Graph::parse(read_text_file(arg));
  }

  RingPtr ring_for_graph(const Graph& G) const {
    if (session_.ring && session_.ring->size() >= G.size()) return session_.ring;
    return nullptr;
  }

  int k_or(int fallback) const { return opt_.k.value_or(fallback); }

  std::optional<KoszulBounds> koszul_bounds(const Ideal& I) const {
    if (!opt_.homological && !opt_.internal) return std::nullopt;
    KoszulBounds b = default_koszul_bounds(I);
    if (opt_.homological) b.l_max = static_cast<std::size_t>(positive(*opt_.homological, "--homological"));
    if (opt_.internal) b.d_max = positive(*opt_.internal, "--internal");
    return b;
  }

  PoincareBounds poincare_bounds() const {
    PoincareBounds b;
    if (opt_.homological) b.i_max = static_cast<std::size_t>(positive(*opt_.homological, "--homological"));
    if (opt_.internal) b.d_max = positive(*opt_.internal, "--internal");
    return b;
  }

  /// Prints JSON or text; the JSON object gains the command name.
  void emit(const std::string& command, Json j, const std::string& text) {
    if (opt_.json) {
      j["command"] = command;
      out_ << dump(j);
    } else {
      out_ << text;
    }
  }

 private:
  static int positive(int v, const char* flag) {
    if (v < 0) throw DomainError(std::string(flag) + " must be non-negative");
    return v;
  }

  Options opt_;
  std::ostream& out_;
  Session session_;
};

std::string describe_partial(const Ideal& I, const LabelledPartial& p) {
  return "d(" + I.generators()[p.generator].to_string() + ")/d" + I.ring()->names()[p.variable] + " = " +
         p.value.to_string();
}

std::string checks_text(const std::vector<NamedCheck>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
    passed += c.passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

bool all_passed(const std::vector<NamedCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

// --- commands --------------------------------------------------------------

int cmd_check_strongly_golod(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  StronglyGolodReport r = strongly_golod(I);
  std::ostringstream os;
  os << "I = " << paren(I.to_string()) << "\n";
  os << "strongly Golod: " << (r.verdict ? "yes" : "no") << " (" << r.products_checked
     << " products of partials checked)\n";
  if (r.witness) {
    os << "WITNESS  p = " << describe_partial(I, r.witness->first) << "\n";
    os << "         q = " << describe_partial(I, r.witness->second) << "\n";
    os << "         p*q = " << (r.witness->first.value * r.witness->second.value).to_string()
       << " is not in I; normal form " << r.witness->remainder.to_string() << "\n";
  }
  env.emit("check-strongly-golod", {{"ideal", to_json(I)}, {"report", to_json(r)}}, os.str());
  return r.verdict ? kExitOk : kExitNegative;
}

/// Results are printed with minimal generators.
int ideal_result(Env& env, const std::string& command, const Ideal& raw, Json extra = Json::object()) {
  Ideal result = minimalize(raw);
  extra["result"] = to_json(result);
  env.emit(command, std::move(extra), paren(result.to_string()) + "\n");
  return kExitOk;
}

int cmd_derivative_ideal(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  return ideal_result(env, "derivative-ideal", derivative_ideal(I), {{"ideal", to_json(I)}});
}

int cmd_power(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  int k = env.k_or(2);
  return ideal_result(env, "power", power(I, k), {{"ideal", to_json(I)}, {"k", k}});
}

int symbolic_result(Env& env, const std::string& command, const Ideal& I, int k, const SymbolicPowerResult& r) {
  Ideal result = minimalize(r.ideal);
  Json j{{"ideal", to_json(I)}, {"k", k}, {"result", to_json(result)}, {"saturation_exponent", r.exponent}};
  std::string text = paren(result.to_string()) + "\n";
  if (r.exponent > 0) text += "saturation exponent: " + std::to_string(r.exponent) + "\n";
  env.emit(command, std::move(j), text);
  return kExitOk;
}

int cmd_symbolic_power(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  int k = env.k_or(2);
  SymbolicPowerSpec spec;
  spec.k = k;
  if (!env.opt().L.empty()) {
    spec.mode = SymbolicMode::UserL;
    spec.L = env.ideal(env.opt().L);
  } else if (I.is_monomial() && MonomialIdeal::from_ideal(I).is_squarefree()) {
    spec.mode = SymbolicMode::MonomialSquarefree;
  } else {
    throw DomainError("symbolic powers of this ideal need --L <ideal> (or use saturated-power)");
  }
  return symbolic_result(env, "symbolic-power", I, k, symbolic_power(I, spec));
}

int cmd_saturated_power(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  int k = env.k_or(2);
  return symbolic_result(env, "saturated-power", I, k, saturated_power(I, k));
}

int binary(Env& env, const std::string& command, const std::function<Ideal(const Ideal&, const Ideal&)>& op) {
  env.expect_operands(2);
  Ideal I = env.ideal(env.operand(0));
  Ideal J = env.ideal(env.operand(1));
  return ideal_result(env, command, op(I, J), {{"I", to_json(I)}, {"J", to_json(J)}});
}

int cmd_colon(Env& env) {
  env.expect_operands(2);
  Ideal I = env.ideal(env.operand(0));
  Ideal J = env.ideal(env.operand(1));
  Ideal C = minimalize(colon(I, J));
  bool condition = check_colon_condition(I, J);
  std::string text = paren(C.to_string()) + "\n" + "I : J = I : J^2: " + (condition ? "yes" : "no") + "\n";
  env.emit("colon", {{"I", to_json(I)}, {"J", to_json(J)}, {"result", to_json(C)}, {"colon_condition", condition}},
           text);
  return kExitOk;
}

int cmd_add_prime_power(Env& env) {
  env.expect_operands(2);
  Ideal I = env.ideal(env.operand(0));
  Ideal P = env.ideal(env.operand(1));
  int k = env.k_or(2);
  PrimePowerSum r = add_prime_power(I, P, k);
  r.ideal = minimalize(r.ideal);
  std::string text = paren(r.ideal.to_string()) + "\n";
  if (r.derivative_in_prime) text += std::string("d(I) in P: ") + (*r.derivative_in_prime ? "yes" : "no") + "\n";
  Json j = to_json(r);
  j["I"] = to_json(I);
  j["P"] = to_json(P);
  j["k"] = k;
  env.emit("add-prime-power", std::move(j), text);
  return kExitOk;
}

int cmd_vertex_cover_ideal(Env& env) {
  env.expect_operands(1);
  Graph G = env.graph(env.operand(0));
  MonomialIdeal I = vertex_cover_ideal(G, env.ring_for_graph(G));
  env.emit("vertex-cover-ideal",
           {{"vertices", G.size()}, {"edges", G.edges().size()}, {"result", to_json(I)}},
           paren(I.to_string()) + "\n");
  return kExitOk;
}

int cmd_odd_cycle_suite(Env& env) {
  std::size_t n = env.opt().n;
  if (!env.opt().operands.empty()) n = std::stoul(env.operand(0));
  auto checks = odd_cycle_suite(n, static_cast<unsigned>(env.k_or(3)));
  env.emit("odd-cycle-suite", {{"n", n}, {"checks", to_json(checks)}, {"passed", all_passed(checks)}},
           checks_text(checks));
  return all_passed(checks) ? kExitOk : kExitNegative;
}

MonomialIdeal monomial(Env& env, std::size_t i) { return MonomialIdeal::from_ideal(env.ideal(env.operand(i))); }

int cmd_squarefree_symbolic(Env& env) {
  env.expect_operands(1);
  MonomialIdeal I = monomial(env, 0);
  int k = env.k_or(2);
  if (k < 1) throw DomainError("--k must be at least 1");
  MonomialIdeal S = squarefree_symbolic_power(I, static_cast<unsigned>(k));
  env.emit("squarefree-symbolic", {{"ideal", to_json(I)}, {"k", k}, {"result", to_json(S)}},
           paren(S.to_string()) + "\n");
  return kExitOk;
}

int cmd_integral_closure(Env& env) {
  env.expect_operands(1);
  MonomialIdeal I = monomial(env, 0);
  IntegralClosure c = integral_closure(I);
  std::ostringstream os;
  os << paren(c.ideal.to_string()) << "\n";
  for (const auto& w : c.witnesses) {
    os << "  " << I.ring()->monomial_to_string(w.u) << ": u^" << w.r << " divisible by";
    for (const auto& f : w.factors) os << " " << I.ring()->monomial_to_string(f);
    os << "\n";
  }
  Json j = to_json(c);
  j["input"] = to_json(I);
  env.emit("integral-closure", std::move(j), os.str());
  return kExitOk;
}

int cmd_primary_components(Env& env) {
  env.expect_operands(1);
  MonomialIdeal I = monomial(env, 0);
  PrimaryDecomposition d = irreducible_decomposition(I);
  auto comps = minimal_primary_components(I);
  std::ostringstream os;
  os << "minimal primary components:\n";
  Json minimal = Json::array();
  for (const auto& c : comps) {
    std::string prime;
    for (std::size_t i = 0; i < I.ring()->size(); ++i)
      if (c.prime >> i & 1u) prime += (prime.empty() ? "" : ", ") + I.ring()->names()[i];
    os << "  P = (" << prime << "): (" << c.ideal.to_string() << ")"
       << (strongly_golod_monomial(c.ideal).verdict ? "  strongly Golod" : "") << "\n";
    minimal.push_back({{"prime", prime}, {"component", to_json(c.ideal)},
                       {"strongly_golod", strongly_golod_monomial(c.ideal).verdict}});
  }
  os << "irreducible components:\n";
  for (const auto& q : d.irreducible) os << "  (" << q.to_string() << ")\n";
  Json j = to_json(d);
  j["input"] = to_json(I);
  j["minimal"] = std::move(minimal);
  env.emit("primary-components", std::move(j), os.str());
  return kExitOk;
}

int cmd_betti(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  Resolution res = minimal_free_resolution(I);
  BettiTable t = betti_table(res);
  Json j{{"ideal", to_json(I)}, {"betti", to_json(t)}, {"resolution", to_json(res)}};
  env.emit("betti", std::move(j), t.to_text());
  return kExitOk;
}

int cmd_koszul_homology(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  HomologySummary h = koszul_homology(I, env.koszul_bounds(I));
  std::ostringstream os;
  os << "window: l <= " << h.bounds.l_max << ", d <= " << h.bounds.d_max << "\n";
  for (const auto& r : h.records) {
    os << "H_" << r.l << "(R)_" << r.d << ": dim " << r.dim << "\n";
    for (const auto& c : r.cycles) os << "    " << c << "\n";
  }
  if (h.truncated) os << "TRUNCATED: nonzero homology at the window boundary\n";
  env.emit("koszul-homology", {{"ideal", to_json(I)}, {"homology", to_json(h)}}, os.str());
  return kExitOk;
}

int cmd_trivial_multiplication(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  TrivialMultiplicationReport r = trivial_multiplication_check(I, env.koszul_bounds(I));
  std::ostringstream os;
  os << "trivial multiplication: " << (r.verdict ? "yes" : "no") << " (" << r.pairs_checked << " pairs checked, "
     << r.pairs_beyond_window << " beyond the window)\n";
  if (r.failing_pair) {
    const auto& p = *r.failing_pair;
    os << "WITNESS  z" << p.index1 << " in H_" << p.l1 << "(R)_" << p.d1 << " times z" << p.index2 << " in H_" << p.l2
       << "(R)_" << p.d2 << " is not a boundary: " << p.product << "\n";
  }
  if (r.truncated) os << "TRUNCATED: homology window was cut off\n";
  env.emit("trivial-multiplication", {{"ideal", to_json(I)}, {"report", to_json(r)}}, os.str());
  return r.verdict ? kExitOk : kExitNegative;
}

std::string verdict_text(const GolodVerdict& v, bool series) {
  std::ostringstream os;
  if (series) {
    os << "Serre bound: " << v.bound.to_string() << "\n";
    os << "actual:      " << v.actual.to_string() << "\n";
  }
  auto row = [](const std::vector<std::int64_t>& xs) {
    std::ostringstream r;
    for (auto x : xs) r << " " << x;
    return r.str();
  };
  os << "totals (bound): " << row(v.bound.totals()) << "\n";
  os << "totals (actual):" << row(v.actual.totals()) << "\n";
  os << "status: " << to_string(v.status) << " (i <= " << v.i_max << ", d <= " << v.d_max << ")\n";
  if (v.first_discrepancy) {
    const auto& d = *v.first_discrepancy;
    os << "WITNESS  coefficient of t^" << d.i << " u^" << d.d << ": bound " << d.bound << ", actual " << d.actual
       << "\n";
  }
  if (v.first_total_discrepancy) {
    const auto& d = *v.first_total_discrepancy;
    os << "first total discrepancy at t^" << d.i << ": bound " << d.bound << ", actual " << d.actual << "\n";
  }
  if (v.homology_truncated) os << "note: Koszul homology window was truncated\n";
  if (v.actual_boundary_nonzero) os << "note: nonzero Tor at d = d_max; totals may be incomplete\n";
  if (!v.minimal_presentation)
    os << "note: I contains a linear form, so the bound is not the Serre bound of R\n";
  return os.str();
}

int cmd_poincare(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  GolodVerdict v = golod_verdict(I, env.poincare_bounds());
  env.emit("poincare", {{"ideal", to_json(I)}, {"verdict", to_json(v)}}, verdict_text(v, true));
  return kExitOk;
}

int cmd_golod_verdict(Env& env) {
  env.expect_operands(1);
  Ideal I = env.ideal(env.operand(0));
  GolodVerdict v = golod_verdict(I, env.poincare_bounds());
  env.emit("golod-verdict", {{"ideal", to_json(I)}, {"verdict", to_json(v)}}, verdict_text(v, false));
  return v.status == GolodStatus::NotGolod ? kExitNegative : kExitOk;
}

int cmd_worked_examples(Env& env) {
  auto checks = worked_examples(env.opt().seed);
  env.emit("worked-examples", {{"checks", to_json(checks)}, {"passed", all_passed(checks)}}, checks_text(checks));
  return all_passed(checks) ? kExitOk : kExitNegative;
}

/// Random graphs on n vertices with an odd cycle: does (I^(2))^2 ⊆ I^3 hold
/// for the vertex cover ideal I?
int cmd_odd_cycle_graph_search(Env& env) {
  const std::size_t n = env.opt().n;
  if (n < 3 || n > 10) throw DomainError("--n must be between 3 and 10");
  std::mt19937_64 rng(env.opt().seed);
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i + 1, j + 1);
  Json results = Json::array();
  std::ostringstream os;
  std::size_t tested = 0, holds = 0;
  for (std::size_t t = 0; t < env.opt().trials; ++t) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : all)
      if (rng() % 2) edges.push_back(e);
    Graph G(n, edges);
    if (!G.has_odd_cycle()) continue;
    MonomialIdeal I = vertex_cover_ideal(G);
    MonomialIdeal S2 = squarefree_symbolic_power(I, 2);
    bool ok = power(I, 3).contains(power(S2, 2));
    ++tested;
    holds += ok;
    Json edge_list = Json::array();
    for (auto [i, j] : G.edges()) edge_list.push_back(Json::array({i + 1, j + 1}));
    results.push_back({{"edges", std::move(edge_list)}, {"contained", ok}});
    if (!ok) os << "NOT CONTAINED for graph:\n" << G.to_string();
  }
  os << holds << "/" << tested << " graphs with an odd cycle satisfy (I^(2))^2 in I^3\n";
  env.emit("odd-cycle-graph-search",
           {{"n", n}, {"seed", env.opt().seed}, {"tested", tested}, {"contained", holds}, {"graphs", std::move(results)}},
           os.str());
  return holds == tested ? kExitOk : kExitNegative;
}

/// Golod verdicts for products of random proper monomial ideals in three
/// variables. Reports per-instance results only.
int cmd_product_golod_search(Env& env) {
  RingPtr ring = corpus_ring(3);
  std::mt19937_64 rng(env.opt().seed);
  auto random_ideal = [&] {
    std::vector<Monomial> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t g = 0; g < count; ++g) {
      Degree d = 1 + static_cast<Degree>(rng() % 2);
      auto monos = ring->monomials_of_degree(d);
      gens.push_back(monos[rng() % monos.size()]);
    }
    return MonomialIdeal(ring, std::move(gens)).to_ideal();
  };
  Json results = Json::array();
  std::ostringstream os;
  std::size_t golod = 0;
  for (std::size_t t = 0; t < env.opt().trials; ++t) {
    Ideal I = random_ideal(), J = random_ideal();
    Ideal P = product(I, J);
    GolodVerdict v = golod_verdict(P, env.poincare_bounds());
    golod += v.status == GolodStatus::GolodUpToTruncation;
    os << paren(I.to_string()) << " * " << paren(J.to_string()) << ": " << to_string(v.status) << "\n";
    results.push_back({{"I", I.to_string()}, {"J", J.to_string()}, {"status", to_string(v.status)}});
  }
  os << golod << "/" << env.opt().trials << " products GOLOD-up-to-truncation\n";
  env.emit("product-golod-search", {{"seed", env.opt().seed}, {"results", std::move(results)}}, os.str());
  return kExitOk;
}

const std::map<std::string, std::pair<std::function<int(Env&)>, std::string>>& commands() {
  static const std::map<std::string, std::pair<std::function<int(Env&)>, std::string>> table{
      {"check-strongly-golod", {cmd_check_strongly_golod, "decide d(I)^2 in I; exit 1 with a witness if not"}},
      {"derivative-ideal", {cmd_derivative_ideal, "ideal generated by all partial derivatives"}},
      {"power", {cmd_power, "I^k (--k, default 2)"}},
      {"symbolic-power", {cmd_symbolic_power, "I^k : L^inf with --L, or squarefree monomial mode"}},
      {"saturated-power", {cmd_saturated_power, "I^k : m^inf"}},
      {"colon", {cmd_colon, "I : J and whether I : J = I : J^2"}},
      {"intersect",
       {[](Env& e) { return binary(e, "intersect", [](const Ideal& a, const Ideal& b) { return intersect(a, b); }); },
        "I ∩ J"}},
      {"sum", {[](Env& e) { return binary(e, "sum", [](const Ideal& a, const Ideal& b) { return sum(a, b); }); },
               "I + J"}},
      {"product",
       {[](Env& e) { return binary(e, "product", [](const Ideal& a, const Ideal& b) { return product(a, b); }); },
        "I J"}},
      {"add-prime-power", {cmd_add_prime_power, "I + P^k for a prime P containing I"}},
      {"vertex-cover-ideal", {cmd_vertex_cover_ideal, "cover ideal of a graph (name, cycle:N, path:N, file)"}},
      {"odd-cycle-suite", {cmd_odd_cycle_suite, "symbolic power checks for the n-cycle (--n)"}},
      {"squarefree-symbolic", {cmd_squarefree_symbolic, "symbolic power of a squarefree monomial ideal"}},
      {"integral-closure", {cmd_integral_closure, "integral closure of a monomial ideal, with witnesses"}},
      {"primary-components", {cmd_primary_components, "minimal primary and irreducible components"}},
      {"betti", {cmd_betti, "graded Betti table of S/I"}},
      {"koszul-homology", {cmd_koszul_homology, "bigraded Koszul homology of S/I"}},
      {"trivial-multiplication", {cmd_trivial_multiplication, "products of Koszul cycles are boundaries"}},
      {"poincare", {cmd_poincare, "Serre bound and actual Poincaré series"}},
      {"golod-verdict", {cmd_golod_verdict, "compare both series; exit 1 on NOT-GOLOD"}},
      {"worked-examples", {cmd_worked_examples, "run the built-in suite of worked examples"}},
      {"odd-cycle-graph-search", {cmd_odd_cycle_graph_search, "random graphs: (I^(2))^2 in I^3?"}},
      {"product-golod-search", {cmd_product_golod_search, "Golod verdicts for random product ideals"}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"golodkit: strongly Golod ideals, Koszul homology and Poincaré series", "golodkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--session", opt.session_path, "session file declaring the ring, ideals and graphs");
  app.add_option("--ring", opt.ring_text, "variables for inline ideals, e.g. x,y,z");
  app.add_option("--weights", opt.weights_text, "weights for --ring, e.g. 1,1,2");
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_option("--order", opt.order, "monomial order: grevlex or elim:<k>");
  app.add_option("--homological", opt.homological, "homological bound");
  app.add_option("--internal", opt.internal, "internal degree bound");
  app.add_option("--k", opt.k, "exponent");
  app.add_option("--L", opt.L, "ideal L for symbolic powers");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--n", opt.n, "number of vertices");
  app.add_option("--trials", opt.trials, "number of random trials");

  std::string chosen;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->fallthrough();
    sub->add_option("operands", opt.operands, "ideal or graph names, or inline generator lists");
    sub->callback([&chosen, n = name] { chosen = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << " (see --help for the list of commands)\n";
    return kExitError;
  }

  try {
    Env env(opt, out);
    return commands().at(chosen).first(env);
  } catch (const std::exception& e) {
    if (opt.json) {
      out << dump(Json{{"command", chosen}, {"error", e.what()}});
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace golodkit
