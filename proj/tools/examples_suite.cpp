// Worked examples reproduced exactly; each check recomputes its example from
// scratch so that one failure cannot mask another.

#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/koszul.hpp"
#include "golod/parse.hpp"
#include "golod/poincare.hpp"
#include "golod/resolution.hpp"

namespace golodkit {
namespace {

using namespace golod;

struct Outcome {
  bool passed;
  std::string detail;
};

RingPtr xy() {
  static const RingPtr r = Ring::standard({"x", "y"});
  return r;
}
RingPtr xyz() {
  static const RingPtr r = Ring::standard({"x", "y", "z"});
  return r;
}

Ideal id(const RingPtr& r, const char* gens) { return Ideal::parse(r, gens); }

std::string totals_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

/// J = I^k + (m_1 s_1, ..., m_r s_r) for random generators s_j of I^(k) and
/// random monomials m_j of degree <= 1.
std::vector<Ideal> random_inbetween(const MonomialIdeal& I, const MonomialIdeal& Ik,
                                    const MonomialIdeal& symbolic, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RingPtr& ring = I.ring();
  std::vector<Ideal> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Monomial> gens = Ik.generators();
    std::size_t extra = 1 + rng() % 3;
    for (std::size_t e = 0; e < extra; ++e) {
      Monomial s = symbolic.generators()[rng() % symbolic.size()];
      std::size_t v = rng() % (ring->size() + 1);
      if (v < ring->size()) s = s * ring->variable(v);
      gens.push_back(s);
    }
    out.push_back(MonomialIdeal(ring, std::move(gens)).to_ideal());
  }
  return out;
}

}  // namespace

std::vector<NamedCheck> worked_examples(std::uint64_t seed) {
  std::vector<NamedCheck> checks;
  auto run = [&checks](const std::string& name, const std::function<Outcome()>& body) {
    try {
      Outcome o = body();
      checks.push_back({name, o.passed, o.detail});
    } catch (const std::exception& e) {
      checks.push_back({name, false, std::string("error: ") + e.what()});
    }
  };

  run("derivative-ideal-of-maximal-square", [] {
    Ideal d = derivative_ideal(id(xy(), "x^2, x*y, y^2"));
    return Outcome{d == id(xy(), "x, y"), "d(I) = (" + minimalize(d).to_string() + ")"};
  });
  run("derivative-ideal-of-product-ideal", [] {
    Ideal d = derivative_ideal(id(xyz(), "x*z, y*z"));
    return Outcome{d == Ideal::maximal(xyz()), "d(I) = (" + minimalize(d).to_string() + ")"};
  });
  run("maximal-square-is-strongly-golod", [] {
    return Outcome{strongly_golod(id(xy(), "x^2, x*y, y^2")).verdict, ""};
  });
  run("product-ideal-fails-with-witness-z2", [] {
    auto r = strongly_golod(id(xyz(), "x*z, y*z"));
    bool ok = !r.verdict && r.witness &&
              r.witness->remainder == parse_polynomial(xyz(), "z^2") &&
              r.witness->first.value * r.witness->second.value == parse_polynomial(xyz(), "z^2");
    return Outcome{ok, r.witness ? "remainder " + r.witness->remainder.to_string() : "no witness"};
  });
  run("zero-ideal-is-strongly-golod", [] { return Outcome{strongly_golod(Ideal::zero(xy())).verdict, ""}; });
  run("square-of-complete-intersection", [] {
    Ideal p = power(id(xy(), "x^2, y^2"), 2);
    return Outcome{p == id(xy(), "x^4, x^2*y^2, y^4"), "(" + p.to_string() + ")"};
  });
  run("saturated-square-of-x2-xy", [] {
    auto s = saturated_power(id(xy(), "x^2, x*y"), 2);
    return Outcome{s.ideal == id(xy(), "x^2"), "(" + s.ideal.to_string() + ")"};
  });
  run("colon-condition-holds-for-maximal-ideal", [] {
    return Outcome{check_colon_condition(id(xy(), "x^2, x*y"), id(xy(), "x, y")), ""};
  });
  run("colon-condition-fails-for-one-variable", [] {
    return Outcome{!check_colon_condition(id(xy(), "x^2"), id(xy(), "x")), ""};
  });
  run("prime-power-sum-is-strongly-golod", [] {
    auto s = add_prime_power(id(xyz(), "x^2, x*y, y^2"), Ideal::maximal(xyz()), 3);
    bool ok = strongly_golod(s.ideal).verdict && s.derivative_in_prime.value_or(false);
    return Outcome{ok, "(" + minimalize(s.ideal).to_string() + ")"};
  });
  run("zariski-nagata-membership", [] {
    Ideal P = id(xy(), "x");
    Polynomial f = parse_polynomial(xy(), "x^2*y");
    bool ok = zariski_nagata_membership(f, P, 2) && !zariski_nagata_membership(parse_polynomial(xy(), "x"), P, 2) &&
              !zariski_nagata_membership(f, P, 3);
    return Outcome{ok, ""};
  });
  for (std::size_t n : {3, 5, 7})
    for (const auto& c : odd_cycle_suite(n, 3))
      run("odd-cycle-" + std::to_string(n) + ":" + c.name, [c] { return Outcome{c.passed, c.detail}; });
  for (const auto& c : squarefree_generated_checks(4, 3))
    run("squarefree-4-3:" + c.name, [c] { return Outcome{c.passed, c.detail}; });
  run("inbetween-ideals-of-cycle-5", [seed] {
    MonomialIdeal I = vertex_cover_ideal(Graph::cycle(5));
    MonomialIdeal I2 = power(I, 2);
    MonomialIdeal S1 = squarefree_symbolic_power(I, 1);
    MonomialIdeal S2 = squarefree_symbolic_power(I, 2);
    std::size_t good = 0;
    auto Js = random_inbetween(I, I2, S2, 10, seed);
    for (const auto& J : Js) {
      auto r = check_inbetween(I.to_ideal(), J, 2, S2.to_ideal(), S1.to_ideal());
      if (r.verdict && r.hypothesis_holds && r.sandwich_holds) ++good;
    }
    return Outcome{good == Js.size(), std::to_string(good) + "/" + std::to_string(Js.size()) + " strongly Golod"};
  });
  run("integral-closure-of-x3-y3", [] {
    auto c = integral_closure(MonomialIdeal::from_ideal(id(xy(), "x^3, y^3")));
    return Outcome{c.ideal.to_ideal() == id(xy(), "x^3, x^2*y, x*y^2, y^3"), "(" + c.ideal.to_string() + ")"};
  });
  run("primary-components-of-cone", [] {
    auto comps = minimal_primary_components(MonomialIdeal::from_ideal(id(xyz(), "x^2*z, x*y*z, y^2*z")));
    bool ok = comps.size() == 2;
    std::string detail;
    for (const auto& c : comps) {
      detail += "(" + c.ideal.to_string() + ") ";
      ok = ok && (c.ideal.to_ideal() == id(xyz(), "z") || c.ideal.to_ideal() == id(xyz(), "x^2, x*y, y^2"));
    }
    return Outcome{ok, detail};
  });
  run("betti-numbers-equal-koszul-homology", [] {
    Ideal I = id(xy(), "x^2, x*y, y^2");
    BettiTable b = betti_table(minimal_free_resolution(I));
    HomologySummary h = koszul_homology(I);
    bool ok = b.at(1, 2) == 3 && b.at(2, 3) == 2;
    for (const auto& [key, v] : b.entries())
      if (key.first > 0) ok = ok && h.dim(key.first, key.second) == v;
    return Outcome{ok, ""};
  });
  run("golod-series-of-maximal-square", [] {
    auto v = golod_verdict(id(xy(), "x^2, x*y, y^2"), {4, 8});
    auto tb = v.bound.totals(), ta = v.actual.totals();
    bool ok = v.status == GolodStatus::GolodUpToTruncation && tb == std::vector<std::int64_t>{1, 2, 4, 8, 16} &&
              ta == tb;
    return Outcome{ok, to_string(v.status) + ", totals " + totals_text(tb)};
  });
  run("complete-intersection-is-not-golod", [] {
    auto v = golod_verdict(id(xy(), "x^2, y^2"), {3, 8});
    bool ok = v.status == GolodStatus::NotGolod && v.first_total_discrepancy && v.first_total_discrepancy->i == 3 &&
              v.first_total_discrepancy->bound == 5 && v.first_total_discrepancy->actual == 4;
    return Outcome{ok, to_string(v.status) + ", bound " + totals_text(v.bound.totals()) + " vs actual " +
                           totals_text(v.actual.totals())};
  });
  run("trivial-multiplication-control", [] {
    bool ok = trivial_multiplication_check(id(xy(), "x^2, x*y, y^2")).verdict &&
              !trivial_multiplication_check(id(xy(), "x^2, y^2")).verdict;
    return Outcome{ok, ""};
  });
  return checks;
}

}  // namespace golodkit
