#include <doctest.h>

#include "golod/corpus.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/monomial_ideal.hpp"
#include "golod/parse.hpp"
#include "oracle.hpp"
#include "random_poly.hpp"

using namespace golod;

namespace {

RingPtr xy() { return corpus_ring(2); }
RingPtr xyz() { return corpus_ring(3); }
Ideal id(const RingPtr& r, const char* s) { return Ideal::parse(r, s); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("derivative ideal examples") {
  CHECK(derivative_ideal(id(xy(), "x^2, x*y, y^2")) == id(xy(), "x, y"));
  for (int k = 1; k <= 5; ++k) {
    Ideal xk(xy(), {pow(P(xy(), "x"), k)});
    CHECK(derivative_ideal(xk) == Ideal(xy(), {pow(P(xy(), "x"), k - 1)}));
  }
  CHECK(derivative_ideal(id(xyz(), "x*z, y*z")) == Ideal::maximal(xyz()));
  CHECK_THROWS_AS(derivative_ideal(Ideal::unit(xy())), ImproperIdeal);
  CHECK_THROWS_AS(derivative_ideal(id(xy(), "x + y^2")), NotHomogeneous);
}

TEST_CASE("strongly golod examples") {
  CHECK(strongly_golod(id(xy(), "x^2, x*y, y^2")).verdict);
  auto r = strongly_golod(id(xyz(), "x*z, y*z"));
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->remainder == P(xyz(), "z^2"));
  CHECK(r.witness->first.value * r.witness->second.value == P(xyz(), "z^2"));
  CHECK(r.witness->first.value == P(xyz(), "z"));
  CHECK(r.witness->second.value == P(xyz(), "z"));
  // d(xz)/dx times d(yz)/dy
  CHECK(r.witness->first.generator == 0);
  CHECK(r.witness->first.variable == 0);
  CHECK(r.witness->second.generator == 1);
  CHECK(r.witness->second.variable == 1);
  auto zero = strongly_golod(Ideal::zero(xy()));
  CHECK(zero.verdict);
  CHECK_FALSE(zero.witness);
  CHECK_THROWS_AS(strongly_golod(Ideal::unit(xy())), ImproperIdeal);
}

TEST_CASE("power examples") {
  CHECK(power(Ideal::maximal(xy()), 2) == id(xy(), "x^2, x*y, y^2"));
  auto I = id(xyz(), "x^2 - y*z, x*y");
  CHECK(power(I, 1) == I);
  CHECK(power(id(xy(), "x^2, y^2"), 2) == id(xy(), "x^4, x^2*y^2, y^4"));
  CHECK_THROWS_AS(power(I, 0), DomainError);
}

TEST_CASE("symbolic power examples") {
  auto s = symbolic_power(id(xy(), "x^2, x*y"), {2, SymbolicMode::Saturated, std::nullopt});
  CHECK(s.ideal == id(xy(), "x^2"));
  auto I = id(xyz(), "x^2 - y*z, x*y");
  CHECK(symbolic_power(I, {2, SymbolicMode::UserL, Ideal::unit(xyz())}).ideal == power(I, 2));
  auto C3 = vertex_cover_ideal(Graph::cycle(3), xyz()).to_ideal();
  auto sym = symbolic_power(C3, {2, SymbolicMode::MonomialSquarefree, std::nullopt});
  CHECK(sym.ideal == sum(power(C3, 2), id(xyz(), "x*y*z")));
  CHECK(sym.exponent == 0);
  CHECK_THROWS_AS(symbolic_power(I, {2, SymbolicMode::UserL, Ideal::zero(xyz())}), DomainError);
  CHECK_THROWS_AS(symbolic_power(I, {2, SymbolicMode::UserL, std::nullopt}), DomainError);
  CHECK_THROWS_AS(symbolic_power(I, {2, SymbolicMode::MonomialSquarefree, std::nullopt}), DomainError);
  CHECK_THROWS_AS(symbolic_power(I, {0, SymbolicMode::Saturated, std::nullopt}), DomainError);
}

TEST_CASE("saturated power against brute-force colons") {
  // I^2 : m^t stabilizes by t = 4 here; compare every degree up to 6.
  auto I = id(xy(), "x^2, x*y");
  auto sat = saturated_power(I, 2);
  auto I2 = oracle::gens_of(power(I, 2));
  auto m4 = oracle::gens_of(power(Ideal::maximal(xy()), 4));
  for (Degree d = 0; d <= 6; ++d)
    CHECK(oracle::ideal_dim(oracle::gens_of(sat.ideal), d) == oracle::colon_dim(I2, m4, d));
}

TEST_CASE("colon condition examples") {
  CHECK(check_colon_condition(id(xy(), "x^2, x*y"), Ideal::maximal(xy())));
  CHECK_FALSE(check_colon_condition(id(xy(), "x^2"), id(xy(), "x")));
  CHECK(check_colon_condition(id(xyz(), "x^2 - y*z, x*y*z"), Ideal::unit(xyz())));
  CHECK_THROWS_AS(check_colon_condition(id(xy(), "x^2"), Ideal::zero(xy())), DomainError);
}

TEST_CASE("prime power sum examples") {
  auto s = add_prime_power(id(xy(), "x^2, x*y, y^2"), Ideal::maximal(xy()), 2);
  CHECK(s.ideal == id(xy(), "x^2, x*y, y^2"));
  CHECK(s.derivative_in_prime == true);
  s = add_prime_power(id(xy(), "x^4"), id(xy(), "x"), 2);
  CHECK(s.ideal == id(xy(), "x^2"));
  s = add_prime_power(id(xyz(), "x^2, x*y, y^2"), Ideal::maximal(xyz()), 3);
  CHECK(s.ideal == sum(id(xyz(), "x^2, x*y, y^2"), power(Ideal::maximal(xyz()), 3)));
  CHECK(strongly_golod(s.ideal).verdict);
  CHECK(oracle::strongly_golod(oracle::gens_of(s.ideal)));
  CHECK_THROWS_AS(add_prime_power(id(xy(), "x^2, y^2"), id(xy(), "x"), 2), DomainError);
  CHECK_THROWS_AS(add_prime_power(id(xy(), "x^2"), id(xy(), "x"), 1), DomainError);
  // not strongly Golod: the derivative hook is not evaluated
  s = add_prime_power(id(xyz(), "x*z, y*z"), Ideal::maximal(xyz()), 2);
  CHECK_FALSE(s.derivative_in_prime.has_value());
}

TEST_CASE("zariski-nagata examples") {
  auto P1 = id(xy(), "x");
  CHECK(zariski_nagata_membership(P(xy(), "x^2*y"), P1, 2));
  CHECK_FALSE(zariski_nagata_membership(P(xy(), "x"), P1, 2));
  CHECK_FALSE(zariski_nagata_membership(P(xy(), "x^2*y"), P1, 3));
  CHECK(zariski_nagata_membership(P(xy(), "x"), P1, 1));
}

TEST_CASE("in-between ideal examples") {
  auto I = vertex_cover_ideal(Graph::cycle(5));
  auto S1 = squarefree_symbolic_power(I, 1).to_ideal();
  auto S2 = squarefree_symbolic_power(I, 2).to_ideal();
  Ideal Iid = I.to_ideal();
  Ideal I2 = power(Iid, 2);
  auto r = check_inbetween(Iid, I2, 2, S2, S1);
  CHECK(r.verdict);
  CHECK(r.hypothesis_holds);
  CHECK(r.sandwich_holds);
  // J = I^2 + (u * g) for a generator g of I
  auto ring = I.ring();
  Monomial u(ring->size());
  for (std::size_t i = 0; i < 5; ++i) u.set(i, 1);
  Ideal J = sum(I2, Ideal(ring, {Polynomial::monomial(ring, u * I.generators()[2])}));
  r = check_inbetween(Iid, J, 2, S2, S1);
  CHECK(r.verdict);
  CHECK(r.hypothesis_holds);

  auto I43 = squarefree_generated_ideal(4, 3);
  auto T2 = squarefree_symbolic_power(I43, 2).to_ideal();
  auto T3 = squarefree_symbolic_power(I43, 3).to_ideal();
  Ideal I43id = I43.to_ideal();
  r = check_inbetween(I43id, power(I43id, 3), 3, T3, T2);
  CHECK_FALSE(r.hypothesis_holds);
}

TEST_CASE("derivative ideal does not depend on the generators") {
  std::mt19937_64 rng(testgen::kSeed + 20);
  auto r = xyz();
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> g;
    while (g.size() < 3) {
      auto f = testgen::random_form(rng, r, 2 + trial % 2, 3);
      if (!f.is_zero()) g.push_back(f);
    }
    Ideal I(r, g);
    // invertible row operations within a degree plus multiples of other generators
    std::vector<Polynomial> h{g[0] * Rational(-2) + g[1] * Rational(3, 2), g[1] - g[0], g[2] * Rational(5)};
    h[2] += g[0] * testgen::random_form(rng, r, g[2].degree() - g[0].degree(), 2);
    h.push_back(g[1] * P(r, "x"));
    Ideal I2(r, h);
    REQUIRE(I == I2);
    CHECK(derivative_ideal(I) == derivative_ideal(I2));
    CHECK(contains(derivative_ideal(I), I));
  }
}

TEST_CASE("every corpus ideal lies in its derivative ideal") {
  for (const auto& e : corpus_builders()) {
    CAPTURE(e.name);
    CHECK(contains(derivative_ideal(e.ideal), e.ideal));
  }
}

TEST_CASE("predicate agrees with the linear-algebra oracle on the corpus") {
  for (const auto& e : corpus_builders()) {
    CAPTURE(e.name);
    auto r = strongly_golod(e.ideal);
    CHECK(r.verdict == oracle::strongly_golod(oracle::gens_of(e.ideal)));
    CHECK(r.witness.has_value() == !r.verdict);
    if (r.witness) {
      CHECK_FALSE(r.witness->remainder.is_zero());
      CHECK(normal_form(r.witness->first.value * r.witness->second.value, e.ideal).remainder ==
            r.witness->remainder);
    }
  }
}

TEST_CASE("ideals of variables are never strongly golod") {
  for (const char* gens : {"x", "x, y", "x, y, z", "y, z"}) {
    CAPTURE(gens);
    CHECK_FALSE(strongly_golod(id(xyz(), gens)).verdict);
  }
  CHECK_FALSE(strongly_golod(corpus_entry("variables-control").ideal).verdict);
}

TEST_CASE("sums whose derivative product lands in the sum stay strongly golod") {
  auto corpus = corpus_builders();
  std::size_t tested = 0;
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = a; b < corpus.size(); ++b) {
      const auto& I = corpus[a].ideal;
      const auto& J = corpus[b].ideal;
      if (I.ring() != J.ring()) continue;
      if (!strongly_golod(I).verdict || !strongly_golod(J).verdict) continue;
      Ideal S = sum(I, J);
      if (!contains(S, product(derivative_ideal(I), derivative_ideal(J)))) continue;
      CAPTURE(corpus[a].name);
      CAPTURE(corpus[b].name);
      CHECK(strongly_golod(S).verdict);
      ++tested;
    }
  CHECK(tested > 10);
}

TEST_CASE("zariski-nagata holds for strongly golod monomial ideals") {
  for (const auto& e : corpus_builders()) {
    if (!e.monomial || !strongly_golod(e.ideal).verdict) continue;
    CAPTURE(e.name);
    auto mono = MonomialIdeal::from_ideal(e.ideal);
    std::size_t n = e.ideal.ring()->size();
    for (VarSet s = 1; s < (1u << n); ++s) {
      auto Pm = MonomialIdeal::prime_power(e.ideal.ring(), s);
      if (!Pm.contains(mono)) continue;
      Ideal Pid = Pm.to_ideal();
      for (const auto& f : e.ideal.generators()) CHECK(zariski_nagata_membership(f, Pid, 2));
    }
  }
}
