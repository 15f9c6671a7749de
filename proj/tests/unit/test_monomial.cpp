#include <doctest.h>

#include "golod/corpus.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/monomial_ideal.hpp"
#include "oracle.hpp"
#include "random_poly.hpp"

using namespace golod;

namespace {

RingPtr xy() { return corpus_ring(2); }
RingPtr xyz() { return corpus_ring(3); }
MonomialIdeal mid(const RingPtr& r, const char* s) { return MonomialIdeal::from_ideal(Ideal::parse(r, s)); }
Monomial mono(const RingPtr& r, const char* s) { return Ideal::parse(r, s).generators().front().leading_monomial(); }

std::vector<oracle::Exps> exps(const MonomialIdeal& I) {
  std::vector<oracle::Exps> out;
  for (const auto& g : I.generators()) out.push_back(g.exponents());
  return out;
}

/// Componentwise maximum of the generator exponents, plus `pad`.
oracle::Exps bounding_box(const MonomialIdeal& I, unsigned pad = 0) {
  oracle::Exps b(I.ring()->size(), 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::max(b[i], g[i]);
  for (auto& x : b) x += pad;
  return b;
}

/// A monomial ideal equals the oracle's set inside the box: generators lie in
/// it, and every oracle member of the box is divisible by a generator.
template <class Member>
bool matches_in_box(const MonomialIdeal& I, const oracle::Exps& bound, Member member) {
  for (const auto& g : I.generators())
    if (!member(g.exponents())) return false;
  for (const auto& e : oracle::box(bound))
    if (member(e) != I.contains(Monomial(std::span<const unsigned>(e)))) return false;
  return true;
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<Monomial> gens;
  std::size_t count = 1 + rng() % 4;
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m(r->size());
    for (std::size_t i = 0; i < r->size(); ++i) m.set(i, rng() % 4);
    if (m.is_one()) m.set(0, 1);
    gens.push_back(m);
  }
  return MonomialIdeal(r, gens);
}

std::vector<CorpusEntry> monomial_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus_builders())
    if (e.monomial) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(mid(xy(), "x*y").contains(mono(xy(), "x^2*y")));
  CHECK_FALSE(mid(xyz(), "x*z, y*z").contains(mono(xyz(), "z^2")));
  CHECK_FALSE(mid(xyz(), "x*z, y*z").contains(xyz()->one()));
}

TEST_CASE("generators are minimal and canonically sorted") {
  auto I = mid(xyz(), "x*y, x^2*y, z^3, x*y*z, y*x");
  CHECK(I.size() == 2);
  CHECK(I == mid(xyz(), "z^3, x*y"));
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < I.size(); ++b)
      if (a != b) CHECK_FALSE(I.generators()[a].divides(I.generators()[b]));
  CHECK_THROWS_AS(MonomialIdeal::from_ideal(Ideal::parse(xy(), "x^2 + y^2")), DomainError);
}

TEST_CASE("operation examples") {
  CHECK(intersect(mid(xy(), "x"), mid(xy(), "y")) == mid(xy(), "x*y"));
  auto T = squarefree_generated_ideal(3, 2);
  auto T2 = power(T, 2);
  CHECK(T2.size() == 6);
  CHECK(T2.contains(Monomial{2, 1, 1}));
  CHECK(colon(mid(xy(), "x*y"), Monomial{1, 0}) == mid(xy(), "y"));
  CHECK(saturate(mid(xyz(), "x^2*z, x*y*z, y^2*z"), VarSet{0b100}) == mid(xyz(), "x^2, x*y, y^2"));
}

TEST_CASE("monomial operations agree with the groebner engine on the corpus") {
  auto corpus = monomial_corpus();
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    auto I = MonomialIdeal::from_ideal(corpus[a].ideal);
    const Ideal& Ip = corpus[a].ideal;
    CAPTURE(corpus[a].name);
    CHECK(power(I, 2).to_ideal() == golod::power(Ip, 2));
    std::size_t n = Ip.ring()->size();
    for (VarSet s = 1; s < (1u << n); ++s) {
      Polynomial prod = Polynomial::constant(Ip.ring(), 1);
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) prod = prod * Polynomial::variable(Ip.ring(), i);
      CHECK(saturate(I, s).to_ideal() == golod::saturate(Ip, Ideal(Ip.ring(), {prod})).ideal);
    }
    for (std::size_t b = a; b < corpus.size(); ++b) {
      if (corpus[b].ideal.ring() != Ip.ring()) continue;
      auto J = MonomialIdeal::from_ideal(corpus[b].ideal);
      const Ideal& Jp = corpus[b].ideal;
      CAPTURE(corpus[b].name);
      CHECK(sum(I, J).to_ideal() == golod::sum(Ip, Jp));
      CHECK(product(I, J).to_ideal() == golod::product(Ip, Jp));
      CHECK(intersect(I, J).to_ideal() == golod::intersect(Ip, Jp));
      CHECK(colon(I, J).to_ideal() == golod::colon(Ip, Jp));
      CHECK(colon(J, I).to_ideal() == golod::colon(Jp, Ip));
    }
  }
}

TEST_CASE("combinatorial predicate examples") {
  auto r = strongly_golod_monomial(mid(xyz(), "x*z, y*z"));
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->u == mono(xyz(), "x*z"));
  CHECK(r.witness->v == mono(xyz(), "y*z"));
  CHECK(r.witness->i == 0);
  CHECK(r.witness->j == 1);
  CHECK(r.witness->quotient == mono(xyz(), "z^2"));
  CHECK(strongly_golod_monomial(mid(xy(), "x^2, x*y, y^2")).verdict);
  CHECK(strongly_golod_monomial(power(squarefree_generated_ideal(4, 3), 2)).verdict);
}

TEST_CASE("combinatorial predicate agrees with the general one") {
  for (const auto& e : monomial_corpus()) {
    CAPTURE(e.name);
    auto I = MonomialIdeal::from_ideal(e.ideal);
    CHECK(strongly_golod_monomial(I).verdict == strongly_golod(e.ideal).verdict);
  }
  std::mt19937_64 rng(testgen::kSeed + 30);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_monomial_ideal(rng, xyz());
    CAPTURE(I.to_string());
    CHECK(strongly_golod_monomial(I).verdict == strongly_golod(I.to_ideal()).verdict);
  }
}

TEST_CASE("vertex cover ideal examples") {
  CHECK(vertex_cover_ideal(Graph::cycle(3)).to_string() == "x1*x2, x1*x3, x2*x3");
  auto edge = vertex_cover_ideal(Graph(2, {{0, 1}}));
  CHECK(edge == MonomialIdeal(indexed_ring(2), {Monomial{1, 0}, Monomial{0, 1}}));
  auto path = vertex_cover_ideal(Graph::path(3));
  CHECK(path == MonomialIdeal(indexed_ring(3), {Monomial{0, 1, 0}, Monomial{1, 0, 1}}));
  CHECK_THROWS_AS(vertex_cover_ideal(Graph(3)), ImproperIdeal);
}

TEST_CASE("both cover constructions agree") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(vertex_cover_ideal(Graph::cycle(n)) == vertex_cover_ideal_from_covers(Graph::cycle(n)));
    CHECK(vertex_cover_ideal(Graph::path(n)) == vertex_cover_ideal_from_covers(Graph::path(n)));
    CHECK(vertex_cover_ideal(Graph::complete(n)) == vertex_cover_ideal_from_covers(Graph::complete(n)));
  }
}

// u_i = x_i x_{i+2} ... x_{i+n-1}, indices mod n: n of them, each of degree (n+1)/2.
TEST_CASE("cyclic products generate the odd cycle cover ideal only up to n = 7") {
  for (std::size_t n : {3, 5, 7, 9}) {
    CAPTURE(n);
    auto I = vertex_cover_ideal(Graph::cycle(n));
    std::vector<Monomial> us;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial u(n);
      for (std::size_t j = 0; j < (n + 1) / 2; ++j) u.set((i + 2 * j) % n, 1);
      us.push_back(u);
    }
    MonomialIdeal U(I.ring(), us);
    CHECK(I.contains(U));
    // C9 also has covers of size 6 that avoid the alternating pattern
    CHECK((U == I) == (n <= 7));
  }
  CHECK(vertex_cover_ideal(Graph::cycle(9)).size() == 12);
}

TEST_CASE("graph file format") {
  auto G = Graph::parse("# pentagon\nn 5\n1 2\n2 3\n3 4   # inline\n4 5\n5 1\n");
  CHECK(G.size() == 5);
  CHECK(G.edges().size() == 5);
  CHECK(G.has_odd_cycle());
  CHECK_FALSE(Graph::path(4).has_odd_cycle());
  CHECK_THROWS_AS(Graph::parse("1 2\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("n 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("n 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("n 3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse(""), ParseError);
}

TEST_CASE("squarefree symbolic power examples") {
  auto C5 = vertex_cover_ideal(Graph::cycle(5));
  auto u = MonomialIdeal(C5.ring(), {Monomial{1, 1, 1, 1, 1}});
  CHECK(squarefree_symbolic_power(C5, 2) == sum(power(C5, 2), u));
  CHECK(squarefree_symbolic_power(C5, 1) == C5);
  auto I43 = squarefree_generated_ideal(4, 3);
  CHECK(squarefree_symbolic_power(I43, 2).contains(Monomial{1, 1, 1, 1}));
  CHECK_THROWS_AS(squarefree_symbolic_power(mid(xy(), "x^2"), 2), DomainError);
}

TEST_CASE("squarefree symbolic powers match the prime-exponent oracle") {
  std::vector<MonomialIdeal> ideals{vertex_cover_ideal(Graph::cycle(5)), vertex_cover_ideal(Graph::path(4)),
                                    squarefree_generated_ideal(4, 2), squarefree_generated_ideal(4, 3),
                                    mid(xyz(), "x*y, y*z")};
  for (const auto& I : ideals) {
    CAPTURE(I.to_string());
    auto primes = oracle::minimal_covers(exps(I), I.ring()->size());
    CHECK(minimal_primes(I).size() == primes.size());
    for (unsigned k = 1; k <= 3; ++k) {
      auto S = squarefree_symbolic_power(I, k);
      oracle::Exps bound(I.ring()->size(), k);
      CHECK(matches_in_box(S, bound, [&](const oracle::Exps& e) { return oracle::in_symbolic_power(e, primes, k); }));
      CHECK(S.contains(power(I, k)));
    }
  }
}

TEST_CASE("symbolic square of height-two covers sits in the ordinary power") {
  for (const auto& G : {Graph::cycle(3), Graph::cycle(5), Graph::path(4), Graph::complete(4)}) {
    auto I = vertex_cover_ideal(G);
    CAPTURE(G.to_string());
    for (unsigned p = 1; p <= 2; ++p) CHECK(power(I, p).contains(squarefree_symbolic_power(I, 2 * p)));
  }
}

TEST_CASE("odd cycle suites") {
  for (std::size_t n : {3, 5, 7}) {
    for (const auto& c : odd_cycle_suite(n, 3)) {
      CAPTURE(n);
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
  CHECK_THROWS_AS(odd_cycle_suite(4), DomainError);
  CHECK_THROWS_AS(odd_cycle_suite(1), DomainError);
}

TEST_CASE("odd cycle symbolic square against the oracle") {
  for (std::size_t n : {3, 5, 7}) {
    auto I = vertex_cover_ideal(Graph::cycle(n));
    auto primes = oracle::minimal_covers(exps(I), n);
    CHECK(primes.size() == n);
    auto I2 = oracle::mono_power(exps(I), 2);
    oracle::Exps u(n, 1);
    I2.push_back(u);
    oracle::Exps bound(n, 2);
    CHECK(matches_in_box(squarefree_symbolic_power(I, 2), bound,
                         [&](const oracle::Exps& e) { return oracle::mono_member(e, I2); }));
    // (I^(2))^2 ⊆ I^3
    auto S = exps(squarefree_symbolic_power(I, 2));
    auto I3 = oracle::mono_power(exps(I), 3);
    for (const auto& a : S)
      for (const auto& b : S) CHECK(oracle::mono_member(oracle::times(a, b), I3));
  }
}

TEST_CASE("squarefree-generated ideal examples") {
  CHECK(squarefree_generated_ideal(4, 3).size() == 4);
  CHECK(squarefree_generated_ideal(3, 3) == MonomialIdeal(indexed_ring(3), {Monomial{1, 1, 1}}));
  CHECK(squarefree_generated_ideal(5, 3).size() == 10);
  CHECK_THROWS_AS(squarefree_generated_ideal(3, 4), DomainError);
  CHECK_THROWS_AS(squarefree_generated_ideal(3, 0), DomainError);
  for (const auto& c : squarefree_generated_checks(4, 3)) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  // u^2 has degree 8 while I^3 starts in degree 9
  auto I3 = oracle::mono_power(exps(squarefree_generated_ideal(4, 3)), 3);
  CHECK_FALSE(oracle::mono_member({2, 2, 2, 2}, I3));
  CHECK_THROWS_AS(squarefree_generated_checks(4, 2), DomainError);
}

TEST_CASE("irreducible decomposition examples") {
  auto d = irreducible_decomposition(mid(xy(), "x^2, x*y"));
  REQUIRE(d.irreducible.size() == 2);
  CHECK(std::find(d.irreducible.begin(), d.irreducible.end(), mid(xy(), "x")) != d.irreducible.end());
  CHECK(std::find(d.irreducible.begin(), d.irreducible.end(), mid(xy(), "x^2, y")) != d.irreducible.end());
  d = irreducible_decomposition(mid(xy(), "x*y"));
  CHECK(d.irreducible.size() == 2);
  d = irreducible_decomposition(mid(xy(), "x^2, y^2"));
  REQUIRE(d.irreducible.size() == 1);
  CHECK(d.irreducible.front() == mid(xy(), "x^2, y^2"));
  CHECK(d.primary.size() == 1);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(xy(), {xy()->one()})), ImproperIdeal);
}

TEST_CASE("decompositions re-intersect to the input") {
  std::mt19937_64 rng(testgen::kSeed + 31);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_monomial_ideal(rng, xyz());
    if (I.is_unit()) continue;
    CAPTURE(I.to_string());
    auto d = irreducible_decomposition(I);
    MonomialIdeal meet = d.irreducible.front();
    for (const auto& q : d.irreducible) meet = intersect(meet, q);
    CHECK(meet == I);
    MonomialIdeal meet2 = d.primary.front().ideal;
    for (const auto& c : d.primary) {
      meet2 = intersect(meet2, c.ideal);
      // every generator of a primary component only involves its prime
      for (const auto& g : c.ideal.generators())
        for (std::size_t i = 0; i < 3; ++i)
          if (g[i] > 0) CHECK((c.prime >> i & 1u));
    }
    CHECK(meet2 == I);
  }
}

TEST_CASE("minimal primary component examples") {
  auto cone = mid(xyz(), "x^2*z, x*y*z, y^2*z");
  auto comps = minimal_primary_components(cone);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) CHECK((c.ideal == mid(xyz(), "z") || c.ideal == mid(xyz(), "x^2, x*y, y^2")));
  // (x^2)(x^2) = x^4 is not in the cone, and the component (z) is radical
  CHECK_FALSE(strongly_golod_monomial(cone).verdict);
  comps = minimal_primary_components(mid(xy(), "x^2, x*y, y^2"));
  REQUIRE(comps.size() == 1);
  CHECK(comps.front().ideal == mid(xy(), "x^2, x*y, y^2"));
  // squares of squarefree ideals: the components are the squared primes
  auto C5 = vertex_cover_ideal(Graph::cycle(5));
  auto sq = minimal_primary_components(power(C5, 2));
  CHECK(sq.size() == 5);
  for (const auto& c : sq) CHECK(c.ideal == MonomialIdeal::prime_power(C5.ring(), c.prime, 2));
}

TEST_CASE("integral closure examples") {
  auto c = integral_closure(mid(xy(), "x^3, y^3"));
  CHECK(c.ideal == mid(xy(), "x^3, x^2*y, x*y^2, y^3"));
  for (const auto& w : c.witnesses) {
    Monomial ur = w.u.pow(w.r);
    Monomial prod = xy()->one();
    for (const auto& f : w.factors) prod = prod * f;
    CHECK(w.factors.size() == w.r);
    CHECK(prod.divides(ur));
  }
  CHECK(oracle::integral_by_powers({2, 1}, {{3, 0}, {0, 3}}, 3));
  CHECK(integral_closure(mid(xy(), "x^2")).ideal == mid(xy(), "x^2"));
  CHECK(integral_closure(mid(xy(), "x^4, y^4")).ideal == mid(xy(), "x^4, x^3*y, x^2*y^2, x*y^3, y^4"));
}

TEST_CASE("newton membership") {
  auto I = mid(xy(), "x^3, y^3");
  auto w = newton_membership(I, Monomial{2, 1});
  REQUIRE(w);
  Rational s = 0;
  for (const auto& x : *w) {
    CHECK(x >= 0);
    s += x;
  }
  CHECK(s == 1);
  CHECK_FALSE(newton_membership(I, Monomial{1, 1}));
}

TEST_CASE("integral closure matches the power oracle") {
  std::mt19937_64 rng(testgen::kSeed + 32);
  for (int trial = 0; trial < 15; ++trial) {
    auto I = random_monomial_ideal(rng, xy());
    if (I.is_unit()) continue;
    CAPTURE(I.to_string());
    auto C = integral_closure(I).ideal;
    auto gens = exps(I);
    CHECK(matches_in_box(C, bounding_box(I, 1), [&](const oracle::Exps& e) {
      return oracle::integral_by_powers(e, gens, 6);
    }));
  }
}

TEST_CASE("integral closure axioms") {
  std::mt19937_64 rng(testgen::kSeed + 33);
  for (int trial = 0; trial < 20; ++trial) {
    auto I = random_monomial_ideal(rng, xyz());
    auto J = sum(I, random_monomial_ideal(rng, xyz()));
    if (J.is_unit()) continue;
    CAPTURE(I.to_string());
    auto Ib = integral_closure(I).ideal;
    CHECK(Ib.contains(I));
    CHECK(integral_closure(Ib).ideal == Ib);
    CHECK(integral_closure(J).ideal.contains(Ib));
  }
}

TEST_CASE("closures and components of strongly golod corpus ideals") {
  for (const auto& e : monomial_corpus()) {
    auto I = MonomialIdeal::from_ideal(e.ideal);
    if (!strongly_golod_monomial(I).verdict) continue;
    CAPTURE(e.name);
    CHECK(strongly_golod_monomial(integral_closure(I).ideal).verdict);
    for (unsigned k : {2u, 3u}) CHECK(strongly_golod_monomial(integral_closure(power(I, k)).ideal).verdict);
    for (const auto& c : minimal_primary_components(I)) CHECK(strongly_golod_monomial(c.ideal).verdict);
  }
}
