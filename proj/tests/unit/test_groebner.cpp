#include <doctest.h>

#include "golod/ideal.hpp"
#include "golod/parse.hpp"
#include "oracle.hpp"
#include "random_poly.hpp"

using namespace golod;

namespace {

RingPtr xy() {
  static const RingPtr r = Ring::standard({"x", "y"});
  return r;
}
RingPtr xyz() {
  static const RingPtr r = Ring::standard({"x", "y", "z"});
  return r;
}
Ideal id(const RingPtr& r, const char* s) { return Ideal::parse(r, s); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(1 / f.leading_coeff(), l.quotient(f.leading_monomial())) -
         g.mul_term(1 / g.leading_coeff(), l.quotient(g.leading_monomial()));
}

/// Random homogeneous ideal with 2 or 3 nonzero generators of degree 2..3.
Ideal random_ideal(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<Polynomial> gens;
  std::size_t count = 2 + rng() % 2;
  while (gens.size() < count) {
    auto f = testgen::random_form(rng, r, 2 + rng() % 2, 3);
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal(r, gens);
}

/// Degreewise dimension of an ideal given by library generators.
std::size_t dim_of(const Ideal& I, Degree d) { return oracle::ideal_dim(oracle::gens_of(I), d); }

}  // namespace

TEST_CASE("reduced basis examples") {
  auto G = id(xy(), "x^2, x*y, y^2").groebner_basis();
  CHECK(G.size() == 3);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(normal_form(spoly(G[i], G[j]), id(xy(), "x^2, x*y, y^2")).is_member);
  auto lin = id(xy(), "x + y, x - y").groebner_basis();
  REQUIRE(lin.size() == 2);
  CHECK(lin[0] == P(xy(), "x"));
  CHECK(lin[1] == P(xy(), "y"));
  CHECK(Ideal::zero(xy()).groebner_basis().empty());
  CHECK(Ideal(xy(), {Polynomial(xy())}).groebner_basis().empty());
}

TEST_CASE("normal form examples") {
  auto nf = normal_form(P(xy(), "x^2"), id(xy(), "x"));
  CHECK(nf.is_member);
  CHECK(nf.remainder.is_zero());
  nf = normal_form(P(xyz(), "z^2"), id(xyz(), "x*z, y*z"));
  CHECK_FALSE(nf.is_member);
  CHECK(nf.remainder == P(xyz(), "z^2"));
  nf = normal_form(P(xy(), "y"), id(xy(), "x"));
  CHECK_FALSE(nf.is_member);
  CHECK(nf.remainder == P(xy(), "y"));
}

TEST_CASE("containment examples") {
  CHECK(contains(id(xy(), "x, y"), id(xy(), "x^2, x*y")));
  CHECK_FALSE(contains(id(xy(), "x^2"), id(xy(), "x")));
  CHECK_FALSE(contains(id(xy(), "x^2, y^2"), id(xy(), "(x+y)^2 - (x^2 + y^2)")));
  CHECK_FALSE(oracle::member(oracle::from(P(xy(), "2*x*y")), oracle::gens_of(id(xy(), "x^2, y^2"))));
}

TEST_CASE("intersection examples") {
  CHECK(intersect(id(xy(), "x"), id(xy(), "y")) == id(xy(), "x*y"));
  auto I = intersect(id(xy(), "x^2, x*y"), id(xy(), "y"));
  CHECK(I == id(xy(), "x*y"));
  // double inclusion against the oracle
  CHECK(oracle::same_ideal(oracle::gens_of(I), oracle::gens_of(id(xy(), "x*y"))));
  auto J = id(xyz(), "x^2 - y*z, x*y");
  CHECK(intersect(J, J) == J);
}

TEST_CASE("colon examples") {
  CHECK(colon(id(xy(), "x^2, x*y"), id(xy(), "y")) == id(xy(), "x"));
  CHECK(colon(id(xy(), "x*y"), id(xy(), "x")) == id(xy(), "y"));
  auto I = id(xyz(), "x^2 - y*z, x*y*z");
  CHECK(colon(I, Ideal::unit(xyz())) == I);
  CHECK_THROWS_AS(colon(I, Ideal::zero(xyz())), DomainError);
  // f*y ∈ (x^2, xy) sweep over every monomial up to degree 3
  auto gens = oracle::gens_of(id(xy(), "x^2, x*y"));
  auto C = colon(id(xy(), "x^2, x*y"), id(xy(), "y"));
  for (Degree d = 0; d <= 3; ++d)
    for (const auto& m : oracle::monomials({1, 1}, d)) {
      oracle::Poly f{{m, 1}};
      bool in_colon = oracle::member(oracle::mul(f, oracle::from(P(xy(), "y"))), gens);
      CHECK(in_colon == is_member(oracle::to_poly(xy(), f), C));
    }
}

TEST_CASE("saturation examples") {
  auto s = saturate(id(xy(), "x^2, x*y"), Ideal::maximal(xy()));
  CHECK(s.ideal == id(xy(), "x"));
  CHECK(s.exponent == 1);
  s = saturate(id(xy(), "x"), id(xy(), "y"));
  CHECK(s.ideal == id(xy(), "x"));
  CHECK(s.exponent == 0);
  s = saturate(id(xy(), "x^2*y, x*y^2"), Ideal::maximal(xy()));
  CHECK(s.ideal == id(xy(), "x*y"));
}

TEST_CASE("syzygy examples") {
  auto S = syzygies(id(xy(), "x, y"));
  REQUIRE(S.rows == 1);
  CHECK(((S.at(0, 0) == P(xy(), "y") && S.at(0, 1) == P(xy(), "-x")) ||
         (S.at(0, 0) == P(xy(), "-y") && S.at(0, 1) == P(xy(), "x"))));
  auto M = id(xy(), "x^2, x*y, y^2");
  S = syzygies(M);
  CHECK(S.rows == 2);
  CHECK(S.cols == 3);
  for (std::size_t r = 0; r < S.rows; ++r) {
    Polynomial dot(xy());
    for (std::size_t c = 0; c < S.cols; ++c) dot += S.at(r, c) * M.generators()[c];
    CHECK(dot.is_zero());
  }
  CHECK(syzygies(id(xyz(), "x^2 - y*z")).rows == 0);
  CHECK_THROWS_AS(syzygies(id(xy(), "x + y^2")), NotHomogeneous);
}

TEST_CASE("syzygies generate every relation up to degree 6") {
  std::mt19937_64 rng(testgen::kSeed + 10);
  for (int trial = 0; trial < 6; ++trial) {
    Ideal I = random_ideal(rng, xyz());
    PolyMatrix S = syzygies(I);
    const auto& g = I.generators();
    for (std::size_t r = 0; r < S.rows; ++r) {
      Polynomial dot(xyz());
      for (std::size_t c = 0; c < S.cols; ++c) dot += S.at(r, c) * g[c];
      CHECK(dot.is_zero());
    }
    // degree-d relations: dim = Σ dim S_{d - deg g_j} - dim I_d
    auto gens = oracle::gens_of(I);
    for (Degree d = 2; d <= 6; ++d) {
      std::vector<oracle::Basis> bases;
      std::vector<std::size_t> off;
      std::size_t total = 0;
      for (const auto& f : g) {
        off.push_back(total);
        bases.emplace_back(xyz()->weights(), d - f.degree());
        total += bases.back().size();
      }
      std::size_t relations = total - oracle::ideal_dim(gens, d);
      oracle::Span span;
      for (std::size_t r = 0; r < S.rows; ++r) {
        Degree rd = -1;
        for (std::size_t c = 0; c < S.cols; ++c)
          if (!S.at(r, c).is_zero()) rd = S.at(r, c).degree() + g[c].degree();
        for (const auto& m : oracle::monomials(xyz()->weights(), d - rd)) {
          oracle::Vec v;
          for (std::size_t c = 0; c < S.cols; ++c) {
            oracle::Poly e = oracle::mul(oracle::from(S.at(r, c)), oracle::Poly{{m, 1}});
            for (const auto& [i, x] : bases[c].vec(e, off[c])) v[i] = x;
          }
          span.insert(v);
        }
      }
      CHECK(span.rank() == relations);
    }
  }
}

TEST_CASE("reduced basis certifies equality with the generators") {
  std::mt19937_64 rng(testgen::kSeed + 11);
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I = random_ideal(rng, xyz());
    const auto& G = I.groebner_basis();
    auto gens = oracle::gens_of(I);
    for (const auto& g : G) {
      CHECK(oracle::member(oracle::from(g), gens));
      CHECK(g.leading_coeff() == 1);
    }
    for (const auto& f : I.generators()) CHECK(is_member(f, I));
    Ideal fromG(xyz(), G);
    for (const auto& f : I.generators()) CHECK(oracle::member(oracle::from(f), oracle::gens_of(fromG)));
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(normal_form(spoly(G[i], G[j]), fromG).remainder.is_zero());
    // reduced: no term of g_i is divisible by the leading monomial of another element
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j)
        if (i != j)
          for (const auto& t : G[i].terms()) CHECK_FALSE(G[j].leading_monomial().divides(t.mono));
  }
}

TEST_CASE("intersection agrees with degreewise linear algebra") {
  std::mt19937_64 rng(testgen::kSeed + 12);
  for (int trial = 0; trial < 8; ++trial) {
    Ideal I = random_ideal(rng, xyz());
    Ideal J = random_ideal(rng, xyz());
    Ideal K = intersect(I, J);
    CHECK(contains(I, K));
    CHECK(contains(J, K));
    auto gi = oracle::gens_of(I), gj = oracle::gens_of(J);
    for (Degree d = 0; d <= 6; ++d) CHECK(dim_of(K, d) == oracle::intersection_dim(gi, gj, d));
  }
}

TEST_CASE("colon agrees with degreewise linear algebra") {
  std::mt19937_64 rng(testgen::kSeed + 13);
  for (int trial = 0; trial < 8; ++trial) {
    Ideal I = random_ideal(rng, xyz());
    Ideal J = trial % 2 ? Ideal::maximal(xyz()) : Ideal(xyz(), {testgen::random_form(rng, xyz(), 1, 2)});
    if (J.is_zero()) continue;
    Ideal C = colon(I, J);
    for (const auto& g : C.generators())
      for (const auto& f : J.generators()) CHECK(is_member(g * f, I));
    auto gi = oracle::gens_of(I), gj = oracle::gens_of(J);
    for (Degree d = 0; d <= 5; ++d) CHECK(dim_of(C, d) == oracle::colon_dim(gi, gj, d));
  }
}

TEST_CASE("saturation is the stable iterated colon") {
  std::mt19937_64 rng(testgen::kSeed + 14);
  for (int trial = 0; trial < 6; ++trial) {
    Ideal I = product(random_ideal(rng, xyz()), Ideal::maximal(xyz()));
    Ideal J = trial % 2 ? Ideal::maximal(xyz()) : id(xyz(), "x, y");
    auto s = saturate(I, J);
    Ideal it = I;
    for (int t = 0; t < s.exponent; ++t) it = colon(it, J);
    CHECK(it == s.ideal);
    CHECK(colon(s.ideal, J) == s.ideal);
  }
}

TEST_CASE("ideal equality ignores the generating set") {
  auto a = id(xyz(), "x^2 - y*z, x*y");
  auto b = id(xyz(), "x^2 - y*z + 3*x*y, 2*x*y, x^3 - x*y*z");
  CHECK(a == b);
  CHECK_FALSE(a == id(xyz(), "x^2, x*y"));
}

TEST_CASE("minimalize keeps a minimal generating subset") {
  auto I = id(xyz(), "x^2, x*y, x^2 + x*y, x^3, y*z");
  auto m = minimalize(I);
  CHECK(m == I);
  CHECK(m.generators().size() == 3);
  CHECK_THROWS_AS(minimalize(id(xyz(), "x + y^2")), NotHomogeneous);
}

TEST_CASE("elimination order isolates the trailing variables") {
  auto I = id(xyz(), "x^2 - y*z, x*y - z^2");
  auto G = reduced_groebner(I, {OrderKind::BlockElimination, 1});
  REQUIRE_FALSE(G.empty());
  auto gens = oracle::gens_of(I);
  bool found = false;
  for (const auto& g : G) {
    auto e = oracle::from(g);
    CHECK(oracle::member(e, gens));
    bool free_of_x = true;
    for (const auto& [exps, c] : e) free_of_x = free_of_x && exps[0] == 0;
    found = found || free_of_x;
  }
  // y^3 - z^3 ... lies in I ∩ Q[y, z], so the eliminant must be visible
  CHECK(found);
}

TEST_CASE("module groebner basis membership") {
  ModuleOrder order(xy(), {0, 0});
  std::vector<ModuleVector> gens{to_module_vector(P(xy(), "x"), 0), to_module_vector(P(xy(), "y"), 1)};
  auto G = groebner_basis(order, gens);
  ModuleVector v = to_module_vector(P(xy(), "x*y"), 0);
  auto w = to_module_vector(P(xy(), "y^2"), 1);
  v.insert(v.end(), w.begin(), w.end());
  order.normalize(v);
  CHECK(normal_form(order, v, G).empty());
  CHECK_FALSE(normal_form(order, to_module_vector(P(xy(), "y"), 0), G).empty());
}

TEST_CASE("saturation round cap") {
  CHECK_THROWS_AS(saturate(id(xy(), "x^5*y"), id(xy(), "x"), 2), LimitExceeded);
}
