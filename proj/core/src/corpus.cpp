#include "golod/corpus.hpp"

#include <array>
#include <mutex>
#include <random>

#include "golod/parse.hpp"

namespace golod {
namespace {

/// A form with at least two terms, so that entries are genuinely non-monomial.
Polynomial random_form(const RingPtr& ring, Degree d, std::mt19937_64& rng) {
  const auto monos = ring->monomials_of_degree(d);
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monos) {
      if (rng() % 2 == 0) continue;
      long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) terms.push_back({Rational(c), m});
    }
    if (terms.size() >= 2) return Polynomial(ring, std::move(terms));
  }
}

/// Forms of the given degrees, pairwise non-proportional.
std::vector<Polynomial> random_base(const RingPtr& ring, const std::vector<Degree>& degrees,
                                    std::mt19937_64& rng) {
  std::vector<Polynomial> base;
  for (Degree d : degrees) {
    for (;;) {
      Polynomial f = random_form(ring, d, rng);
      bool fresh = true;
      for (const auto& g : base)
        if (g.monic() == f.monic()) fresh = false;
      if (fresh) {
        base.push_back(std::move(f));
        break;
      }
    }
  }
  return base;
}

struct RandomSpec {
  std::size_t n;
  std::vector<Degree> degrees;
};

}  // namespace

RingPtr corpus_ring(std::size_t n) {
  static std::once_flag once;
  static std::array<RingPtr, 5> rings;
  std::call_once(once, [] {
    rings[2] = Ring::standard({"x", "y"});
    rings[3] = Ring::standard({"x", "y", "z"});
    rings[4] = Ring::standard({"x", "y", "z", "w"});
  });
  if (n < 2 || n > 4) throw DomainError("corpus rings have 2 to 4 variables");
  return rings[n];
}

std::vector<CorpusEntry> corpus_builders(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  auto add = [&out](std::string name, std::string provenance, std::size_t n, const char* gens,
                    bool monomial) {
    out.push_back({std::move(name), std::move(provenance), Ideal::parse(corpus_ring(n), gens), monomial});
  };

  add("square-of-maximal", "(x,y)^2 in two variables", 2, "x^2, x*y, y^2", true);
  add("cube-of-maximal", "(x,y)^3 in two variables", 2, "x^3, x^2*y, x*y^2, y^3", true);
  add("ci-control", "complete intersection (x^2,y^2); non-Golod control", 2, "x^2, y^2", true);
  add("pure-power", "principal ideal (x^4)", 2, "x^4", true);
  add("square-of-x2-xy", "(x^2, x*y)^2", 2, "x^4, x^3*y, x^2*y^2", true);
  add("product-counterexample", "product (x,y)(z); fails the derivative test", 3,
      "x*z, y*z", true);
  add("variables-control", "ideal of variables (x,y); radical control", 3, "x, y", true);
  add("square-of-maximal-3", "(x,y,z)^2 in three variables", 3,
      "x^2, x*y, x*z, y^2, y*z, z^2", true);
  add("triangle-cover", "vertex cover ideal of the triangle; radical control", 3,
      "x*y, x*z, y*z", true);
  add("triangle-cover-square", "square of the triangle's vertex cover ideal", 3,
      "x^2*y^2, x^2*y*z, x*y^2*z, x^2*z^2, x*y*z^2, y^2*z^2", true);
  add("path-cover-square", "square of the cover ideal (y, x*z) of the path x-y-z", 3,
      "y^2, x*y*z, x^2*z^2", true);
  add("cone-over-square", "(x,y)^2 times (z)", 3, "x^2*z, x*y*z, y^2*z", true);
  add("squarefree-4-3", "all squarefree cubics in four variables; radical control", 4,
      "x*y*z, x*y*w, x*z*w, y*z*w", true);
  add("square-of-maximal-4", "(x,y,z,w)^2 in four variables", 4,
      "x^2, x*y, x*z, x*w, y^2, y*z, y*w, z^2, z*w, w^2", true);

  // Squares of random ideals: each base ideal has forms of the listed degrees
  // with coefficients in [-3, 3], so every square is generated in degree <= 4.
  const std::vector<RandomSpec> specs{
      {2, {1, 2}}, {2, {2, 2}}, {2, {1, 1}}, {3, {1, 1}},    {3, {1, 2}},
      {3, {2, 2}}, {3, {1, 1, 1}}, {4, {1, 1}}, {4, {1, 2}}, {4, {1, 1, 1}},
  };
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const RingPtr ring = corpus_ring(specs[k].n);
    const std::vector<Polynomial> base = random_base(ring, specs[k].degrees, rng);
    std::vector<Polynomial> gens;
    for (std::size_t a = 0; a < base.size(); ++a)
      for (std::size_t b = a; b < base.size(); ++b) gens.push_back(base[a] * base[b]);
    std::string desc = "square of (";
    for (std::size_t a = 0; a < base.size(); ++a) desc += (a ? ", " : "") + base[a].to_string();
    desc += ")";
    out.push_back({"random-square-" + std::to_string(k + 1), desc, Ideal(ring, std::move(gens)), false});
  }
  return out;
}

CorpusEntry corpus_entry(const std::string& name, std::uint64_t seed) {
  for (auto& e : corpus_builders(seed))
    if (e.name == name) return e;
  throw DomainError("unknown corpus entry '" + name + "'");
}

}  // namespace golod
