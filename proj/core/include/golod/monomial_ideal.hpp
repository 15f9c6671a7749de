#pragma once

// Monomial ideals by their minimal generators, simple graphs and their
// vertex cover ideals, squarefree symbolic powers, primary decomposition and
// integral closure via Newton polyhedra.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

/// Set of variable indices as a bitmask.
using VarSet = std::uint32_t;

/// Ring x1..xn, standard graded.
RingPtr indexed_ring(std::size_t n, const std::string& prefix = "x");

class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring, std::vector<Monomial> generators = {});

  /// Throws DomainError unless I is a monomial ideal.
  static MonomialIdeal from_ideal(const Ideal& I);
  /// The ideal generated by the variables in `vars`, raised to the k-th power.
  static MonomialIdeal prime_power(RingPtr ring, VarSet vars, unsigned k = 1);

  const RingPtr& ring() const { return ring_; }
  /// Minimal generators, sorted by degree then descending ring order.
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  bool contains(const Monomial& u) const;
  /// J ⊆ *this.
  bool contains(const MonomialIdeal& J) const;

  Ideal to_ideal() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// I : (v) = (u / gcd(u, v)).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
/// I : (prod_{i in vars} x_i)^∞, i.e. the exponents of `vars` set to zero.
MonomialIdeal saturate(const MonomialIdeal& I, VarSet vars);
MonomialIdeal power(const MonomialIdeal& I, unsigned k);

struct MonomialGolodWitness {
  Monomial u;
  Monomial v;
  std::size_t i = 0;
  std::size_t j = 0;
  /// u v / (x_i x_j), not in I.
  Monomial quotient;
};

struct MonomialGolodReport {
  bool verdict = true;
  std::optional<MonomialGolodWitness> witness;
};

/// uv/(x_i x_j) ∈ I for all minimal generators u, v with x_i | u, x_j | v.
/// The witness is the first failure in (u, v, i, j) order, taking pairs u < v
/// before the squares u = v.
MonomialGolodReport strongly_golod_monomial(const MonomialIdeal& I);

/// Minimal sets of variables meeting every generator's support. For a
/// squarefree ideal these are its minimal primes.
std::vector<VarSet> minimal_primes(const MonomialIdeal& I);

/// Intersection of P^k over the minimal primes P. Throws DomainError for a
/// non-squarefree ideal.
MonomialIdeal squarefree_symbolic_power(const MonomialIdeal& I, unsigned k);

class Graph {
 public:
  explicit Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges = {});

  /// `n <count>` then one `i j` pair per line (1-based); `#` starts a comment.
  static Graph parse(std::string_view text);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph complete(std::size_t n);

  std::size_t size() const { return n_; }
  /// 0-based pairs (i, j) with i < j, sorted, without duplicates.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  bool has_odd_cycle() const;
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Intersection of (x_i, x_j) over the edges. `ring` must have at least n
/// variables; defaults to x1..xn. Throws ImproperIdeal for an edgeless graph.
MonomialIdeal vertex_cover_ideal(const Graph& G, RingPtr ring = nullptr);
/// The same ideal from the minimal vertex covers, enumerated directly.
MonomialIdeal vertex_cover_ideal_from_covers(const Graph& G, RingPtr ring = nullptr);

/// I_{n,d}: all squarefree monomials of degree d in x1..xn.
MonomialIdeal squarefree_generated_ideal(std::size_t n, std::size_t d);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Vertex cover ideal I of the n-cycle: I^(2) = I^2 + (x1...xn),
/// (I^(2))^2 ⊆ I^3, (I^(k-1))^2 ⊆ I^k for 3 <= k <= max_k, and whether I is
/// generated by the alternating products x_i x_{i+2} ... x_{i+n-1}.
std::vector<NamedCheck> odd_cycle_suite(std::size_t n, unsigned max_k = 3);

/// u = x1...x_{d+1} lies in I_{n,d}^(2) while u^2 ∉ I_{n,d}^3 (2 < d < n).
std::vector<NamedCheck> squarefree_generated_checks(std::size_t n, std::size_t d);

struct PrimaryComponent {
  MonomialIdeal ideal;
  VarSet prime = 0;
};

struct PrimaryDecomposition {
  /// Irreducible components (generated by pure powers), irredundant.
  std::vector<MonomialIdeal> irreducible;
  /// Irreducible components grouped by radical, sorted by prime.
  std::vector<PrimaryComponent> primary;
};

/// Throws ImproperIdeal for the unit ideal. The intersection of the
/// components is verified equal to I.
PrimaryDecomposition irreducible_decomposition(const MonomialIdeal& I);

/// The P-primary component I : (prod_{x_i ∉ P} x_i)^∞ for each minimal prime P.
std::vector<PrimaryComponent> minimal_primary_components(const MonomialIdeal& I);

struct ClosureWitness {
  Monomial u;
  /// u^r ∈ I^r, certified by `factors` (r generators, with repetition) whose
  /// product divides u^r.
  unsigned r = 1;
  std::vector<Monomial> factors;
};

struct IntegralClosure {
  MonomialIdeal ideal;
  /// One witness per generator of the closure.
  std::vector<ClosureWitness> witnesses;
};

inline constexpr unsigned kClosureWitnessCap = 32;

/// Exact rational feasibility of a ∈ conv(exponents of I) + R^n_{>=0}. On
/// success returns the convex weights of the generators.
std::optional<std::vector<Rational>> newton_membership(const MonomialIdeal& I, const Monomial& a);

/// Monomials whose exponents lie in the Newton polyhedron of I.
IntegralClosure integral_closure(const MonomialIdeal& I);

}  // namespace golod
