#pragma once

// Ideals of a weighted polynomial ring and the Gröbner-backed decision
// procedures on them: membership, containment, equality, sums, products,
// intersections, colons, saturations and syzygies.

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "golod/groebner.hpp"
#include "golod/ring.hpp"

namespace golod {

class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  /// Comma-separated generators in the polynomial grammar.
  static Ideal parse(const RingPtr& ring, std::string_view text);
  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// The graded maximal ideal (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring);
  /// Ideal whose generators are known to form its reduced Gröbner basis.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  bool is_homogeneous() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  /// True if the ideal is generated by monomials (its reduced basis is).
  bool is_monomial() const;

  /// Reduced Gröbner basis under the ring's order, computed once and shared
  /// by copies.
  const std::vector<Polynomial>& groebner_basis() const;
  /// The same basis as rank-one module vectors.
  const std::vector<ModuleVector>& groebner_vectors() const;

  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    std::vector<ModuleVector> vectors;
  };
  const Cache& cache() const;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

struct NormalForm {
  Polynomial remainder;
  bool is_member = false;
};

NormalForm normal_form(const Polynomial& p, const Ideal& ideal);
bool is_member(const Polynomial& p, const Ideal& ideal);
/// True iff J is contained in I.
bool contains(const Ideal& I, const Ideal& J);

/// Reduced Gröbner basis of I under another order of the same ring. The
/// returned polynomials live in the re-ordered ring.
std::vector<Polynomial> reduced_groebner(const Ideal& ideal, MonomialOrder order);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
/// I ∩ J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : (f), computed as (I ∩ (f)) / f.
Ideal colon(const Ideal& I, const Polynomial& f);
/// I : J = intersection of I : (f) over the generators f of J. Throws
/// DomainError when J is the zero ideal.
Ideal colon(const Ideal& I, const Ideal& J);

struct Saturation {
  Ideal ideal;
  /// Smallest t with I : J^t = I : J^(t+1).
  int exponent = 0;
};

inline constexpr int kSaturationRoundCap = 64;

/// I : J^∞ by iterated colon. Throws LimitExceeded after `max_rounds`.
Saturation saturate(const Ideal& I, const Ideal& J, int max_rounds = kSaturationRoundCap);

/// Matrix of polynomials, row-major.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Minimal generators of the syzygy module of the generators of a
/// homogeneous ideal, one syzygy per row. Zero generators are not allowed to
/// be part of the relation (they are dropped by the Ideal constructor).
PolyMatrix syzygies(const Ideal& ideal);

/// Minimal homogeneous generating subset of the given generators.
Ideal minimalize(const Ideal& ideal);

}  // namespace golod
