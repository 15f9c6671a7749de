#pragma once

// Degreewise linear model of R = S/I for a homogeneous ideal I. Each graded
// piece R_d has the standard monomials of degree d (those outside the leading
// term ideal) as basis, listed descending in the ring order.

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/linalg.hpp"

namespace golod {

class QuotientRing {
 public:
  /// Throws NotHomogeneous unless I is homogeneous.
  explicit QuotientRing(Ideal ideal);

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }

  bool is_standard(const Monomial& m) const;

  /// Standard monomials of degree d (empty for d < 0).
  const std::vector<Monomial>& basis(Degree d) const;
  std::size_t dim(Degree d) const { return basis(d).size(); }
  /// Position of a standard monomial in basis(deg m).
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coordinates of the normal form of m in basis(deg m).
  const linalg::SparseVector& reduce(const Monomial& m) const;
  /// Coordinates of a homogeneous polynomial of degree d in basis(d).
  linalg::SparseVector coordinates(const Polynomial& p, Degree d) const;
  Polynomial from_coordinates(Degree d, const linalg::SparseVector& v) const;

  /// Coordinates of (basis(d)[k]) * m in basis(d + deg m).
  linalg::SparseVector multiply(Degree d, std::size_t k, const Monomial& m) const;
  /// Coordinates of v * m for v in R_d.
  linalg::SparseVector multiply(Degree d, const linalg::SparseVector& v, const Monomial& m) const;

 private:
  struct Piece {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  const Piece& piece(Degree d) const;

  Ideal ideal_;
  std::vector<Monomial> leading_;
  mutable std::mutex mutex_;
  mutable std::map<Degree, Piece> pieces_;
  mutable std::unordered_map<Monomial, linalg::SparseVector, MonomialHash> reduced_;
};

}  // namespace golod
