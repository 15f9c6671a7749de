#pragma once

// Weighted polynomial rings over Q: monomials, terms and polynomials.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "golod/errors.hpp"

namespace golod {

using Rational = mpq_class;
using Degree = std::int64_t;

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monomial. Capacity is fixed so that monomials are
/// trivially copyable; entries past size() are always zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned total_degree() const;
  Degree weighted_degree(std::span<const int> weights) const;
  bool is_one() const;
  bool is_squarefree() const;

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Exact quotient; throws DomainError when `d` does not divide *this.
  Monomial quotient(const Monomial& d) const;
  Monomial pow(unsigned k) const;

  std::vector<unsigned> exponents() const;
  std::size_t hash() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind {
  WeightedGrevlex,
  /// The first `block` variables are compared first (weighted grevlex on the
  /// block), ties broken by weighted grevlex on the remaining variables.
  BlockElimination,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::WeightedGrevlex;
  std::size_t block = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// A polynomial ring Q[x_1..x_n] with positive weights deg x_i = a_i and a
/// fixed monomial order used for canonical term ordering.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order = {});

  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          std::vector<int> weights,
                                          MonomialOrder order = {});
  /// Standard-graded ring with the given variable names.
  static std::shared_ptr<const Ring> standard(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  int max_weight() const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  Degree degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  /// Three-way comparison under the ring's order: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;

  Monomial one() const { return Monomial(size()); }
  Monomial variable(std::size_t i) const;

  /// All monomials of weighted degree `d`, sorted descending in the ring order.
  std::vector<Monomial> monomials_of_degree(Degree d) const;

  /// Same variables, weights and order.
  bool same_as(const Ring& other) const;

  /// Copy of this ring with a different monomial order.
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

  std::string monomial_to_string(const Monomial& m) const;

 private:
  int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws RingMismatch unless both rings describe the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Rational coeff;
  Monomial mono;
};

struct HomogeneityReport {
  bool is_homogeneous = true;
  /// Present iff is_homogeneous and the polynomial is nonzero.
  std::optional<Degree> degree;
};

/// Polynomial with exact rational coefficients. Terms are kept sorted in
/// strictly descending ring order, merged and free of zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  HomogeneityReport homogeneity() const;
  bool is_homogeneous() const { return homogeneity().is_homogeneous; }
  /// Weighted degree of the leading term; throws DomainError on zero.
  Degree degree() const;

  Polynomial monic() const;
  Polynomial partial(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// this * c * m
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  /// Rewrites the polynomial into `target`, sending variable i to
  /// variable index_map[i] of the target ring.
  Polynomial map_to(RingPtr target, std::span<const std::size_t> index_map) const;

  /// Exact quotient by `divisor`; throws DomainError if the division leaves
  /// a remainder.
  Polynomial exact_divide(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Checked ring arithmetic; throws RingMismatch when the rings differ.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Reports whether sum a_i x_i dp/dx_i == deg(p) * p. Throws NotHomogeneous
/// for non-homogeneous input; the zero polynomial passes.
bool euler_check(const Polynomial& p);

/// p^k for k >= 0.
Polynomial pow(const Polynomial& p, unsigned k);

}  // namespace golod
