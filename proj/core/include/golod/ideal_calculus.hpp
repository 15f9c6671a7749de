#pragma once

// Derivative ideals, the strongly Golod predicate d(I)^2 ⊆ I, powers,
// symbolic and saturated powers, and the closure constructions built on them.

#include <cstddef>
#include <optional>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

/// Ideal generated by dg/dx_i for every stored generator g and every i.
/// Throws NotHomogeneous or ImproperIdeal (unit ideal).
Ideal derivative_ideal(const Ideal& I);

/// A partial derivative dg/dx_i of the generator with index `generator`.
struct LabelledPartial {
  std::size_t generator = 0;
  std::size_t variable = 0;
  Polynomial value;
};

/// The partials tested by strongly_golod: zero partials and scalar multiples
/// of earlier ones are dropped, the rest are thinned to a minimal generating
/// subset of d(I). Ordered by (generator, variable).
std::vector<LabelledPartial> derivative_generators(const Ideal& I);

struct GolodWitness {
  LabelledPartial first;
  LabelledPartial second;
  /// Nonzero, fully reduced normal form of first * second modulo I.
  Polynomial remainder;
};

struct StronglyGolodReport {
  bool verdict = true;
  /// Present iff verdict is false: the lexicographically first failing pair.
  /// A failing square p*p names a second generator with a proportional
  /// partial when there is one.
  std::optional<GolodWitness> witness;
  std::size_t products_checked = 0;
};

/// Decides d(I)^2 ⊆ I. The zero ideal passes; the unit ideal is rejected.
StronglyGolodReport strongly_golod(const Ideal& I);

/// I^k from all k-fold products of generators, scalar duplicates removed.
Ideal power(const Ideal& I, int k);

enum class SymbolicMode { Saturated, UserL, MonomialSquarefree };

struct SymbolicPowerSpec {
  int k = 1;
  SymbolicMode mode = SymbolicMode::Saturated;
  /// Required for UserL.
  std::optional<Ideal> L;
};

struct SymbolicPowerResult {
  Ideal ideal;
  /// Saturation exponent; 0 in monomial-squarefree mode.
  int exponent = 0;
};

/// I^k : L^∞ with L = m (saturated), L given (user), or the intersection of
/// k-th powers of minimal primes (squarefree monomial I).
SymbolicPowerResult symbolic_power(const Ideal& I, const SymbolicPowerSpec& spec);

/// Saturated power I^k : m^∞.
SymbolicPowerResult saturated_power(const Ideal& I, int k);

/// True iff I : J = I : J^2.
bool check_colon_condition(const Ideal& I, const Ideal& J);

struct PrimePowerSum {
  Ideal ideal;
  /// d(I) ⊆ P, evaluated only when I is strongly Golod.
  std::optional<bool> derivative_in_prime;
};

/// I + P^k for a caller-asserted prime P ⊇ I. Throws DomainError when P does
/// not contain I or k < 2.
PrimePowerSum add_prime_power(const Ideal& I, const Ideal& P, int k);

/// Every iterated partial derivative of f of total order < k lies in P.
bool zariski_nagata_membership(const Polynomial& f, const Ideal& P, int k);

struct InbetweenReport {
  bool verdict = false;
  bool hypothesis_holds = false;
  bool sandwich_holds = false;
};

/// Evaluates whether I^k ⊆ J ⊆ I^(k) with J strongly Golod, and whether
/// (I^(k-1))^2 ⊆ I^k. Throws Error if the hypothesis and sandwich hold but J
/// is not strongly Golod.
InbetweenReport check_inbetween(const Ideal& I, const Ideal& J, int k, const Ideal& symbolic_k,
                                const Ideal& symbolic_km1);

}  // namespace golod
