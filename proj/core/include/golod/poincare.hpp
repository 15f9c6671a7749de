#pragma once

// Truncated bigraded Poincaré series of R = S/I: the Serre bound
// ∏(1 + t u^{a_i}) / (1 - Σ dim H_i(R)_d t^{i+1} u^d) and the actual series
// Σ dim Tor_i^R(K, K)_d t^i u^d from a degreewise minimal resolution of K.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/koszul.hpp"

namespace golod {

class BigradedSeries {
 public:
  BigradedSeries() = default;
  BigradedSeries(std::size_t i_max, Degree d_max) : i_max_(i_max), d_max_(d_max) {}

  std::size_t i_max() const { return i_max_; }
  Degree d_max() const { return d_max_; }

  std::int64_t at(std::size_t i, Degree d) const;
  /// Throws DomainError outside the window or for negative values.
  void set(std::size_t i, Degree d, std::int64_t value);
  /// Nonzero coefficients keyed by (i, d).
  const std::map<std::pair<std::size_t, Degree>, std::int64_t>& coefficients() const { return coeffs_; }

  /// Σ_d coefficient(i, d) over the window, for i = 0..i_max (u = 1).
  std::vector<std::int64_t> totals() const;
  /// e.g. "1 + 2*t*u + 3*t^2*u^2 + O(t^5, u^9)".
  std::string to_string() const;

  friend bool operator==(const BigradedSeries&, const BigradedSeries&) = default;

 private:
  std::size_t i_max_ = 0;
  Degree d_max_ = 0;
  std::map<std::pair<std::size_t, Degree>, std::int64_t> coeffs_;
};

struct SerreBound {
  BigradedSeries series;
  /// The Koszul homology window was truncated.
  bool truncated = false;
};

/// Expansion of the Serre bound from bigraded Koszul homology.
BigradedSeries serre_bound_from_homology(const RingPtr& ring, const HomologySummary& h,
                                         std::size_t i_max, Degree d_max);

/// Homology is computed on the window l <= n, d <= min(d_max, max shift + max
/// weight); beyond the maximal shift of the resolution of S/I it vanishes.
SerreBound serre_bound_series(const Ideal& I, std::size_t i_max, Degree d_max);

/// (1 + t)^n / (1 - Σ_{i>=1} h_i t^{i+1}) to order t^i_max; h[i] = dim H_i.
std::vector<std::int64_t> serre_bound_total(std::size_t n, const std::vector<std::int64_t>& h,
                                            std::size_t i_max);

struct ActualPoincare {
  BigradedSeries series;
  /// Some Tor_i has a nonzero entry at d = d_max: total coefficients may be
  /// incomplete (bigraded entries are exact regardless).
  bool boundary_nonzero = false;
};

/// dim Tor_i^R(K, K)_d for i <= i_max, d <= d_max. Asserts minimality (no
/// unit entries) of every constructed differential.
ActualPoincare actual_poincare(const Ideal& I, std::size_t i_max, Degree d_max);

enum class GolodStatus { GolodUpToTruncation, NotGolod, Inconclusive };

std::string to_string(GolodStatus s);

struct BigradedDiscrepancy {
  std::size_t i = 0;
  Degree d = 0;
  std::int64_t bound = 0;
  std::int64_t actual = 0;
};

struct TotalDiscrepancy {
  std::size_t i = 0;
  std::int64_t bound = 0;
  std::int64_t actual = 0;
};

struct GolodVerdict {
  GolodStatus status = GolodStatus::Inconclusive;
  std::size_t i_max = 0;
  Degree d_max = 0;
  BigradedSeries bound;
  BigradedSeries actual;
  std::optional<BigradedDiscrepancy> first_discrepancy;
  std::optional<TotalDiscrepancy> first_total_discrepancy;
  bool homology_truncated = false;
  bool actual_boundary_nonzero = false;
  /// I ⊆ m^2. Otherwise the variables do not minimally generate the maximal
  /// ideal of R and the bound is not the Serre bound of R, so a NOT-GOLOD
  /// status says nothing about R itself.
  bool minimal_presentation = true;
};

struct PoincareBounds {
  std::size_t i_max = 4;
  /// Default: i_max * (max shift of the resolution of S/I).
  std::optional<Degree> d_max;
};

/// Compares both series on the window. Throws Error if the actual series ever
/// exceeds the bound.
GolodVerdict golod_verdict(const Ideal& I, PoincareBounds bounds = {});

}  // namespace golod
