#pragma once

// The Koszul complex K(x; R) of R = S/I, strand by strand. Strand (l, d) has
// basis e_L ⊗ s over l-subsets L (ascending, lexicographic) and standard
// monomials s of degree d - deg(e_L); the differential is
// e_{i_1} ∧ ... ∧ e_{i_l} ↦ Σ_k (-1)^(k+1) x_{i_k} e_{L \ i_k}.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/linalg.hpp"
#include "golod/quotient.hpp"

namespace golod {

struct KoszulBounds {
  std::size_t l_max = 0;
  Degree d_max = 0;
};

/// l_max = n, d_max = (max shift of the minimal resolution of S/I) + max weight.
KoszulBounds default_koszul_bounds(const Ideal& I);

class KoszulComplex {
 public:
  struct Block {
    std::uint32_t subset = 0;
    Degree coeff_degree = 0;
    std::size_t offset = 0;
    std::size_t size = 0;
  };
  struct Strand {
    std::size_t l = 0;
    Degree d = 0;
    std::size_t dim = 0;
    std::vector<Block> blocks;
  };

  /// Throws NotHomogeneous or ImproperIdeal.
  explicit KoszulComplex(const Ideal& I);

  const QuotientRing& quotient() const { return *R_; }
  const RingPtr& ring() const { return R_->ring(); }
  std::size_t n() const { return ring()->size(); }

  const Strand& strand(std::size_t l, Degree d);
  /// Columns of the differential K_{l,d} -> K_{l-1,d} (empty for l = 0).
  const std::vector<linalg::SparseVector>& differential(std::size_t l, Degree d);
  /// Echelon basis of the boundaries in K_{l,d}.
  const linalg::Echelon& boundaries(std::size_t l, Degree d);
  /// Cycles whose classes form a basis of H_{l,d}.
  const std::vector<linalg::SparseVector>& cycle_representatives(std::size_t l, Degree d);
  /// dim Z_{l,d}.
  std::size_t cycle_dim(std::size_t l, Degree d);

  /// Image of v in K_{l-1,d}.
  linalg::SparseVector apply_differential(std::size_t l, Degree d, const linalg::SparseVector& v);
  /// Exterior product of a ∈ K_{la,da} and b ∈ K_{lb,db}, in K_{la+lb,da+db}.
  linalg::SparseVector wedge(std::size_t la, Degree da, const linalg::SparseVector& a,
                             std::size_t lb, Degree db, const linalg::SparseVector& b);

  /// Human-readable element, e.g. "x*e1 - y*e2".
  std::string to_string(std::size_t l, Degree d, const linalg::SparseVector& v);

 private:
  struct Data {
    Strand strand;
    std::optional<std::vector<linalg::SparseVector>> differential;
    std::optional<linalg::Echelon> boundaries;
    std::optional<std::vector<linalg::SparseVector>> reps;
    std::size_t cycle_dim = 0;
  };
  Data& data(std::size_t l, Degree d);
  void compute_homology(std::size_t l, Degree d);
  /// (block, local index) of a strand coordinate.
  std::pair<const Block*, std::size_t> locate(const Strand& s, std::size_t index) const;

  std::unique_ptr<QuotientRing> R_;
  std::map<std::pair<std::size_t, Degree>, Data> cache_;
};

struct HomologyRecord {
  std::size_t l = 0;
  Degree d = 0;
  std::size_t dim = 0;
  /// Cycle representatives in text form.
  std::vector<std::string> cycles;
};

struct HomologySummary {
  KoszulBounds bounds;
  /// Nonzero dimensions only, ordered by (l, d).
  std::vector<HomologyRecord> records;
  /// Nonzero homology at d = d_max, or at l = l_max < n.
  bool truncated = false;

  std::size_t dim(std::size_t l, Degree d) const;
  std::size_t total(std::size_t l) const;
};

HomologySummary koszul_homology(const Ideal& I, std::optional<KoszulBounds> bounds = {});
HomologySummary koszul_homology(KoszulComplex& K, const KoszulBounds& bounds);

struct CyclePair {
  std::size_t l1 = 0;
  Degree d1 = 0;
  std::size_t index1 = 0;
  std::size_t l2 = 0;
  Degree d2 = 0;
  std::size_t index2 = 0;
  std::string product;
};

struct TrivialMultiplicationReport {
  bool verdict = true;
  std::optional<CyclePair> failing_pair;
  std::size_t pairs_checked = 0;
  /// Pairs whose product lies beyond d_max; homology vanishes there unless
  /// the window is truncated.
  std::size_t pairs_beyond_window = 0;
  bool truncated = false;
  KoszulBounds bounds;
};

/// Products of cycle representatives of positive homological degree are
/// boundaries.
TrivialMultiplicationReport trivial_multiplication_check(const Ideal& I,
                                                         std::optional<KoszulBounds> bounds = {});

struct DerivativeCycleEntry {
  std::size_t l = 0;
  Degree d = 0;
  std::size_t homology_dim = 0;
  /// dim of the homology spanned by cycles with coefficients in d(I)R.
  std::size_t covered_dim = 0;
};

struct DerivativeCycleReport {
  bool verdict = true;
  std::vector<DerivativeCycleEntry> entries;
  bool truncated = false;
};

/// For each bidegree with l >= 1, cycles with all coefficients in d(I)R span
/// the homology modulo boundaries. Throws DomainError unless I is strongly
/// Golod.
DerivativeCycleReport derivative_cycle_check(const Ideal& I, std::optional<KoszulBounds> bounds = {});

}  // namespace golod
