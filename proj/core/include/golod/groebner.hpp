#pragma once

// Buchberger's algorithm for submodules of graded free modules S^r.
// Ideals are the rank-one case; see ideal.hpp for the ideal-level API.

#include <cstdint>
#include <vector>

#include "golod/ring.hpp"

namespace golod {

struct ModuleTerm {
  Rational coeff;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Element of S^r: terms sorted strictly descending in a ModuleOrder.
using ModuleVector = std::vector<ModuleTerm>;

/// Term order on S^r with degree shifts deg(e_c) = shifts[c].
///
/// Components below `block` form an elimination block: any term in them is
/// larger than every term outside. Inside a block terms compare by shifted
/// weighted degree (when the ring order is degree compatible), then by the
/// ring order on monomials, then by component (lower index is larger).
class ModuleOrder {
 public:
  explicit ModuleOrder(RingPtr ring, std::vector<Degree> shifts = {0}, std::size_t block = 0);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<Degree>& shifts() const { return shifts_; }
  std::size_t block() const { return block_; }
  bool ideal_case() const { return shifts_.size() == 1; }

  Degree degree(const Monomial& m, std::uint32_t comp) const {
    return ring_->degree(m) + shifts_[comp];
  }
  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

  /// Sorts, merges and drops zero terms.
  void normalize(ModuleVector& v) const;
  /// Shifted degree if every term has the same one.
  std::optional<Degree> homogeneous_degree(const ModuleVector& v) const;

 private:
  RingPtr ring_;
  std::vector<Degree> shifts_;
  std::size_t block_;
  bool degree_first_;
};

ModuleVector to_module_vector(const Polynomial& p, std::uint32_t comp = 0);
Polynomial component(const RingPtr& ring, const ModuleVector& v, std::uint32_t comp);

/// Statistics of the last Buchberger run on this thread (for benchmarks).
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};
GroebnerStats last_groebner_stats();

/// Reduced Gröbner basis (monic, sorted descending by leading term).
std::vector<ModuleVector> groebner_basis(const ModuleOrder& order, std::vector<ModuleVector> gens);

/// Fully reduced remainder of v against a Gröbner basis.
ModuleVector normal_form(const ModuleOrder& order, const ModuleVector& v,
                         const std::vector<ModuleVector>& basis);

/// Generators of the syzygy module of homogeneous elements of S^r (given
/// with the shifts of `order`). The result lives in S^s, s = elems.size(),
/// with shifts equal to the degrees of the elements, and is minimal.
std::vector<ModuleVector> syzygy_module(const ModuleOrder& order,
                                        const std::vector<ModuleVector>& elems);

/// Minimal homogeneous generating subset of the submodule spanned by `gens`,
/// chosen greedily in order of increasing degree (stable within a degree).
/// Throws NotHomogeneous for inhomogeneous input.
std::vector<ModuleVector> minimal_generators(const ModuleOrder& order,
                                             const std::vector<ModuleVector>& gens);

/// Indices into `gens` of the subset minimal_generators would keep.
std::vector<std::size_t> minimal_generator_indices(const ModuleOrder& order,
                                                   const std::vector<ModuleVector>& gens);

}  // namespace golod
