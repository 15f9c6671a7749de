#pragma once

// Minimal graded free resolutions of S/I over S by iterated minimal syzygies.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/linalg.hpp"

namespace golod {

/// 0 <- F_0 <- F_1 <- ... <- F_p with F_0 = S. maps[i - 1] is phi_i : F_i -> F_{i-1},
/// stored with rank F_{i-1} rows and rank F_i columns; column c is the image of
/// the c-th generator of F_i.
struct Resolution {
  RingPtr ring;
  std::vector<std::vector<Degree>> shifts;
  std::vector<PolyMatrix> maps;

  std::size_t length() const { return shifts.size() - 1; }
  std::size_t rank(std::size_t i) const { return i < shifts.size() ? shifts[i].size() : 0; }
  Degree max_shift() const;
};

/// Throws NotHomogeneous or ImproperIdeal. Generators are minimalized and
/// ordered by degree, then by leading term.
Resolution minimal_free_resolution(const Ideal& I);

/// Product of two polynomial matrices (a.cols == b.rows).
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// phi_i ∘ phi_{i+1} = 0 for every i.
bool compositions_vanish(const Resolution& res);
/// No entry of any map is a nonzero constant.
bool is_minimal(const Resolution& res);

/// Degree-d strand of a map between graded free modules: columns indexed by
/// (generator, monomial) pairs of the source, coordinates in the target.
std::vector<linalg::SparseVector> strand_matrix(const RingPtr& ring,
                                                const std::vector<Degree>& source_shifts,
                                                const std::vector<Degree>& target_shifts,
                                                const PolyMatrix& map, Degree d);

struct StrandCheck {
  std::size_t i = 0;
  Degree d = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_rank = 0;
};

struct ExactnessCertificate {
  bool exact = true;
  Degree bound = 0;
  /// Every strand that was compared; failures have kernel_dim != image_rank.
  std::vector<StrandCheck> strands;
};

/// Checks ker phi_i = im phi_{i+1} degreewise for 1 <= i <= p and d <= bound
/// (default: max shift + number of variables).
ExactnessCertificate certify_exactness(const Resolution& res, std::optional<Degree> bound = {});

class BettiTable {
 public:
  using Key = std::pair<std::size_t, Degree>;

  BettiTable() = default;
  explicit BettiTable(std::map<Key, std::size_t> entries) : entries_(std::move(entries)) {}

  const std::map<Key, std::size_t>& entries() const { return entries_; }
  std::size_t at(std::size_t i, Degree d) const;
  /// Rank of F_i.
  std::size_t total(std::size_t i) const;
  std::size_t length() const;

  /// Grid with columns i and rows d - i; zeros shown as '.'.
  std::string to_text() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::size_t> entries_;
};

BettiTable betti_table(const Resolution& res);

}  // namespace golod
