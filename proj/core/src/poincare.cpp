#include "golod/poincare.hpp"

#include <algorithm>
#include <sstream>

#include "golod/quotient.hpp"
#include "golod/resolution.hpp"

namespace golod {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("series coefficient overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("series coefficient overflows 64 bits");
  return r;
}

// Graded free R-module with generators in the given (ascending) degrees.
// The degree-d strand is the concatenation of R_{d - g_c} over generators c.
class FreeModule {
 public:
  struct Block {
    std::size_t gen;
    Degree coeff_degree;
    std::size_t offset;
    std::size_t size;
  };

  FreeModule(const QuotientRing& R, std::vector<Degree> gens) : R_(&R), gens_(std::move(gens)) {}

  const std::vector<Degree>& gens() const { return gens_; }

  const std::vector<Block>& layout(Degree d) {
    auto it = layouts_.find(d);
    if (it != layouts_.end()) return it->second;
    std::vector<Block> blocks;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < gens_.size(); ++c) {
      Degree e = d - gens_[c];
      if (e < 0) continue;
      std::size_t size = R_->dim(e);
      if (size == 0) continue;
      blocks.push_back({c, e, offset, size});
      offset += size;
    }
    return layouts_.emplace(d, std::move(blocks)).first->second;
  }

  std::size_t dim(Degree d) {
    const auto& l = layout(d);
    return l.empty() ? 0 : l.back().offset + l.back().size;
  }

  const Block* block_of(Degree d, std::size_t gen) {
    for (const auto& b : layout(d))
      if (b.gen == gen) return &b;
    return nullptr;
  }

  /// v ∈ F_e times a monomial m, in F_{e + deg m}.
  linalg::SparseVector multiply(Degree e, const linalg::SparseVector& v, const Monomial& m) {
    const Degree target = e + R_->ring()->degree(m);
    const auto& src = layout(e);
    std::map<std::size_t, Rational> acc;
    std::size_t b = 0;
    for (const auto& [idx, c] : v) {
      while (idx >= src[b].offset + src[b].size) ++b;
      const Block* tb = block_of(target, src[b].gen);
      if (!tb) continue;
      for (const auto& [i, x] : R_->multiply(src[b].coeff_degree, idx - src[b].offset, m))
        acc[tb->offset + i] += c * x;
    }
    linalg::SparseVector out;
    for (auto& [i, c] : acc)
      if (c != 0) out.emplace_back(i, std::move(c));
    return out;
  }

 private:
  const QuotientRing* R_;
  std::vector<Degree> gens_;
  std::map<Degree, std::vector<Block>> layouts_;
};

}  // namespace

// ---------------------------------------------------------------------------
// BigradedSeries

std::int64_t BigradedSeries::at(std::size_t i, Degree d) const {
  auto it = coeffs_.find({i, d});
  return it == coeffs_.end() ? 0 : it->second;
}

void BigradedSeries::set(std::size_t i, Degree d, std::int64_t value) {
  if (i > i_max_ || d < 0 || d > d_max_) throw DomainError("coefficient outside the series window");
  if (value < 0) throw DomainError("series coefficients must be non-negative");
  if (value == 0)
    coeffs_.erase({i, d});
  else
    coeffs_[{i, d}] = value;
}

std::vector<std::int64_t> BigradedSeries::totals() const {
  std::vector<std::int64_t> t(i_max_ + 1, 0);
  for (const auto& [k, v] : coeffs_) t[k.first] = checked_add(t[k.first], v);
  return t;
}

std::string BigradedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    auto [i, d] = k;
    std::vector<std::string> parts;
    if (v != 1 || (i == 0 && d == 0)) parts.push_back(std::to_string(v));
    if (i > 0) parts.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    if (d > 0) parts.push_back(d == 1 ? "u" : "u^" + std::to_string(d));
    for (std::size_t p = 0; p < parts.size(); ++p) os << (p ? "*" : "") << parts[p];
  }
  if (first) os << "0";
  os << " + O(t^" << i_max_ + 1 << ", u^" << d_max_ + 1 << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Serre bound

BigradedSeries serre_bound_from_homology(const RingPtr& ring, const HomologySummary& h,
                                         std::size_t i_max, Degree d_max) {
  const std::size_t n = ring->size();
  const auto D = static_cast<std::size_t>(d_max);
  std::vector<std::vector<std::int64_t>> N(i_max + 1, std::vector<std::int64_t>(D + 1, 0));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::size_t size = 0;
    Degree w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) {
        ++size;
        w += ring->weights()[i];
      }
    if (size <= i_max && w <= d_max) ++N[size][static_cast<std::size_t>(w)];
  }

  std::vector<std::vector<std::int64_t>> Q(i_max + 1, std::vector<std::int64_t>(D + 1, 0));
  for (std::size_t i = 0; i <= i_max; ++i)
    for (std::size_t d = 0; d <= D; ++d) {
      std::int64_t q = N[i][d];
      for (const auto& r : h.records) {
        if (r.l == 0 || r.l + 1 > i || r.d > static_cast<Degree>(d)) continue;
        q = checked_add(q, checked_mul(static_cast<std::int64_t>(r.dim),
                                       Q[i - r.l - 1][d - static_cast<std::size_t>(r.d)]));
      }
      Q[i][d] = q;
    }

  BigradedSeries out(i_max, d_max);
  for (std::size_t i = 0; i <= i_max; ++i)
    for (std::size_t d = 0; d <= D; ++d) out.set(i, static_cast<Degree>(d), Q[i][d]);
  return out;
}

SerreBound serre_bound_series(const Ideal& I, std::size_t i_max, Degree d_max) {
  if (d_max < 0) throw DomainError("internal degree bound must be non-negative");
  Resolution res = minimal_free_resolution(I);
  Degree window = std::min(d_max, res.max_shift() + I.ring()->max_weight());
  KoszulComplex K(I);
  HomologySummary h = koszul_homology(K, {I.ring()->size(), window});
  return {serre_bound_from_homology(I.ring(), h, i_max, d_max), h.truncated && window < d_max};
}

std::vector<std::int64_t> serre_bound_total(std::size_t n, const std::vector<std::int64_t>& h,
                                            std::size_t i_max) {
  std::vector<std::int64_t> num(i_max + 1, 0);
  std::int64_t binom = 1;
  for (std::size_t k = 0; k <= std::min(n, i_max); ++k) {
    num[k] = binom;
    binom = binom * static_cast<std::int64_t>(n - k) / static_cast<std::int64_t>(k + 1);
  }
  std::vector<std::int64_t> q(i_max + 1, 0);
  for (std::size_t i = 0; i <= i_max; ++i) {
    std::int64_t v = num[i];
    for (std::size_t l = 1; l < h.size() && l + 1 <= i; ++l)
      v = checked_add(v, checked_mul(h[l], q[i - l - 1]));
    q[i] = v;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Actual series

ActualPoincare actual_poincare(const Ideal& I, std::size_t i_max, Degree d_max) {
  if (d_max < 0) throw DomainError("internal degree bound must be non-negative");
  if (I.is_unit()) throw ImproperIdeal("the unit ideal is not proper");
  QuotientRing R(I);
  const RingPtr& ring = I.ring();
  ActualPoincare out{BigradedSeries(i_max, d_max), false};

  FreeModule current(R, {0});
  std::vector<linalg::SparseVector> images;  // images of the generators of `current`
  std::unique_ptr<FreeModule> previous;

  for (std::size_t i = 0;; ++i) {
    for (Degree g : current.gens())
      if (g <= d_max) out.series.set(i, g, out.series.at(i, g) + 1);
    if (i == i_max) break;

    std::vector<Degree> next_gens;
    std::vector<linalg::SparseVector> next_images;
    std::map<Degree, std::vector<linalg::SparseVector>> kernels;
    for (Degree d = 0; d <= d_max; ++d) {
      std::vector<linalg::SparseVector> ker;
      const std::size_t dim = current.dim(d);
      if (i == 0) {
        if (d >= 1)
          for (std::size_t k = 0; k < dim; ++k) ker.push_back({{k, Rational(1)}});
      } else {
        std::vector<linalg::SparseVector> cols;
        cols.reserve(dim);
        for (const auto& blk : current.layout(d)) {
          const Degree g = current.gens()[blk.gen];
          for (std::size_t k = 0; k < blk.size; ++k)
            cols.push_back(previous->multiply(g, images[blk.gen], R.basis(blk.coeff_degree)[k]));
        }
        ker = linalg::kernel(cols).basis;
      }

      linalg::Echelon decomposable(dim);
      for (std::size_t j = 0; j < ring->size(); ++j) {
        auto lower = kernels.find(d - ring->weights()[j]);
        if (lower == kernels.end()) continue;
        for (const auto& v : lower->second)
          decomposable.insert(current.multiply(lower->first, v, ring->variable(j)));
      }
      for (const auto& z : ker) {
        if (!decomposable.insert(z)) continue;
        for (const auto& blk : current.layout(d))
          if (blk.coeff_degree == 0)
            for (const auto& [idx, c] : z)
              if (idx >= blk.offset && idx < blk.offset + blk.size)
                throw Error("internal error: non-minimal differential in the resolution of K");
        next_gens.push_back(d);
        next_images.push_back(z);
      }
      if (!ker.empty()) kernels.emplace(d, std::move(ker));
    }

    previous = std::make_unique<FreeModule>(std::move(current));
    current = FreeModule(R, next_gens);
    images = std::move(next_images);
    // No generators inside the window: every later Tor vanishes there too.
    if (next_gens.empty()) break;
  }
  for (const auto& [k, v] : out.series.coefficients())
    if (k.second == d_max && v != 0) out.boundary_nonzero = true;
  return out;
}

// ---------------------------------------------------------------------------
// Verdict

std::string to_string(GolodStatus s) {
  switch (s) {
    case GolodStatus::GolodUpToTruncation:
      return "GOLOD-up-to-truncation";
    case GolodStatus::NotGolod:
      return "NOT-GOLOD";
    case GolodStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

GolodVerdict golod_verdict(const Ideal& I, PoincareBounds bounds) {
  GolodVerdict v;
  v.i_max = bounds.i_max;
  if (bounds.d_max) {
    v.d_max = *bounds.d_max;
  } else {
    Resolution res = minimal_free_resolution(I);
    Degree step = std::max<Degree>(res.max_shift(), I.ring()->max_weight());
    v.d_max = static_cast<Degree>(bounds.i_max) * step;
  }
  SerreBound bound = serre_bound_series(I, v.i_max, v.d_max);
  ActualPoincare actual = actual_poincare(I, v.i_max, v.d_max);
  v.bound = bound.series;
  v.actual = actual.series;
  v.homology_truncated = bound.truncated;
  v.actual_boundary_nonzero = actual.boundary_nonzero;
  for (const auto& g : I.generators())
    for (const auto& t : g.terms())
      if (t.mono.total_degree() < 2) v.minimal_presentation = false;

  for (std::size_t i = 0; i <= v.i_max; ++i)
    for (Degree d = 0; d <= v.d_max; ++d) {
      std::int64_t b = v.bound.at(i, d), a = v.actual.at(i, d);
      if (a > b) throw Error("internal error: actual Poincaré coefficient exceeds the Serre bound");
      if (a != b && !v.first_discrepancy) v.first_discrepancy = BigradedDiscrepancy{i, d, b, a};
    }
  auto tb = v.bound.totals(), ta = v.actual.totals();
  for (std::size_t i = 0; i <= v.i_max; ++i)
    if (tb[i] != ta[i]) {
      v.first_total_discrepancy = TotalDiscrepancy{i, tb[i], ta[i]};
      break;
    }

  if (v.first_discrepancy)
    v.status = GolodStatus::NotGolod;
  else if (v.homology_truncated)
    v.status = GolodStatus::Inconclusive;
  else
    v.status = GolodStatus::GolodUpToTruncation;
  return v;
}

}  // namespace golod
