#include "golod/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "golod/ideal_calculus.hpp"
#include "golod/resolution.hpp"

namespace golod {
namespace {

// l-subsets of {0..n-1} as bitmasks, in lexicographic order of their
// ascending index lists.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t l) {
  std::vector<std::uint32_t> out;
  auto rec = [&](auto& self, std::size_t start, std::size_t left, std::uint32_t acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) self(self, i + 1, left - 1, acc | (1u << i));
  };
  rec(rec, 0, l, 0);
  return out;
}

Degree subset_degree(const Ring& ring, std::uint32_t s) {
  Degree d = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (s >> i & 1u) d += ring.weights()[i];
  return d;
}

linalg::SparseVector accumulate(std::map<std::size_t, Rational>& acc) {
  linalg::SparseVector out;
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, std::move(c));
  return out;
}

const KoszulComplex::Block* find_block(const KoszulComplex::Strand& s, std::uint32_t subset) {
  for (const auto& b : s.blocks)
    if (b.subset == subset) return &b;
  return nullptr;
}

}  // namespace

KoszulBounds default_koszul_bounds(const Ideal& I) {
  Resolution res = minimal_free_resolution(I);
  return {I.ring()->size(), res.max_shift() + I.ring()->max_weight()};
}

KoszulComplex::KoszulComplex(const Ideal& I) {
  if (I.is_unit()) throw ImproperIdeal("the unit ideal is not proper");
  R_ = std::make_unique<QuotientRing>(I);
}

// std::map nodes are stable, so references returned here survive later
// insertions.
KoszulComplex::Data& KoszulComplex::data(std::size_t l, Degree d) {
  auto it = cache_.find({l, d});
  if (it != cache_.end()) return it->second;
  Data D;
  D.strand.l = l;
  D.strand.d = d;
  if (l <= n()) {
    for (std::uint32_t s : subsets(n(), l)) {
      Degree e = d - subset_degree(*ring(), s);
      if (e < 0) continue;
      std::size_t size = R_->dim(e);
      if (size == 0) continue;
      D.strand.blocks.push_back({s, e, D.strand.dim, size});
      D.strand.dim += size;
    }
  }
  return cache_.emplace(std::make_pair(l, d), std::move(D)).first->second;
}

const KoszulComplex::Strand& KoszulComplex::strand(std::size_t l, Degree d) { return data(l, d).strand; }

std::pair<const KoszulComplex::Block*, std::size_t> KoszulComplex::locate(const Strand& s,
                                                                          std::size_t index) const {
  auto it = std::upper_bound(s.blocks.begin(), s.blocks.end(), index,
                             [](std::size_t i, const Block& b) { return i < b.offset; });
  const Block& b = *std::prev(it);
  return {&b, index - b.offset};
}

const std::vector<linalg::SparseVector>& KoszulComplex::differential(std::size_t l, Degree d) {
  Data& D = data(l, d);
  if (D.differential) return *D.differential;
  std::vector<linalg::SparseVector> cols(D.strand.dim);
  if (l > 0) {
    const Strand& target = data(l - 1, d).strand;
    for (const auto& blk : D.strand.blocks) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n(); ++i)
        if (blk.subset >> i & 1u) members.push_back(i);
      for (std::size_t k = 0; k < blk.size; ++k) {
        std::map<std::size_t, Rational> acc;
        for (std::size_t p = 0; p < members.size(); ++p) {
          std::size_t i = members[p];
          const Block* tb = find_block(target, blk.subset & ~(1u << i));
          if (!tb) continue;
          Rational sign = p % 2 == 0 ? 1 : -1;
          for (const auto& [idx, c] : R_->multiply(blk.coeff_degree, k, ring()->variable(i)))
            acc[tb->offset + idx] += sign * c;
        }
        cols[blk.offset + k] = accumulate(acc);
      }
    }
  }
  D.differential = std::move(cols);
  return *D.differential;
}

const linalg::Echelon& KoszulComplex::boundaries(std::size_t l, Degree d) {
  Data& D = data(l, d);
  if (D.boundaries) return *D.boundaries;
  linalg::Echelon e(D.strand.dim);
  if (l + 1 <= n())
    for (const auto& col : differential(l + 1, d)) e.insert(col);
  D.boundaries = std::move(e);
  return *D.boundaries;
}

void KoszulComplex::compute_homology(std::size_t l, Degree d) {
  Data& D = data(l, d);
  if (D.reps) return;
  linalg::KernelResult ker = linalg::kernel(differential(l, d));
  linalg::Echelon span = boundaries(l, d);
  std::vector<linalg::SparseVector> reps;
  for (auto& z : ker.basis)
    if (span.insert(z)) reps.push_back(std::move(z));
  D.cycle_dim = ker.basis.size();
  D.reps = std::move(reps);
}

const std::vector<linalg::SparseVector>& KoszulComplex::cycle_representatives(std::size_t l, Degree d) {
  compute_homology(l, d);
  return *data(l, d).reps;
}

std::size_t KoszulComplex::cycle_dim(std::size_t l, Degree d) {
  compute_homology(l, d);
  return data(l, d).cycle_dim;
}

linalg::SparseVector KoszulComplex::apply_differential(std::size_t l, Degree d,
                                                       const linalg::SparseVector& v) {
  const auto& cols = differential(l, d);
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : v)
    for (const auto& [i, e] : cols.at(k)) acc[i] += c * e;
  return accumulate(acc);
}

linalg::SparseVector KoszulComplex::wedge(std::size_t la, Degree da, const linalg::SparseVector& a,
                                          std::size_t lb, Degree db, const linalg::SparseVector& b) {
  if (la + lb > n()) return {};
  const Strand& sa = strand(la, da);
  const Strand& sb = strand(lb, db);
  const Strand& st = strand(la + lb, da + db);
  std::map<std::size_t, Rational> acc;
  for (const auto& [ia, ca] : a) {
    auto [ba, ka] = locate(sa, ia);
    for (const auto& [ib, cb] : b) {
      auto [bb, kb] = locate(sb, ib);
      if (ba->subset & bb->subset) continue;
      int inversions = 0;
      for (std::size_t q = 0; q < n(); ++q)
        if (bb->subset >> q & 1u) inversions += std::popcount(ba->subset >> (q + 1));
      const Block* tb = find_block(st, ba->subset | bb->subset);
      if (!tb) continue;
      Monomial m = R_->basis(ba->coeff_degree).at(ka) * R_->basis(bb->coeff_degree).at(kb);
      Rational c = ca * cb;
      if (inversions % 2) c = -c;
      for (const auto& [i, e] : R_->reduce(m)) acc[tb->offset + i] += c * e;
    }
  }
  return accumulate(acc);
}

std::string KoszulComplex::to_string(std::size_t l, Degree d, const linalg::SparseVector& v) {
  const Strand& s = strand(l, d);
  std::ostringstream os;
  bool first = true;
  for (const auto& blk : s.blocks) {
    linalg::SparseVector local;
    for (const auto& [i, c] : v)
      if (i >= blk.offset && i < blk.offset + blk.size) local.emplace_back(i - blk.offset, c);
    if (local.empty()) continue;
    Polynomial p = R_->from_coordinates(blk.coeff_degree, local);
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")*e{";
    bool f2 = true;
    for (std::size_t i = 0; i < n(); ++i)
      if (blk.subset >> i & 1u) {
        os << (f2 ? "" : ",") << i + 1;
        f2 = false;
      }
    os << "}";
  }
  return first ? "0" : os.str();
}

std::size_t HomologySummary::dim(std::size_t l, Degree d) const {
  for (const auto& r : records)
    if (r.l == l && r.d == d) return r.dim;
  return 0;
}

std::size_t HomologySummary::total(std::size_t l) const {
  std::size_t t = 0;
  for (const auto& r : records)
    if (r.l == l) t += r.dim;
  return t;
}

HomologySummary koszul_homology(KoszulComplex& K, const KoszulBounds& bounds) {
  if (bounds.d_max < 0) throw DomainError("internal degree bound must be non-negative");
  HomologySummary out;
  out.bounds = bounds;
  const std::size_t top = std::min(bounds.l_max, K.n());
  for (std::size_t l = 0; l <= top; ++l)
    for (Degree d = 0; d <= bounds.d_max; ++d) {
      const auto& reps = K.cycle_representatives(l, d);
      if (reps.empty()) continue;
      HomologyRecord rec{l, d, reps.size(), {}};
      for (const auto& z : reps) rec.cycles.push_back(K.to_string(l, d, z));
      out.records.push_back(std::move(rec));
      if (d == bounds.d_max || (l == bounds.l_max && l < K.n())) out.truncated = true;
    }
  return out;
}

HomologySummary koszul_homology(const Ideal& I, std::optional<KoszulBounds> bounds) {
  KoszulBounds b = bounds ? *bounds : default_koszul_bounds(I);
  KoszulComplex K(I);
  return koszul_homology(K, b);
}

TrivialMultiplicationReport trivial_multiplication_check(const Ideal& I,
                                                         std::optional<KoszulBounds> bounds) {
  TrivialMultiplicationReport report;
  report.bounds = bounds ? *bounds : default_koszul_bounds(I);
  KoszulComplex K(I);
  HomologySummary summary = koszul_homology(K, report.bounds);
  report.truncated = summary.truncated;

  std::vector<std::pair<std::size_t, Degree>> classes;
  for (const auto& r : summary.records)
    if (r.l >= 1) classes.emplace_back(r.l, r.d);

  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a; b < classes.size(); ++b) {
      auto [l1, d1] = classes[a];
      auto [l2, d2] = classes[b];
      const std::size_t l = l1 + l2;
      const Degree d = d1 + d2;
      if (l > K.n()) continue;
      const auto& za = K.cycle_representatives(l1, d1);
      const auto& zb = K.cycle_representatives(l2, d2);
      for (std::size_t i = 0; i < za.size(); ++i)
        for (std::size_t j = (a == b ? i : 0); j < zb.size(); ++j) {
          if (d > report.bounds.d_max || l > report.bounds.l_max) {
            ++report.pairs_beyond_window;
            continue;
          }
          ++report.pairs_checked;
          linalg::SparseVector prod = K.wedge(l1, d1, za[i], l2, d2, zb[j]);
          if (!K.boundaries(l, d).contains(prod)) {
            report.verdict = false;
            report.failing_pair = CyclePair{l1, d1, i, l2, d2, j, K.to_string(l, d, prod)};
            return report;
          }
        }
    }
  return report;
}

DerivativeCycleReport derivative_cycle_check(const Ideal& I, std::optional<KoszulBounds> bounds) {
  if (!strongly_golod(I).verdict)
    throw DomainError("derivative cycle check requires a strongly Golod ideal");
  KoszulBounds b = bounds ? *bounds : default_koszul_bounds(I);
  KoszulComplex K(I);
  HomologySummary summary = koszul_homology(K, b);
  const QuotientRing& R = K.quotient();

  std::vector<Polynomial> dgens;
  if (!I.is_zero())
    for (auto& p : derivative_generators(I)) dgens.push_back(std::move(p.value));

  // Basis of the image of d(I) in R_e.
  std::map<Degree, std::vector<linalg::SparseVector>> dpiece;
  auto piece = [&](Degree e) -> const std::vector<linalg::SparseVector>& {
    auto it = dpiece.find(e);
    if (it != dpiece.end()) return it->second;
    linalg::Echelon span(R.dim(e));
    std::vector<linalg::SparseVector> basis;
    for (const auto& g : dgens) {
      Degree dg = g.degree();
      for (const auto& m : K.ring()->monomials_of_degree(e - dg)) {
        linalg::SparseVector v = R.coordinates(g.mul_term(1, m), e);
        if (span.insert(v)) basis.push_back(std::move(v));
      }
    }
    return dpiece.emplace(e, std::move(basis)).first->second;
  };

  DerivativeCycleReport report;
  report.truncated = summary.truncated;
  for (const auto& rec : summary.records) {
    if (rec.l == 0) continue;
    const auto& s = K.strand(rec.l, rec.d);
    std::vector<linalg::SparseVector> W;
    for (const auto& blk : s.blocks)
      for (const auto& v : piece(blk.coeff_degree)) {
        linalg::SparseVector w;
        for (const auto& [i, c] : v) w.emplace_back(blk.offset + i, c);
        W.push_back(std::move(w));
      }
    std::vector<linalg::SparseVector> images;
    for (const auto& w : W) images.push_back(K.apply_differential(rec.l, rec.d, w));
    linalg::Echelon span = K.boundaries(rec.l, rec.d);
    const std::size_t base = span.rank();
    for (const auto& coeffs : linalg::kernel(images).basis) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [k, c] : coeffs)
        for (const auto& [i, e] : W[k]) acc[i] += c * e;
      linalg::SparseVector z;
      for (auto& [i, c] : acc)
        if (c != 0) z.emplace_back(i, std::move(c));
      span.insert(z);
    }
    DerivativeCycleEntry entry{rec.l, rec.d, rec.dim, span.rank() - base};
    if (entry.covered_dim != entry.homology_dim) report.verdict = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace golod
