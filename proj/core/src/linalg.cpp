#include "golod/linalg.hpp"

#include <algorithm>
#include <map>

namespace golod::linalg {
namespace {

using Work = std::map<std::size_t, Rational>;

// work -= c * row, skipping zero cleanup (handled by the caller's sweep).
void subtract(Work& work, const Rational& c, const SparseVector& row) {
  for (const auto& [idx, val] : row) {
    auto [it, inserted] = work.try_emplace(idx);
    it->second -= c * val;
  }
}

SparseVector to_sparse(const Work& work) {
  SparseVector out;
  out.reserve(work.size());
  for (const auto& [idx, val] : work)
    if (val != 0) out.emplace_back(idx, val);
  return out;
}

}  // namespace

SparseVector scaled(const SparseVector& v, const Rational& c) {
  SparseVector out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = c * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool is_zero(const SparseVector& v) {
  for (const auto& e : v)
    if (e.second != 0) return false;
  return true;
}

const Echelon::Row* Echelon::row_for_pivot(std::size_t idx) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), std::make_pair(idx, std::size_t{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == pivots_.end() || it->first != idx) return nullptr;
  return &rows_[it->second];
}

SparseVector Echelon::reduce(const SparseVector& v) const {
  Work work(v.begin(), v.end());
  auto it = work.begin();
  while (it != work.end()) {
    if (it->second == 0) {
      it = work.erase(it);
      continue;
    }
    const Row* row = row_for_pivot(it->first);
    if (!row) {
      ++it;
      continue;
    }
    std::size_t key = it->first;
    Rational c = it->second;
    subtract(work, c, row->vec);
    it = work.erase(work.find(key));
  }
  return to_sparse(work);
}

bool Echelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Rational inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  std::size_t pivot = r.front().first;
  if (pivot >= dim_) dim_ = pivot + 1;
  rows_.push_back({std::move(r)});
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), std::make_pair(pivot, std::size_t{0}));
  pivots_.insert(pos, {pivot, rows_.size() - 1});
  return true;
}

KernelResult kernel(const std::vector<SparseVector>& columns) {
  struct Row {
    SparseVector vec;
    SparseVector tag;
  };
  std::vector<Row> rows;
  std::map<std::size_t, std::size_t> pivot_row;
  KernelResult result;

  for (std::size_t j = 0; j < columns.size(); ++j) {
    Work work(columns[j].begin(), columns[j].end());
    Work tag;
    tag.emplace(j, Rational(1));
    auto it = work.begin();
    while (it != work.end()) {
      if (it->second == 0) {
        it = work.erase(it);
        continue;
      }
      auto p = pivot_row.find(it->first);
      if (p == pivot_row.end()) {
        ++it;
        continue;
      }
      const Row& row = rows[p->second];
      std::size_t key = it->first;
      Rational c = it->second;
      subtract(work, c, row.vec);
      subtract(tag, c, row.tag);
      it = work.erase(work.find(key));
    }
    SparseVector residual = to_sparse(work);
    SparseVector t = to_sparse(tag);
    if (residual.empty()) {
      result.basis.push_back(std::move(t));
      continue;
    }
    Rational inv = 1 / residual.front().second;
    for (auto& e : residual) e.second *= inv;
    for (auto& e : t) e.second *= inv;
    pivot_row.emplace(residual.front().first, rows.size());
    rows.push_back({std::move(residual), std::move(t)});
  }
  result.rank = rows.size();
  return result;
}

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace golod::linalg
