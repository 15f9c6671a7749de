#include "golod/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace golod {

Degree Resolution::max_shift() const {
  Degree m = 0;
  for (const auto& s : shifts)
    for (Degree d : s) m = std::max(m, d);
  return m;
}

Resolution minimal_free_resolution(const Ideal& I) {
  if (!I.is_homogeneous()) throw NotHomogeneous("resolutions require a homogeneous ideal");
  if (I.is_unit()) throw ImproperIdeal("the unit ideal is not proper");
  const RingPtr& ring = I.ring();
  Resolution res{ring, {{0}}, {}};
  if (I.is_zero()) return res;

  std::vector<Polynomial> gens = minimalize(I).generators();
  std::stable_sort(gens.begin(), gens.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });

  std::vector<ModuleVector> elems;
  std::vector<Degree> degrees;
  PolyMatrix phi1{1, gens.size(), {}};
  for (auto& g : gens) {
    degrees.push_back(g.degree());
    elems.push_back(to_module_vector(g));
    phi1.entries.push_back(std::move(g));
  }
  res.shifts.push_back(degrees);
  res.maps.push_back(std::move(phi1));

  while (true) {
    const std::vector<Degree>& src = res.shifts[res.shifts.size() - 2];
    std::vector<ModuleVector> syz = syzygy_module(ModuleOrder(ring, src), elems);
    if (syz.empty()) break;
    if (res.length() >= ring->size())
      throw Error("internal error: resolution longer than the number of variables");
    ModuleOrder here(ring, res.shifts.back());
    PolyMatrix phi{res.shifts.back().size(), syz.size(), {}};
    std::vector<Degree> next;
    phi.entries.resize(phi.rows * phi.cols, Polynomial(ring));
    for (std::size_t c = 0; c < syz.size(); ++c) {
      next.push_back(*here.homogeneous_degree(syz[c]));
      for (std::size_t r = 0; r < phi.rows; ++r)
        phi.entries[r * phi.cols + c] = component(ring, syz[c], static_cast<std::uint32_t>(r));
    }
    res.shifts.push_back(std::move(next));
    res.maps.push_back(std::move(phi));
    elems = std::move(syz);
  }
  return res;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) throw DomainError("matrix dimensions do not match");
  if (a.entries.empty() && b.entries.empty()) return {a.rows, b.cols, {}};
  const RingPtr& ring = a.entries.empty() ? b.entries.front().ring() : a.entries.front().ring();
  PolyMatrix out{a.rows, b.cols, std::vector<Polynomial>(a.rows * b.cols, Polynomial(ring))};
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < b.cols; ++c) {
      Polynomial acc(ring);
      for (std::size_t k = 0; k < a.cols; ++k) acc += a.at(r, k) * b.at(k, c);
      out.entries[r * out.cols + c] = std::move(acc);
    }
  return out;
}

bool compositions_vanish(const Resolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    PolyMatrix m = multiply(res.maps[i], res.maps[i + 1]);
    for (const auto& e : m.entries)
      if (!e.is_zero()) return false;
  }
  return true;
}

bool is_minimal(const Resolution& res) {
  for (const auto& m : res.maps)
    for (const auto& e : m.entries)
      if (!e.is_zero() && e.is_constant()) return false;
  return true;
}

std::vector<linalg::SparseVector> strand_matrix(const RingPtr& ring,
                                                const std::vector<Degree>& source_shifts,
                                                const std::vector<Degree>& target_shifts,
                                                const PolyMatrix& map, Degree d) {
  struct Key {
    std::size_t comp;
    Monomial mono;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mono.hash() * 131u + k.comp; }
  };
  std::unordered_map<Key, std::size_t, KeyHash> target_index;
  for (std::size_t r = 0; r < target_shifts.size(); ++r)
    for (const auto& m : ring->monomials_of_degree(d - target_shifts[r]))
      target_index.emplace(Key{r, m}, target_index.size());

  std::vector<linalg::SparseVector> cols;
  for (std::size_t c = 0; c < source_shifts.size(); ++c)
    for (const auto& m : ring->monomials_of_degree(d - source_shifts[c])) {
      linalg::SparseVector col;
      for (std::size_t r = 0; r < target_shifts.size(); ++r)
        for (const auto& t : map.at(r, c).terms())
          col.emplace_back(target_index.at(Key{r, t.mono * m}), t.coeff);
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      cols.push_back(std::move(col));
    }
  return cols;
}

namespace {

std::size_t strand_dim(const RingPtr& ring, const std::vector<Degree>& shifts, Degree d) {
  std::size_t n = 0;
  for (Degree s : shifts) n += ring->monomials_of_degree(d - s).size();
  return n;
}

}  // namespace

ExactnessCertificate certify_exactness(const Resolution& res, std::optional<Degree> bound) {
  ExactnessCertificate cert;
  cert.bound = bound.value_or(res.max_shift() + static_cast<Degree>(res.ring->size()));
  for (std::size_t i = 1; i <= res.length(); ++i)
    for (Degree d = 0; d <= cert.bound; ++d) {
      std::size_t dim = strand_dim(res.ring, res.shifts[i], d);
      if (dim == 0) continue;
      auto out = strand_matrix(res.ring, res.shifts[i], res.shifts[i - 1], res.maps[i - 1], d);
      std::size_t kernel_dim = dim - linalg::rank(out, 0);
      std::size_t image_rank = 0;
      if (i < res.length()) {
        auto in = strand_matrix(res.ring, res.shifts[i + 1], res.shifts[i], res.maps[i], d);
        image_rank = linalg::rank(in, 0);
      }
      cert.strands.push_back({i, d, kernel_dim, image_rank});
      if (kernel_dim != image_rank) cert.exact = false;
    }
  return cert;
}

std::size_t BettiTable::at(std::size_t i, Degree d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t n = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) n += v;
  return n;
}

std::size_t BettiTable::length() const {
  std::size_t p = 0;
  for (const auto& [k, v] : entries_)
    if (v) p = std::max(p, k.first);
  return p;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "";
  const std::size_t p = length();
  Degree lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    Degree row = k.second - static_cast<Degree>(k.first);
    if (first || row < lo) lo = row;
    if (first || row > hi) hi = row;
    first = false;
  }
  std::vector<std::string> head{""}, totals{"total:"};
  for (std::size_t i = 0; i <= p; ++i) {
    head.push_back(std::to_string(i));
    totals.push_back(std::to_string(total(i)));
  }
  std::vector<std::vector<std::string>> rows{head, totals};
  for (Degree r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (std::size_t i = 0; i <= p; ++i) {
      std::size_t v = at(i, r + static_cast<Degree>(i));
      row.push_back(v ? std::to_string(v) : ".");
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(p + 2, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.insert(0, width[c] - cell.size(), ' ');
      line += (c ? " " : "") + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

BettiTable betti_table(const Resolution& res) {
  std::map<BettiTable::Key, std::size_t> entries;
  for (std::size_t i = 0; i < res.shifts.size(); ++i)
    for (Degree d : res.shifts[i]) ++entries[{i, d}];
  return BettiTable(std::move(entries));
}

}  // namespace golod
