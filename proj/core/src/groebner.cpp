#include "golod/groebner.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "golod/linalg.hpp"

namespace golod {

// ---------------------------------------------------------------------------
// ModuleOrder

ModuleOrder::ModuleOrder(RingPtr ring, std::vector<Degree> shifts, std::size_t block)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), block_(block) {
  if (shifts_.empty()) throw DomainError("a module order needs at least one component");
  if (block_ > shifts_.size()) throw DomainError("elimination block exceeds module rank");
  degree_first_ = ring_->order().kind == OrderKind::WeightedGrevlex;
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                         std::uint32_t cb) const {
  bool ba = ca < block_, bb = cb < block_;
  if (ba != bb) return ba ? 1 : -1;
  if (degree_first_) {
    Degree da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da < db ? -1 : 1;
  }
  int c = ring_->compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

void ModuleOrder::normalize(ModuleVector& v) const {
  std::sort(v.begin(), v.end(),
            [this](const ModuleTerm& a, const ModuleTerm& b) { return compare(a, b) > 0; });
  ModuleVector out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  v = std::move(out);
}

std::optional<Degree> ModuleOrder::homogeneous_degree(const ModuleVector& v) const {
  if (v.empty()) return std::nullopt;
  Degree d = degree(v.front().mono, v.front().comp);
  for (const auto& t : v)
    if (degree(t.mono, t.comp) != d) return std::nullopt;
  return d;
}

ModuleVector to_module_vector(const Polynomial& p, std::uint32_t comp) {
  ModuleVector v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.coeff, t.mono, comp});
  return v;
}

Polynomial component(const RingPtr& ring, const ModuleVector& v, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.coeff, t.mono});
  return Polynomial(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

thread_local GroebnerStats g_stats;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= 1u << i;
  return mask;
}

// a[from..] - c * m * g
ModuleVector sub_mul(const ModuleOrder& ord, const ModuleVector& a, std::size_t from,
                     const Rational& c, const Monomial& m, const ModuleVector& g) {
  ModuleVector out;
  out.reserve(a.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == a.size() ? -1 : ord.compare(a[i].mono, a[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({-c * g[j].coeff, gm, g[j].comp});
      ++j;
    } else {
      Rational s = a[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(ModuleVector& v) {
  if (v.empty() || v.front().coeff == 1) return;
  Rational inv = 1 / v.front().coeff;
  for (auto& t : v) t.coeff *= inv;
}

struct Element {
  ModuleVector vec;
  std::uint32_t mask = 0;
  bool active = true;
  const Monomial& lm() const { return vec.front().mono; }
  std::uint32_t comp() const { return vec.front().comp; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  Degree degree;
};

class Buchberger {
 public:
  explicit Buchberger(const ModuleOrder& ord) : ord_(ord) {}

  std::vector<ModuleVector> run(std::vector<ModuleVector> gens) {
    for (auto& g : gens) ord_.normalize(g);
    std::erase_if(gens, [](const ModuleVector& g) { return g.empty(); });
    // Smaller inputs first keeps early reductions cheap.
    std::stable_sort(gens.begin(), gens.end(), [this](const ModuleVector& a, const ModuleVector& b) {
      return ord_.compare(a.front(), b.front()) < 0;
    });
    for (auto& g : gens) {
      ModuleVector h = top_reduce(std::move(g));
      if (h.empty()) continue;
      make_monic(h);
      add(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.degree < b.degree ||
            (a.degree == b.degree && ord_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0)) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++g_stats.pairs_reduced;
      ModuleVector h = top_reduce(spoly(p));
      if (h.empty()) {
        ++g_stats.zero_reductions;
        continue;
      }
      make_monic(h);
      add(std::move(h));
    }
    return finish();
  }

  // Full reduction against the active elements.
  ModuleVector reduce_full(ModuleVector v) const {
    ModuleVector out;
    std::size_t pos = 0;
    while (pos < v.size()) {
      const ModuleTerm& t = v[pos];
      const Element* r = find_reducer(t.mono, t.comp, nullptr);
      if (!r) {
        out.push_back(v[pos]);
        ++pos;
        continue;
      }
      Rational c = t.coeff / r->vec.front().coeff;
      Monomial m = t.mono.quotient(r->lm());
      v = sub_mul(ord_, v, pos, c, m, r->vec);
      pos = 0;
    }
    return out;
  }

  void load_basis(const std::vector<ModuleVector>& basis) {
    for (const auto& b : basis) {
      if (b.empty()) continue;
      elems_.push_back({b, support_mask(b.front().mono), true});
    }
  }

 private:
  const Element* find_reducer(const Monomial& m, std::uint32_t comp, const Element* skip) const {
    std::uint32_t mask = support_mask(m);
    for (const auto& e : elems_) {
      if (!e.active || &e == skip) continue;
      if (e.comp() != comp || (e.mask & ~mask) != 0) continue;
      if (e.lm().divides(m)) return &e;
    }
    return nullptr;
  }

  ModuleVector top_reduce(ModuleVector v) const {
    while (!v.empty()) {
      const ModuleTerm& t = v.front();
      const Element* r = find_reducer(t.mono, t.comp, nullptr);
      if (!r) break;
      Rational c = t.coeff / r->vec.front().coeff;
      Monomial m = t.mono.quotient(r->lm());
      v = sub_mul(ord_, v, 0, c, m, r->vec);
    }
    return v;
  }

  ModuleVector spoly(const Pair& p) const {
    const Element& f = elems_[p.i];
    const Element& g = elems_[p.j];
    Monomial mf = p.lcm.quotient(f.lm());
    Monomial mg = p.lcm.quotient(g.lm());
    ModuleVector a;
    a.reserve(f.vec.size());
    for (const auto& t : f.vec) a.push_back({t.coeff / f.vec.front().coeff, t.mono * mf, t.comp});
    Rational c = Rational(1) / g.vec.front().coeff;
    return sub_mul(ord_, a, 0, c, mg, g.vec);
  }

  // Gebauer-Moeller installation of a new basis element.
  void add(ModuleVector h) {
    std::size_t hi = elems_.size();
    elems_.push_back({std::move(h), 0, true});
    Element& he = elems_.back();
    he.mask = support_mask(he.lm());
    const Monomial hlm = he.lm();
    const std::uint32_t hc = he.comp();
    const bool ideal = ord_.ideal_case();

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < hi; ++i) {
      const Element& e = elems_[i];
      if (!e.active || e.comp() != hc) continue;
      Monomial l = e.lm().lcm(hlm);
      candidates.push_back({i, hi, l, hc, ord_.degree(l, hc)});
    }
    g_stats.pairs_considered += candidates.size();

    auto coprime = [&](const Pair& p) { return ideal && elems_[p.i].lm().coprime(hlm); };

    std::vector<Pair> kept;
    std::vector<bool> removed(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
      removed[a] = !keep;
    }

    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!coprime(p)) fresh.push_back(p);

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = false;
      if (p.comp == hc && hlm.divides(p.lcm)) {
        Monomial l1 = elems_[p.i].lm().lcm(hlm);
        Monomial l2 = elems_[p.j].lm().lcm(hlm);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) drop = true;
      }
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t i = 0; i < hi; ++i) {
      Element& e = elems_[i];
      if (e.active && e.comp() == hc && hlm.divides(e.lm())) e.active = false;
    }
  }

  std::vector<ModuleVector> finish() {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) active.push_back(i);
    std::vector<ModuleVector> out;
    out.reserve(active.size());
    for (std::size_t idx : active) {
      Element& e = elems_[idx];
      // Tail reduction against the others; leading terms are pairwise
      // non-divisible, so the leading term survives.
      ModuleVector head{e.vec.front()};
      ModuleVector tail(e.vec.begin() + 1, e.vec.end());
      e.active = false;
      ModuleVector rt = reduce_full(std::move(tail));
      e.active = true;
      head.insert(head.end(), rt.begin(), rt.end());
      make_monic(head);
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(), [this](const ModuleVector& a, const ModuleVector& b) {
      return ord_.compare(a.front(), b.front()) > 0;
    });
    return out;
  }

  const ModuleOrder& ord_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerStats last_groebner_stats() { return g_stats; }

std::vector<ModuleVector> groebner_basis(const ModuleOrder& order, std::vector<ModuleVector> gens) {
  g_stats = {};
  for (const auto& g : gens)
    for (const auto& t : g) {
      if (t.comp >= order.rank()) throw DomainError("module component out of range");
      if (t.mono.size() != order.ring()->size()) throw DomainError("monomial length mismatch");
    }
  Buchberger b(order);
  return b.run(std::move(gens));
}

ModuleVector normal_form(const ModuleOrder& order, const ModuleVector& v,
                         const std::vector<ModuleVector>& basis) {
  Buchberger b(order);
  b.load_basis(basis);
  ModuleVector w = v;
  order.normalize(w);
  ModuleVector r = b.reduce_full(std::move(w));
  return r;
}

// ---------------------------------------------------------------------------
// Homogeneous minimal generators

namespace {

struct SliceKey {
  Monomial mono;
  std::uint32_t comp;
  bool operator==(const SliceKey&) const = default;
};
struct SliceKeyHash {
  std::size_t operator()(const SliceKey& k) const { return k.mono.hash() * 31u + k.comp; }
};

class Slice {
 public:
  linalg::SparseVector coords(const ModuleVector& v) {
    linalg::SparseVector out;
    out.reserve(v.size());
    for (const auto& t : v) {
      auto [it, inserted] = index_.try_emplace(SliceKey{t.mono, t.comp}, index_.size());
      out.emplace_back(it->second, t.coeff);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  std::unordered_map<SliceKey, std::size_t, SliceKeyHash> index_;
};

ModuleVector mul_monomial(const ModuleVector& v, const Monomial& m) {
  ModuleVector out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.coeff, t.mono * m, t.comp});
  return out;
}

}  // namespace

std::vector<std::size_t> minimal_generator_indices(const ModuleOrder& order,
                                                   const std::vector<ModuleVector>& gens) {
  struct Item {
    std::size_t index;
    Degree degree;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].empty()) continue;
    auto d = order.homogeneous_degree(gens[i]);
    if (!d) throw NotHomogeneous("minimal generators require homogeneous input");
    items.push_back({i, *d});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.degree < b.degree; });

  std::vector<std::size_t> kept;
  std::size_t pos = 0;
  while (pos < items.size()) {
    Degree d = items[pos].degree;
    Slice slice;
    linalg::Echelon span;
    for (std::size_t k : kept) {
      Degree dk = *order.homogeneous_degree(gens[k]);
      for (const auto& m : order.ring()->monomials_of_degree(d - dk)) {
        span.insert(slice.coords(mul_monomial(gens[k], m)));
      }
    }
    for (; pos < items.size() && items[pos].degree == d; ++pos) {
      // Copies of the input are not normalized by the caller; normalize here.
      ModuleVector g = gens[items[pos].index];
      order.normalize(g);
      if (span.insert(slice.coords(g))) kept.push_back(items[pos].index);
    }
  }
  return kept;
}

std::vector<ModuleVector> minimal_generators(const ModuleOrder& order,
                                             const std::vector<ModuleVector>& gens) {
  std::vector<ModuleVector> out;
  for (std::size_t i : minimal_generator_indices(order, gens)) {
    ModuleVector g = gens[i];
    order.normalize(g);
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Syzygies

std::vector<ModuleVector> syzygy_module(const ModuleOrder& order,
                                        const std::vector<ModuleVector>& elems) {
  const std::size_t r = order.rank();
  const std::size_t s = elems.size();
  std::vector<Degree> elem_degrees;
  elem_degrees.reserve(s);
  for (const auto& e : elems) {
    auto d = order.homogeneous_degree(e);
    if (!d) throw NotHomogeneous("syzygies require nonzero homogeneous elements");
    elem_degrees.push_back(*d);
  }
  if (s == 0) return {};

  std::vector<Degree> shifts = order.shifts();
  shifts.insert(shifts.end(), elem_degrees.begin(), elem_degrees.end());
  ModuleOrder lifted(order.ring(), shifts, r);

  std::vector<ModuleVector> gens;
  gens.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    ModuleVector w = elems[i];
    w.push_back({Rational(1), order.ring()->one(), static_cast<std::uint32_t>(r + i)});
    lifted.normalize(w);
    gens.push_back(std::move(w));
  }
  std::vector<ModuleVector> gb = groebner_basis(lifted, std::move(gens));

  ModuleOrder target(order.ring(), elem_degrees);
  std::vector<ModuleVector> syz;
  for (const auto& g : gb) {
    if (g.front().comp < r) continue;
    ModuleVector v;
    v.reserve(g.size());
    for (const auto& t : g) v.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(t.comp - r)});
    target.normalize(v);
    syz.push_back(std::move(v));
  }
  return minimal_generators(target, syz);
}

}  // namespace golod
