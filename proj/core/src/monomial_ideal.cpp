#include "golod/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace golod {
namespace {

VarSet support(const Monomial& m) {
  VarSet s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s |= VarSet{1} << i;
  return s;
}

VarSet all_vars(std::size_t n) { return n >= 32 ? ~VarSet{0} : (VarSet{1} << n) - 1; }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

// Minimal sets of indices meeting every set in `sets` (all nonempty).
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& sets) {
  std::vector<VarSet> found;
  auto dominated = [&found](VarSet chosen) {
    for (VarSet f : found)
      if ((f & chosen) == f) return true;
    return false;
  };
  std::vector<VarSet> raw;
  auto rec = [&](auto& self, VarSet chosen) -> void {
    if (dominated(chosen)) return;
    for (VarSet s : sets) {
      if (s & chosen) continue;
      for (VarSet rest = s; rest; rest &= rest - 1) self(self, chosen | (rest & -rest));
      return;
    }
    // Supersets of a recorded transversal are pruned; the sweep below
    // removes recorded sets that are not minimal themselves.
    raw.push_back(chosen);
    found.push_back(chosen);
  };
  rec(rec, 0);
  std::sort(raw.begin(), raw.end(), [](VarSet a, VarSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<VarSet> out;
  for (VarSet s : raw) {
    bool minimal = true;
    for (VarSet o : out)
      if ((o & s) == o) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial product_of(const RingPtr& ring, VarSet vars) {
  Monomial m = ring->one();
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (vars >> i & 1u) m.set(i, 1);
  return m;
}

}  // namespace

RingPtr indexed_ring(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return Ring::standard(std::move(names));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.size() != ring_->size()) throw DomainError("monomial length does not match the ring");
  gens_ = minimalize(std::move(generators));
  std::sort(gens_.begin(), gens_.end(), [this](const Monomial& a, const Monomial& b) {
    Degree da = ring_->degree(a), db = ring_->degree(b);
    if (da != db) return da < db;
    return ring_->compare(a, b) > 0;
  });
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& I) {
  if (!I.is_monomial()) throw DomainError("ideal is not generated by monomials");
  std::vector<Monomial> gens;
  for (const auto& g : I.groebner_basis()) gens.push_back(g.leading_monomial());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal MonomialIdeal::prime_power(RingPtr ring, VarSet vars, unsigned k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (vars >> i & 1u) idx.push_back(i);
  std::vector<Monomial> gens;
  Monomial cur = ring->one();
  auto rec = [&](auto& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 >= idx.size()) {
      if (idx.empty()) {
        if (left == 0) gens.push_back(cur);
        return;
      }
      cur.set(idx[pos], left);
      gens.push_back(cur);
      cur.set(idx[pos], 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(idx[pos], e);
      self(self, pos + 1, left - e);
    }
    cur.set(idx[pos], 0);
  };
  rec(rec, 0, k);
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  for (const auto& g : gens_)
    if (g.divides(u)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  require_same_ring(ring_, J.ring_);
  return std::all_of(J.gens_.begin(), J.gens_.end(), [this](const Monomial& u) { return contains(u); });
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> polys;
  for (const auto& g : gens_) polys.push_back(Polynomial::monomial(ring_, g));
  return Ideal(ring_, std::move(polys));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << ring_->monomial_to_string(gens_[i]);
  }
  return os.str();
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens;
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) gens.push_back(u * v);
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens;
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) gens.push_back(u.lcm(v));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
  std::vector<Monomial> gens;
  for (const auto& u : I.generators()) gens.push_back(u.quotient(u.gcd(v)));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw DomainError("colon by the zero ideal is undefined");
  std::optional<MonomialIdeal> acc;
  for (const auto& v : J.generators()) {
    MonomialIdeal c = colon(I, v);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

MonomialIdeal saturate(const MonomialIdeal& I, VarSet vars) {
  std::vector<Monomial> gens;
  for (auto u : I.generators()) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (vars >> i & 1u) u.set(i, 0);
    gens.push_back(u);
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
  if (k < 1) throw DomainError("power exponent must be at least 1");
  MonomialIdeal acc = I;
  for (unsigned e = 1; e < k; ++e) acc = product(acc, I);
  return acc;
}

MonomialGolodReport strongly_golod_monomial(const MonomialIdeal& I) {
  if (I.is_unit()) throw ImproperIdeal("the unit ideal is not proper");
  MonomialGolodReport report;
  const auto& g = I.generators();
  const std::size_t n = I.ring()->size();
  // Cross pairs u < v first, then squares, so a failure that needs two
  // generators is reported as such.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) pairs.emplace_back(a, b);
  for (std::size_t a = 0; a < g.size(); ++a) pairs.emplace_back(a, a);
  for (const auto& [a, b] : pairs) {
    Monomial uv = g[a] * g[b];
    for (std::size_t i = 0; i < n; ++i) {
      if (g[a][i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (g[b][j] == 0) continue;
        Monomial q = uv.quotient(I.ring()->variable(i) * I.ring()->variable(j));
        if (!I.contains(q)) {
          report.verdict = false;
          report.witness = MonomialGolodWitness{g[a], g[b], i, j, q};
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<VarSet> minimal_primes(const MonomialIdeal& I) {
  if (I.is_unit()) return {};
  std::vector<VarSet> supports;
  for (const auto& g : I.generators()) supports.push_back(support(g));
  return minimal_transversals(supports);
}

MonomialIdeal squarefree_symbolic_power(const MonomialIdeal& I, unsigned k) {
  if (!I.is_squarefree()) throw DomainError("squarefree symbolic powers need a squarefree ideal");
  if (k < 1) throw DomainError("symbolic power exponent must be at least 1");
  if (I.is_unit() || I.is_zero()) return I;
  std::optional<MonomialIdeal> acc;
  for (VarSet P : minimal_primes(I)) {
    MonomialIdeal Pk = MonomialIdeal::prime_power(I.ring(), P, k);
    acc = acc ? intersect(*acc, Pk) : Pk;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Graphs

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n) {
  if (n == 0) throw DomainError("a graph needs at least one vertex");
  if (n > kMaxVariables) throw DomainError("graphs are limited to " + std::to_string(kMaxVariables) + " vertices");
  for (auto [i, j] : edges) {
    if (i == j) throw DomainError("loop at vertex " + std::to_string(i + 1));
    if (i >= n || j >= n) throw DomainError("edge endpoint out of range");
    if (i > j) std::swap(i, j);
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("duplicate edge");
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!n) {
      long long count = 0;
      if (first != "n" || !(ls >> count) || count <= 0)
        throw ParseError("expected 'n <count>' header", lineno, 1);
      n = static_cast<std::size_t>(count);
    } else {
      long long i = 0, j = 0;
      try {
        i = std::stoll(first);
      } catch (const std::exception&) {
        throw ParseError("expected an edge 'i j'", lineno, 1);
      }
      if (!(ls >> j)) throw ParseError("expected an edge 'i j'", lineno, 1);
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > *n || static_cast<std::size_t>(j) > *n)
        throw ParseError("vertex out of range 1.." + std::to_string(*n), lineno, 1);
      edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected token '" + extra + "'", lineno, 1);
  }
  if (!n) throw ParseError("missing 'n <count>' header", lineno, 1);
  try {
    return Graph(*n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

bool Graph::has_odd_cycle() const {
  std::vector<std::vector<std::size_t>> adj(n_);
  for (auto [i, j] : edges_) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> color(n_, -1);
  for (std::size_t s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n " << n_ << "\n";
  for (auto [i, j] : edges_) os << i + 1 << " " << j + 1 << "\n";
  return os.str();
}

namespace {

RingPtr cover_ring(const Graph& G, RingPtr ring) {
  if (!ring) return indexed_ring(G.size());
  if (ring->size() < G.size()) throw DomainError("ring has fewer variables than the graph has vertices");
  return ring;
}

}  // namespace

MonomialIdeal vertex_cover_ideal(const Graph& G, RingPtr ring) {
  ring = cover_ring(G, std::move(ring));
  if (G.edges().empty()) throw ImproperIdeal("a graph without edges has the unit ideal as cover ideal");
  std::optional<MonomialIdeal> acc;
  for (auto [i, j] : G.edges()) {
    MonomialIdeal edge(ring, {ring->variable(i), ring->variable(j)});
    acc = acc ? intersect(*acc, edge) : edge;
  }
  return *acc;
}

MonomialIdeal vertex_cover_ideal_from_covers(const Graph& G, RingPtr ring) {
  ring = cover_ring(G, std::move(ring));
  if (G.edges().empty()) throw ImproperIdeal("a graph without edges has the unit ideal as cover ideal");
  std::vector<VarSet> edges;
  for (auto [i, j] : G.edges()) edges.push_back((VarSet{1} << i) | (VarSet{1} << j));
  std::vector<Monomial> gens;
  for (VarSet c : minimal_transversals(edges)) gens.push_back(product_of(ring, c));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal squarefree_generated_ideal(std::size_t n, std::size_t d) {
  if (d == 0 || d > n) throw DomainError("need 0 < d <= n");
  RingPtr ring = indexed_ring(n);
  std::vector<Monomial> gens;
  for (VarSet s = 0; s <= all_vars(n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == d) gens.push_back(product_of(ring, s));
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<NamedCheck> odd_cycle_suite(std::size_t n, unsigned max_k) {
  if (n < 3 || n % 2 == 0) throw DomainError("odd cycle suite needs an odd n >= 3");
  RingPtr ring = indexed_ring(n);
  Graph G = Graph::cycle(n);
  MonomialIdeal I = vertex_cover_ideal(G, ring);
  std::vector<NamedCheck> checks;

  MonomialIdeal from_covers = vertex_cover_ideal_from_covers(G, ring);
  checks.push_back({"cover-ideal-constructions-agree", from_covers == I,
                    std::to_string(I.size()) + " generators"});

  std::vector<Monomial> alternating;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial u = ring->one();
    for (std::size_t j = 0; j < (n + 1) / 2; ++j) u.set((i + 2 * j) % n, 1);
    alternating.push_back(u);
  }
  MonomialIdeal U(ring, alternating);
  checks.push_back({"cover-ideal-generated-by-alternating-products", U == I,
                    "alternating products generate " + U.to_string()});

  Monomial u = product_of(ring, all_vars(n));
  MonomialIdeal I2 = power(I, 2);
  MonomialIdeal S2 = squarefree_symbolic_power(I, 2);
  MonomialIdeal expected = sum(I2, MonomialIdeal(ring, {u}));
  checks.push_back({"symbolic-square-is-square-plus-product", S2 == expected,
                    std::to_string(S2.size()) + " generators"});

  MonomialIdeal I3 = power(I, 3);
  checks.push_back({"square-of-symbolic-square-in-cube", I3.contains(power(S2, 2)), ""});

  MonomialIdeal prev = S2;
  for (unsigned k = 3; k <= max_k; ++k) {
    MonomialIdeal Ik = power(I, k);
    checks.push_back({"symbolic-power-" + std::to_string(k - 1) + "-squared-in-power-" +
                          std::to_string(k),
                      Ik.contains(power(prev, 2)), ""});
    prev = squarefree_symbolic_power(I, k);
  }
  return checks;
}

std::vector<NamedCheck> squarefree_generated_checks(std::size_t n, std::size_t d) {
  if (!(2 < d && d < n)) throw DomainError("need 2 < d < n");
  MonomialIdeal I = squarefree_generated_ideal(n, d);
  RingPtr ring = I.ring();
  Monomial u = product_of(ring, all_vars(d + 1));
  MonomialIdeal S2 = squarefree_symbolic_power(I, 2);
  MonomialIdeal I3 = power(I, 3);
  std::vector<NamedCheck> checks;
  checks.push_back({"product-in-symbolic-square", S2.contains(u), ring->monomial_to_string(u)});
  checks.push_back({"product-squared-not-in-cube", !I3.contains(u * u),
                    "degree " + std::to_string(2 * (d + 1)) + " < " + std::to_string(3 * d)});
  return checks;
}

// ---------------------------------------------------------------------------
// Primary decomposition

namespace {

MonomialIdeal intersect_all(const RingPtr& ring, const std::vector<MonomialIdeal>& parts) {
  if (parts.empty()) return MonomialIdeal(ring, {ring->one()});
  MonomialIdeal acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

VarSet radical_support(const MonomialIdeal& irreducible) {
  VarSet s = 0;
  for (const auto& g : irreducible.generators()) s |= support(g);
  return s;
}

}  // namespace

PrimaryDecomposition irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_unit()) throw ImproperIdeal("the unit ideal has no primary decomposition");
  const RingPtr& ring = I.ring();
  std::vector<MonomialIdeal> found;
  std::vector<MonomialIdeal> work{I};
  while (!work.empty()) {
    MonomialIdeal J = std::move(work.back());
    work.pop_back();
    auto split = std::find_if(J.generators().begin(), J.generators().end(),
                              [](const Monomial& m) { return std::popcount(support(m)) > 1; });
    if (split == J.generators().end()) {
      found.push_back(J);
      continue;
    }
    const Monomial& m = *split;
    std::size_t i = static_cast<std::size_t>(std::countr_zero(support(m)));
    Monomial pure = ring->one();
    pure.set(i, m[i]);
    Monomial rest = m.quotient(pure);
    work.push_back(sum(J, MonomialIdeal(ring, {rest})));
    work.push_back(sum(J, MonomialIdeal(ring, {pure})));
  }

  // Drop duplicates and components containing another component.
  std::vector<MonomialIdeal> irr;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < found.size() && !redundant; ++b) {
      if (a == b || !found[a].contains(found[b])) continue;
      redundant = !(found[a] == found[b]) || b < a;
    }
    if (!redundant) irr.push_back(found[a]);
  }
  auto key = [](const MonomialIdeal& J) {
    std::vector<std::vector<unsigned>> k;
    for (const auto& g : J.generators()) k.push_back(g.exponents());
    return k;
  };
  std::sort(irr.begin(), irr.end(), [&](const MonomialIdeal& a, const MonomialIdeal& b) {
    VarSet ra = radical_support(a), rb = radical_support(b);
    if (ra != rb) return ra < rb;
    return key(a) < key(b);
  });

  PrimaryDecomposition out;
  out.irreducible = irr;
  std::map<VarSet, std::vector<MonomialIdeal>> groups;
  for (const auto& c : irr) groups[radical_support(c)].push_back(c);
  for (const auto& [prime, parts] : groups) out.primary.push_back({intersect_all(ring, parts), prime});

  std::vector<MonomialIdeal> prim;
  for (const auto& c : out.primary) prim.push_back(c.ideal);
  if (!(intersect_all(ring, irr) == I) || !(intersect_all(ring, prim) == I))
    throw Error("internal error: decomposition does not re-intersect to the input");
  return out;
}

std::vector<PrimaryComponent> minimal_primary_components(const MonomialIdeal& I) {
  if (I.is_unit()) throw ImproperIdeal("the unit ideal has no primary components");
  std::vector<PrimaryComponent> out;
  const VarSet everything = all_vars(I.ring()->size());
  for (VarSet P : minimal_primes(I)) out.push_back({saturate(I, everything & ~P), P});
  return out;
}

// ---------------------------------------------------------------------------
// Integral closure

namespace {

// Phase one of the simplex method with Bland's rule: some x >= 0 with
// A x = b (b >= 0), or nullopt.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& A,
                                                    const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A.front().size() : 0;
  const std::size_t total = cols + rows;  // one artificial per row
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(total));
  std::vector<Rational> rhs = b;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) T[i][j] = A[i][j];
    T[i][cols + i] = 1;
    basis[i] = cols + i;
  }
  std::vector<Rational> z(total);
  Rational w = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    w += rhs[i];
    for (std::size_t j = 0; j < cols; ++j) z[j] -= T[i][j];
  }

  while (true) {
    std::size_t q = total;
    for (std::size_t j = 0; j < total; ++j)
      if (z[j] < 0) {
        q = j;
        break;
      }
    if (q == total) break;
    std::size_t p = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (T[i][q] <= 0) continue;
      Rational ratio = rhs[i] / T[i][q];
      if (p == rows || ratio < best || (ratio == best && basis[i] < basis[p])) {
        p = i;
        best = ratio;
      }
    }
    if (p == rows) break;  // unbounded direction; cannot happen since w >= 0
    Rational piv = T[p][q];
    for (auto& v : T[p]) v /= piv;
    rhs[p] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == p || T[i][q] == 0) continue;
      Rational f = T[i][q];
      for (std::size_t j = 0; j < total; ++j) T[i][j] -= f * T[p][j];
      rhs[i] -= f * rhs[p];
    }
    Rational f = z[q];
    for (std::size_t j = 0; j < total; ++j) z[j] -= f * T[p][j];
    w += f * rhs[p];
    basis[p] = q;
  }
  if (w != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = rhs[i];
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> newton_membership(const MonomialIdeal& I, const Monomial& a) {
  const std::size_t n = I.ring()->size();
  const auto& g = I.generators();
  const std::size_t m = g.size();
  if (m == 0) return std::nullopt;
  // Columns: lambda_1..lambda_m, then slack s_1..s_n.
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(m + n));
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) A[i][j] = g[j][i];
    A[i][m + i] = 1;
    b[i] = a[i];
  }
  for (std::size_t j = 0; j < m; ++j) A[n][j] = 1;
  b[n] = 1;
  auto x = feasible_point(A, b);
  if (!x) return std::nullopt;
  x->resize(m);
  return x;
}

IntegralClosure integral_closure(const MonomialIdeal& I) {
  const RingPtr& ring = I.ring();
  IntegralClosure out{I, {}};
  if (I.is_zero() || I.is_unit()) {
    for (const auto& g : I.generators()) out.witnesses.push_back({g, 1, {g}});
    return out;
  }
  const std::size_t n = ring->size();
  std::vector<unsigned> box(n, 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);

  std::vector<Monomial> points;
  Monomial cur = ring->one();
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == n) {
      points.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= box[i]; ++e) {
      cur.set(i, e);
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  rec(rec, 0);
  std::stable_sort(points.begin(), points.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });

  std::vector<Monomial> accepted;
  for (const auto& a : points) {
    bool above = std::any_of(accepted.begin(), accepted.end(),
                             [&a](const Monomial& c) { return c.divides(a); });
    if (above) continue;
    if (auto hit = std::find_if(I.generators().begin(), I.generators().end(),
                                [&a](const Monomial& g) { return g.divides(a); });
        hit != I.generators().end()) {
      accepted.push_back(a);
      out.witnesses.push_back({a, 1, {*hit}});
      continue;
    }
    auto lambda = newton_membership(I, a);
    if (!lambda) continue;
    mpz_class r = 1;
    for (const auto& l : *lambda) {
      mpz_class den = l.get_den();
      mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
    }
    if (r > kClosureWitnessCap)
      throw LimitExceeded("integral closure witness exponent exceeds " +
                          std::to_string(kClosureWitnessCap));
    unsigned rr = static_cast<unsigned>(r.get_ui());
    ClosureWitness w{a, rr, {}};
    Monomial prod = ring->one();
    for (std::size_t j = 0; j < lambda->size(); ++j) {
      Rational mult = (*lambda)[j] * rr;
      for (unsigned c = 0; c < mult.get_num().get_ui(); ++c) {
        w.factors.push_back(I.generators()[j]);
        prod = prod * I.generators()[j];
      }
    }
    if (w.factors.size() != rr || !prod.divides(a.pow(rr)))
      throw Error("internal error: closure witness failed validation");
    accepted.push_back(a);
    out.witnesses.push_back(std::move(w));
  }
  out.ideal = MonomialIdeal(ring, accepted);
  std::vector<ClosureWitness> ordered;
  for (const auto& g : out.ideal.generators())
    for (const auto& w : out.witnesses)
      if (w.u == g) ordered.push_back(w);
  out.witnesses = std::move(ordered);
  return out;
}

}  // namespace golod
