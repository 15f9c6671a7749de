#include "golod/ideal.hpp"

#include <cctype>
#include <sstream>

#include "golod/parse.hpp"

namespace golod {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> gens;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  if (!trimmed.empty()) gens = parse_polynomial_list(ring, text);
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->size(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), std::move(basis));
  std::call_once(I.cache_->once, [&I] {
    I.cache_->basis = I.gens_;
    for (const auto& g : I.gens_) I.cache_->vectors.push_back(to_module_vector(g));
  });
  return I;
}

const Ideal::Cache& Ideal::cache() const {
  std::call_once(cache_->once, [this] {
    ModuleOrder ord(ring_);
    std::vector<ModuleVector> in;
    in.reserve(gens_.size());
    for (const auto& g : gens_) in.push_back(to_module_vector(g));
    cache_->vectors = golod::groebner_basis(ord, std::move(in));
    for (const auto& v : cache_->vectors) cache_->basis.push_back(component(ring_, v, 0));
  });
  return *cache_;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const { return cache().basis; }

const std::vector<ModuleVector>& Ideal::groebner_vectors() const { return cache().vectors; }

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  for (const auto& g : groebner_basis())
    if (!g.is_monomial()) return false;
  return true;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  return os.str();
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_);
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

NormalForm normal_form(const Polynomial& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  ModuleOrder ord(ideal.ring());
  ModuleVector r = normal_form(ord, to_module_vector(p), ideal.groebner_vectors());
  Polynomial rem = component(ideal.ring(), r, 0);
  bool member = rem.is_zero();
  return {std::move(rem), member};
}

bool is_member(const Polynomial& p, const Ideal& ideal) { return normal_form(p, ideal).is_member; }

bool contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.generators())
    if (!is_member(g, I)) return false;
  return true;
}

std::vector<Polynomial> reduced_groebner(const Ideal& ideal, MonomialOrder order) {
  RingPtr target = ideal.ring()->with_order(order);
  std::vector<std::size_t> identity(ideal.ring()->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<ModuleVector> in;
  for (const auto& g : ideal.generators()) in.push_back(to_module_vector(g.map_to(target, identity)));
  std::vector<Polynomial> out;
  for (const auto& v : golod::groebner_basis(ModuleOrder(target), std::move(in)))
    out.push_back(component(target, v, 0));
  return out;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);

  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<int> weights{1};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  RingPtr aux = Ring::make(names, weights, {OrderKind::BlockElimination, 1});

  std::vector<std::size_t> up(ring->size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;
  Polynomial t = Polynomial::variable(aux, 0);
  Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;

  std::vector<ModuleVector> gens;
  for (const auto& g : I.generators()) gens.push_back(to_module_vector(t * g.map_to(aux, up)));
  for (const auto& h : J.generators())
    gens.push_back(to_module_vector(one_minus_t * h.map_to(aux, up)));

  std::vector<ModuleVector> gb = groebner_basis(ModuleOrder(aux), std::move(gens));

  std::vector<std::size_t> down(aux->size());
  down[0] = 0;  // t never occurs in the kept elements
  for (std::size_t i = 1; i < down.size(); ++i) down[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const auto& v : gb) {
    if (v.front().mono[0] != 0) continue;
    kept.push_back(component(aux, v, 0).map_to(ring, down));
  }
  if (ring->order().kind == OrderKind::WeightedGrevlex) {
    return Ideal::from_reduced_basis(ring, std::move(kept));
  }
  return Ideal(ring, std::move(kept));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw DomainError("colon by the zero ideal is undefined");
  Ideal inter = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) gens.push_back(g.exact_divide(f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw DomainError("colon by the zero ideal is undefined");
  const auto& gens = J.generators();
  Ideal result = colon(I, gens.front());
  for (std::size_t k = 1; k < gens.size(); ++k) result = intersect(result, colon(I, gens[k]));
  return result;
}

Saturation saturate(const Ideal& I, const Ideal& J, int max_rounds) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw DomainError("saturation by the zero ideal is undefined");
  Ideal current = I;
  for (int t = 0; t < max_rounds; ++t) {
    Ideal next = colon(current, J);
    if (next == current) return {current, t};
    current = std::move(next);
  }
  throw LimitExceeded("saturation did not stabilize within " + std::to_string(max_rounds) +
                      " colon rounds; last basis size " +
                      std::to_string(current.groebner_basis().size()));
}

PolyMatrix syzygies(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw NotHomogeneous("syzygies require homogeneous generators");
  ModuleOrder ord(ideal.ring());
  std::vector<ModuleVector> elems;
  for (const auto& g : ideal.generators()) elems.push_back(to_module_vector(g));
  std::vector<ModuleVector> syz = syzygy_module(ord, elems);
  PolyMatrix m;
  m.rows = syz.size();
  m.cols = elems.size();
  for (const auto& row : syz)
    for (std::size_t c = 0; c < m.cols; ++c)
      m.entries.push_back(component(ideal.ring(), row, static_cast<std::uint32_t>(c)));
  return m;
}

Ideal minimalize(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw NotHomogeneous("minimal generators require a homogeneous ideal");
  ModuleOrder ord(ideal.ring());
  std::vector<ModuleVector> vecs;
  for (const auto& g : ideal.generators()) vecs.push_back(to_module_vector(g));
  std::vector<Polynomial> out;
  for (std::size_t i : minimal_generator_indices(ord, vecs)) out.push_back(ideal.generators()[i]);
  return Ideal(ideal.ring(), std::move(out));
}

}  // namespace golod
