#include "golod/quotient.hpp"

#include <algorithm>
#include <map>

namespace golod {

QuotientRing::QuotientRing(Ideal ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_homogeneous()) throw NotHomogeneous("quotient strands require a homogeneous ideal");
  for (const auto& g : ideal_.groebner_basis()) leading_.push_back(g.leading_monomial());
}

bool QuotientRing::is_standard(const Monomial& m) const {
  for (const auto& l : leading_)
    if (l.divides(m)) return false;
  return true;
}

const QuotientRing::Piece& QuotientRing::piece(Degree d) const {
  // Caller holds mutex_. std::map nodes are stable, so references survive.
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return it->second;
  Piece p;
  for (const auto& m : ring()->monomials_of_degree(d))
    if (is_standard(m)) {
      p.index.emplace(m, p.basis.size());
      p.basis.push_back(m);
    }
  return pieces_.emplace(d, std::move(p)).first->second;
}

const std::vector<Monomial>& QuotientRing::basis(Degree d) const {
  std::lock_guard lock(mutex_);
  return piece(d).basis;
}

std::optional<std::size_t> QuotientRing::index_of(const Monomial& m) const {
  std::lock_guard lock(mutex_);
  const Piece& p = piece(ring()->degree(m));
  auto it = p.index.find(m);
  if (it == p.index.end()) return std::nullopt;
  return it->second;
}

const linalg::SparseVector& QuotientRing::reduce(const Monomial& m) const {
  std::lock_guard lock(mutex_);
  auto it = reduced_.find(m);
  if (it != reduced_.end()) return it->second;

  Degree d = ring()->degree(m);
  const Piece& p = piece(d);
  linalg::SparseVector out;
  auto hit = p.index.find(m);
  if (hit != p.index.end()) {
    out.emplace_back(hit->second, Rational(1));
  } else {
    ModuleOrder ord(ring());
    ModuleVector v{{Rational(1), m, 0}};
    for (const auto& t : normal_form(ord, v, ideal_.groebner_vectors()))
      out.emplace_back(p.index.at(t.mono), t.coeff);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return reduced_.emplace(m, std::move(out)).first->second;
}

linalg::SparseVector QuotientRing::coordinates(const Polynomial& p, Degree d) const {
  require_same_ring(ring(), p.ring());
  std::map<std::size_t, Rational> acc;
  for (const auto& t : p.terms()) {
    if (ring()->degree(t.mono) != d) throw NotHomogeneous("polynomial is not of the requested degree");
    for (const auto& [i, c] : reduce(t.mono)) acc[i] += t.coeff * c;
  }
  linalg::SparseVector out;
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, std::move(c));
  return out;
}

Polynomial QuotientRing::from_coordinates(Degree d, const linalg::SparseVector& v) const {
  const auto& b = basis(d);
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [i, c] : v) terms.push_back({c, b.at(i)});
  return Polynomial(ring(), std::move(terms));
}

linalg::SparseVector QuotientRing::multiply(Degree d, std::size_t k, const Monomial& m) const {
  return reduce(basis(d).at(k) * m);
}

linalg::SparseVector QuotientRing::multiply(Degree d, const linalg::SparseVector& v,
                                            const Monomial& m) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : v)
    for (const auto& [i, e] : multiply(d, k, m)) acc[i] += c * e;
  linalg::SparseVector out;
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, std::move(c));
  return out;
}

}  // namespace golod
