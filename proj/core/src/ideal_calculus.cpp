#include "golod/ideal_calculus.hpp"

#include <algorithm>
#include <set>

#include "golod/monomial_ideal.hpp"

namespace golod {
namespace {

void require_proper_homogeneous(const Ideal& I) {
  if (!I.is_homogeneous()) throw NotHomogeneous("the ideal must be homogeneous");
  if (I.is_unit()) throw ImproperIdeal("the unit ideal is not proper");
}

/// A partial of a later generator that is a scalar multiple of p.
std::optional<LabelledPartial> twin_partial(const Ideal& I, const LabelledPartial& p) {
  const std::string key = p.value.monic().to_string();
  for (std::size_t g = p.generator + 1; g < I.generators().size(); ++g)
    for (std::size_t i = 0; i < I.ring()->size(); ++i) {
      Polynomial q = I.generators()[g].partial(i);
      if (!q.is_zero() && q.monic().to_string() == key) return LabelledPartial{g, i, std::move(q)};
    }
  return std::nullopt;
}

}  // namespace

Ideal derivative_ideal(const Ideal& I) {
  require_proper_homogeneous(I);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < I.ring()->size(); ++i) gens.push_back(g.partial(i));
  return Ideal(I.ring(), std::move(gens));
}

std::vector<LabelledPartial> derivative_generators(const Ideal& I) {
  require_proper_homogeneous(I);
  std::vector<LabelledPartial> all;
  std::set<std::string> seen;
  for (std::size_t g = 0; g < I.generators().size(); ++g)
    for (std::size_t i = 0; i < I.ring()->size(); ++i) {
      Polynomial p = I.generators()[g].partial(i);
      if (p.is_zero() || !seen.insert(p.monic().to_string()).second) continue;
      all.push_back({g, i, std::move(p)});
    }
  if (all.empty()) return all;

  ModuleOrder ord(I.ring());
  std::vector<ModuleVector> vecs;
  for (const auto& p : all) vecs.push_back(to_module_vector(p.value));
  std::vector<std::size_t> keep = minimal_generator_indices(ord, vecs);
  std::sort(keep.begin(), keep.end());
  std::vector<LabelledPartial> out;
  for (std::size_t k : keep) out.push_back(std::move(all[k]));
  return out;
}

StronglyGolodReport strongly_golod(const Ideal& I) {
  StronglyGolodReport report;
  if (I.is_zero()) return report;
  std::vector<LabelledPartial> parts = derivative_generators(I);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a; b < parts.size(); ++b) {
      ++report.products_checked;
      NormalForm nf = normal_form(parts[a].value * parts[b].value, I);
      if (!nf.is_member) {
        report.verdict = false;
        LabelledPartial second = parts[b];
        if (a == b) {
          // A square is reported as the product of two distinct generators'
          // partials when one was dropped as a scalar multiple of the other.
          if (auto twin = twin_partial(I, parts[a])) {
            second = std::move(*twin);
            nf = normal_form(parts[a].value * second.value, I);
          }
        }
        report.witness = GolodWitness{parts[a], std::move(second), std::move(nf.remainder)};
        return report;
      }
    }
  return report;
}

Ideal power(const Ideal& I, int k) {
  if (k < 1) throw DomainError("power exponent must be at least 1");
  const auto& g = I.generators();
  if (g.empty()) return I;
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    Polynomial p = g[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) p *= g[idx[t]];
    if (seen.insert(p.monic().to_string()).second) out.push_back(std::move(p));
    // Next nondecreasing index tuple.
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == g.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < idx.size(); ++t) idx[t] = idx[pos - 1];
  }
  return Ideal(I.ring(), std::move(out));
}

SymbolicPowerResult symbolic_power(const Ideal& I, const SymbolicPowerSpec& spec) {
  if (spec.k < 1) throw DomainError("symbolic power exponent must be at least 1");
  switch (spec.mode) {
    case SymbolicMode::Saturated: {
      Saturation s = saturate(power(I, spec.k), Ideal::maximal(I.ring()));
      return {std::move(s.ideal), s.exponent};
    }
    case SymbolicMode::UserL: {
      if (!spec.L) throw DomainError("symbolic power needs an auxiliary ideal L");
      if (spec.L->is_zero()) throw DomainError("the auxiliary ideal L must be nonzero");
      Saturation s = saturate(power(I, spec.k), *spec.L);
      return {std::move(s.ideal), s.exponent};
    }
    case SymbolicMode::MonomialSquarefree: {
      if (!I.is_monomial()) throw DomainError("monomial-squarefree mode needs a monomial ideal");
      MonomialIdeal M = MonomialIdeal::from_ideal(I);
      return {squarefree_symbolic_power(M, static_cast<unsigned>(spec.k)).to_ideal(), 0};
    }
  }
  throw DomainError("unknown symbolic power mode");
}

SymbolicPowerResult saturated_power(const Ideal& I, int k) {
  return symbolic_power(I, {k, SymbolicMode::Saturated, std::nullopt});
}

bool check_colon_condition(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw DomainError("colon by the zero ideal is undefined");
  return colon(I, J) == colon(I, power(J, 2));
}

PrimePowerSum add_prime_power(const Ideal& I, const Ideal& P, int k) {
  if (k < 2) throw DomainError("the prime power exponent must be at least 2");
  if (!contains(P, I)) throw DomainError("the prime does not contain the ideal");
  PrimePowerSum out{sum(I, power(P, k)), std::nullopt};
  if (strongly_golod(I).verdict) out.derivative_in_prime = contains(P, derivative_ideal(I));
  return out;
}

bool zariski_nagata_membership(const Polynomial& f, const Ideal& P, int k) {
  if (k < 1) throw DomainError("order bound must be at least 1");
  require_same_ring(f.ring(), P.ring());
  std::vector<Polynomial> level{f};
  for (int order = 0; order < k; ++order) {
    for (const auto& p : level)
      if (!is_member(p, P)) return false;
    if (order + 1 == k) break;
    std::vector<Polynomial> next;
    std::set<std::string> seen;
    for (const auto& p : level)
      for (std::size_t i = 0; i < f.ring()->size(); ++i) {
        Polynomial q = p.partial(i);
        if (!q.is_zero() && seen.insert(q.monic().to_string()).second) next.push_back(std::move(q));
      }
    level = std::move(next);
  }
  return true;
}

InbetweenReport check_inbetween(const Ideal& I, const Ideal& J, int k, const Ideal& symbolic_k,
                                const Ideal& symbolic_km1) {
  if (k < 2) throw DomainError("k must be at least 2");
  InbetweenReport r;
  Ideal Ik = power(I, k);
  r.hypothesis_holds = contains(Ik, power(symbolic_km1, 2));
  r.sandwich_holds = contains(J, Ik) && contains(symbolic_k, J);
  r.verdict = r.sandwich_holds && strongly_golod(J).verdict;
  if (r.hypothesis_holds && r.sandwich_holds && !r.verdict)
    throw Error("sandwiched ideal under the square hypothesis is not strongly Golod");
  return r;
}

}  // namespace golod
