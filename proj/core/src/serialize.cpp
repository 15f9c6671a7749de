#include "golod/serialize.hpp"

#include "golod/parse.hpp"

namespace golod {
namespace {

Json polys(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json monos(const Ring& ring, const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(ring.monomial_to_string(m));
  return out;
}

Json partial(const LabelledPartial& p) {
  return {{"generator", p.generator},
          {"variable", p.value.ring()->names()[p.variable]},
          {"value", p.value.to_string()}};
}

Json prime_json(const Ring& ring, VarSet prime) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (prime >> i & 1u) out.push_back(ring.names()[i]);
  return out;
}

/// [[i, d, value], ...] in (i, d) order; numeric keys would sort as strings.
template <class Map>
Json triples(const Map& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back(Json::array({k.first, k.second, v}));
  return out;
}

}  // namespace

Json to_json(const Ring& ring) {
  return {{"variables", ring.names()}, {"weights", ring.weights()}};
}

Json to_json(const Ideal& I) {
  return {{"ring", to_json(*I.ring())}, {"generators", polys(I.generators())}};
}

Json to_json(const MonomialIdeal& I) {
  return {{"ring", to_json(*I.ring())}, {"generators", monos(*I.ring(), I.generators())}};
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

Ideal ideal_from_json(const Json& j, RingPtr ring) {
  try {
    const Json& r = j.at("ring");
    auto names = r.at("variables").get<std::vector<std::string>>();
    auto weights = r.at("weights").get<std::vector<int>>();
    if (!ring) {
      ring = Ring::make(names, weights);
    } else if (ring->names() != names || ring->weights() != weights) {
      throw RingMismatch("serialized ideal lives in a different ring");
    }
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_polynomial(ring, g.get<std::string>()));
    return Ideal(ring, std::move(gens));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

Json to_json(const StronglyGolodReport& r) {
  Json out{{"strongly_golod", r.verdict}, {"products_checked", r.products_checked}};
  if (r.witness) {
    out["witness"] = {{"first", partial(r.witness->first)},
                      {"second", partial(r.witness->second)},
                      {"product", (r.witness->first.value * r.witness->second.value).to_string()},
                      {"remainder", r.witness->remainder.to_string()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const MonomialGolodReport& r, const Ring& ring) {
  Json out{{"strongly_golod", r.verdict}};
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = {{"u", ring.monomial_to_string(w.u)},
                      {"v", ring.monomial_to_string(w.v)},
                      {"x_i", ring.names()[w.i]},
                      {"x_j", ring.names()[w.j]},
                      {"quotient", ring.monomial_to_string(w.quotient)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const SymbolicPowerResult& r) {
  return {{"ideal", to_json(r.ideal)}, {"saturation_exponent", r.exponent}};
}

Json to_json(const PrimePowerSum& r) {
  Json out{{"ideal", to_json(r.ideal)}};
  out["derivative_in_prime"] = r.derivative_in_prime ? Json(*r.derivative_in_prime) : Json(nullptr);
  return out;
}

Json to_json(const InbetweenReport& r) {
  return {{"verdict", r.verdict},
          {"hypothesis_holds", r.hypothesis_holds},
          {"sandwich_holds", r.sandwich_holds}};
}

Json to_json(const std::vector<NamedCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json to_json(const PrimaryDecomposition& d) {
  Json irr = Json::array();
  for (const auto& q : d.irreducible) irr.push_back(monos(*q.ring(), q.generators()));
  Json prim = Json::array();
  for (const auto& c : d.primary)
    prim.push_back({{"prime", prime_json(*c.ideal.ring(), c.prime)},
                    {"generators", monos(*c.ideal.ring(), c.ideal.generators())}});
  return {{"irreducible", std::move(irr)}, {"primary", std::move(prim)}};
}

Json to_json(const IntegralClosure& c) {
  const Ring& ring = *c.ideal.ring();
  Json ws = Json::array();
  for (const auto& w : c.witnesses)
    ws.push_back({{"monomial", ring.monomial_to_string(w.u)}, {"r", w.r}, {"factors", monos(ring, w.factors)}});
  return {{"ideal", to_json(c.ideal)}, {"witnesses", std::move(ws)}};
}

Json to_json(const Resolution& res) {
  Json maps = Json::array();
  for (const auto& m : res.maps) maps.push_back(to_json(m));
  return {{"ring", to_json(*res.ring)}, {"shifts", res.shifts}, {"maps", std::move(maps)}};
}

Json to_json(const BettiTable& t) {
  Json entries = triples(t.entries());
  Json totals = Json::array();
  for (std::size_t i = 0; i <= t.length(); ++i) totals.push_back(t.total(i));
  return {{"entries", std::move(entries)}, {"totals", std::move(totals)}, {"text", t.to_text()}};
}

Json to_json(const HomologySummary& h) {
  Json recs = Json::array();
  for (const auto& r : h.records)
    recs.push_back({{"l", r.l}, {"d", r.d}, {"dim", r.dim}, {"cycles", r.cycles}});
  return {{"l_max", h.bounds.l_max},
          {"d_max", h.bounds.d_max},
          {"records", std::move(recs)},
          {"truncated", h.truncated}};
}

Json to_json(const TrivialMultiplicationReport& r) {
  Json out{{"trivial_multiplication", r.verdict},
           {"pairs_checked", r.pairs_checked},
           {"pairs_beyond_window", r.pairs_beyond_window},
           {"truncated", r.truncated},
           {"l_max", r.bounds.l_max},
           {"d_max", r.bounds.d_max}};
  if (r.failing_pair) {
    const auto& p = *r.failing_pair;
    out["failing_pair"] = {{"first", {{"l", p.l1}, {"d", p.d1}, {"index", p.index1}}},
                           {"second", {{"l", p.l2}, {"d", p.d2}, {"index", p.index2}}},
                           {"product", p.product}};
  } else {
    out["failing_pair"] = nullptr;
  }
  return out;
}

Json to_json(const DerivativeCycleReport& r) {
  Json es = Json::array();
  for (const auto& e : r.entries)
    es.push_back({{"l", e.l}, {"d", e.d}, {"homology_dim", e.homology_dim}, {"covered_dim", e.covered_dim}});
  return {{"verdict", r.verdict}, {"entries", std::move(es)}, {"truncated", r.truncated}};
}

Json to_json(const BigradedSeries& s) {
  Json cs = triples(s.coefficients());
  return {{"i_max", s.i_max()},
          {"d_max", s.d_max()},
          {"coefficients", std::move(cs)},
          {"totals", s.totals()},
          {"text", s.to_string()}};
}

Json to_json(const GolodVerdict& v) {
  Json out{{"status", to_string(v.status)},
           {"i_max", v.i_max},
           {"d_max", v.d_max},
           {"bound", to_json(v.bound)},
           {"actual", to_json(v.actual)},
           {"homology_truncated", v.homology_truncated},
           {"actual_boundary_nonzero", v.actual_boundary_nonzero},
           {"minimal_presentation", v.minimal_presentation}};
  if (v.first_discrepancy) {
    const auto& d = *v.first_discrepancy;
    out["first_discrepancy"] = {{"i", d.i}, {"d", d.d}, {"bound", d.bound}, {"actual", d.actual}};
  } else {
    out["first_discrepancy"] = nullptr;
  }
  if (v.first_total_discrepancy) {
    const auto& d = *v.first_total_discrepancy;
    out["first_total_discrepancy"] = {{"i", d.i}, {"bound", d.bound}, {"actual", d.actual}};
  } else {
    out["first_total_discrepancy"] = nullptr;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace golod
