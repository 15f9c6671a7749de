#pragma once

// JSON views of library values. Objects use sorted keys and polynomials use
// the text grammar, so output is byte-identical for identical inputs.

#include <string>
#include <vector>

#include <json.hpp>

#include "golod/ideal.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/koszul.hpp"
#include "golod/monomial_ideal.hpp"
#include "golod/poincare.hpp"
#include "golod/resolution.hpp"

namespace golod {

using Json = nlohmann::json;

Json to_json(const Ring& ring);
/// {"ring": ..., "generators": [...]}
Json to_json(const Ideal& I);
Json to_json(const MonomialIdeal& I);
Json to_json(const PolyMatrix& m);

/// Inverse of to_json(const Ideal&). With `ring` given, the generators are
/// parsed there (its variables must match); otherwise the ring is rebuilt.
/// Throws ParseError on malformed input.
Ideal ideal_from_json(const Json& j, RingPtr ring = nullptr);

Json to_json(const StronglyGolodReport& r);
Json to_json(const MonomialGolodReport& r, const Ring& ring);
Json to_json(const SymbolicPowerResult& r);
Json to_json(const PrimePowerSum& r);
Json to_json(const InbetweenReport& r);

Json to_json(const std::vector<NamedCheck>& checks);
Json to_json(const PrimaryDecomposition& d);
Json to_json(const IntegralClosure& c);

Json to_json(const Resolution& res);
/// {"entries": [[i, d, b], ...], "text": grid, "totals": [...]}
Json to_json(const BettiTable& t);

Json to_json(const HomologySummary& h);
Json to_json(const TrivialMultiplicationReport& r);
Json to_json(const DerivativeCycleReport& r);

Json to_json(const BigradedSeries& s);
Json to_json(const GolodVerdict& v);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace golod
