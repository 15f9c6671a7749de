#include "golod/ring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace golod {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DomainError("monomial index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw LimitExceeded("exponent overflow");
  exp_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += exp_[i];
  return d;
}

Degree Monomial::weighted_degree(std::span<const int> weights) const {
  Degree d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += static_cast<Degree>(weights[i]) * exp_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = std::min(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
  if (!d.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - d.exp_[i]);
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, static_cast<unsigned>(exp_[i]) * k);
  return r;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw LimitExceeded("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.empty()) throw DomainError("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (weights_.size() != names_.size()) throw DomainError("one weight per variable is required");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) {
      throw DomainError("weight of " + names_[i] + " must be positive, got " +
                        std::to_string(weights_[i]));
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name " + n);
  }
  if (order_.kind == OrderKind::BlockElimination && order_.block > names_.size()) {
    throw DomainError("elimination block larger than the variable count");
  }
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names, std::vector<int> weights,
                                       MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(weights), order);
}

std::shared_ptr<const Ring> Ring::standard(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make(std::move(names), std::move(w));
}

int Ring::max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Ring::compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                          std::size_t hi) const {
  Degree da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += static_cast<Degree>(weights_[i]) * a[i];
    db += static_cast<Degree>(weights_[i]) * b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (order_.kind == OrderKind::BlockElimination) {
    int c = compare_grevlex(a, b, 0, order_.block);
    if (c != 0) return c;
    return compare_grevlex(a, b, order_.block, size());
  }
  return compare_grevlex(a, b, 0, size());
}

Monomial Ring::variable(std::size_t i) const {
  Monomial m(size());
  m.set(i, 1);
  return m;
}

std::vector<Monomial> Ring::monomials_of_degree(Degree d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(size());
  std::function<void(std::size_t, Degree)> rec = [&](std::size_t i, Degree left) {
    if (i + 1 == size()) {
      if (left % weights_[i] == 0) {
        cur.set(i, static_cast<unsigned>(left / weights_[i]));
        out.push_back(cur);
        cur.set(i, 0);
      }
      return;
    }
    for (Degree e = 0; e * weights_[i] <= left; ++e) {
      cur.set(i, static_cast<unsigned>(e));
      rec(i + 1, left - e * weights_[i]);
    }
    cur.set(i, 0);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other ||
         (names_ == other.names_ && weights_ == other.weights_ && order_ == other.order_);
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return make(names_, weights_, order);
}

std::string Ring::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw RingMismatch("polynomials belong to different rings");
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.size() != ring_->size()) throw DomainError("monomial length does not match ring");
  }
  normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, ring->one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Rational(1), ring->variable(i)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  if (m.size() != ring->size()) throw DomainError("monomial length does not match ring");
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

void Polynomial::normalize() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

HomogeneityReport Polynomial::homogeneity() const {
  HomogeneityReport rep;
  if (terms_.empty()) return rep;
  Degree d = ring_->degree(terms_.front().mono);
  for (const auto& t : terms_) {
    if (ring_->degree(t.mono) != d) {
      rep.is_homogeneous = false;
      return rep;
    }
  }
  rep.degree = d;
  return rep;
}

Degree Polynomial::degree() const { return ring_->degree(leading_monomial()); }

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / terms_.front().coeff;
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::partial(std::size_t i) const {
  if (i >= ring_->size()) throw DomainError("partial derivative index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({t.coeff * e, m});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two sorted term lists: a + scale * b.
std::vector<Term> merge_terms(const Ring& r, const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = r.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].coeff * scale, b[j].mono});
      ++j;
    } else {
      Rational s = a[i].coeff + b[j].coeff * scale;
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(*ring_, terms_, other.terms_, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(*ring_, terms_, other.terms_, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial(a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  return p;
}

Polynomial Polynomial::map_to(RingPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->size()) throw DomainError("index map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] >= target->size()) throw DomainError("index map target out of range");
      m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    }
    out.push_back({t.coeff, m});
  }
  return Polynomial(std::move(target), std::move(out));
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  Polynomial rem = *this;
  std::vector<Term> quot;
  const Term& lead = divisor.leading_term();
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.mono.divides(t.mono)) throw DomainError("polynomial division is not exact");
    Rational c = t.coeff / lead.coeff;
    Monomial m = t.mono.quotient(lead.mono);
    rem.terms_ = merge_terms(*ring_, rem.terms_, divisor.mul_term(c, m).terms_, Rational(-1));
    quot.push_back({std::move(c), m});
  }
  return Polynomial(ring_, std::move(quot));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (!unit) os << c.get_str() << '*';
      os << ring_->monomial_to_string(t.mono);
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  require_same_ring(p.ring(), q.ring());
  switch (op) {
    case ArithOp::Add:
      return p + q;
    case ArithOp::Sub:
      return p - q;
    case ArithOp::Mul:
      return p * q;
  }
  throw DomainError("unknown arithmetic operation");
}

bool euler_check(const Polynomial& p) {
  HomogeneityReport rep = p.homogeneity();
  if (!rep.is_homogeneous) throw NotHomogeneous("euler_check requires a homogeneous polynomial");
  if (p.is_zero()) return true;
  const Ring& r = *p.ring();
  Polynomial lhs(p.ring());
  for (std::size_t i = 0; i < r.size(); ++i) {
    lhs += Polynomial::variable(p.ring(), i) * p.partial(i) * Rational(r.weights()[i]);
  }
  return lhs == p * Rational(static_cast<long>(*rep.degree));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  for (unsigned i = 0; i < k; ++i) result *= p;
  return result;
}

}  // namespace golod
