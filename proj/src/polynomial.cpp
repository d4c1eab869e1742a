#include "clusterlab/polynomial.hpp"

#include <sstream>

#include "clusterlab/errors.hpp"

namespace clusterlab {

Monomial::Monomial(const std::string& var, int exp) {
  if (exp != 0) exps_[var] = exp;
}

Monomial Monomial::from_map(const std::map<std::string, int>& exps) {
  Monomial m;
  for (const auto& [v, e] : exps)
    if (e != 0) m.exps_[v] = e;
  return m;
}

int Monomial::exponent(const std::string& var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& kv : exps_) d += kv.second;
  return d;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial m;
  if (k == 0) return m;
  for (const auto& [v, e] : exps_) m.exps_[v] = e * k;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (const auto& [v, e] : b.exps_) {
    int s = m.exponent(v) + e;
    if (s == 0)
      m.exps_.erase(v);
    else
      m.exps_[v] = s;
  }
  return m;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GrLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.exponents().begin(), ib = b.exponents().begin();
  auto ea = a.exponents().end(), eb = b.exponents().end();
  while (ia != ea || ib != eb) {
    // Walk the union of variable ids in sorted order.
    const std::string* v;
    if (ib == eb || (ia != ea && ia->first < ib->first))
      v = &ia->first;
    else
      v = &ib->first;
    int xa = (ia != ea && ia->first == *v) ? ia->second : 0;
    int xb = (ib != eb && ib->first == *v) ? ib->second : 0;
    if (xa != xb) return xa < xb;
    if (ia != ea && ia->first == *v) ++ia;
    if (ib != eb && ib->first == *v) ++ib;
  }
  return false;
}

SparsePoly::SparsePoly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Integer(c));
}

SparsePoly::SparsePoly(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

SparsePoly::SparsePoly(const Monomial& m, const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

SparsePoly SparsePoly::var(const std::string& name) { return SparsePoly(Monomial(name)); }

const std::pair<const Monomial, Integer>& SparsePoly::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

int SparsePoly::max_exponent(const std::string& var) const {
  if (terms_.empty()) throw ArithmeticError("max exponent of the zero polynomial");
  bool first = true;
  int best = 0;
  for (const auto& kv : terms_) {
    int e = kv.first.exponent(var);
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

bool SparsePoly::positive_coefficients() const {
  for (const auto& kv : terms_)
    if (sgn(kv.second) <= 0) return false;
  return true;
}

void SparsePoly::add_term(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& b) { return *this = *this * b; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly p;
  for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, -c);
  return p;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly r(1), base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = Rational(c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = values.find(v);
      if (it == values.end()) throw LookupError("no value for variable " + v);
      if (e < 0 && clusterlab::is_zero(it->second)) throw ArithmeticError("negative power of zero");
      Rational base = e > 0 ? it->second : Rational(1 / it->second);
      for (int i = 0; i < std::abs(e); ++i) t *= base;
    }
    total += t;
  }
  return total;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (m.is_one())
      os << a.get_str();
    else if (a == 1)
      os << m.to_string();
    else
      os << a.get_str() << "*" << m.to_string();
  }
  return os.str();
}

RatFunc::RatFunc(const SparsePoly& num, const SparsePoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (sgn(den_.leading_term().second) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k >= 0) return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  return inverse().pow(-k);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Rational RatFunc::evaluate(const std::map<std::string, Rational>& values) const {
  Rational d = den_.evaluate(values);
  if (clusterlab::is_zero(d)) throw SingularPointError("denominator vanishes at this point");
  return num_.evaluate(values) / d;
}

std::string RatFunc::to_string() const {
  if (den_ == SparsePoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int deg_in(const RatFunc& f, const std::string& var) {
  if (f.is_zero()) throw ArithmeticError("degree of the zero rational function is undefined");
  return f.num().max_exponent(var) - f.den().max_exponent(var);
}

nlohmann::json to_json(const SparsePoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : it->first.exponents()) mono[v] = e;
    out.push_back({{"coeff", it->second.get_str()}, {"monomial", mono}});
  }
  return out;
}

SparsePoly poly_from_json(const nlohmann::json& j) {
  SparsePoly p;
  for (const auto& t : j) {
    std::map<std::string, int> exps;
    for (const auto& [v, e] : t.at("monomial").items()) exps[v] = e.get<int>();
    p += SparsePoly(Monomial::from_map(exps), parse_integer(t.at("coeff").get<std::string>()));
  }
  return p;
}

nlohmann::json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

}  // namespace clusterlab
