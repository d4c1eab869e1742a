#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "clusterlab/rational.hpp"

namespace clusterlab {

/// Laurent monomial: variable id -> nonzero exponent. Empty means 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var, int exp = 1);

  static Monomial from_map(const std::map<std::string, int>& exps);

  const std::map<std::string, int>& exponents() const { return exps_; }
  int exponent(const std::string& var) const;
  int total_degree() const;
  bool is_one() const { return exps_.empty(); }

  Monomial inverse() const;
  Monomial pow(int k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  std::map<std::string, int> exps_;
};

/// Graded lexicographic order: total degree first, then exponents compared
/// variable by variable in sorted id order (larger exponent of the earlier
/// variable ranks higher).
struct GrLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse Laurent polynomial with integer coefficients.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Integer, GrLex>;

  SparsePoly() = default;
  SparsePoly(long c);  // NOLINT: constants convert implicitly
  SparsePoly(const Integer& c);  // NOLINT
  explicit SparsePoly(const Monomial& m, const Integer& c = 1);

  static SparsePoly var(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest monomial in graded-lex order. Precondition: nonzero.
  const std::pair<const Monomial, Integer>& leading_term() const;

  /// Max exponent of var over all terms (0 for an absent variable).
  int max_exponent(const std::string& var) const;

  /// True when every coefficient is positive.
  bool positive_coefficients() const;

  SparsePoly& operator+=(const SparsePoly& b);
  SparsePoly& operator-=(const SparsePoly& b);
  SparsePoly& operator*=(const SparsePoly& b);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(unsigned k) const;

  /// Substitute rational values for every variable.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

/// Quotient of two sparse polynomials, not gcd-reduced.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const SparsePoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const SparsePoly& num, const SparsePoly& den);

  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  /// Cross-multiplication equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

 private:
  void normalize();
  SparsePoly num_;
  SparsePoly den_;
};

/// maxexp_var(num) - maxexp_var(den). Throws ArithmeticError on the zero function.
int deg_in(const RatFunc& f, const std::string& var);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

nlohmann::json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RatFunc& f);

}  // namespace clusterlab
