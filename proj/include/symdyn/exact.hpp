#pragma once

// Exact rationals (GMP) and sparse multivariate polynomials in variables t_g,
// g an integer offset.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symdyn {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" or "p/q" in lowest terms, positive denominator.
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws DomainError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Total bit length of numerator and denominator.
std::size_t bit_size(const Rational& q);

// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<std::int64_t, std::uint32_t>>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial constant(const Rational& c) { return Polynomial(c); }
  static Polynomial variable(std::int64_t g);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  std::uint32_t total_degree() const;
  // Variables that occur, sorted.
  std::vector<std::int64_t> variables() const;
  // Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  Polynomial pow(std::uint32_t e) const;

  // t_g -> t_{g + k}
  Polynomial shift_variables(std::int64_t k) const;
  // Replace each t_g by subs(g); variables without an entry stay as they are.
  Polynomial substitute(const std::map<std::int64_t, Polynomial>& subs) const;
  Rational evaluate(const std::function<Rational(std::int64_t)>& value) const;
  Rational evaluate(const std::map<std::int64_t, Rational>& values) const;

  // e.g. "t1 - t0^2", "3/4", "-2*t0*t1^3 + 1"
  std::string to_string() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Monomial, Rational> terms_;
};

// Inverse of Polynomial::to_string; also tolerates redundant "1*", "^1" and
// spaces. Throws DomainError with a description on malformed input.
Polynomial parse_polynomial(const std::string& text);

}  // namespace symdyn
