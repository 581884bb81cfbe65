#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tkklab/scalar.hpp"

namespace tkklab::exactnum {

// Commutative polynomial in a fixed number of variables with Scalar
// coefficients. Used for weight equations and symbolic highest-weight values.
class Poly {
 public:
  using Exponents = std::vector<std::uint8_t>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  // Linear form sum_i coeffs[i] x_i.
  static Poly linear(const std::vector<Scalar>& coeffs);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Scalar eval(const std::vector<Scalar>& x) const;
  // Same polynomial in more variables (the new ones come last).
  Poly with_vars(std::size_t nvars) const;
  // Replace variable i by the polynomial p.
  Poly substitute(std::size_t i, const Poly& p) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Scalar& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

Poly pow(const Poly& p, int k);

// kappa with a == kappa * b, if such a constant exists (b nonzero).
std::optional<Scalar> proportionality(const Poly& a, const Poly& b);

}  // namespace tkklab::exactnum
