#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>
#include <json.hpp>

#include "tkklab/rational.hpp"

namespace tkklab::exactnum {

// An element of Q(i)[sqrt(2), sqrt(3), sqrt(5), ...]: a finite sum
//   sum_m (re_m + i im_m) sqrt(m)
// over square-free positive radicands m (m = 1 is the rational part).
//
// Terms are kept sorted by radicand with no zero terms, so two Scalars are
// equal iff their term lists are equal.
class Scalar {
 public:
  struct Term {
    std::uint32_t radicand = 1;
    Rational re;
    Rational im;
    friend bool operator==(const Term&, const Term&) = default;
  };
  using Terms = boost::container::small_vector<Term, 2>;

  Scalar() = default;
  Scalar(std::int64_t n) : Scalar(Rational(n)) {}  // NOLINT: implicit
  Scalar(const Rational& r) {                      // NOLINT: implicit
    if (!r.is_zero()) terms_.push_back({1, r, Rational()});
  }
  Scalar(const Rational& re, const Rational& im) {
    if (!re.is_zero() || !im.is_zero()) terms_.push_back({1, re, im});
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  // sqrt(m) for any positive integer m; square factors are pulled out.
  static Scalar sqrt(std::uint64_t m);
  static Scalar from_terms(Terms terms);
  static Scalar from_json(const nlohmann::json& j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_real() const;
  // The value as a rational, if it is one.
  std::optional<Rational> rational() const;
  Rational rational_or_throw() const;

  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar& operator*=(const Rational& r);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
  friend Scalar operator*(const Rational& r, Scalar a) { return a *= r; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  // a += b * c without a temporary for the product when b, c are rational.
  void add_product(const Scalar& b, const Scalar& c);

  // Total order on the canonical form; only for use as a container key.
  friend bool structural_less(const Scalar& a, const Scalar& b);

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Square-free decomposition m = square^2 * core.
struct SquareFree {
  std::uint64_t square;
  std::uint64_t core;
};
SquareFree square_free(std::uint64_t m);

}  // namespace tkklab::exactnum
