#include "tkklab/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tkklab::exactnum {

SquareFree square_free(std::uint64_t m) {
  if (m == 0) throw std::domain_error("square_free: zero");
  std::uint64_t square = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  return {square, core};
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return p;
  return m;
}

// Merge-add two sorted term lists, scaling the second by `sign`.
Scalar::Terms merge(const Scalar::Terms& a, const Scalar::Terms& b, bool negate_b) {
  Scalar::Terms out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->radicand < ib->radicand)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->radicand < ia->radicand) {
      Scalar::Term t = *ib++;
      if (negate_b) {
        t.re = -t.re;
        t.im = -t.im;
      }
      out.push_back(t);
    } else {
      Scalar::Term t = *ia++;
      if (negate_b) {
        t.re -= ib->re;
        t.im -= ib->im;
      } else {
        t.re += ib->re;
        t.im += ib->im;
      }
      ++ib;
      if (!t.re.is_zero() || !t.im.is_zero()) out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::sqrt(std::uint64_t m) {
  if (m == 0) return Scalar();
  auto [square, core] = square_free(m);
  Scalar s;
  s.terms_.push_back({static_cast<std::uint32_t>(core), Rational(static_cast<std::int64_t>(square)), Rational()});
  return s;
}

Scalar Scalar::from_terms(Terms terms) {
  Scalar acc;
  for (const auto& t : terms) {
    if (t.radicand == 0) throw std::domain_error("Scalar: zero radicand");
    auto [square, core] = square_free(t.radicand);
    Scalar piece;
    Rational g(static_cast<std::int64_t>(square));
    if (!t.re.is_zero() || !t.im.is_zero())
      piece.terms_.push_back({static_cast<std::uint32_t>(core), t.re * g, t.im * g});
    acc += piece;
  }
  return acc;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].im.is_zero());
}

bool Scalar::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.im.is_zero(); });
}

std::optional<Rational> Scalar::rational() const {
  if (terms_.empty()) return Rational();
  if (is_rational()) return terms_[0].re;
  return std::nullopt;
}

Rational Scalar::rational_or_throw() const {
  auto r = rational();
  if (!r) throw std::domain_error("Scalar is not rational: " + str());
  return *r;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.im = -t.im;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].radicand == o.terms_[0].radicand) {
    terms_[0].re += o.terms_[0].re;
    terms_[0].im += o.terms_[0].im;
    if (terms_[0].re.is_zero() && terms_[0].im.is_zero()) terms_.clear();
    return *this;
  }
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.re *= r;
    t.im *= r;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Scalar();
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& x = a.terms_[0];
    const auto& y = b.terms_[0];
    Rational re = x.re * y.re - x.im * y.im;
    Rational im = x.re * y.im + x.im * y.re;
    if (re.is_zero() && im.is_zero()) return Scalar();
    std::uint32_t radicand = 1;
    if (x.radicand == 1) {
      radicand = y.radicand;
    } else if (y.radicand == 1) {
      radicand = x.radicand;
    } else {
      std::uint64_t g = std::gcd(x.radicand, y.radicand);
      std::uint64_t core = (x.radicand / g) * (y.radicand / g);
      Rational rg(static_cast<std::int64_t>(g));
      re *= rg;
      im *= rg;
      radicand = static_cast<std::uint32_t>(core);
    }
    Scalar s;
    s.terms_.push_back({radicand, re, im});
    return s;
  }
  Scalar acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Scalar sx;
      sx.terms_.push_back(x);
      Scalar sy;
      sy.terms_.push_back(y);
      acc += sx * sy;
    }
  }
  return acc;
}

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  if (b.terms_.empty() || c.terms_.empty()) return;
  *this += b * c;
}

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw std::domain_error("Scalar: inverse of zero");
  // Find a prime dividing some radicand; rationalize it away with the
  // conjugate u - v sqrt(p), then recurse on the smaller field.
  std::uint64_t prime = 0;
  for (const auto& t : terms_) {
    if (t.radicand != 1) {
      prime = smallest_prime_factor(t.radicand);
      break;
    }
  }
  if (prime == 0) {
    const auto& t = terms_[0];
    Rational norm = t.re * t.re + t.im * t.im;
    return Scalar(t.re / norm, -t.im / norm);
  }
  Scalar u;
  Scalar v;  // a = u + v sqrt(p)
  for (const auto& t : terms_) {
    Scalar piece;
    if (t.radicand % prime == 0) {
      piece.terms_.push_back({static_cast<std::uint32_t>(t.radicand / prime), t.re, t.im});
      v += piece;
    } else {
      piece.terms_.push_back(t);
      u += piece;
    }
  }
  Scalar conjugate = u - v * Scalar::sqrt(prime);
  Scalar norm = u * u - v * v * Scalar(static_cast<std::int64_t>(prime));
  return conjugate * norm.inverse();
}

bool structural_less(const Scalar& a, const Scalar& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Scalar::Term& x, const Scalar::Term& y) {
        if (x.radicand != y.radicand) return x.radicand < y.radicand;
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
      });
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff;
    if (t.im.is_zero()) {
      coeff = t.re.str();
    } else if (t.re.is_zero()) {
      coeff = t.im.str() + "i";
    } else {
      coeff = "(" + t.re.str() + (t.im.sign() > 0 ? "+" : "") + t.im.str() + "i)";
    }
    if (!first) os << " + ";
    first = false;
    os << coeff;
    if (t.radicand != 1) os << "*sqrt(" << t.radicand << ")";
  }
  return os.str();
}

nlohmann::json Scalar::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& t : terms_)
    j[std::to_string(t.radicand)] = {t.re.num(), t.re.den(), t.im.num(), t.im.den()};
  return j;
}

Scalar Scalar::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("Scalar JSON must be an object");
  Terms terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (!v.is_array() || v.size() != 4) throw std::invalid_argument("Scalar JSON term must be [re_num, re_den, im_num, im_den]");
    std::uint64_t radicand = std::stoull(it.key());
    terms.push_back({static_cast<std::uint32_t>(radicand), Rational(v[0].get<std::int64_t>(), v[1].get<std::int64_t>()),
                     Rational(v[2].get<std::int64_t>(), v[3].get<std::int64_t>())});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tkklab::exactnum
