#include "tkklab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace tkklab::exactnum {

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.terms_[e] = Scalar(1);
  return p;
}

Poly Poly::linear(const std::vector<Scalar>& coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_[e] = coeffs[i];
    }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x = x * c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(out.nvars_, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly pow(const Poly& p, int k) {
  Poly out = Poly::constant(p.nvars(), Scalar(1));
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Scalar Poly::eval(const std::vector<Scalar>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("Poly::eval: wrong number of values");
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = t * x[i];
    total += t;
  }
  return total;
}

Poly Poly::with_vars(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("Poly::with_vars: cannot drop variables");
  Poly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(nvars, 0);
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::substitute(std::size_t i, const Poly& p) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = rest.at(i);
    rest[i] = 0;
    Poly mono(nvars_);
    mono.terms_[rest] = c;
    out += mono * pow(p, k);
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      constant = false;
      mono << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) mono << "^" << int(e[i]);
    }
    if (c.terms().size() > 1) os << "(" << c.str() << ")";
    else os << c.str();
    if (!constant) os << mono.str();
  }
  return os.str();
}

std::optional<Scalar> proportionality(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [e0, c0] = *b.terms().begin();
  auto it = a.terms().find(e0);
  Scalar kappa = it == a.terms().end() ? Scalar() : it->second / c0;
  if (a - b * kappa == Poly(a.nvars())) return kappa;
  if ((a - b * kappa).is_zero()) return kappa;
  return std::nullopt;
}

}  // namespace tkklab::exactnum
