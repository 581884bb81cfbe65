#include "tkklab/composition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkklab::exactnum {

const std::array<const char*, 8> kCompUnitNames = {"1", "i", "j", "k", "l", "il", "jl", "kl"};

int comp_dim(CompTag tag) { return static_cast<int>(tag); }

const char* comp_name(CompTag tag) {
  switch (tag) {
    case CompTag::R: return "R";
    case CompTag::C: return "C";
    case CompTag::H: return "H";
    case CompTag::O: return "O";
  }
  return "?";
}

namespace {

using Coeffs = std::array<Rational, 8>;

// Conjugate of the first n slots.
void conj_n(const Rational* x, Rational* out, int n) {
  out[0] = x[0];
  for (int s = 1; s < n; ++s) out[s] = -x[s];
}

// Cayley-Dickson product on the first n slots, n a power of two.
void mul_n(const Rational* x, const Rational* y, Rational* out, int n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  int h = n / 2;
  const Rational* a = x;
  const Rational* b = x + h;
  const Rational* c = y;
  const Rational* d = y + h;
  Rational cbar[4], dbar[4], t1[4], t2[4];
  conj_n(c, cbar, h);
  conj_n(d, dbar, h);
  mul_n(a, c, t1, h);
  mul_n(dbar, b, t2, h);
  for (int s = 0; s < h; ++s) out[s] = t1[s] - t2[s];
  mul_n(d, a, t1, h);
  mul_n(b, cbar, t2, h);
  for (int s = 0; s < h; ++s) out[h + s] = t1[s] + t2[s];
}

}  // namespace

CompElement CompElement::unit(CompTag tag, int slot) {
  if (slot < 0 || slot >= comp_dim(tag)) throw std::out_of_range("CompElement::unit: slot outside algebra");
  CompElement e(tag);
  e.c_[slot] = Rational(1);
  return e;
}

CompElement CompElement::conj() const {
  CompElement r(tag_);
  conj_n(c_.data(), r.c_.data(), comp_dim(tag_));
  return r;
}

Rational CompElement::norm() const {
  Rational s;
  for (int k = 0; k < comp_dim(tag_); ++k) s += c_[k] * c_[k];
  return s;
}

bool CompElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

CompElement CompElement::operator-() const {
  CompElement r(tag_);
  for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
  return r;
}

CompElement& CompElement::operator+=(const CompElement& o) {
  tag_ = std::max(tag_, o.tag_);
  for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
  return *this;
}

CompElement& CompElement::operator-=(const CompElement& o) {
  tag_ = std::max(tag_, o.tag_);
  for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
  return *this;
}

CompElement operator*(const CompElement& a, const CompElement& b) {
  CompElement r(std::max(a.tag_, b.tag_));
  mul_n(a.c_.data(), b.c_.data(), r.c_.data(), comp_dim(r.tag_));
  return r;
}

CompElement operator*(const Rational& r, CompElement a) {
  for (auto& c : a.c_) c *= r;
  return a;
}

std::string CompElement::str() const {
  std::string out;
  for (int k = 0; k < comp_dim(tag_); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k > 0) out += kCompUnitNames[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace tkklab::exactnum
