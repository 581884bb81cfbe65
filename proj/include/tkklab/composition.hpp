#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "tkklab/rational.hpp"

namespace tkklab::exactnum {

// Which composition algebra an element lives in. The numeric value is the
// number of active slots.
enum class CompTag : int { R = 1, C = 2, H = 4, O = 8 };

int comp_dim(CompTag tag);
const char* comp_name(CompTag tag);

// Element of R, C, H or O over the ordered basis (1, i, j, k, l, il, jl, kl).
// The octonions are the Cayley-Dickson double of H:
//   (a + b l)(c + d l) = (ac - conj(d) b) + (d a + b conj(c)) l.
class CompElement {
 public:
  CompElement() = default;
  explicit CompElement(CompTag tag) : tag_(tag) {}
  CompElement(CompTag tag, const Rational& real) : tag_(tag) { c_[0] = real; }

  // Basis unit number `slot` (0 = real unit) in the given algebra.
  static CompElement unit(CompTag tag, int slot);

  CompTag tag() const { return tag_; }
  const Rational& operator[](std::size_t slot) const { return c_[slot]; }
  Rational& operator[](std::size_t slot) { return c_[slot]; }

  CompElement conj() const;
  Rational real() const { return c_[0]; }
  // x conj(x), always a nonnegative rational.
  Rational norm() const;
  bool is_zero() const;

  CompElement operator-() const;
  CompElement& operator+=(const CompElement& o);
  CompElement& operator-=(const CompElement& o);
  friend CompElement operator+(CompElement a, const CompElement& b) { return a += b; }
  friend CompElement operator-(CompElement a, const CompElement& b) { return a -= b; }
  friend CompElement operator*(const CompElement& a, const CompElement& b);
  friend CompElement operator*(const Rational& r, CompElement a);
  friend bool operator==(const CompElement&, const CompElement&) = default;

  std::string str() const;

 private:
  CompTag tag_ = CompTag::R;
  std::array<Rational, 8> c_{};
};

extern const std::array<const char*, 8> kCompUnitNames;

}  // namespace tkklab::exactnum
