#include <algorithm>
#include <stdexcept>

#include "tkklab/cartan.hpp"

namespace tkklab::cartan {

Rational dot(const RootVec& a, const RootVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("root length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RootVec neg(const RootVec& a) {
  RootVec r = a;
  for (auto& x : r) x = -x;
  return r;
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

std::string root_str(const RootVec& a) {
  bool halves = true, any = false;
  for (const auto& x : a)
    if (!x.is_zero()) {
      any = true;
      if (!(x == Rational(1, 2) || x == Rational(-1, 2))) halves = false;
    }
  if (!any) return "0";
  std::string s;
  Rational scale = halves ? Rational(2) : Rational(1);
  // highest index first for half-sums, matching how such roots are usually written
  std::vector<std::size_t> order(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) order[i] = halves ? a.size() - 1 - i : i;
  for (std::size_t i : order) {
    Rational c = a[i] * scale;
    if (c.is_zero()) continue;
    if (c > Rational(0)) {
      if (!s.empty()) s += "+";
    } else {
      s += "-";
      c = -c;
    }
    if (!(c == Rational(1))) s += c.str();
    s += "e" + std::to_string(i + 1);
  }
  return halves ? "(" + s + ")/2" : s;
}

std::string algebra_name(Kind kind, int n) {
  switch (kind) {
    case Kind::SpinFactor: return "so(2," + std::to_string(n + 1) + ")";
    case Kind::HermR: return "sp(" + std::to_string(n) + ",R)";
    case Kind::HermC: return "su(" + std::to_string(n) + "," + std::to_string(n) + ")";
    case Kind::HermH: return "so*(" + std::to_string(4 * n) + ")";
    case Kind::HermO3: return "e7(-25)";
  }
  return "?";
}

std::size_t coordinate_count(Kind kind, int n) {
  switch (kind) {
    case Kind::SpinFactor: return static_cast<std::size_t>((n + 3) / 2);
    case Kind::HermR: return static_cast<std::size_t>(n);
    case Kind::HermC:
    case Kind::HermH: return static_cast<std::size_t>(2 * n);
    case Kind::HermO3: return 8;
  }
  return 0;
}

namespace {

RootVec unit(std::size_t c, std::size_t i, Rational s = Rational(1)) {
  RootVec r(c);
  r[i] = s;
  return r;
}

RootVec two(std::size_t c, std::size_t i, Rational si, std::size_t j, Rational sj) {
  RootVec r(c);
  r[i] += si;
  r[j] += sj;
  return r;
}

}  // namespace

std::vector<Root> root_system(Kind kind, int n) {
  const std::size_t c = coordinate_count(kind, n);
  const Rational one(1), mone(-1);
  std::vector<Root> out;
  auto push = [&](RootVec v, bool positive, bool compact) {
    out.push_back({v, positive, compact});
    out.push_back({neg(v), !positive, compact});
  };
  switch (kind) {
    case Kind::HermR:
      for (std::size_t i = 0; i < c; ++i) {
        push(unit(c, i, Rational(2)), true, false);
        for (std::size_t j = i + 1; j < c; ++j) {
          push(two(c, i, one, j, mone), true, true);
          push(two(c, i, one, j, one), true, false);
        }
      }
      break;
    case Kind::HermC:
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
          bool noncompact = (a < c / 2) != (b < c / 2);
          push(two(c, a, one, b, mone), true, !noncompact);
        }
      break;
    case Kind::HermH:
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
          push(two(c, a, one, b, mone), true, true);
          push(two(c, a, one, b, one), true, false);
        }
      break;
    case Kind::SpinFactor: {
      // so(2, n+1): coordinate 1 is the compact so(2) direction.
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
          push(two(c, a, one, b, mone), true, a != 0);
          push(two(c, a, one, b, one), true, a != 0);
        }
      if ((n + 3) % 2 == 1)
        for (std::size_t a = 0; a < c; ++a) push(unit(c, a), true, a != 0);
      break;
    }
    case Kind::HermO3: {
      const Rational h(1, 2);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
          push(two(c, i, one, j, one), true, true);
          push(two(c, i, mone, j, one), true, true);
        }
      for (std::size_t i = 0; i < 5; ++i) {
        push(two(c, i, one, 5, one), true, false);
        push(two(c, i, mone, 5, one), true, false);
      }
      push(two(c, 7, one, 6, mone), true, false);
      for (int mask = 0; mask < 32; ++mask) {
        RootVec v(c);
        int flips = 0;
        for (int i = 0; i < 5; ++i) {
          bool f = (mask >> i) & 1;
          flips += f;
          v[i] = f ? -h : h;
        }
        v[7] = h;
        v[6] = -h;
        v[5] = flips % 2 == 0 ? -h : h;
        push(v, true, flips % 2 == 0);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.v < b.v; });
  return out;
}

Rational eval_weight(const RootVec& lambda, const RootVec& alpha) {
  if (lambda.size() != alpha.size()) throw std::invalid_argument("weight length does not match root coordinates");
  return Rational(2) * dot(lambda, alpha) / dot(alpha, alpha);
}

Scalar eval_weight(const std::vector<Scalar>& lambda, const RootVec& alpha) {
  if (lambda.size() != alpha.size()) throw std::invalid_argument("weight length does not match root coordinates");
  Scalar s;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += lambda[i] * Scalar(alpha[i]);
  return s * Scalar(Rational(2) / dot(alpha, alpha));
}

}  // namespace tkklab::cartan
