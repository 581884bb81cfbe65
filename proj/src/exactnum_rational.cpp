#include "tkklab/rational.hpp"

#include <charconv>
#include <ostream>

namespace tkklab::exactnum {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  std::string_view view(text);
  return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tkklab::exactnum
