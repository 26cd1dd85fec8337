#include "treeloc/arith.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "treeloc/errors.hpp"

namespace treeloc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Rational(n, d);
    value.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string digits = std::string(whole) + std::string(frac);
    value = Rational(mpz_class(digits, 10), scale);
    value.canonicalize();
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(mpz_class(std::string(text), 10));
  }
  return negative ? Rational(-value) : value;
}

double parse_real(std::string_view text) {
  if (auto q = parse_rational(text)) return q->get_d();
  std::string buf(text);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw InputError("not a finite number: '" + buf + "'");
  }
  return v;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

std::string format_rational(const Rational& v) { return v.get_str(10); }

}  // namespace treeloc
