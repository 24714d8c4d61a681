#include "ctxlab/rational.hpp"

#include <cctype>

namespace ctxlab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) return std::nullopt;

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    value = Rational(mpz_class(num, 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class scaled(whole.empty() ? "0" : whole, 10);
    mpz_class den(1);
    for (char ch : frac) {
      scaled = scaled * 10 + (ch - '0');
      den *= 10;
    }
    value = Rational(scaled, den);
    value.canonicalize();
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(mpz_class(body, 10));
  }
  if (negative) value = -value;
  return value;
}

Rational parse_rational(const std::string& text) {
  auto parsed = try_parse_rational(text);
  if (!parsed) throw std::invalid_argument("malformed rational: '" + text + "'");
  return *parsed;
}

std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string display_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return fraction_string(r);
}

}  // namespace ctxlab
