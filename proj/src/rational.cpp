#include "polyef/rational.hpp"
#include "polyef/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>

namespace polyef {

namespace {

std::atomic<bool> &verification_flag() {
  static std::atomic<bool> flag{std::getenv("POLYEF_VERIFY") != nullptr};
  return flag;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ParseError("invalid rational literal '" + std::string(text) + "'");
}

} // namespace

bool verification_enabled() { return verification_flag().load(); }
void set_verification(bool enabled) { verification_flag().store(enabled); }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      bad_rational(text);
    mpz_class d(std::string(den), 10);
    if (d == 0)
      bad_rational(text);
    value = mpq_class(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      bad_rational(text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpz_class num(std::string(whole) + std::string(frac), 10);
    value = mpq_class(num, den);
    value.canonicalize();
  } else {
    if (!all_digits(body))
      bad_rational(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  if (negative)
    value = -value;
  return value;
}

std::string to_string(const Rational &value) { return value.get_str(); }

} // namespace polyef
