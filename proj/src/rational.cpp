#include "rootstack/rational.hpp"

#include <cctype>

#include "rootstack/errors.hpp"

namespace rootstack {

Integer binomial(long n, long k) {
  if (n < 0)
    throw InternalError("binomial with negative upper index: C(" +
                        std::to_string(n) + ", " + std::to_string(k) + ")");
  if (k < 0 || k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer factorial(long n) {
  if (n < 0)
    throw InternalError("factorial of negative argument " + std::to_string(n));
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer int_pow(long base, long exp) {
  if (exp < 0) throw InternalError("negative exponent in integer power");
  Integer b(base);
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(),
             static_cast<unsigned long>(exp));
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_canonical(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    // Syntactically valid and non-zero, so canonicalize below is safe.
    if (!all_digits(den) || den.find_first_not_of('0') == std::string_view::npos)
      return std::nullopt;
  }
  std::string_view mag = num;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!all_digits(mag)) return std::nullopt;

  Rational value;
  if (mpq_set_str(value.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    return std::nullopt;
  value.canonicalize();
  // Canonical text round-trips exactly; this rejects unreduced fractions,
  // "p/1", "-0", and leading zeros in one stroke.
  if (to_string(value) != text) return std::nullopt;
  return value;
}

}  // namespace rootstack
