#include "seqforge/bigcount.hpp"

#include <cctype>
#include <stdexcept>

namespace seqforge {
namespace {

BigInt pow10(long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

// q >= 10^e for a positive rational q.
bool at_least_pow10(const Rational& q, long e) {
  if (e >= 0) return q.get_num() >= q.get_den() * pow10(e);
  return q.get_num() * pow10(-e) >= q.get_den();
}

long decimal_digits(const BigInt& v) {
  return static_cast<long>(v.get_str().size());
}

}  // namespace

std::string to_decimal_string(const BigInt& value) { return value.get_str(10); }

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (value < 0) throw std::invalid_argument("to_decimal_string: negative rational");
  if (significant_digits < 1) throw std::invalid_argument("to_decimal_string: need >= 1 digit");
  if (value == 0) return "0";

  long e = decimal_digits(value.get_num()) - decimal_digits(value.get_den());
  while (!at_least_pow10(value, e)) --e;
  while (at_least_pow10(value, e + 1)) ++e;

  // N = round_half_up(q * 10^shift), which has `significant_digits` digits.
  const long shift = significant_digits - 1 - e;
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
  BigInt scaled = (2 * num + den) / (2 * den);
  if (scaled == pow10(significant_digits)) {
    scaled /= 10;
    ++e;
  }

  const std::string digits = scaled.get_str();
  std::string out;
  if (e >= significant_digits - 1) {
    out = digits + std::string(static_cast<size_t>(e + 1 - significant_digits), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<size_t>(e + 1)) + "." + digits.substr(static_cast<size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
  }
  return out;
}

Rational parse_decimal(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  std::string mantissa;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa.push_back(ch);
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) throw std::invalid_argument("not a decimal number: " + std::string(text));

  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) throw std::invalid_argument("not a decimal number: " + std::string(text));
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) throw std::invalid_argument("exponent out of range: " + std::string(text));
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) throw std::invalid_argument("not a decimal number: " + std::string(text));

  Rational result{BigInt(mantissa, 10)};
  const long scale = exponent - frac_digits;
  if (scale >= 0) {
    result *= Rational(pow10(scale));
  } else {
    result /= Rational(pow10(-scale));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

BigInt parse_integer(std::string_view text) {
  size_t start = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: " + std::string(text));
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: " + std::string(text));
  }
  BigInt value(std::string(text.substr(start)), 10);
  return text[0] == '-' ? BigInt(-value) : value;
}

BigInt pow2(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

}  // namespace seqforge
