#include "metrec/rational.hpp"

#include <cctype>

#include "metrec/errors.hpp"

namespace metrec {

namespace {

constexpr long kMaxExponent = 4096;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void fail(std::string_view token, std::size_t column, const char* why) {
  throw ParseError("invalid number '" + std::string(token) + "': " + why, 0, column);
}

mpz_class pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ")"
                 : what),
      line_(line),
      column_(column) {}

TriangleViolation::TriangleViolation(std::size_t i, std::size_t k, std::size_t j,
                                     Rational ij, Rational ik, Rational kj)
    : Error("triangle inequality violated: D(" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") = " + to_string(ij) + " > D(" +
            std::to_string(i + 1) + "," + std::to_string(k + 1) + ") + D(" +
            std::to_string(k + 1) + "," + std::to_string(j + 1) + ") = " +
            to_string(ik) + " + " + to_string(kj)),
      i_(i),
      k_(k),
      j_(j),
      ij_(std::move(ij)),
      ik_(std::move(ik)),
      kj_(std::move(kj)) {}

OrderError::OrderError(std::string code, std::size_t order)
    : Error(code + ": matrix order is " + std::to_string(order)),
      code_(std::move(code)),
      order_(order) {}

VerificationFailed::VerificationFailed(std::size_t i, std::size_t j,
                                       const Rational& expected, const std::string& got)
    : std::logic_error("certificate verification failed at (" + std::to_string(i + 1) +
                       "," + std::to_string(j + 1) + "): expected " +
                       to_string(expected) + ", got " + got),
      i_(i),
      j_(j) {}

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail(token, 1, "empty");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num)) fail(token, 1, "bad numerator");
    if (!all_digits(den)) fail(token, token.size() - den.size() + 1, "bad denominator");
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(token, token.size() - den.size() + 1, "zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6)
        fail(token, token.size() - exp_text.size() + 1, "bad exponent");
      exponent = std::stol(std::string(exp_text));
      if (exponent > kMaxExponent) fail(token, e + 1, "exponent out of range");
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long scale = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto whole = mantissa.substr(0, dot);
      auto frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        fail(token, 1, "bad decimal");
      digits = std::string(whole) + std::string(frac);
      scale = static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) fail(token, 1, "not a number");
      digits = std::string(mantissa);
    }
    mpz_class num(digits, 10);
    long shift = exponent - scale;
    if (shift >= 0)
      value = Rational(num * pow10(static_cast<unsigned long>(shift)));
    else
      value = Rational(num, pow10(static_cast<unsigned long>(-shift)));
    value.canonicalize();
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace metrec
