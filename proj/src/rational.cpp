#include "simplexint/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

#include "simplexint/error.hpp"

namespace simplexint {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw Error(ErrorKind::InvalidLiteral,
              "invalid scalar literal '" + std::string(text) + "': " + why);
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Decimal exponents beyond this are rejected rather than expanded.
constexpr long kMaxDecimalExponent = 100000;

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned long e) const {
  Rational r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
  // Powers of a canonical fraction stay canonical; 0^e keeps den 1.
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) bad_literal(text, "empty");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text, "expected p/q with decimal digits");
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) bad_literal(text, "zero denominator");
    if (negative) p = -p;
    return Rational(p, q);
  }

  std::string_view mantissa = body;
  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text, "bad exponent");
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    if (exponent > kMaxDecimalExponent) bad_literal(text, "exponent too large");
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
    if (frac_part.find('.') != std::string_view::npos) bad_literal(text, "multiple decimal points");
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text, "no digits");
  if (!int_part.empty() && !all_digits(int_part)) bad_literal(text, "non-digit character");
  if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text, "non-digit character");

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  const long scale = static_cast<long>(frac_part.size()) - exponent;
  BigInt den(1);
  if (scale > 0) {
    den = pow10(static_cast<unsigned long>(scale));
  } else if (scale < 0) {
    num *= pow10(static_cast<unsigned long>(-scale));
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  const BigInt a = abs(q_.get_num());
  const BigInt& b = q_.get_den();

  // Largest e with 10^e <= a/b.
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto at_least = [&](long ex) {  // a/b >= 10^ex
    if (ex >= 0) return a >= b * pow10(static_cast<unsigned long>(ex));
    return a * pow10(static_cast<unsigned long>(-ex)) >= b;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // s = round(a/b * 10^(digits-1-e)), ties to even as printf does.
  const long shift = digits - 1 - e;
  BigInt num = a;
  BigInt den = b;
  if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
  else den *= pow10(static_cast<unsigned long>(-shift));
  BigInt s;
  BigInt rem;
  mpz_fdiv_qr(s.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(BigInt(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(s.get_mpz_t()))) ++s;
  if (s == pow10(static_cast<unsigned long>(digits))) {
    s /= 10;
    ++e;
  }

  std::string ds = s.get_str(10);  // exactly `digits` characters
  const bool scientific = e < -4 || e >= digits;
  std::string out = sign() < 0 ? "-" : "";
  auto strip = [](std::string frac) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac;
  };
  if (scientific) {
    out += ds[0];
    const std::string frac = strip(ds.substr(1));
    if (!frac.empty()) out += "." + frac;
    out += e < 0 ? "e-" : "e+";
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    out += ex;
  } else if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    out += ds.substr(0, int_len);
    const std::string frac = strip(ds.substr(int_len));
    if (!frac.empty()) out += "." + frac;
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip(ds);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace simplexint
