#include "lpa/scalar.hpp"

#include <cstdlib>

namespace lpa {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t reduce_rational(const Rational& q, std::uint64_t p) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(q) % p;
  cpp_int den = denominator(q) % p;
  if (den == 0) throw Error(ErrorKind::Parse, "BadScalar", "denominator divisible by p");
  std::uint64_t n = static_cast<std::uint64_t>((num % p + p) % p);
  std::uint64_t d = static_cast<std::uint64_t>((den % p + p) % p);
  unsigned __int128 r = static_cast<unsigned __int128>(n) * mod_pow(d, p - 2, p) % p;
  return static_cast<std::uint64_t>(r);
}

} // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::Parse, "BadField", std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar::Scalar(Field f, const Rational& q) : field_(f) {
  if (f.is_rational())
    q_ = q;
  else
    r_ = reduce_rational(q, f.characteristic());
}

Scalar Scalar::parse(Field f, const std::string& text) {
  std::string s = text;
  // strip one layer of parentheses and whitespace
  auto strip = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  strip(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    strip(s);
  }
  if (s.empty()) throw parse_error("empty scalar");
  std::size_t slash = s.find('/');
  try {
    Rational q;
    if (slash == std::string::npos) {
      q = Rational(boost::multiprecision::cpp_int(s));
    } else {
      boost::multiprecision::cpp_int num(s.substr(0, slash));
      boost::multiprecision::cpp_int den(s.substr(slash + 1));
      if (den == 0) throw parse_error("zero denominator");
      q = Rational(num, den);
    }
    return Scalar(f, q);
  } catch (const std::exception& e) {
    throw parse_error("bad scalar '" + text + "'");
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }
bool Scalar::is_negative() const { return field_.is_rational() && q_ < 0; }

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar out(*this);
  if (field_.is_rational()) out.q_ = q_ + o.q_;
  else out.r_ = (r_ + o.r_) % field_.characteristic();
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = q_ * o.q_;
  } else {
    unsigned __int128 r = static_cast<unsigned __int128>(r_) * o.r_;
    out.r_ = static_cast<std::uint64_t>(r % field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rational()) out.q_ = -q_;
  else out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "DivisionByZero", "inverse of zero");
  Scalar out(*this);
  if (field_.is_rational()) out.q_ = 1 / q_;
  else out.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) {
    std::string n = numerator(q_).str();
    if (denominator(q_) == 1) return n;
    return n + "/" + denominator(q_).str();
  }
  return std::to_string(r_);
}

} // namespace lpa
