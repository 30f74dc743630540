#include "qha/scalar.hpp"

#include <charconv>

namespace qha {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw FieldError("characteristic must be below 2^31");
  if (!is_prime(p)) throw FieldError("non-prime characteristic " + std::to_string(p));
  return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1, base = static_cast<std::uint64_t>(b);
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Zp::Zp(long long v, std::uint32_t p) : value_(p ? reduce(v, p) : v), modulus_(p) {}

std::uint32_t Zp::common_modulus(const Zp& a, const Zp& b) {
  if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
    throw FieldError("mixing elements of different prime fields");
  return a.modulus_ ? a.modulus_ : b.modulus_;
}

Zp& Zp::operator+=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  value_ = p ? reduce(reduce(value_, p) + reduce(o.value_, p), p) : value_ + o.value_;
  modulus_ = p;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  value_ = p ? reduce(reduce(value_, p) - reduce(o.value_, p), p) : value_ - o.value_;
  modulus_ = p;
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p) {
    auto a = static_cast<std::uint64_t>(reduce(value_, p));
    auto b = static_cast<std::uint64_t>(reduce(o.value_, p));
    value_ = static_cast<std::int64_t>(a * b % p);
  } else {
    value_ *= o.value_;
  }
  modulus_ = p;
  return *this;
}

Zp& Zp::operator/=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (o.is_zero()) throw std::domain_error("division by zero in GF(p)");
  if (p) {
    Zp inv = Zp(o.value_, p).inverse();
    Zp a(value_, p);
    *this = a * inv;
  } else {
    if (value_ % o.value_ != 0) throw std::domain_error("inexact division of GF(p) constants");
    value_ /= o.value_;
  }
  return *this;
}

Zp Zp::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  if (!modulus_) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("inverse of GF(p) constant without a modulus");
  }
  return Zp(pow_mod(value_, modulus_ - 2, modulus_), modulus_);
}

Zp Zp::operator-() const { return modulus_ ? Zp(-value_, modulus_) : Zp(-value_); }

bool operator==(const Zp& a, const Zp& b) {
  std::uint32_t p = Zp::common_modulus(a, b);
  if (!p) return a.value_ == b.value_;
  return reduce(a.value_, p) == reduce(b.value_, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value_; }

Rational FieldOps<Rational>::parse(std::string_view text, const FieldSpec&) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw FieldError("malformed rational '" + std::string(text) + "'");
  boost::multiprecision::mpz_int n{std::string(num.front() == '+' ? num.substr(1) : num)};
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Zp FieldOps<Zp>::parse(std::string_view text, const FieldSpec& f) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  auto to_int = [&](std::string_view part) {
    if (!valid_integer(part)) throw FieldError("malformed GF(p) scalar '" + std::string(text) + "'");
    if (part.front() == '+') part.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw FieldError("GF(p) scalar out of range '" + std::string(text) + "'");
    return Zp(v, f.characteristic);
  };
  Zp n = to_int(num), d = to_int(den);
  if (d.is_zero()) throw FieldError("denominator vanishes mod p in '" + std::string(text) + "'");
  return n / d;
}

std::string FieldOps<Zp>::to_string(const Zp& x) { return std::to_string(x.value()); }

}  // namespace qha
