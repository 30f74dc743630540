#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qha {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p);

  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t p);

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of GF(p). A modulus of 0 marks an integer constant (as produced by
// Eigen's Scalar(0) / Scalar(1)); it adopts the modulus of whatever it meets.
class Zp {
 public:
  Zp() = default;
  Zp(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Zp(long long v, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  std::int64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  Zp inverse() const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const;
  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Zp& x);

 private:
  static std::uint32_t common_modulus(const Zp& a, const Zp& b);
  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

template <class S>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool accepts(const FieldSpec& f) { return f.kind == FieldKind::Rationals; }
  static Rational from_int(long long v, const FieldSpec&) { return Rational(v); }
  static Rational parse(std::string_view text, const FieldSpec& f);
  static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct FieldOps<Zp> {
  static bool accepts(const FieldSpec& f) { return f.kind == FieldKind::PrimeField; }
  static Zp from_int(long long v, const FieldSpec& f) { return Zp(v, f.characteristic); }
  static Zp parse(std::string_view text, const FieldSpec& f);
  static std::string to_string(const Zp& x);
};

template <class S>
S from_int(long long v, const FieldSpec& f) {
  return FieldOps<S>::from_int(v, f);
}

template <class S>
std::string to_string(const S& x) {
  return FieldOps<S>::to_string(x);
}

}  // namespace qha

namespace Eigen {

template <>
struct NumTraits<qha::Zp> : GenericNumTraits<qha::Zp> {
  using Real = qha::Zp;
  using NonInteger = qha::Zp;
  using Literal = qha::Zp;
  using Nested = qha::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static qha::Zp epsilon() { return qha::Zp(0); }
  static qha::Zp dummy_precision() { return qha::Zp(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
