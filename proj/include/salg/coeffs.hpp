#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace salg {

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RingKind : std::uint8_t { Rational, PrimeField, PLocal };

class Scalar;

// Coefficient ring: the rationals, a prime field F_p, or the p-local integers Z_(p).
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rational, 0); }
  static Ring prime_field(std::uint32_t p);
  static Ring p_local(std::uint32_t p);
  // "Q", "Fp" or "Zp"; p is ignored for Q.
  static Ring parse(std::string_view name, std::uint32_t p);

  RingKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  bool is_field() const { return kind_ != RingKind::PLocal; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  // Accepts "a", "-a" and "a/b".
  Scalar parse_scalar(std::string_view text) const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(RingKind k, std::uint32_t p) : kind_(k), p_(p) {}
  RingKind kind_;
  std::uint32_t p_;
};

bool is_odd_prime(std::uint32_t p);
bool is_p_local(const mpq_class& q, std::uint32_t p);

// Exact scalar tagged with its ring. Arithmetic between different rings throws.
class Scalar {
 public:
  Scalar() : kind_(RingKind::Rational), p_(0), v_(std::uint32_t{0}) { v_ = mpq_class(0); }

  Ring ring() const;
  RingKind kind() const { return kind_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  Scalar inverse() const;
  // Exact value as a rational; residues of F_p are returned in [0, p).
  mpq_class to_rational() const;
  std::uint32_t residue() const;
  std::string str() const;

 private:
  friend class Ring;
  Scalar(RingKind k, std::uint32_t p, std::uint32_t r) : kind_(k), p_(p), v_(r) {}
  Scalar(RingKind k, std::uint32_t p, mpq_class q) : kind_(k), p_(p), v_(std::move(q)) {}
  void check_same(const Scalar& o) const;
  std::uint32_t r() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  mpq_class& q() { return std::get<mpq_class>(v_); }

  RingKind kind_;
  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> v_;
};

}  // namespace salg
