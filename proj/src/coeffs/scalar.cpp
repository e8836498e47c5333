#include "salg/coeffs.hpp"

#include <charconv>

namespace salg {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool is_p_local(const mpq_class& q, std::uint32_t p) {
  return mpz_divisible_ui_p(q.get_den().get_mpz_t(), p) == 0;
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_odd_prime(p)) throw ArithmeticError("prime field needs an odd prime, got " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::p_local(std::uint32_t p) {
  if (!is_odd_prime(p)) throw ArithmeticError("p-local ring needs an odd prime, got " + std::to_string(p));
  return Ring(RingKind::PLocal, p);
}

Ring Ring::parse(std::string_view name, std::uint32_t p) {
  if (name == "Q") return rationals();
  if (name == "Fp" || name == "F") return prime_field(p);
  if (name == "Zp" || name == "Z") return p_local(p);
  throw std::invalid_argument("unknown ring '" + std::string(name) + "'");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Rational: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(p_);
    case RingKind::PLocal: return "Z(" + std::to_string(p_) + ")";
  }
  return "?";
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long v) const {
  if (kind_ == RingKind::PrimeField) {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    return Scalar(kind_, p_, static_cast<std::uint32_t>(m));
  }
  return Scalar(kind_, p_, mpq_class(v));
}

Scalar Ring::from_rational(const mpq_class& q) const {
  switch (kind_) {
    case RingKind::Rational: return Scalar(kind_, 0, q);
    case RingKind::PLocal:
      if (!is_p_local(q, p_)) throw ArithmeticError(q.get_str() + " is not " + std::to_string(p_) + "-local");
      return Scalar(kind_, p_, q);
    case RingKind::PrimeField: {
      if (!is_p_local(q, p_)) throw ArithmeticError(q.get_str() + " has no reduction mod " + std::to_string(p_));
      mpz_class num = q.get_num() % p_;
      mpz_class den = q.get_den() % p_;
      if (num < 0) num += p_;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
      mpz_class r = (num * inv) % p_;
      return Scalar(kind_, p_, static_cast<std::uint32_t>(r.get_ui()));
    }
  }
  throw ArithmeticError("bad ring");
}

Scalar Ring::parse_scalar(std::string_view text) const {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
  q.canonicalize();
  return from_rational(q);
}

Ring Scalar::ring() const {
  switch (kind_) {
    case RingKind::Rational: return Ring::rationals();
    case RingKind::PrimeField: return Ring::prime_field(p_);
    case RingKind::PLocal: return Ring::p_local(p_);
  }
  return Ring::rationals();
}

void Scalar::check_same(const Scalar& o) const {
  if (kind_ != o.kind_ || p_ != o.p_) throw ArithmeticError("scalars from different rings");
}

bool Scalar::is_zero() const { return kind_ == RingKind::PrimeField ? r() == 0 : sgn(q()) == 0; }
bool Scalar::is_one() const { return kind_ == RingKind::PrimeField ? r() == 1 : q() == 1; }

bool Scalar::is_unit() const {
  switch (kind_) {
    case RingKind::PrimeField: return r() != 0;
    case RingKind::Rational: return sgn(q()) != 0;
    case RingKind::PLocal:
      return sgn(q()) != 0 && mpz_divisible_ui_p(q().get_num().get_mpz_t(), p_) == 0;
  }
  return false;
}

Scalar Scalar::operator-() const {
  if (kind_ == RingKind::PrimeField) return Scalar(kind_, p_, r() == 0 ? 0u : p_ - r());
  return Scalar(kind_, p_, mpq_class(-q()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (kind_ == RingKind::PrimeField) {
    std::uint64_t s = static_cast<std::uint64_t>(r()) + o.r();
    v_ = static_cast<std::uint32_t>(s % p_);
  } else {
    q() += o.q();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (kind_ == RingKind::PrimeField) {
    std::uint64_t s = static_cast<std::uint64_t>(r()) + p_ - o.r();
    v_ = static_cast<std::uint32_t>(s % p_);
  } else {
    q() -= o.q();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (kind_ == RingKind::PrimeField) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r()) * o.r() % p_);
  } else {
    q() *= o.q();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw ArithmeticError("division by a non-unit " + str());
  if (kind_ == RingKind::PrimeField) {
    // Fermat inversion
    std::uint64_t base = r(), acc = 1, e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Scalar(kind_, p_, static_cast<std::uint32_t>(acc));
  }
  return Scalar(kind_, p_, mpq_class(1 / q()));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (kind_ != o.kind_ || p_ != o.p_) return false;
  return kind_ == RingKind::PrimeField ? r() == o.r() : q() == o.q();
}

mpq_class Scalar::to_rational() const {
  if (kind_ == RingKind::PrimeField) return mpq_class(r());
  return q();
}

std::uint32_t Scalar::residue() const {
  if (kind_ != RingKind::PrimeField) throw ArithmeticError("residue() on a non-modular scalar");
  return r();
}

std::string Scalar::str() const {
  if (kind_ == RingKind::PrimeField) return std::to_string(r());
  return q().get_str();
}

}  // namespace salg
