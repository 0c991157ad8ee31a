#include "toploc/algebra/field.hpp"

#include "toploc/error.hpp"

namespace toploc {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) {
    throw Error(ErrorCode::Precondition,
                "field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(FieldKind::PrimeField, p);
}

std::string Field::name() const {
  return kind_ == FieldKind::Rationals ? "QQ" : "F" + std::to_string(p_);
}

Scalar Field::from_integer(long value) const {
  if (kind_ == FieldKind::Rationals) return Scalar(value);
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (kind_ == FieldKind::Rationals) {
    Scalar q = value;
    q.canonicalize();
    return q;
  }
  mpz_class num = value.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = value.get_den() % p_;
  if (den == 0) {
    throw Error(ErrorCode::Precondition,
                "denominator " + value.get_den().get_str() + " vanishes in " + name());
  }
  mpz_class inv;
  mpz_class modulus(p_);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (num * inv) % p_;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a + b;
  std::uint64_t r = raw(a) + raw(b);
  if (r >= p_) r -= p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a - b;
  std::uint64_t r = raw(a) + p_ - raw(b);
  if (r >= p_) r -= p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rationals) return a * b;
  return Scalar(static_cast<unsigned long>((raw(a) * raw(b)) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rationals) return -a;
  std::uint64_t v = raw(a);
  return Scalar(static_cast<unsigned long>(v == 0 ? 0 : p_ - v));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorCode::NotDivisible, "division by zero in " + name());
  if (kind_ == FieldKind::Rationals) return 1 / a;
  return pow(a, p_ - 2);
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  if (kind_ == FieldKind::Rationals) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
    Scalar r(num, den);
    r.canonicalize();
    return r;
  }
  std::uint64_t base = raw(a) % p_;
  std::uint64_t result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return Scalar(static_cast<unsigned long>(result));
}

std::optional<Scalar> Field::sqrt(const Scalar& a) const {
  if (is_zero(a)) return Scalar(0);
  if (kind_ == FieldKind::Rationals) {
    if (sgn(a) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), a.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), a.get_den_mpz_t());
    return Scalar(num, den);
  }
  if (p_ == 2) return a;
  // Tonelli-Shanks.
  const std::uint64_t p = p_;
  const std::uint64_t n = raw(a);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  if (powmod(n, (p - 1) / 2) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q);
  std::uint64_t t = powmod(n, q);
  std::uint64_t r = powmod(n, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return Scalar(static_cast<unsigned long>(r));
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::PrimeField) return a.get_num().get_str();
  return a.get_str();
}

}  // namespace toploc
