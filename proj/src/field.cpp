#include "superhom/field.hpp"

#include <charconv>

namespace superhom {

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

const Residue& same_field(const Residue& a, const Residue& b) {
  if (a.p != b.p) throw Error("scalar arithmetic across different prime fields");
  return b;
}

[[noreturn]] void kind_mismatch() { throw Error("scalar arithmetic mixes rational and modular values"); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar::Scalar(std::int64_t v, std::uint32_t p) : v_(Residue{reduce_mod(v, p), p}) {}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return std::get<Residue>(v_).value == 1;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (v_.index() != o.v_.index()) kind_mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) += o.rational();
  } else {
    auto& a = std::get<Residue>(v_);
    const auto& b = same_field(a, std::get<Residue>(o.v_));
    a.value = static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % a.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (v_.index() != o.v_.index()) kind_mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) -= o.rational();
  } else {
    auto& a = std::get<Residue>(v_);
    const auto& b = same_field(a, std::get<Residue>(o.v_));
    a.value = static_cast<std::uint32_t>((std::uint64_t{a.value} + a.p - b.value) % a.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (v_.index() != o.v_.index()) kind_mismatch();
  if (is_rational()) {
    std::get<mpq_class>(v_) *= o.rational();
  } else {
    auto& a = std::get<Residue>(v_);
    const auto& b = same_field(a, std::get<Residue>(o.v_));
    a.value = static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % a.p);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / rational());
  const auto& a = std::get<Residue>(v_);
  return Scalar(pow_mod(a.value, a.p - 2, a.p), a.p);
}

Scalar Scalar::zero_like() const { return is_rational() ? Scalar() : Scalar(0, modulus()); }

Scalar Scalar::one_like() const { return is_rational() ? Scalar(mpq_class(1)) : Scalar(1, modulus()); }

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const auto& a = std::get<Residue>(v_);
  return Scalar(a.value == 0 ? 0 : static_cast<std::int64_t>(a.p - a.value), a.p);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& x = std::get<Residue>(a.v_);
  const auto& y = std::get<Residue>(b.v_);
  return x.p == y.p && x.value == y.value;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error("characteristic 2 is not supported: 2 must be invertible");
  if (!is_prime(p) || p > 0xFFFFFFFFULL) throw Error("field modulus " + std::to_string(p) + " is not an odd prime");
  return FieldSpec{Kind::prime_field, static_cast<std::uint32_t>(p)};
}

Scalar FieldSpec::from_int(std::int64_t n) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(n, p);
}

Scalar FieldSpec::parse(std::string_view text) const {
  if (text.empty()) throw Error("empty scalar");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw Error("malformed scalar \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  if (is_rational()) return Scalar(q);
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error("scalar \"" + std::string(text) + "\" has a denominator divisible by p");
  return Scalar(num.get_si(), p) / Scalar(den.get_si(), p);
}

void FieldSpec::check(const Scalar& s) const {
  if (s.is_rational() != is_rational() || s.modulus() != characteristic()) {
    throw Error("scalar " + s.to_string() + " does not belong to " + name());
  }
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")"; }

}  // namespace superhom
