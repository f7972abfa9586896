#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace superhom {

/// Base exception for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Residue modulo an odd prime. The modulus travels with the value so that
/// mixing two different prime fields is caught at the first operation.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t p = 0;
};

/// Exact scalar: either an arbitrary-precision rational or an element of
/// GF(p). All arithmetic is closed and exact; mixing kinds throws.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  Scalar(std::int64_t v, std::uint32_t p);

  bool is_rational() const { return v_.index() == 0; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t modulus() const { return is_rational() ? 0 : std::get<Residue>(v_).p; }

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;
  /// 0 and 1 of the same field as *this.
  Scalar zero_like() const;
  Scalar one_like() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" (or "n") for rationals, "0".."p-1" for residues.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> v_;
};

/// The coefficient field: the rationals or GF(p) for an odd prime p.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws unless p is an odd prime (2 must be invertible).
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::rationals; }
  std::uint32_t characteristic() const { return is_rational() ? 0 : p; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t n) const;
  /// Parses "n" or "n/d". Over GF(p) any integer is reduced; fractions
  /// are interpreted as n * d^{-1}.
  Scalar parse(std::string_view text) const;
  /// Throws if s does not belong to this field.
  void check(const Scalar& s) const;

  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

}  // namespace superhom
