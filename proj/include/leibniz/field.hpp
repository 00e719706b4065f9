#pragma once

// Exact scalars over a prime field GF(p) or the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leibniz/error.hpp"

namespace leibniz {

class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Prime, Rationals };

  /// Throws NotPrime unless p is prime. p is capped at 2^31 so products fit
  /// in 64 bits.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Prime; }
  /// p for GF(p), 0 for the rationals.
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// A field element in canonical form: a residue in [0, p) or a reduced
/// fraction with positive denominator. Equality is representation equality.
class Scalar {
 public:
  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  /// Reduces an arbitrary integer into f.
  static Scalar from_int(FieldSpec f, std::int64_t v);
  /// Throws DivisionByZero for den = 0 and, over GF(p), for den ≡ 0.
  static Scalar from_fraction(FieldSpec f, const mpz_class& num, const mpz_class& den);
  /// Parses "k", "-k" or "num/den".
  static Scalar parse(FieldSpec f, const std::string& text);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  /// Residue for prime fields. Precondition: field().is_finite().
  [[nodiscard]] std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Precondition: !field().is_finite().
  [[nodiscard]] const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  /// "3" over GF(p); "1/2" or "-4" over the rationals.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical sorting: residues ascending, rationals by
  /// value. Scalars of different fields compare by field first.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

 private:
  Scalar(FieldSpec f, std::uint32_t r) : field_(f), value_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), value_(std::move(q)) {}

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class FieldOp { Add, Sub, Mul, Neg, Inv };

/// Single entry point over the five field operations. b is ignored for Neg
/// and Inv and required otherwise.
Scalar field_arith(const FieldSpec& f, FieldOp op, const Scalar& a,
                   const std::optional<Scalar>& b = std::nullopt);

/// Multiplicative inverse; throws DivisionByZero for 0.
Scalar inverse(const Scalar& a);

/// Some r with r*r == a, or nullopt. Over GF(p) the smallest residue is
/// returned; over the rationals the non-negative root.
std::optional<Scalar> square_root(const FieldSpec& f, const Scalar& a);

/// Every nonzero element is a square. Among the supported fields this holds
/// only for GF(2).
bool is_two_closed(const FieldSpec& f);

/// Whether X^2 + lambda has a root in f, i.e. -lambda is a square.
/// Throws ZeroLambda for lambda = 0.
bool x2_plus_lambda_has_root(const FieldSpec& f, const Scalar& lambda);

/// The p elements of GF(p) in ascending order; InfiniteField for the rationals.
std::vector<Scalar> enumerate_scalars(const FieldSpec& f);

}  // namespace leibniz
