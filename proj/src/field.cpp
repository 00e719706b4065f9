#include "leibniz/field.hpp"

namespace leibniz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotLeibniz: return "NotLeibniz";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::NotExtraspecial: return "NotExtraspecial";
    case ErrorKind::BadGenerator: return "BadGenerator";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::FieldMismatch,
                "operands over " + a.name() + " and " + b.name());
  }
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) acc = acc * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > (1ULL << 31) || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_finite() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Scalar Scalar::zero(FieldSpec f) { return from_int(f, 0); }
Scalar Scalar::one(FieldSpec f) { return from_int(f, 1); }

Scalar Scalar::from_int(FieldSpec f, std::int64_t v) {
  if (f.is_finite()) return Scalar(f, reduce(v, f.characteristic()));
  return Scalar(f, mpq_class(mpz_class(static_cast<long>(v))));
}

Scalar Scalar::from_fraction(FieldSpec f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (f.is_finite()) {
    const auto p = f.characteristic();
    const auto d = reduce(den, p);
    if (d == 0) {
      throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + f.name());
    }
    const std::uint64_t n = reduce(num, p);
    return Scalar(f, static_cast<std::uint32_t>(n * pow_mod(d, p - 2, p) % p));
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(f, std::move(q));
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return from_fraction(f, mpz_class(text), 1);
    return from_fraction(f, mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "cannot parse scalar '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return residue() == 0;
  return rational() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return residue() == 1;
  return rational() == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(residue());
  return rational().get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_finite()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.field_.kind() != b.field_.kind()) return a.field_.kind() <=> b.field_.kind();
  if (a.field_.characteristic() != b.field_.characteristic()) {
    return a.field_.characteristic() <=> b.field_.characteristic();
  }
  if (a.field_.is_finite()) return a.residue() <=> b.residue();
  const int c = cmp(a.rational(), b.rational());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a.field_, b.field_);
  if (a.field_.is_finite()) {
    const std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    return Scalar(a.field_, static_cast<std::uint32_t>(s % a.field_.characteristic()));
  }
  return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a.field_, b.field_);
  if (a.field_.is_finite()) {
    const std::uint64_t p = a.field_.characteristic();
    return Scalar(a.field_, static_cast<std::uint32_t>((a.residue() + p - b.residue()) % p));
  }
  return Scalar(a.field_, mpq_class(a.rational() - b.rational()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a.field_, b.field_);
  if (a.field_.is_finite()) {
    const std::uint64_t m = std::uint64_t{a.residue()} * b.residue();
    return Scalar(a.field_, static_cast<std::uint32_t>(m % a.field_.characteristic()));
  }
  return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inverse(b); }

Scalar operator-(const Scalar& a) {
  if (a.field_.is_finite()) {
    const auto p = a.field_.characteristic();
    return Scalar(a.field_, a.residue() == 0 ? 0U : p - a.residue());
  }
  return Scalar(a.field_, mpq_class(-a.rational()));
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto& f = a.field();
  if (f.is_finite()) {
    const auto p = f.characteristic();
    return Scalar::from_int(f, pow_mod(a.residue(), p - 2, p));
  }
  return Scalar::from_fraction(f, a.rational().get_den(), a.rational().get_num());
}

Scalar field_arith(const FieldSpec& f, FieldOp op, const Scalar& a,
                   const std::optional<Scalar>& b) {
  require_same(f, a.field());
  if (op == FieldOp::Neg) return -a;
  if (op == FieldOp::Inv) return inverse(a);
  if (!b) throw Error(ErrorKind::DimensionMismatch, "binary field operation needs two operands");
  require_same(f, b->field());
  switch (op) {
    case FieldOp::Add: return a + *b;
    case FieldOp::Sub: return a - *b;
    default: return a * *b;
  }
}

std::optional<Scalar> square_root(const FieldSpec& f, const Scalar& a) {
  require_same(f, a.field());
  if (f.is_finite()) {
    const std::uint64_t p = f.characteristic();
    for (std::uint64_t r = 0; r < p; ++r) {
      if (r * r % p == a.residue()) return Scalar::from_int(f, static_cast<std::int64_t>(r));
    }
    return std::nullopt;
  }
  const auto& q = a.rational();
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Scalar::from_fraction(f, num, den);
}

bool is_two_closed(const FieldSpec& f) {
  return f.is_finite() && f.characteristic() == 2;
}

bool x2_plus_lambda_has_root(const FieldSpec& f, const Scalar& lambda) {
  require_same(f, lambda.field());
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  return square_root(f, -lambda).has_value();
}

std::vector<Scalar> enumerate_scalars(const FieldSpec& f) {
  if (!f.is_finite()) {
    throw Error(ErrorKind::InfiniteField, "cannot enumerate the elements of " + f.name());
  }
  std::vector<Scalar> out;
  out.reserve(f.characteristic());
  for (std::uint32_t r = 0; r < f.characteristic(); ++r) {
    out.push_back(Scalar::from_int(f, r));
  }
  return out;
}

}  // namespace leibniz
