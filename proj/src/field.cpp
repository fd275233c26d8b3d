#include "tricover/field.hpp"

#include <charconv>
#include <limits>

namespace tricover {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RationalInFiniteField: return "RationalInFiniteField";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::NotOnGamma: return "NotOnGamma";
    case ErrorCode::NotOnZ: return "NotOnZ";
    case ErrorCode::NotOnFiber: return "NotOnFiber";
    case ErrorCode::FiberNotSplit: return "FiberNotSplit";
    case ErrorCode::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

// Residues are kept below 2^62 so that a + b never wraps.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

void require_same_field(const Scalar& x, const Scalar& y) {
  if (!(x.field() == y.field())) {
    throw Error(ErrorCode::FieldMismatch,
                "operands live in " + x.field().descriptor() + " and " + y.field().descriptor());
  }
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p == 3) {
    throw Error(ErrorCode::SmallCharacteristic, "characteristic " + std::to_string(p) + " is not supported");
  }
  if (p < 2 || p >= kMaxModulus) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
  }
  mpz_class n(std::to_string(p));
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (descriptor.substr(0, prefix.size()) != prefix) {
    throw Error(ErrorCode::InvalidArgument, "field descriptor must be \"Q\" or \"Fp:<prime>\", got \"" +
                                                std::string(descriptor) + "\"");
  }
  auto digits = descriptor.substr(prefix.size());
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::NonPrimeModulus, "malformed modulus \"" + std::string(digits) + "\"");
  }
  return prime(p);
}

std::string Field::descriptor() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_rational()) return Scalar(*this, mpq_class(mpz_class(std::to_string(n))));
  auto r = static_cast<std::int64_t>(n % static_cast<std::int64_t>(p_));
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar Field::from_integer(const mpz_class& n) const {
  if (is_rational()) return Scalar(*this, mpq_class(n));
  return Scalar(*this, reduce(n, p_));
}

Scalar Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (is_rational()) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(*this, std::move(q));
  }
  auto d = reduce(den, p_);
  if (d == 0) {
    throw Error(ErrorCode::RationalInFiniteField,
                "denominator " + den.get_str() + " vanishes in " + descriptor());
  }
  return Scalar(*this, reduce(num, p_)) / Scalar(*this, d);
}

Scalar Field::residue(std::uint64_t r) const {
  if (is_rational()) throw Error(ErrorCode::InvalidArgument, "residues exist only in F_p");
  return Scalar(*this, r % p_);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_finite()) throw Error(ErrorCode::InvalidArgument, "residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) throw Error(ErrorCode::InvalidArgument, "rational() on a finite-field scalar");
  return std::get<mpq_class>(value_);
}

Scalar Scalar::operator-() const {
  if (field_.is_finite()) {
    auto r = std::get<std::uint64_t>(value_);
    return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_finite()) {
    auto p = field_.characteristic();
    return Scalar(field_, mod_pow(std::get<std::uint64_t>(value_), p - 2, p));
  }
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = field_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_finite()) {
    auto p = x.field_.characteristic();
    auto s = std::get<std::uint64_t>(x.value_) + std::get<std::uint64_t>(y.value_);
    return Scalar(x.field_, s >= p ? s - p : s);
  }
  return Scalar(x.field_, mpq_class(std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_)));
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_finite()) {
    return Scalar(x.field_, mod_mul(std::get<std::uint64_t>(x.value_), std::get<std::uint64_t>(y.value_),
                                    x.field_.characteristic()));
  }
  return Scalar(x.field_, mpq_class(std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_)));
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  return x.field_ == y.field_ && x.value_ == y.value_;
}

std::strong_ordering canonical_compare(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_finite()) return std::get<std::uint64_t>(x.value_) <=> std::get<std::uint64_t>(y.value_);
  int c = cmp(std::get<mpq_class>(x.value_), std::get<mpq_class>(y.value_));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

bool Scalar::prints_negative() const {
  return field_.is_rational() && sgn(std::get<mpq_class>(value_)) < 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tricover
