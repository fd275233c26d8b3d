#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/field.hpp"

namespace tricover {

/// Ordered list of variable names shared between polynomials of one ring.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::vector<std::string> names);
  VarList(std::initializer_list<std::string> names) : VarList(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// This list followed by `extra` (names must be new).
  VarList extended(std::initializer_list<std::string> extra) const;
  std::string joined(std::string_view sep = ",") const;

  friend bool operator==(const VarList& x, const VarList& y) {
    return x.names_ == y.names_ || *x.names_ == *y.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic, largest monomial first.
struct GrlexDescending {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

using Assignment = std::map<std::string, Scalar, std::less<>>;

/// Sparse multivariate polynomial over a Field in a fixed list of variables.
/// Zero coefficients are never stored, so structural equality is equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexDescending>;

  MultiPoly(Field field, VarList vars) : field_(field), vars_(std::move(vars)) {}

  static MultiPoly constant(Field field, VarList vars, const Scalar& c);
  static MultiPoly constant(Field field, VarList vars, std::int64_t c);
  static MultiPoly variable(Field field, VarList vars, std::string_view name);
  static MultiPoly monomial(Field field, VarList vars, Exponent exp, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  const VarList& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const Exponent& exp) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const Scalar& c, const MultiPoly& x);
  MultiPoly& operator+=(const MultiPoly& y);
  MultiPoly& operator-=(const MultiPoly& y);
  MultiPoly& operator*=(const MultiPoly& y) { return *this = *this * y; }
  MultiPoly pow(std::uint32_t e) const;

  /// Adds c * x^exp in place.
  void add_term(const Exponent& exp, const Scalar& c);

  /// Values aligned with vars().
  Scalar eval(std::span<const Scalar> point) const;
  /// Every variable must be assigned (MissingAssignment otherwise).
  Scalar eval(const Assignment& point) const;

  MultiPoly derivative(std::size_t var) const;

  /// Same polynomial viewed in a ring whose variable list contains ours.
  MultiPoly embed(const VarList& target) const;

  friend bool operator==(const MultiPoly& x, const MultiPoly& y);

  /// Grlex-descending text in the parser grammar ("0" for zero).
  std::string to_string() const;

 private:
  void require_compatible(const MultiPoly& other) const;

  Field field_;
  VarList vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the expression grammar
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base := rational | var | '(' expr ')'
///   rational := int ('/' nat)?
/// Whitespace between tokens is ignored.
MultiPoly parse_poly(std::string_view text, const VarList& vars, const Field& field);

}  // namespace tricover
