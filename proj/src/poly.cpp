#include "tricover/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace tricover {

VarList::VarList(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error(ErrorCode::InvalidArgument, "duplicate variable " + names[i]);
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

VarList VarList::extended(std::initializer_list<std::string> extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return VarList(std::move(all));
}

std::string VarList::joined(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i) out += sep;
    out += (*names_)[i];
  }
  return out;
}

bool GrlexDescending::operator()(const Exponent& x, const Exponent& y) const {
  auto dx = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
  auto dy = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
  if (dx != dy) return dx > dy;
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

MultiPoly MultiPoly::constant(Field field, VarList vars, const Scalar& c) {
  MultiPoly p(field, vars);
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::constant(Field field, VarList vars, std::int64_t c) {
  return constant(field, std::move(vars), field.from_int(c));
}

MultiPoly MultiPoly::variable(Field field, VarList vars, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, std::string(name));
  Exponent e(vars.size(), 0);
  e[*idx] = 1;
  return monomial(field, std::move(vars), std::move(e), field.one());
}

MultiPoly MultiPoly::monomial(Field field, VarList vars, Exponent exp, const Scalar& c) {
  if (exp.size() != vars.size()) throw Error(ErrorCode::VariableMismatch, "exponent length");
  MultiPoly p(field, std::move(vars));
  p.add_term(exp, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

Scalar MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Scalar MultiPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? field_.zero() : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;  // grlex: first term has top degree
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.descriptor() + " vs " + other.field_.descriptor());
  }
  if (!(vars_ == other.vars_)) {
    throw Error(ErrorCode::VariableMismatch, "[" + vars_.joined() + "] vs [" + other.vars_.joined() + "]");
  }
}

void MultiPoly::add_term(const Exponent& exp, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& y) {
  require_compatible(y);
  for (const auto& [e, c] : y.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& y) {
  require_compatible(y);
  for (const auto& [e, c] : y.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r = x;
  r += y;
  return r;
}

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r = x;
  r -= y;
  return r;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  x.require_compatible(y);
  MultiPoly r(x.field_, x.vars_);
  Exponent e(x.vars_.size());
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& x) {
  MultiPoly r(x.field_, x.vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, cx] : x.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * cx);
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(field_, vars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != vars_.size()) {
    throw Error(ErrorCode::MissingAssignment, "expected " + std::to_string(vars_.size()) + " values, got " +
                                                  std::to_string(point.size()));
  }
  Scalar sum = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

Scalar MultiPoly::eval(const Assignment& point) const {
  std::vector<Scalar> values;
  values.reserve(vars_.size());
  for (const auto& name : vars_.names()) {
    auto it = point.find(name);
    if (it == point.end()) throw Error(ErrorCode::MissingAssignment, "no value for " + name);
    values.push_back(it->second);
  }
  return eval(values);
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, field_.from_int(e[var]) * c);
  }
  return r;
}

MultiPoly MultiPoly::embed(const VarList& target) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto idx = target.index_of(vars_[i]);
    if (!idx) throw Error(ErrorCode::VariableMismatch, vars_[i] + " missing from [" + target.joined() + "]");
    map[i] = *idx;
  }
  MultiPoly r(field_, target);
  for (const auto& [e, c] : terms_) {
    Exponent t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[map[i]] = e[i];
    r.add_term(t, c);
  }
  return r;
}

bool operator==(const MultiPoly& x, const MultiPoly& y) {
  return x.field_ == y.field_ && x.vars_ == y.vars_ && x.terms_ == y.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.prints_negative();
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars, const Field& field)
      : text_(text), vars_(vars), field_(field) {}

  MultiPoly parse() {
    auto result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip_ws();
      auto n = digits();
      if (n.empty()) fail("expected exponent");
      mpz_class e(n);
      if (e > std::numeric_limits<std::int32_t>::max()) fail("exponent too large");
      b = b.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (accept('/')) {
        skip_ws();
        auto d = digits();
        if (d.empty()) fail("expected denominator");
        den = mpz_class(d);
      }
      return MultiPoly::constant(field_, vars_, field_.from_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      if (!vars_.index_of(name)) {
        throw Error(ErrorCode::UnknownVariable,
                    "\"" + std::string(name) + "\" at offset " + std::to_string(start), start);
      }
      return MultiPoly::variable(field_, vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const VarList& vars_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarList& vars, const Field& field) {
  return Parser(text, vars, field).parse();
}

}  // namespace tricover
