#include "tricover/univariate.hpp"

namespace tricover {

UniPoly::UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::operator()(const Scalar& t) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(field_.from_int(static_cast<std::int64_t>(k)) * coeffs_[k]);
  return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  auto lead_inv = coeffs_.back().inverse();
  std::vector<Scalar> m;
  for (const auto& c : coeffs_) m.push_back(c * lead_inv);
  return UniPoly(field_, std::move(m));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(field_, {}), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
  auto lead_inv = divisor.coeffs_.back().inverse();
  for (int k = degree(); k >= dd; --k) {
    auto q = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(field_, std::move(quot)), UniPoly(field_, std::move(rem))};
}

int UniPoly::root_multiplicity(const Scalar& t) const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "root multiplicity of the zero polynomial");
  UniPoly linear(field_, {-t, field_.one()});
  UniPoly f = *this;
  int m = 0;
  for (;;) {
    auto [q, r] = f.divmod(linear);
    if (!r.is_zero()) return m;
    ++m;
    f = std::move(q);
  }
}

UniPoly gcd(UniPoly x, UniPoly y) {
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace tricover
