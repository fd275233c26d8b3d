#include "tricover/classify.hpp"

#include <algorithm>

namespace tricover {

std::string_view to_string(RamificationClass cls) {
  switch (cls) {
    case RamificationClass::Unramified: return "Unramified";
    case RamificationClass::SimpleDouble: return "SimpleDouble";
    case RamificationClass::CurvilinearTriple: return "CurvilinearTriple";
    case RamificationClass::FatTriple: return "FatTriple";
  }
  return "?";
}

std::vector<int> root_pattern(const ScalarCubic& form) {
  if (form.is_zero()) throw Error(ErrorCode::InvalidArgument, "root pattern of the zero form");
  auto f = form.dehomogenized();
  const int at_infinity = 3 - f.degree();

  // With h_0 = f and h_k = gcd(h_{k-1}, h_{k-1}'), the number of distinct
  // finite roots of multiplicity >= k is deg h_{k-1} - deg h_k (char > 3).
  std::vector<int> pattern;
  if (f.degree() > 0) {
    std::vector<int> at_least;  // at_least[k-1] = #roots with multiplicity >= k
    UniPoly h = f;
    while (h.degree() > 0) {
      auto next = gcd(h, h.derivative());
      at_least.push_back(h.degree() - next.degree());
      h = next;
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (int i = 0; i < exactly; ++i) pattern.push_back(static_cast<int>(k) + 1);
    }
  }
  if (at_infinity > 0) pattern.push_back(at_infinity);
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

RamificationClass classify_cubic(const ScalarCubic& form) {
  if (form.is_zero()) return RamificationClass::FatTriple;
  switch (root_pattern(form).size()) {
    case 3: return RamificationClass::Unramified;
    case 2: return RamificationClass::SimpleDouble;
    default: return RamificationClass::CurvilinearTriple;
  }
}

RamificationClass classify_fiber(const CoverData& cover, std::span<const Scalar> y) {
  return classify_cubic(z_cubic(cover).at(y));
}

Scalar discriminant(const ScalarCubic& form) {
  const auto& f = form.c3.field();
  const auto &p = form.c3, &q = form.c2, &r = form.c1, &s = form.c0;
  return f.from_int(18) * p * q * r * s - f.from_int(4) * q * q * q * s + q * q * r * r -
         f.from_int(4) * p * r * r * r - f.from_int(27) * p * p * s * s;
}

MultiPoly branch_discriminant(const CoverData& cover) {
  auto form = z_cubic(cover);
  const auto& f = cover.field();
  const auto &p = form.c3, &q = form.c2, &r = form.c1, &s = form.c0;
  return f.from_int(18) * (p * q * r * s) - f.from_int(4) * (q * q * q * s) + q * q * r * r -
         f.from_int(4) * (p * r * r * r) - f.from_int(27) * (p * p * s * s);
}

}  // namespace tricover
