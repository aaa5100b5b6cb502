#include "qsw/scalars/scalar.hpp"

namespace qsw {

std::string scalar_to_string(const Scalar& s) {
  if (const auto* l = std::get_if<Laurent>(&s)) return l->to_string();
  if (const auto* r = std::get_if<RatFunc>(&s)) return r->to_string();
  const Fp f = std::get<Fp>(s);
  return std::to_string(f.v) + " (mod " + std::to_string(f.p) + ")";
}

bool scalar_is_zero(const Scalar& s) {
  if (const auto* l = std::get_if<Laurent>(&s)) return l->is_zero();
  if (const auto* r = std::get_if<RatFunc>(&s)) return r->is_zero();
  return std::get<Fp>(s).is_zero();
}

}  // namespace qsw
