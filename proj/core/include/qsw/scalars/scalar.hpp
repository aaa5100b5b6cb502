// The tagged scalar union and the mode vocabulary shared by reports and the
// command-line driver.  Core algorithms are templated on a concrete scalar
// type; Scalar exists at the serialization boundary, where one matrix must
// carry a single mode.

#pragma once

#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"

#include <string>
#include <variant>

namespace qsw {

enum class Mode { kExact, kModP };

inline const char* mode_name(Mode mode) {
  return mode == Mode::kExact ? "exact" : "modp";
}

using Scalar = std::variant<Laurent, RatFunc, Fp>;

std::string scalar_to_string(const Scalar& s);
bool scalar_is_zero(const Scalar& s);

}  // namespace qsw
