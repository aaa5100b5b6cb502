// Rank-change maps between the tensor spaces of two symplectic ranks
// m < m0 and the commuting-diagram check that ties the two BMW actions
// together.
//
// iota : V -> V~ sends v_i to v_{i + (m0 - m)}, landing in the middle 2m
// letters of the big alphabet (a conjugation-compatible window); pi is the
// left inverse collapsing every other letter to zero, so pi . iota = id.
// The twisted versions iota~ = q^m iota and pi~ = q^{m0} pi enter the
// compression
//
//   Theta0(F) = pi~^{(x)n} . F . iota~^{(x)n},
//
// which on embedded indices is a submatrix extraction scaled by the global
// monomial q^{(m+m0)n}; in particular Theta0(id) = q^{(m+m0)n} id.  The
// companion Theta1 rescales every Enyang basis label by the same monomial.
// The diagram check verifies, label by label,
//
//   Theta0(represent_{m0}(word)) = q^{(m+m0)n} represent_m(word),
//
// exactly in Laurent mode or at an evaluation point in prime-field mode.

#pragma once

#include "qsw/bmw/enyang.hpp"
#include "qsw/centralizer/centralizer.hpp"
#include "qsw/check.hpp"
#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"
#include "qsw/scalars/scalar.hpp"
#include "qsw/tensorspace/sparsemat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsw {

/// A pair of ranks with a tensor degree; requires 1 <= m < m0 and n >= 1.
struct RankPair {
  int m = 1;
  int m0 = 2;
  int n = 1;

  RankPair(int m_, int m0_, int n_);
};

/// A rectangular sparse Laurent matrix in the column convention
/// (entry (r,c) = coefficient of v_r in the image of v_c); products compose
/// like functions, applying the right factor first.
struct RectMat {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Laurent> entries;

  RectMat() = default;
  RectMat(std::int64_t r, std::int64_t c) : rows(r), cols(c) {}

  static RectMat identity(std::int64_t dim);

  void set(std::int64_t r, std::int64_t c, const Laurent& v);  // prunes zeros
  Laurent at(std::int64_t r, std::int64_t c) const;

  RectMat scaled(const Laurent& s) const;
  RectMat operator*(const RectMat& rhs) const;  // requires cols == rhs.rows

  bool operator==(const RectMat& rhs) const {
    return rows == rhs.rows && cols == rhs.cols && entries == rhs.entries;
  }
  bool operator!=(const RectMat& rhs) const { return !(*this == rhs); }
};

/// The (2m0) x (2m) injection v_i -> v_{i + (m0 - m)}.
RectMat iota(int m, int m0);

/// The (2m) x (2m0) surjection with pi . iota = id.
RectMat pi(int m, int m0);

/// The twisted maps iota~ = q^m iota and pi~ = q^{m0} pi.
RectMat iota_tilde(int m, int m0);
RectMat pi_tilde(int m, int m0);

/// Theta0(F) = pi~^{(x)n} . F . iota~^{(x)n} for F on the big tensor space:
/// the submatrix of F at the embedded indices, scaled by q^{(m+m0)n}.
/// Throws std::invalid_argument on a dimension mismatch.
SparseMat<Laurent> theta0(const SparseMat<Laurent>& f, int m, int m0, int n);
SparseMat<RatFunc> theta0(const SparseMat<RatFunc>& f, int m, int m0, int n);
SparseMat<Fp> theta0(const SparseMat<Fp>& f, int m, int m0, int n,
                     const EvalPoint& pt);

/// Theta1 on an Enyang basis label: the pair (q^{(m+m0)n}, same label),
/// the label now read in the small-rank algebra.  Requires idx.n == n.
std::pair<Laurent, EnyangIndex> theta1_on_basis(const EnyangIndex& idx, int m,
                                                int m0, int n);

/// Theta0 carries the big-rank invariant endomorphisms End_{U~}(V~^{(x)n})
/// (the commutant of the big-rank quantum-group generators, i.e. the
/// big-rank BMW image) into End_U(V^{(x)n}): every compressed basis
/// element commutes with every small-rank quantum-group generator.  Note
/// the slots: the analogous statement for the commutant of the BMW
/// operator family is FALSE (theta0 is not an algebra map, and a concrete
/// non-commuting compression exists already at (1,2,2)); tests keep that
/// witness as a negative control.
CheckResult commutant_mapping_check(int m, int m0, int n);

/// The per-label commuting-diagram report.  Row names are
/// "diagram[<index>] <word>" (zero-padded, so name order = label order),
/// plus a "theta0-identity-scale" row checking Theta0(id) against the
/// Theta1 scale.  Exact mode requires (2m0)^n <= 128; prime-field mode
/// requires (2m0)^n <= 1024 and compares at a sampled evaluation point.
struct TruncationReport {
  int m = 0;
  int m0 = 0;
  int n = 0;
  Mode mode = Mode::kExact;
  unsigned long seed = 1;
  std::optional<EvalPoint> point;
  bool m0_ge_n = false;  // whether the stronger hypothesis m0 >= n held
  std::size_t labels_total = 0;
  std::size_t labels_passed = 0;
  std::vector<DualityCheck> checks;
  long runtime_ms = 0;

  bool all_passed() const;
};
TruncationReport diagram_check(int m, int m0, int n, Mode mode = Mode::kExact,
                               unsigned long seed = 1);

}  // namespace qsw
