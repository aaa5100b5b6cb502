// Coordinate functionals on End(V^{(x)n}) and the quantized symplectic
// coordinate algebra, realized concretely as functionals on the symplectic
// Schur algebra (the commutant of the unprimed braid/tangle family) rather
// than as an abstract quotient of a free algebra.
//
// A degree-n functional is a finite Laurent combination of coordinate
// functionals x_{i,j} (i, j multi-indices of length n over {1,...,2m}),
// paired with endomorphisms by
//
//   <x_{i,j}, f> = f_{i,j} = coefficient of v_i in f(v_j).
//
// The two wreath actions
//
//   mu wr x_{i,j} = sum_k mu_{i,k} x_{k,j},
//   x_{i,j} wr mu = sum_k x_{i,k} mu_{k,j}
//
// transport composition through the pairing:
//
//   <mu wr F, f> = <F, mu f>,   <F wr mu, f> = <F, f mu>.
//
// The quantum symplectic bideterminants are
//
//   T^lambda(i:j) = sum_{w in S_{lambda^t}} (-q^2)^{-l(w)} beta(w) wr x_{i,j},
//
// where S_{lambda^t} is the Young subgroup with consecutive blocks given by
// the column heights of lambda (matching the column-major tableau filling)
// and beta(w) is the product of embedded unprimed beta factors along a
// reduced word of w.  The degree-2 functional
//
//   d_q = -q^{-rho_k - rho_l} eps_k eps_l (x_{(k,k'),(l,l')} wr gamma)
//
// is independent of (k,l) as a functional on the Schur algebra and is
// group-like there; the labelled family d_q^l * T^lambda(i,j) over
// (lambda, l) in Lambda_n with i, j symplectic-standard is the Oehms basis,
// certified here by full rank of its evaluation matrix against a commutant
// basis.

#pragma once

#include "qsw/check.hpp"
#include "qsw/centralizer/centralizer.hpp"
#include "qsw/combin/partition.hpp"
#include "qsw/combin/permutation.hpp"
#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"
#include "qsw/scalars/scalar.hpp"
#include "qsw/tensorspace/sparsemat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsw {

/// A homogeneous linear functional on End(V^{(x)degree}): a sparse Laurent
/// combination of coordinate functionals x_{i,j}.  The zero functional of
/// any degree has an empty coefficient map; the degree-0 unit is the single
/// term x_{(),()} = 1.  Immutable by convention once built (the mutating
/// helpers are for construction).
struct Functional {
  int degree = 0;
  std::map<std::pair<MultiIndex, MultiIndex>, Laurent> coeffs;

  Functional() = default;
  explicit Functional(int deg) : degree(deg) {}

  /// The degree-0 unit functional (evaluates to 1 on the empty tensor).
  static Functional unit();

  /// The coordinate functional x_{i,j}; degree = |i| = |j|.
  static Functional coordinate(const MultiIndex& i, const MultiIndex& j);

  bool is_zero() const { return coeffs.empty(); }
  std::size_t term_count() const { return coeffs.size(); }

  /// Adds c * x_{i,j}, pruning the term if the total cancels.
  /// Throws std::invalid_argument on an index-length mismatch.
  void add_term(const MultiIndex& i, const MultiIndex& j, const Laurent& c);

  Functional& operator+=(const Functional& rhs);
  Functional& operator-=(const Functional& rhs);
  Functional scaled(const Laurent& c) const;

  bool operator==(const Functional& rhs) const {
    return degree == rhs.degree && coeffs == rhs.coeffs;
  }
  bool operator!=(const Functional& rhs) const { return !(*this == rhs); }
};

/// Concatenation product: (F*G)_{(i|k),(j|l)} = F_{i,j} G_{k,l}; degrees add.
Functional functional_product(const Functional& a, const Functional& b);

enum class WreathSide { kLeft, kRight };

/// mu wr F (left) or F wr mu (right) for mu on V^{(x)degree}.
/// Throws std::invalid_argument when mu's dimension is not (2m)^degree.
Functional wreath(const SparseMat<Laurent>& mu, const Functional& f,
                  WreathSide side, int m);

/// <F, f> = sum c_{i,j} f_{i,j} in each scalar mode; m fixes the index
/// flattening.  The prime-field overload maps the Laurent coefficients
/// through the evaluation point.
Laurent evaluate(const Functional& f, const SparseMat<Laurent>& mat, int m);
RatFunc evaluate(const Functional& f, const SparseMat<RatFunc>& mat, int m);
Fp evaluate(const Functional& f, const SparseMat<Fp>& mat, int m,
            const EvalPoint& pt);

/// beta(w): the product of embedded unprimed beta factors along the
/// lexicographically smallest reduced word of w (well defined by the braid
/// relations).  Requires w in S_n.
SparseMat<Laurent> beta_of(const Permutation& w, int m, int n);

/// sum_{w in S_{lambda^t}} (-q^2)^{-l(w)} beta(w) on V^{(x)|lambda|}, the
/// column q-antisymmetrizer whose rows give the bideterminants.
SparseMat<Laurent> column_antisymmetrizer(const Partition& lambda, int m);

/// The quantum symplectic bideterminant T^lambda(i:j) of degree |lambda|.
/// Requires |i| = |j| = |lambda|; arbitrary multi-indices admitted.
Functional bideterminant(const Partition& lambda, const MultiIndex& i,
                         const MultiIndex& j, int m);

/// d_q built from the pair (k,l), 1 <= k,l <= 2m: the right wreath of
/// x_{(k,k'),(l,l')} by gamma, scaled by -q^{-rho_k-rho_l} eps_k eps_l.
/// As a functional on the Schur algebra it is independent of (k,l) and
/// normalized so that <d_q, id> = 1.
Functional dq(int m, int k, int l);

/// d_q^l under the concatenation product (k = l = 1 representative);
/// l = 0 gives the unit functional.
Functional dq_power(int m, int l);

/// A basis of the degree-n symplectic Schur algebra: the commutant of the
/// embedded unprimed {beta_i, gamma_i}.  For n = 1 there are no generators
/// and the commutant is all of End(V).
AlgebraSpan<RatFunc> schur_basis(int m, int n);

/// A label (lambda, l, i, j) for the Oehms basis element d_q^l T^lambda(i,j),
/// with (lambda, l) in Lambda_n for n = |lambda| + 2l and i, j symplectic
/// standard.
struct BidetLabel {
  Partition lambda;
  int l = 0;
  MultiIndex i;
  MultiIndex j;

  std::string to_string(int m) const;  // e.g. "D^{[1,1],1}(1 2 : 1 1')"
};

/// All Oehms labels for degree n in deterministic order: (lambda, l) as
/// enumerated by lambda_n, then i, then j in tableau enumeration order.
std::vector<BidetLabel> oehms_labels(int m, int n);

/// Certifies the Oehms basis at degree n: builds every labelled functional,
/// evaluates against a commutant basis, and requires the evaluation matrix
/// to be square of size sum |I_lambda^mys|^2 and of full rank.  In exact
/// mode small grids (<= 32) are reduced over the rational-function field;
/// larger grids, and all grids in prime-field mode, are certified by the
/// rank of the exact matrix at an evaluation point, which bounds the exact
/// rank from below and therefore proves full rank whenever it is attained.
/// Retries up to five evaluation points before reporting a shortfall.
struct OehmsReport {
  int m = 0;
  int n = 0;
  std::size_t functional_count = 0;
  std::size_t commutant_dim = 0;
  std::size_t rank = 0;
  bool pass = false;
  std::string detail;
};
OehmsReport oehms_rank_check(int m, int n, Mode mode = Mode::kExact,
                             unsigned long seed = 1);

/// The FRT annihilation law for one candidate relation family mu on V (x) V:
/// for every position embedding mu_p and all i, j in I(2m,n), the functional
/// (mu_p wr x_{i,j} - x_{i,j} wr mu_p) must vanish on the Schur algebra.
/// `family` names mu in the failure witness.
CheckResult annihilation_check_on(const SparseMat<Laurent>& mu2, int m, int n,
                                  const std::string& family);

/// annihilation_check_on for both defining families beta and gamma.
CheckResult frt_annihilation_check(int m, int n);

/// The comultiplication rule dual to composition: for all f, g in a
/// commutant basis at degree |lambda|,
///   <T(i,j), f g> = sum_{h in I_lambda^<} <T(i,h), f> <T(h,j), g>.
CheckResult comult_factorization_check(const Partition& lambda,
                                       const MultiIndex& i,
                                       const MultiIndex& j, int m);

/// d_q is well defined: all (k,l) choices agree on a commutant basis at
/// degree 2, and <d_q, id> = 1.
CheckResult dq_welldefined_check(int m);

/// d_q is group-like on the Schur algebra: <d_q, f g> = <d_q, f><d_q, g>
/// over all pairs from a degree-2 commutant basis.
CheckResult dq_grouplike_check(int m);

/// Exact pairing non-degeneracy at desk scale: the evaluation matrix of all
/// x_{i,j} against all matrix units is a permutation matrix.
CheckResult pairing_permutation_check(int m, int n);

/// Column antisymmetry at lambda = (1,1): for every non-conjugate pair
/// a < b, the evaluation vectors on the Schur algebra satisfy
/// T(i,(b,a)) = -q^{-1} T(i,(a,b)).  Conjugate pairs (b = a') are excluded:
/// the symplectic relation mixes them with the other conjugate pairs.
CheckResult column_antisymmetry_check(int m);

/// Vanishing rows and columns of the lambda = (1,1) antisymmetrizer: a
/// repeated letter (a,a) in the first index kills the bideterminant as a
/// functional on all of End (checked against every matrix unit), and in the
/// second index kills it as a functional on the Schur algebra.
CheckResult bideterminant_vanishing_check(int m);

}  // namespace qsw
