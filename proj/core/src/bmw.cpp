// BMW-side operations: Enyang labels/words, representing matrices, the
// defining-relation suite, star/transpose compatibility, image ranks, and
// structure constants read off the faithful m = n representation.

#include "qsw/bmw/represent.hpp"

#include "qsw/combin/partition.hpp"
#include "qsw/parallel.hpp"
#include "qsw/scalars/qpoly.hpp"
#include "qsw/scalars/ratfunc.hpp"
#include "qsw/tensorspace/modes.hpp"
#include "qsw/tensorspace/space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsw {

// --- words -----------------------------------------------------------------

BmwWord BmwWord::reversed() const {
  BmwWord out;
  out.n = n;
  out.letters.assign(letters.rbegin(), letters.rend());
  return out;
}

std::string BmwWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ' ';
    os << (letters[k].kind == BmwLetter::Kind::kT ? 'T' : 'E') << letters[k].index;
  }
  return os.str();
}

// --- Enyang labels -----------------------------------------------------------

std::string EnyangIndex::to_string() const {
  std::ostringstream os;
  os << "f=" << f << "; d1=" << d1.to_string() << "; sigma=" << sigma.to_string()
     << "; d2=" << d2.to_string();
  return os.str();
}

std::vector<EnyangIndex> enyang_indices(int n) {
  if (n < 1) throw std::invalid_argument("enyang_indices: n must be >= 1");
  std::vector<EnyangIndex> out;
  for (int f = 0; 2 * f <= n; ++f) {
    const auto cosets = coset_reps_D_nu(f, n);
    const auto sigmas = window_permutations(n, 2 * f + 1, n);
    for (const auto& d1 : cosets) {
      for (const auto& sigma : sigmas) {
        for (const auto& d2 : cosets) {
          out.push_back(EnyangIndex{n, f, d1, d2, sigma});
        }
      }
    }
  }
  if (Integer(static_cast<unsigned long>(out.size())) != double_factorial_odd(n)) {
    throw std::logic_error("enyang_indices: label count is not (2n-1)!!");
  }
  return out;
}

BmwWord enyang_word(const EnyangIndex& idx) {
  BmwWord w;
  w.n = idx.n;
  const auto d1_word = idx.d1.reduced_word();
  for (auto it = d1_word.rbegin(); it != d1_word.rend(); ++it) w.push_t(*it);
  for (int j = 1; j <= idx.f; ++j) w.push_e(2 * j - 1);
  for (int s : idx.sigma.reduced_word()) w.push_t(s);
  for (int s : idx.d2.reduced_word()) w.push_t(s);
  return w;
}

// --- representing matrices ---------------------------------------------------

namespace {

// The 2(n-1) embedded letter matrices, built once and shared read-only.
struct LetterMatrices {
  std::vector<SparseMat<Laurent>> t;  // t[i-1] represents T_i
  std::vector<SparseMat<Laurent>> e;  // e[i-1] represents E_i
};

LetterMatrices letter_matrices_on(const SparseMat<Laurent>& braid2,
                                  const SparseMat<Laurent>& cap2, int m, int n) {
  LetterMatrices out;
  out.t.reserve(n - 1);
  out.e.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    out.t.push_back(embed_at(braid2, i, m, n));
    out.e.push_back(embed_at(cap2, i, m, n));
  }
  return out;
}

LetterMatrices letter_matrices(int m, int n) {
  return letter_matrices_on(beta_prime(m), gamma_prime(m), m, n);
}

SparseMat<Laurent> word_matrix(const BmwWord& word, const LetterMatrices& gens,
                               std::int64_t dim) {
  auto out = SparseMat<Laurent>::identity(dim, Laurent(1));
  for (const auto& letter : word.letters) {
    const auto& g =
        (letter.kind == BmwLetter::Kind::kT ? gens.t : gens.e)[letter.index - 1];
    out = out * g;
  }
  return out;
}

std::string first_entry(const SparseMat<Laurent>& mat) {
  const auto& e = *mat.entries().begin();
  std::ostringstream os;
  os << "(" << e.first.first << "," << e.first.second
     << "): " << e.second.to_string();
  return os.str();
}

// Marks the check failed when the residual is nonzero, recording the first
// offending entry.
void note_residual(CheckResult& res, const SparseMat<Laurent>& residual,
                   const std::string& what) {
  if (residual.is_zero()) return;
  res.pass = false;
  if (!res.detail.empty()) res.detail += "; ";
  res.detail += what + ": first nonzero entry " + first_entry(residual);
}

// Inverse of a square dense matrix over a field, by reducing [A | I].
template <class F>
lin::DenseMatrix<F> invert_dense(lin::DenseMatrix<F> a, const F& like) {
  const std::size_t nn = a.size();
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      a[i].push_back(i == j ? lin::make_one(like) : lin::make_zero(like));
    }
  }
  const auto pivots = lin::rref_in_place(a);
  bool invertible = pivots.size() == nn;
  for (std::size_t i = 0; invertible && i < nn; ++i) invertible = (pivots[i] == i);
  if (!invertible) {
    throw std::runtime_error("pivot submatrix unexpectedly singular");
  }
  lin::DenseMatrix<F> inv(nn);
  for (std::size_t i = 0; i < nn; ++i) inv[i].assign(a[i].begin() + nn, a[i].end());
  return inv;
}

struct PivotData {
  std::vector<std::pair<std::int64_t, std::int64_t>> positions;  // (row, col)
  EvalPoint point;
};

// N matrix positions at which the stacked basis matrices form an invertible
// N x N system, found by prime-field elimination.  Full prime-field rank
// certifies exact linear independence (evaluation can only drop rank); a
// rank drop is disambiguated by one exact elimination before resampling the
// evaluation point.
PivotData find_pivots(const std::vector<SparseMat<Laurent>>& basis, int m, int n,
                      std::uint64_t seed) {
  if (basis.empty()) throw std::invalid_argument("find_pivots: empty basis");
  const std::int64_t dim = basis[0].dim();
  for (int attempt = 0; attempt < 5; ++attempt) {
    const EvalPoint pt = sample_eval_point(seed, m, n, attempt);
    lin::RowSpace<Fp> space;
    bool independent = true;
    for (const auto& mat : basis) {
      if (!space.insert(fp_matrix(mat, pt).vectorize())) {
        independent = false;
        break;
      }
    }
    if (independent) {
      PivotData out;
      out.point = pt;
      out.positions.reserve(basis.size());
      for (const auto& [pivot, row] : space.rows()) {
        out.positions.emplace_back(static_cast<std::int64_t>(pivot / dim),
                                   static_cast<std::int64_t>(pivot % dim));
      }
      return out;
    }
    // Bad point or genuine dependence: decide exactly, then resample.
    lin::RowSpace<RatFunc> exact;
    for (const auto& mat : basis) exact.insert(ratfunc_matrix(mat).vectorize());
    if (exact.dim() < basis.size()) {
      throw std::runtime_error(
          "Enyang image matrices are linearly dependent at m = n; "
          "faithfulness violated");
    }
  }
  throw BadEvaluation("no admissible evaluation point after 5 attempts");
}

}  // namespace

SparseMat<Laurent> braid_operator(int i, int m, int n) {
  return embed_at(beta_prime(m), i, m, n);
}

SparseMat<Laurent> contraction_operator(int i, int m, int n) {
  return embed_at(gamma_prime(m), i, m, n);
}

SparseMat<Laurent> represent(const BmwWord& word, int m) {
  const auto gens = letter_matrices(m, word.n);
  return word_matrix(word, gens, space_dim(m, word.n));
}

std::vector<SparseMat<Laurent>> enyang_matrices(int m, int n) {
  const auto labels = enyang_indices(n);
  const auto gens = letter_matrices(m, n);
  const std::int64_t dim = space_dim(m, n);
  std::vector<SparseMat<Laurent>> out(labels.size());
  parallel_for(labels.size(), [&](std::size_t k) {
    out[k] = word_matrix(enyang_word(labels[k]), gens, dim);
  });
  return out;
}

std::vector<CheckResult> relation_suite_on(const SparseMat<Laurent>& braid2,
                                           const SparseMat<Laurent>& cap2, int m,
                                           int n) {
  if (m < 1 || n < 2) {
    throw std::invalid_argument("relation_suite: need m >= 1 and n >= 2");
  }
  const auto gens = letter_matrices_on(braid2, cap2, m, n);
  const auto& T = gens.t;
  const auto& E = gens.e;
  const auto id = identity_laurent(m, n);
  const Laurent z = bmw_z();
  const Laurent x = bmw_x(m);
  const Laurent r = bmw_r(m);
  const Laurent rinv = Laurent::monomial(-(2 * m + 1), Rational(-1));
  const int g = n - 1;  // number of generator indices

  std::vector<CheckResult> out;
  const auto tag = [](int i) { return std::string("i=") + std::to_string(i + 1); };

  {
    CheckResult res{true, "relation(1) skein", ""};
    for (int i = 0; i < g; ++i) {
      note_residual(res, T[i] * T[i] - id - (T[i] - T[i] * E[i]).scaled(z), tag(i));
    }
    const auto id2 =
        SparseMat<Laurent>::identity(braid2.dim(), Laurent(1));
    note_residual(res, braid2 * (braid2 - (id2 - cap2).scaled(z)) - id2,
                  "two-site inverse form");
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(2) cap idempotent", ""};
    for (int i = 0; i < g; ++i) {
      note_residual(res, E[i] * E[i] - E[i].scaled(x), tag(i));
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(3) braid", ""};
    if (g < 2) res.detail = "vacuously true (n = 2)";
    for (int i = 0; i + 1 < g; ++i) {
      note_residual(res, T[i] * T[i + 1] * T[i] - T[i + 1] * T[i] * T[i + 1],
                    tag(i));
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(4) distant commuting", ""};
    if (g < 3) res.detail = "vacuously true (n < 4)";
    for (int i = 0; i < g; ++i) {
      for (int j = i + 2; j < g; ++j) {
        const std::string pair_tag =
            "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        note_residual(res, commutator(T[i], T[j]), "TT " + pair_tag);
        note_residual(res, commutator(E[i], E[j]), "EE " + pair_tag);
        note_residual(res, commutator(T[i], E[j]), "TE " + pair_tag);
        note_residual(res, commutator(E[i], T[j]), "ET " + pair_tag);
      }
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(5) tangle", ""};
    if (g < 2) res.detail = "vacuously true (n = 2)";
    for (int i = 0; i + 1 < g; ++i) {
      note_residual(res, E[i] * E[i + 1] * E[i] - E[i], "down " + tag(i));
      note_residual(res, E[i + 1] * E[i] * E[i + 1] - E[i + 1], "up " + tag(i));
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(6) braid-cap slide", ""};
    if (g < 2) res.detail = "vacuously true (n = 2)";
    for (int i = 0; i + 1 < g; ++i) {
      note_residual(res, T[i] * T[i + 1] * E[i] - E[i + 1] * E[i], "down " + tag(i));
      note_residual(res, T[i + 1] * T[i] * E[i + 1] - E[i] * E[i + 1], "up " + tag(i));
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(7) cap eigenvalue", ""};
    for (int i = 0; i < g; ++i) {
      note_residual(res, E[i] * T[i] - E[i].scaled(rinv), "ET " + tag(i));
      note_residual(res, T[i] * E[i] - E[i].scaled(rinv), "TE " + tag(i));
    }
    out.push_back(std::move(res));
  }
  {
    CheckResult res{true, "relation(8) cap conjugation", ""};
    if (g < 2) res.detail = "vacuously true (n = 2)";
    for (int i = 0; i + 1 < g; ++i) {
      note_residual(res, E[i] * T[i + 1] * E[i] - E[i].scaled(r), "down " + tag(i));
      note_residual(res, E[i + 1] * T[i] * E[i + 1] - E[i + 1].scaled(r),
                    "up " + tag(i));
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> relation_suite(int m, int n) {
  return relation_suite_on(beta_prime(m), gamma_prime(m), m, n);
}

CheckResult star_symmetry_check(int m, int n) {
  CheckResult res{true, "star-transpose compatibility", ""};
  const auto labels = enyang_indices(n);
  const auto gens = letter_matrices(m, n);
  const std::int64_t dim = space_dim(m, n);
  for (const auto& idx : labels) {
    const auto word = enyang_word(idx);
    const auto image = word_matrix(word, gens, dim);
    const auto reversed_image = word_matrix(word.reversed(), gens, dim);
    if (image.transpose() != reversed_image) {
      res.pass = false;
      res.detail = "failed at label " + idx.to_string();
      return res;
    }
  }
  return res;
}

std::size_t enyang_image_rank_exact(int m, int n) {
  const auto mats = enyang_matrices(m, n);
  lin::RowSpace<RatFunc> space;
  for (const auto& mat : mats) space.insert(ratfunc_matrix(mat).vectorize());
  return space.dim();
}

std::size_t enyang_image_rank_modp(int m, int n, std::uint64_t seed) {
  const auto mats = enyang_matrices(m, n);
  const EvalPoint pt = sample_eval_point(seed, m, n);
  lin::RowSpace<Fp> space;
  for (const auto& mat : mats) space.insert(fp_matrix(mat, pt).vectorize());
  return space.dim();
}

MultiplicationTable structure_constants(int n, std::uint64_t seed) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument(
        "structure_constants: exact mode is guarded to n <= 3");
  }
  const int m = n;
  MultiplicationTable table;
  table.n = n;
  table.labels = enyang_indices(n);
  const auto basis = enyang_matrices(m, n);
  const std::size_t count = basis.size();
  const auto piv = find_pivots(basis, m, n, seed);

  lin::DenseMatrix<RatFunc> pivot_matrix(count, std::vector<RatFunc>(count));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      pivot_matrix[j][k] =
          RatFunc(basis[k].at(piv.positions[j].first, piv.positions[j].second));
    }
  }
  const auto inv = invert_dense(std::move(pivot_matrix), RatFunc(1));

  table.coeff.assign(count, std::vector<std::vector<Laurent>>(count));
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  jobs.reserve(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) jobs.emplace_back(a, b);
  }
  parallel_for(jobs.size(), [&](std::size_t job) {
    const auto [a, b] = jobs[job];
    const auto product = basis[a] * basis[b];
    std::vector<RatFunc> rhs(count);
    for (std::size_t j = 0; j < count; ++j) {
      rhs[j] = RatFunc(
          product.at(piv.positions[j].first, piv.positions[j].second));
    }
    std::vector<Laurent> c(count);
    auto residual = product;
    for (std::size_t k = 0; k < count; ++k) {
      RatFunc ck;
      for (std::size_t j = 0; j < count; ++j) ck += inv[k][j] * rhs[j];
      if (!ck.is_laurent()) {
        throw std::logic_error(
            "structure constant is not a Laurent polynomial: " + ck.to_string());
      }
      c[k] = ck.to_laurent();
      if (!c[k].is_zero()) residual = residual - basis[k].scaled(c[k]);
    }
    if (!residual.is_zero()) {
      throw std::runtime_error(
          "structure-constant expansion does not reproduce the product");
    }
    table.coeff[a][b] = std::move(c);
  });
  return table;
}

FpMultiplicationTable structure_constants_modp(
    int n, std::uint64_t seed, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument(
        "structure_constants_modp: guarded to n <= 4");
  }
  const int m = n;
  FpMultiplicationTable table;
  table.n = n;
  table.labels = enyang_indices(n);
  const auto basis_exact = enyang_matrices(m, n);
  const std::size_t count = basis_exact.size();
  const auto piv = find_pivots(basis_exact, m, n, seed);
  table.point = piv.point;

  std::vector<SparseMat<Fp>> basis(count);
  parallel_for(count,
               [&](std::size_t k) { basis[k] = fp_matrix(basis_exact[k], piv.point); });

  lin::DenseMatrix<Fp> pivot_matrix(count, std::vector<Fp>(count, piv.point.zero()));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      pivot_matrix[j][k] =
          fp_entry(basis[k], piv.positions[j].first, piv.positions[j].second, piv.point);
    }
  }
  const auto inv = invert_dense(std::move(pivot_matrix), piv.point.one());

  std::vector<std::pair<int, int>> jobs = pairs;
  if (jobs.empty()) {
    jobs.reserve(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        jobs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  for (const auto& [a, b] : jobs) {
    if (a < 0 || b < 0 || a >= static_cast<int>(count) || b >= static_cast<int>(count)) {
      throw std::invalid_argument("structure_constants_modp: pair out of range");
    }
  }

  std::vector<std::vector<Fp>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t job) {
    const auto [a, b] = jobs[job];
    const auto product = basis[a] * basis[b];
    std::vector<Fp> rhs(count, piv.point.zero());
    for (std::size_t j = 0; j < count; ++j) {
      rhs[j] = fp_entry(product, piv.positions[j].first, piv.positions[j].second,
                     piv.point);
    }
    std::vector<Fp> c(count, piv.point.zero());
    auto residual = product;
    for (std::size_t k = 0; k < count; ++k) {
      Fp ck = piv.point.zero();
      for (std::size_t j = 0; j < count; ++j) ck += inv[k][j] * rhs[j];
      c[k] = ck;
      if (!ck.is_zero()) residual = residual - basis[k].scaled(ck);
    }
    if (!residual.is_zero()) {
      throw std::runtime_error(
          "prime-field structure-constant expansion does not reproduce the "
          "product");
    }
    results[job] = std::move(c);
  });
  for (std::size_t job = 0; job < jobs.size(); ++job) {
    table.coeff[jobs[job]] = std::move(results[job]);
  }
  return table;
}

}  // namespace qsw
