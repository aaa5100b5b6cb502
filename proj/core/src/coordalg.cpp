#include "qsw/coordalg/coordalg.hpp"

#include "qsw/combin/tableaux.hpp"
#include "qsw/parallel.hpp"
#include "qsw/scalars/linalg.hpp"
#include "qsw/tensorspace/modes.hpp"
#include "qsw/tensorspace/operators.hpp"
#include "qsw/tensorspace/space.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsw {

namespace {

using Index = SparseMat<Laurent>::Index;

// Row r of a sparse matrix as (column, value) pairs, in column order.
template <class K>
std::vector<std::pair<Index, K>> row_slice(const SparseMat<K>& mat, Index r) {
  std::vector<std::pair<Index, K>> out;
  auto it = mat.entries().lower_bound({r, std::numeric_limits<Index>::min()});
  for (; it != mat.entries().end() && it->first.first == r; ++it)
    out.emplace_back(it->first.second, it->second);
  return out;
}

// Column c of a sparse matrix as (row, value) pairs (full-entry scan).
template <class K>
std::vector<std::pair<Index, K>> column_slice(const SparseMat<K>& mat, Index c) {
  std::vector<std::pair<Index, K>> out;
  for (const auto& [rc, v] : mat.entries())
    if (rc.second == c) out.emplace_back(rc.first, v);
  return out;
}

// The bideterminant read off a precomputed antisymmetrizer: row flat(i)
// provides the coefficients on x_{k,j}.
Functional bideterminant_from(const SparseMat<Laurent>& anti,
                              const MultiIndex& i, const MultiIndex& j,
                              int m, int n) {
  if (n == 0) return Functional::unit();
  Functional out(n);
  for (const auto& [col, entry] : row_slice(anti, basis_index(i, m)))
    out.add_term(basis_multiindex(col, m, n), j, entry);
  return out;
}

std::string index_pair_str(const MultiIndex& i, const MultiIndex& j, int m) {
  return "i = (" + multiindex_to_string(i, m) + "), j = (" +
         multiindex_to_string(j, m) + ")";
}

}  // namespace

Functional Functional::unit() {
  Functional f(0);
  f.coeffs.emplace(std::pair<MultiIndex, MultiIndex>{{}, {}}, Laurent(1));
  return f;
}

Functional Functional::coordinate(const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != j.size())
    throw std::invalid_argument("coordinate functional requires |i| = |j|");
  Functional f(static_cast<int>(i.size()));
  f.coeffs.emplace(std::pair<MultiIndex, MultiIndex>{i, j}, Laurent(1));
  return f;
}

void Functional::add_term(const MultiIndex& i, const MultiIndex& j,
                          const Laurent& c) {
  if (static_cast<int>(i.size()) != degree ||
      static_cast<int>(j.size()) != degree)
    throw std::invalid_argument("functional term has the wrong degree");
  if (c.is_zero()) return;
  auto key = std::pair<MultiIndex, MultiIndex>{i, j};
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    coeffs.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs.erase(it);
}

Functional& Functional::operator+=(const Functional& rhs) {
  if (degree != rhs.degree)
    throw std::invalid_argument("functional degree mismatch in +=");
  for (const auto& [key, c] : rhs.coeffs) add_term(key.first, key.second, c);
  return *this;
}

Functional& Functional::operator-=(const Functional& rhs) {
  if (degree != rhs.degree)
    throw std::invalid_argument("functional degree mismatch in -=");
  for (const auto& [key, c] : rhs.coeffs) add_term(key.first, key.second, -c);
  return *this;
}

Functional Functional::scaled(const Laurent& c) const {
  Functional out(degree);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : coeffs) {
    Laurent prod = v * c;
    if (!prod.is_zero()) out.coeffs.emplace(key, std::move(prod));
  }
  return out;
}

Functional functional_product(const Functional& a, const Functional& b) {
  Functional out(a.degree + b.degree);
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      const Laurent c = ca * cb;
      if (c.is_zero()) continue;
      MultiIndex i = ka.first;
      i.insert(i.end(), kb.first.begin(), kb.first.end());
      MultiIndex j = ka.second;
      j.insert(j.end(), kb.second.begin(), kb.second.end());
      out.add_term(i, j, c);
    }
  return out;
}

Functional wreath(const SparseMat<Laurent>& mu, const Functional& f,
                  WreathSide side, int m) {
  const int n = f.degree;
  if (mu.dim() != space_dim(m, n))
    throw std::invalid_argument(
        "wreath: operator dimension does not match the functional degree");
  Functional out(n);
  if (side == WreathSide::kLeft) {
    // mu wr F: the x_{k,j} coefficient gains c_{i,j} mu_{i,k} (row i of mu).
    for (const auto& [key, c] : f.coeffs) {
      const Index row = basis_index(key.first, m);
      for (const auto& [col, entry] : row_slice(mu, row))
        out.add_term(basis_multiindex(col, m, n), key.second, c * entry);
    }
  } else {
    // F wr mu: the x_{i,k} coefficient gains c_{i,j} mu_{k,j} (column j).
    const SparseMat<Laurent> mut = mu.transpose();
    for (const auto& [key, c] : f.coeffs) {
      const Index row = basis_index(key.second, m);
      for (const auto& [col, entry] : row_slice(mut, row))
        out.add_term(key.first, basis_multiindex(col, m, n), c * entry);
    }
  }
  return out;
}

Laurent evaluate(const Functional& f, const SparseMat<Laurent>& mat, int m) {
  Laurent total;
  for (const auto& [key, c] : f.coeffs) {
    const Laurent entry =
        mat.at(basis_index(key.first, m), basis_index(key.second, m));
    if (!entry.is_zero()) total = total + c * entry;
  }
  return total;
}

RatFunc evaluate(const Functional& f, const SparseMat<RatFunc>& mat, int m) {
  RatFunc total;
  for (const auto& [key, c] : f.coeffs) {
    const RatFunc entry =
        mat.at(basis_index(key.first, m), basis_index(key.second, m));
    if (!entry.is_zero()) total = total + RatFunc(c) * entry;
  }
  return total;
}

Fp evaluate(const Functional& f, const SparseMat<Fp>& mat, int m,
            const EvalPoint& pt) {
  Fp total = pt.zero();
  for (const auto& [key, c] : f.coeffs) {
    const Fp entry = fp_entry(mat, basis_index(key.first, m),
                              basis_index(key.second, m), pt);
    if (!entry.is_zero()) total = total + pt(c) * entry;
  }
  return total;
}

SparseMat<Laurent> beta_of(const Permutation& w, int m, int n) {
  if (w.degree() != n)
    throw std::invalid_argument("beta_of: permutation is not in S_n");
  SparseMat<Laurent> out = identity_laurent(m, n);
  const SparseMat<Laurent> b = beta(m);
  for (int letter : w.reduced_word()) out = out * embed_at(b, letter, m, n);
  return out;
}

SparseMat<Laurent> column_antisymmetrizer(const Partition& lambda, int m) {
  const int n = lambda.size();
  if (n == 0) return identity_laurent(m, 0);
  const Partition lt = lambda.transpose();

  // The Young subgroup with consecutive blocks of the column heights.
  std::vector<Permutation> group{Permutation(n)};
  int off = 0;
  for (int c = 1; c <= lt.length(); ++c) {
    const int h = lt.part(c);
    const auto window = window_permutations(n, off + 1, off + h);
    std::vector<Permutation> next;
    next.reserve(group.size() * window.size());
    for (const auto& g : group)
      for (const auto& w : window) next.push_back(g.compose(w));
    group = std::move(next);
    off += h;
  }

  SparseMat<Laurent> total(space_dim(m, n));
  for (const auto& w : group) {
    const long len = w.length();
    const Laurent coeff = Laurent::monomial(
        -2 * static_cast<int>(len), (len % 2 == 0) ? Rational(1) : Rational(-1));
    total = total + beta_of(w, m, n).scaled(coeff);
  }
  return total;
}

Functional bideterminant(const Partition& lambda, const MultiIndex& i,
                         const MultiIndex& j, int m) {
  const int n = lambda.size();
  if (static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(
        "bideterminant: index length must equal |lambda|");
  if (n == 0) return Functional::unit();
  return bideterminant_from(column_antisymmetrizer(lambda, m), i, j, m, n);
}

Functional dq(int m, int k, int l) {
  if (k < 1 || k > 2 * m || l < 1 || l > 2 * m)
    throw std::invalid_argument("dq: letters must lie in {1,...,2m}");
  const RhoEps re(m);
  const MultiIndex ik{k, conj_letter(k, m)};
  const MultiIndex jl{l, conj_letter(l, m)};
  const Functional wr =
      wreath(gamma_op(m), Functional::coordinate(ik, jl), WreathSide::kRight, m);
  const Laurent pref = Laurent::monomial(-re.rho(k) - re.rho(l),
                                         Rational(-re.eps(k) * re.eps(l)));
  return wr.scaled(pref);
}

Functional dq_power(int m, int l) {
  Functional out = Functional::unit();
  if (l <= 0) return out;
  const Functional d = dq(m, 1, 1);
  for (int s = 0; s < l; ++s) out = functional_product(out, d);
  return out;
}

AlgebraSpan<RatFunc> schur_basis(int m, int n) {
  const auto gens = ratfunc_matrices(frt_operator_generators(m, n));
  if (gens.empty())
    return commutant<RatFunc>(
        gens, SparseMat<RatFunc>::identity(space_dim(m, n), RatFunc(1)));
  return commutant(gens);
}

std::string BidetLabel::to_string(int m) const {
  std::ostringstream os;
  os << "D^{" << lambda.to_string() << "," << l << "}("
     << multiindex_to_string(i, m) << " : " << multiindex_to_string(j, m)
     << ")";
  return os.str();
}

std::vector<BidetLabel> oehms_labels(int m, int n) {
  std::vector<BidetLabel> out;
  for (const auto& [lambda, l] : lambda_n(m, n)) {
    const auto tabs = mys_tableaux(lambda, m);
    for (const auto& i : tabs)
      for (const auto& j : tabs) out.push_back(BidetLabel{lambda, l, i, j});
  }
  return out;
}

OehmsReport oehms_rank_check(int m, int n, Mode mode, unsigned long seed) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("oehms_rank_check: requires m >= 1 and n >= 1");
  OehmsReport rep;
  rep.m = m;
  rep.n = n;

  const AlgebraSpan<RatFunc> span = schur_basis(m, n);
  rep.commutant_dim = span.dim();
  const auto labels = oehms_labels(m, n);
  rep.functional_count = labels.size();

  if (rep.functional_count != rep.commutant_dim) {
    rep.pass = false;
    rep.detail = "label count " + std::to_string(rep.functional_count) +
                 " does not match the commutant dimension " +
                 std::to_string(rep.commutant_dim);
    return rep;
  }

  // One antisymmetrizer per shape and one d_q power per deflation degree;
  // the label enumeration below replays oehms_labels order exactly.
  std::vector<Functional> funcs;
  funcs.reserve(labels.size());
  for (const auto& [lambda, l] : lambda_n(m, n)) {
    const auto tabs = mys_tableaux(lambda, m);
    if (tabs.empty()) continue;
    const SparseMat<Laurent> anti = column_antisymmetrizer(lambda, m);
    const Functional power = dq_power(m, l);
    const int deg = lambda.size();
    for (const auto& i : tabs)
      for (const auto& j : tabs)
        funcs.push_back(
            functional_product(power, bideterminant_from(anti, i, j, m, deg)));
  }

  const std::size_t nn = labels.size();
  std::vector<RatFunc> grid(nn * nn);
  parallel_for(nn * nn, [&](std::size_t job) {
    grid[job] = evaluate(funcs[job / nn], span.basis[job % nn], m);
  });

  if (mode == Mode::kExact && nn <= 32) {
    lin::DenseMatrix<RatFunc> mat(nn, std::vector<RatFunc>(nn));
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nn; ++c) mat[r][c] = grid[r * nn + c];
    rep.rank = lin::dense_rank(std::move(mat));
    rep.pass = rep.rank == nn;
    rep.detail = std::to_string(nn) + " functionals, commutant dim " +
                 std::to_string(rep.commutant_dim) + ", rank " +
                 std::to_string(rep.rank) + " (exact rational-function rank)";
    return rep;
  }

  // Prime-field certificate: the rank at an evaluation point bounds the
  // exact rank from below, so attaining the full size proves full rank.
  std::string how;
  for (int attempt = 0; attempt < 5 && !rep.pass; ++attempt) {
    const EvalPoint pt = sample_eval_point(seed, m, n, attempt);
    try {
      lin::DenseMatrix<Fp> mat(nn, std::vector<Fp>(nn, pt.zero()));
      std::vector<int> bad(nn * nn, 0);
      parallel_for(nn * nn, [&](std::size_t job) {
        try {
          mat[job / nn][job % nn] = pt(grid[job]);
        } catch (const BadEvaluation&) {
          bad[job] = 1;
        }
      });
      if (std::find(bad.begin(), bad.end(), 1) != bad.end()) continue;
      const std::size_t rank = lin::dense_rank(std::move(mat));
      if (rank > rep.rank) {
        rep.rank = rank;
        how = "prime-field certificate at p = " + std::to_string(pt.p) +
              ", q -> " + std::to_string(pt.c);
      }
      if (rank == nn) rep.pass = true;
    } catch (const BadEvaluation&) {
      continue;
    }
  }
  rep.detail = std::to_string(nn) + " functionals, commutant dim " +
               std::to_string(rep.commutant_dim) + ", rank " +
               std::to_string(rep.rank);
  if (rep.pass) {
    rep.detail += " (" + how + " certifies the exact rank)";
  } else {
    rep.detail +=
        " (rank shortfall persisted across 5 evaluation points; possible "
        "degeneracy or genuine deficiency)";
  }
  return rep;
}

CheckResult annihilation_check_on(const SparseMat<Laurent>& mu2, int m, int n,
                                  const std::string& family) {
  if (n < 2)
    throw std::invalid_argument("annihilation check requires n >= 2");
  CheckResult res;
  res.name = "frt-annihilation(" + family + ", m=" + std::to_string(m) +
             ", n=" + std::to_string(n) + ")";

  const AlgebraSpan<RatFunc> span = schur_basis(m, n);
  const Index dim = space_dim(m, n);
  const std::size_t pairs =
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);

  for (int p = 1; p <= n - 1; ++p) {
    const SparseMat<Laurent> mup = embed_at(mu2, p, m, n);
    std::vector<std::string> bad(pairs);
    parallel_for(pairs, [&](std::size_t job) {
      const Index fi = static_cast<Index>(job) / dim;
      const Index fj = static_cast<Index>(job) % dim;
      const MultiIndex i = basis_multiindex(fi, m, n);
      const MultiIndex j = basis_multiindex(fj, m, n);
      Functional diff = wreath(mup, Functional::coordinate(i, j),
                               WreathSide::kLeft, m);
      diff -= wreath(mup, Functional::coordinate(i, j), WreathSide::kRight, m);
      if (diff.is_zero()) return;
      for (std::size_t b = 0; b < span.basis.size(); ++b) {
        if (!evaluate(diff, span.basis[b], m).is_zero()) {
          bad[job] = family + " at position " + std::to_string(p) + ", " +
                     index_pair_str(i, j, m) + ", commutant element #" +
                     std::to_string(b);
          return;
        }
      }
    });
    for (const auto& s : bad) {
      if (!s.empty()) {
        res.pass = false;
        res.detail = s;
        return res;
      }
    }
  }
  res.detail = "all wreath differences vanish on the " +
               std::to_string(span.dim()) + "-dimensional commutant";
  return res;
}

CheckResult frt_annihilation_check(int m, int n) {
  CheckResult res;
  res.name =
      "frt-annihilation(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
  const CheckResult b = annihilation_check_on(beta(m), m, n, "beta");
  if (!b.pass) {
    res.pass = false;
    res.detail = b.detail;
    return res;
  }
  const CheckResult g = annihilation_check_on(gamma_op(m), m, n, "gamma");
  if (!g.pass) {
    res.pass = false;
    res.detail = g.detail;
    return res;
  }
  res.detail = "beta and gamma families both annihilate the commutant (" +
               b.detail + ")";
  return res;
}

CheckResult comult_factorization_check(const Partition& lambda,
                                       const MultiIndex& i,
                                       const MultiIndex& j, int m) {
  const int n = lambda.size();
  if (static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(
        "comult_factorization_check: index length must equal |lambda|");
  CheckResult res;
  res.name = "comult-factorization(" + lambda.to_string() +
             ", m=" + std::to_string(m) + ")";

  const AlgebraSpan<RatFunc> span = schur_basis(m, n);
  const std::size_t nb = span.basis.size();
  const SparseMat<Laurent> anti = column_antisymmetrizer(lambda, m);
  const auto middles = lt_tableaux(lambda, m);
  const std::size_t nh = middles.size();

  // <T(i,h), f> and <T(h,j), g> for every middle index h.
  std::vector<Functional> t_ih, t_hj;
  t_ih.reserve(nh);
  t_hj.reserve(nh);
  for (const auto& h : middles) {
    t_ih.push_back(bideterminant_from(anti, i, h, m, n));
    t_hj.push_back(bideterminant_from(anti, h, j, m, n));
  }
  std::vector<std::vector<RatFunc>> vec_f(nh, std::vector<RatFunc>(nb));
  std::vector<std::vector<RatFunc>> vec_g(nh, std::vector<RatFunc>(nb));
  parallel_for(nh * nb, [&](std::size_t job) {
    const std::size_t h = job / nb;
    const std::size_t b = job % nb;
    vec_f[h][b] = evaluate(t_ih[h], span.basis[b], m);
    vec_g[h][b] = evaluate(t_hj[h], span.basis[b], m);
  });

  // <T(i,j), f g> = (row_i(A) . f) . (g . e_j): left row covectors u and
  // right column vectors w, paired sparsely.
  const auto arow = row_slice(anti, basis_index(i, m));
  const Index colj = basis_index(j, m);
  std::vector<std::map<Index, RatFunc>> u(nb), w(nb);
  parallel_for(nb, [&](std::size_t a) {
    std::map<Index, RatFunc> acc;
    for (const auto& [k, ak] : arow) {
      const RatFunc scale{Laurent(ak)};
      for (const auto& [c, fkc] : row_slice(span.basis[a], k)) {
        auto [it, fresh] = acc.try_emplace(c, RatFunc());
        it->second = it->second + scale * fkc;
      }
    }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) u[a].emplace(c, std::move(v));
    for (const auto& [r, v] : column_slice(span.basis[a], colj))
      w[a].emplace(r, v);
  });

  std::vector<std::string> bad(nb * nb);
  parallel_for(nb * nb, [&](std::size_t job) {
    const std::size_t a = job / nb;
    const std::size_t b = job % nb;
    RatFunc lhs;
    for (const auto& [c, uv] : u[a]) {
      const auto it = w[b].find(c);
      if (it != w[b].end()) lhs = lhs + uv * it->second;
    }
    RatFunc rhs;
    for (std::size_t h = 0; h < nh; ++h)
      rhs = rhs + vec_f[h][a] * vec_g[h][b];
    if (!(lhs == rhs))
      bad[job] = "mismatch at commutant pair f = #" + std::to_string(a) +
                 ", g = #" + std::to_string(b);
  });
  for (const auto& s : bad) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }
  res.detail = "factorization through " + std::to_string(nh) +
               " column-strict middles holds for all " +
               std::to_string(nb * nb) + " basis pairs";
  return res;
}

CheckResult dq_welldefined_check(int m) {
  CheckResult res;
  res.name = "dq-welldefined(m=" + std::to_string(m) + ")";

  const AlgebraSpan<RatFunc> span = schur_basis(m, 2);
  const std::size_t nb = span.basis.size();
  const Functional base = dq(m, 1, 1);

  const Laurent norm =
      evaluate(base, identity_laurent(m, 2), m);
  if (!(norm == Laurent(1))) {
    res.pass = false;
    res.detail = "<d_q, id> = " + norm.to_string() + " (expected 1)";
    return res;
  }

  std::vector<RatFunc> ref(nb);
  for (std::size_t b = 0; b < nb; ++b)
    ref[b] = evaluate(base, span.basis[b], m);

  const std::size_t letters = static_cast<std::size_t>(2 * m);
  std::vector<std::string> bad(letters * letters);
  parallel_for(letters * letters, [&](std::size_t job) {
    const int k = static_cast<int>(job / letters) + 1;
    const int l = static_cast<int>(job % letters) + 1;
    if (k == 1 && l == 1) return;
    const Functional d = dq(m, k, l);
    for (std::size_t b = 0; b < nb; ++b) {
      if (!(evaluate(d, span.basis[b], m) == ref[b])) {
        bad[job] = "(k,l) = (" + std::to_string(k) + "," + std::to_string(l) +
                   ") differs from (1,1) on commutant element #" +
                   std::to_string(b);
        return;
      }
    }
  });
  for (const auto& s : bad) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }
  res.detail = "all " + std::to_string(letters * letters) +
               " letter pairs agree on the commutant; <d_q, id> = 1";
  return res;
}

CheckResult dq_grouplike_check(int m) {
  CheckResult res;
  res.name = "dq-grouplike(m=" + std::to_string(m) + ", n=2)";

  const AlgebraSpan<RatFunc> span = schur_basis(m, 2);
  const std::size_t nb = span.basis.size();
  const Functional d = dq(m, 1, 1);

  std::vector<RatFunc> vals(nb);
  for (std::size_t b = 0; b < nb; ++b)
    vals[b] = evaluate(d, span.basis[b], m);

  std::vector<std::string> bad(nb * nb);
  parallel_for(nb * nb, [&](std::size_t job) {
    const std::size_t a = job / nb;
    const std::size_t b = job % nb;
    const SparseMat<RatFunc> prod = span.basis[a] * span.basis[b];
    if (!(evaluate(d, prod, m) == vals[a] * vals[b]))
      bad[job] = "grouplike law fails at pair f = #" + std::to_string(a) +
                 ", g = #" + std::to_string(b);
  });
  for (const auto& s : bad) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }
  res.detail = "<d_q, fg> = <d_q, f><d_q, g> over all " +
               std::to_string(nb * nb) + " basis pairs";
  return res;
}

CheckResult pairing_permutation_check(int m, int n) {
  const Index dim = space_dim(m, n);
  if (dim > 16)
    throw std::invalid_argument(
        "pairing_permutation_check: dimension exceeds the desk-scale bound 16");
  CheckResult res;
  res.name = "pairing-permutation(m=" + std::to_string(m) +
             ", n=" + std::to_string(n) + ")";

  const std::size_t pairs =
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  std::vector<std::string> bad(pairs);
  parallel_for(pairs, [&](std::size_t row) {
    const Index fi = static_cast<Index>(row) / dim;
    const Index fj = static_cast<Index>(row) % dim;
    const Functional x = Functional::coordinate(basis_multiindex(fi, m, n),
                                                basis_multiindex(fj, m, n));
    for (Index a = 0; a < dim && bad[row].empty(); ++a) {
      for (Index b = 0; b < dim; ++b) {
        SparseMat<Laurent> unit(dim);
        unit.set(a, b, Laurent(1));
        const Laurent val = evaluate(x, unit, m);
        const bool expect_one = (a == fi && b == fj);
        if (val == (expect_one ? Laurent(1) : Laurent())) continue;
        bad[row] = "<x_{" + std::to_string(fi) + "," + std::to_string(fj) +
                   "}, E_{" + std::to_string(a) + "," + std::to_string(b) +
                   "}> = " + val.to_string();
        break;
      }
    }
  });
  for (const auto& s : bad) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }
  res.detail = "evaluation against all " + std::to_string(pairs) +
               " matrix units is the identity permutation matrix";
  return res;
}

CheckResult column_antisymmetry_check(int m) {
  CheckResult res;
  res.name = "column-antisymmetry(m=" + std::to_string(m) + ")";
  if (m < 2) {
    res.detail =
        "no non-conjugate letter pairs exist at m = 1; nothing to check";
    return res;
  }

  const AlgebraSpan<RatFunc> span = schur_basis(m, 2);
  const std::size_t nb = span.basis.size();
  const SparseMat<RatFunc> anti =
      ratfunc_matrix(column_antisymmetrizer(Partition({1, 1}), m));
  const Index dim = space_dim(m, 2);

  // <T(i,(a,b)), f> = (A f)_{flat(i), flat((a,b))}: one product per basis
  // element serves every letter pair.
  std::vector<SparseMat<RatFunc>> prods(nb);
  parallel_for(nb, [&](std::size_t b) { prods[b] = anti * span.basis[b]; });

  const RatFunc expect{Laurent::monomial(-1, Rational(-1))};  // -q^{-1}

  for (int a = 1; a <= 2 * m; ++a) {
    for (int b = a + 1; b <= 2 * m; ++b) {
      if (b == conj_letter(a, m)) continue;  // mixed by the symplectic relation
      const Index cab = basis_index(MultiIndex{a, b}, m);
      const Index cba = basis_index(MultiIndex{b, a}, m);
      bool nonzero = false;
      for (std::size_t f = 0; f < nb; ++f) {
        for (Index r = 0; r < dim; ++r) {
          const RatFunc v = prods[f].at(r, cab);
          const RatFunc vs = prods[f].at(r, cba);
          if (!v.is_zero()) nonzero = true;
          if (!(vs == expect * v)) {
            res.pass = false;
            res.detail = "pair (" + std::to_string(a) + "," +
                         std::to_string(b) +
                         "): T(i,(b,a)) != -q^{-1} T(i,(a,b)) at row " +
                         std::to_string(r) + ", commutant element #" +
                         std::to_string(f);
            return res;
          }
        }
      }
      if (!nonzero) {
        res.pass = false;
        res.detail = "pair (" + std::to_string(a) + "," + std::to_string(b) +
                     "): evaluation vector vanished (vacuous proportionality)";
        return res;
      }
    }
  }
  res.detail =
      "T(i,(b,a)) = -q^{-1} T(i,(a,b)) on the commutant for every "
      "non-conjugate pair a < b (conjugate pairs mix and are excluded)";
  return res;
}

CheckResult bideterminant_vanishing_check(int m) {
  CheckResult res;
  res.name = "bideterminant-vanishing(m=" + std::to_string(m) + ")";
  const Partition lam({1, 1});
  const Index dim = space_dim(m, 2);
  const SparseMat<Laurent> anti = column_antisymmetrizer(lam, m);
  const AlgebraSpan<RatFunc> span = schur_basis(m, 2);

  // Repeated letter in the first index: zero on all of End, witnessed
  // against every matrix unit.
  const std::size_t jobs_a =
      static_cast<std::size_t>(2 * m) * static_cast<std::size_t>(dim);
  std::vector<std::string> bad(jobs_a);
  parallel_for(jobs_a, [&](std::size_t job) {
    const int a = static_cast<int>(job / static_cast<std::size_t>(dim)) + 1;
    const Index fj = static_cast<Index>(job % static_cast<std::size_t>(dim));
    const MultiIndex i{a, a};
    const Functional t =
        bideterminant_from(anti, i, basis_multiindex(fj, m, 2), m, 2);
    for (Index r = 0; r < dim; ++r) {
      for (Index c = 0; c < dim; ++c) {
        SparseMat<Laurent> unit(dim);
        unit.set(r, c, Laurent(1));
        const Laurent val = evaluate(t, unit, m);
        if (!val.is_zero()) {
          bad[job] = "T((" + std::to_string(a) + "," + std::to_string(a) +
                     "), j) is nonzero on E_{" + std::to_string(r) + "," +
                     std::to_string(c) + "}";
          return;
        }
      }
    }
  });
  for (const auto& s : bad) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }

  // Repeated letter in the second index: zero on the Schur algebra.
  const std::size_t jobs_b = jobs_a;
  std::vector<std::string> bad2(jobs_b);
  parallel_for(jobs_b, [&](std::size_t job) {
    const int a = static_cast<int>(job / static_cast<std::size_t>(dim)) + 1;
    const Index fi = static_cast<Index>(job % static_cast<std::size_t>(dim));
    const MultiIndex h{a, a};
    const Functional t =
        bideterminant_from(anti, basis_multiindex(fi, m, 2), h, m, 2);
    for (std::size_t b = 0; b < span.basis.size(); ++b) {
      if (!evaluate(t, span.basis[b], m).is_zero()) {
        bad2[job] = "T(i, (" + std::to_string(a) + "," + std::to_string(a) +
                    ")) is nonzero on commutant element #" + std::to_string(b);
        return;
      }
    }
  });
  for (const auto& s : bad2) {
    if (!s.empty()) {
      res.pass = false;
      res.detail = s;
      return res;
    }
  }

  res.detail =
      "repeated first letters vanish on all matrix units; repeated second "
      "letters vanish on the " +
      std::to_string(span.dim()) + "-dimensional commutant";
  return res;
}

}  // namespace qsw
