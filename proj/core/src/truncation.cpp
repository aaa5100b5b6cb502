#include "qsw/truncation/truncation.hpp"

#include "qsw/bmw/represent.hpp"
#include "qsw/parallel.hpp"
#include "qsw/tensorspace/modes.hpp"
#include "qsw/tensorspace/operators.hpp"
#include "qsw/tensorspace/space.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qsw {

namespace {

using Index = std::int64_t;

void require_ranks(int m, int m0) {
  if (m < 1 || m0 <= m)
    throw std::invalid_argument("rank pair requires 1 <= m < m0");
}

// Small flat index -> big flat index under the letter shift i -> i + (m0-m).
std::vector<Index> embedded_indices(int m, int m0, int n) {
  const Index small_dim = space_dim(m, n);
  std::vector<Index> big_of(static_cast<std::size_t>(small_dim));
  for (Index s = 0; s < small_dim; ++s) {
    MultiIndex idx = basis_multiindex(s, m, n);
    for (int& letter : idx) letter += m0 - m;
    big_of[static_cast<std::size_t>(s)] = basis_index(idx, m0);
  }
  return big_of;
}

template <class K>
SparseMat<K> theta0_impl(const SparseMat<K>& f, int m, int m0, int n,
                         const K& scale) {
  require_ranks(m, m0);
  if (n < 0) throw std::invalid_argument("theta0: negative degree");
  if (f.dim() != space_dim(m0, n))
    throw std::invalid_argument(
        "theta0: operator does not live on the big tensor space");
  const auto big_of = embedded_indices(m, m0, n);
  std::map<Index, Index> small_of;
  for (std::size_t s = 0; s < big_of.size(); ++s)
    small_of.emplace(big_of[s], static_cast<Index>(s));
  SparseMat<K> out(space_dim(m, n));
  for (const auto& [rc, v] : f.entries()) {
    const auto r = small_of.find(rc.first);
    if (r == small_of.end()) continue;
    const auto c = small_of.find(rc.second);
    if (c == small_of.end()) continue;
    out.set(r->second, c->second, scale * v);
  }
  return out;
}

std::string pad3(std::size_t k) {
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << k;
  return os.str();
}

// First differing entry of two same-size sparse matrices, for witnesses.
std::string first_difference(const SparseMat<Laurent>& a,
                             const SparseMat<Laurent>& b) {
  for (const auto& [rc, v] : a.entries()) {
    const Laurent other = b.at(rc.first, rc.second);
    if (!(v == other))
      return "entry (" + std::to_string(rc.first) + "," +
             std::to_string(rc.second) + "): " + v.to_string() + " vs " +
             other.to_string();
  }
  for (const auto& [rc, v] : b.entries())
    if (a.at(rc.first, rc.second).is_zero())
      return "entry (" + std::to_string(rc.first) + "," +
             std::to_string(rc.second) + "): 0 vs " + v.to_string();
  return "no difference";
}

std::string first_difference(const SparseMat<Fp>& a, const SparseMat<Fp>& b,
                             const EvalPoint& pt) {
  for (const auto& [rc, v] : a.entries()) {
    const Fp other = fp_entry(b, rc.first, rc.second, pt);
    if (!(v == other))
      return "entry (" + std::to_string(rc.first) + "," +
             std::to_string(rc.second) + "): " + std::to_string(v.v) + " vs " +
             std::to_string(other.v) + " (mod " + std::to_string(pt.p) + ")";
  }
  for (const auto& [rc, v] : b.entries())
    if (fp_entry(a, rc.first, rc.second, pt).is_zero())
      return "entry (" + std::to_string(rc.first) + "," +
             std::to_string(rc.second) + "): 0 vs " + std::to_string(v.v) +
             " (mod " + std::to_string(pt.p) + ")";
  return "no difference";
}

}  // namespace

RankPair::RankPair(int m_, int m0_, int n_) : m(m_), m0(m0_), n(n_) {
  require_ranks(m, m0);
  if (n < 1) throw std::invalid_argument("rank pair requires n >= 1");
}

RectMat RectMat::identity(std::int64_t dim) {
  RectMat out(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) out.set(i, i, Laurent(1));
  return out;
}

void RectMat::set(std::int64_t r, std::int64_t c, const Laurent& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("RectMat::set outside the matrix");
  if (v.is_zero())
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

Laurent RectMat::at(std::int64_t r, std::int64_t c) const {
  const auto it = entries.find({r, c});
  return it == entries.end() ? Laurent() : it->second;
}

RectMat RectMat::scaled(const Laurent& s) const {
  RectMat out(rows, cols);
  if (s.is_zero()) return out;
  for (const auto& [rc, v] : entries) {
    Laurent prod = v * s;
    if (!prod.is_zero()) out.entries.emplace(rc, std::move(prod));
  }
  return out;
}

RectMat RectMat::operator*(const RectMat& rhs) const {
  if (cols != rhs.rows)
    throw std::invalid_argument("RectMat product dimension mismatch");
  RectMat out(rows, rhs.cols);
  for (const auto& [rc, v] : entries) {
    auto it = rhs.entries.lower_bound(
        {rc.second, std::numeric_limits<std::int64_t>::min()});
    for (; it != rhs.entries.end() && it->first.first == rc.second; ++it) {
      const std::pair<std::int64_t, std::int64_t> key{rc.first,
                                                      it->first.second};
      auto [slot, fresh] = out.entries.try_emplace(key, Laurent());
      slot->second = slot->second + v * it->second;
    }
  }
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    if (it->second.is_zero())
      it = out.entries.erase(it);
    else
      ++it;
  }
  return out;
}

RectMat iota(int m, int m0) {
  require_ranks(m, m0);
  RectMat out(2 * m0, 2 * m);
  for (int i = 1; i <= 2 * m; ++i)
    out.set(i + (m0 - m) - 1, i - 1, Laurent(1));
  return out;
}

RectMat pi(int m, int m0) {
  require_ranks(m, m0);
  RectMat out(2 * m, 2 * m0);
  for (int i = 1; i <= 2 * m; ++i)
    out.set(i - 1, i + (m0 - m) - 1, Laurent(1));
  return out;
}

RectMat iota_tilde(int m, int m0) {
  return iota(m, m0).scaled(Laurent::monomial(m, Rational(1)));
}

RectMat pi_tilde(int m, int m0) {
  return pi(m, m0).scaled(Laurent::monomial(m0, Rational(1)));
}

SparseMat<Laurent> theta0(const SparseMat<Laurent>& f, int m, int m0, int n) {
  return theta0_impl(f, m, m0, n,
                     Laurent::monomial((m + m0) * n, Rational(1)));
}

SparseMat<RatFunc> theta0(const SparseMat<RatFunc>& f, int m, int m0, int n) {
  return theta0_impl(
      f, m, m0, n, RatFunc(Laurent::monomial((m + m0) * n, Rational(1))));
}

SparseMat<Fp> theta0(const SparseMat<Fp>& f, int m, int m0, int n,
                     const EvalPoint& pt) {
  const Fp scale = pt(Laurent::monomial((m + m0) * n, Rational(1)));
  return theta0_impl(f, m, m0, n, scale);
}

std::pair<Laurent, EnyangIndex> theta1_on_basis(const EnyangIndex& idx, int m,
                                                int m0, int n) {
  require_ranks(m, m0);
  if (idx.n != n)
    throw std::invalid_argument(
        "theta1_on_basis: label is not an n-strand label");
  return {Laurent::monomial((m + m0) * n, Rational(1)), idx};
}

CheckResult commutant_mapping_check(int m, int m0, int n) {
  require_ranks(m, m0);
  CheckResult res;
  res.name = "theta0-commutant-mapping(m=" + std::to_string(m) +
             ", m0=" + std::to_string(m0) + ", n=" + std::to_string(n) + ")";

  // End_{U~} = commutant of the big-rank quantum-group action; compressed
  // elements must land in End_U, the small-rank invariant endomorphisms.
  const AlgebraSpan<RatFunc> big_span =
      commutant(ratfunc_matrices(quantum_group_generators(m0, n)));
  const auto small_gens = ratfunc_matrices(quantum_group_generators(m, n));
  const std::size_t nb = big_span.basis.size();

  std::vector<std::string> bad(nb);
  parallel_for(nb, [&](std::size_t k) {
    const SparseMat<RatFunc> img = theta0(big_span.basis[k], m, m0, n);
    for (std::size_t g = 0; g < small_gens.size(); ++g) {
      if (!commutator(img, small_gens[g]).is_zero()) {
        bad[k] = "compressed invariant endomorphism #" + std::to_string(k) +
                 " fails to commute with small-rank quantum-group generator #" +
                 std::to_string(g);
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
  res.detail = "all " + std::to_string(nb) +
               " compressed invariant endomorphisms commute with all " +
               std::to_string(small_gens.size()) +
               " small-rank quantum-group generators";
  return res;
}

bool TruncationReport::all_passed() const {
  for (const auto& chk : checks)
    if (chk.status == "fail") return false;
  return true;
}

TruncationReport diagram_check(int m, int m0, int n, Mode mode,
                               unsigned long seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const RankPair rp(m, m0, n);
  const Index big_dim = space_dim(m0, n);
  constexpr Index kExactMax = 128;
  constexpr Index kModpMax = 1024;
  if (mode == Mode::kExact && big_dim > kExactMax)
    throw std::invalid_argument(
        "diagram_check: big dimension " + std::to_string(big_dim) +
        " exceeds the exact bound " + std::to_string(kExactMax) +
        "; use prime-field mode");
  if (mode == Mode::kModP && big_dim > kModpMax)
    throw std::invalid_argument(
        "diagram_check: big dimension " + std::to_string(big_dim) +
        " exceeds the prime-field bound " + std::to_string(kModpMax));

  TruncationReport rep;
  rep.m = rp.m;
  rep.m0 = rp.m0;
  rep.n = rp.n;
  rep.mode = mode;
  rep.seed = seed;
  rep.m0_ge_n = m0 >= n;

  const Laurent scale = Laurent::monomial((m + m0) * n, Rational(1));
  const auto labels = enyang_indices(n);
  rep.labels_total = labels.size();

  if (mode == Mode::kModP) rep.point = sample_eval_point(seed, m0, n);

  std::vector<DualityCheck> rows(labels.size());
  if (mode == Mode::kExact) {
    parallel_for(labels.size(), [&](std::size_t k) {
      const BmwWord word = enyang_word(labels[k]);
      const SparseMat<Laurent> lhs = theta0(represent(word, m0), m, m0, n);
      const SparseMat<Laurent> rhs = represent(word, m).scaled(scale);
      DualityCheck& chk = rows[k];
      chk.name = "diagram[" + pad3(k) + "] " + word.to_string();
      chk.expected = "theta0(represent_big) = q^{(m+m0)n} represent_small";
      if (lhs == rhs) {
        chk.status = "pass";
        chk.actual = "exact equality (" + std::to_string(rhs.nnz()) +
                     " matching entries)";
      } else {
        chk.status = "fail";
        chk.actual = first_difference(lhs, rhs);
      }
    });
  } else {
    const EvalPoint pt = *rep.point;
    parallel_for(labels.size(), [&](std::size_t k) {
      const BmwWord word = enyang_word(labels[k]);
      const SparseMat<Fp> lhs =
          theta0(fp_matrix(represent(word, m0), pt), m, m0, n, pt);
      const SparseMat<Fp> rhs =
          fp_matrix(represent(word, m), pt).scaled(pt(scale));
      DualityCheck& chk = rows[k];
      chk.name = "diagram[" + pad3(k) + "] " + word.to_string();
      chk.expected = "theta0(represent_big) = q^{(m+m0)n} represent_small";
      if (lhs == rhs) {
        chk.status = "pass";
        chk.actual = "equal at p = " + std::to_string(pt.p) + ", q -> " +
                     std::to_string(pt.c) + " (" + std::to_string(rhs.nnz()) +
                     " matching entries)";
      } else {
        chk.status = "fail";
        chk.actual = first_difference(lhs, rhs, pt);
      }
    });
  }
  for (const auto& chk : rows)
    if (chk.status == "pass") ++rep.labels_passed;

  // Theta0(id) carries exactly the Theta1 scale; exact in every mode.
  {
    DualityCheck chk;
    chk.name = "theta0-identity-scale";
    chk.expected = "theta0(id) = q^{(m+m0)n} id, matching the theta1 scale";
    const auto [t1_scale, t1_label] = theta1_on_basis(labels.front(), m, m0, n);
    const bool ok =
        theta0(identity_laurent(m0, n), m, m0, n) ==
            identity_laurent(m, n).scaled(scale) &&
        t1_scale == scale && t1_label == labels.front();
    chk.status = ok ? "pass" : "fail";
    chk.actual = ok ? "scale exponent (m+m0)n = " +
                          std::to_string((m + m0) * n)
                    : "identity compression disagrees with the theta1 scale";
    rows.push_back(chk);
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const DualityCheck& a, const DualityCheck& b) {
                     return a.name < b.name;
                   });
  rep.checks = std::move(rows);
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace qsw
