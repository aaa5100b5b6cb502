#include "qsw/tensorspace/operators.hpp"

#include "qsw/combin/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace qsw {

// ---------------------------------------------------------------------------
// Basis bookkeeping
// ---------------------------------------------------------------------------

std::int64_t space_dim(int m, int n) {
  std::int64_t d = 1;
  for (int k = 0; k < n; ++k) d *= 2 * m;
  return d;
}

std::int64_t basis_index(const MultiIndex& idx, int m) {
  std::int64_t out = 0;
  for (int a : idx) {
    if (a < 1 || a > 2 * m) throw std::out_of_range("multi-index entry out of range");
    out = out * (2 * m) + (a - 1);
  }
  return out;
}

MultiIndex basis_multiindex(std::int64_t k, int m, int n) {
  if (k < 0 || k >= space_dim(m, n)) throw std::out_of_range("basis index out of range");
  MultiIndex idx(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    idx[pos] = static_cast<int>(k % (2 * m)) + 1;
    k /= 2 * m;
  }
  return idx;
}

RhoEps::RhoEps(int m) {
  rho_.resize(2 * m);
  eps_.resize(2 * m);
  for (int i = 1; i <= m; ++i) {
    rho_[i - 1] = m - i + 1;
    eps_[i - 1] = 1;
  }
  for (int i = m + 1; i <= 2 * m; ++i) {
    rho_[i - 1] = -(i - m);
    eps_[i - 1] = -1;
  }
}

// ---------------------------------------------------------------------------
// Operators on V (x) V
// ---------------------------------------------------------------------------

namespace {
/// Adds c * E_{i,j} (x) E_{k,l} in the simple-tensor coordinates.
void add_unit(SparseMat<Laurent>& mat, int m, int i, int j, int k, int l,
              const Laurent& c) {
  const std::int64_t row = basis_index({i, k}, m);
  const std::int64_t col = basis_index({j, l}, m);
  mat.add(row, col, c);
}
}  // namespace

SparseMat<Laurent> beta(int m) {
  SparseMat<Laurent> out(space_dim(m, 2));
  const RhoEps re(m);
  const int d = 2 * m;
  for (int i = 1; i <= d; ++i) {
    add_unit(out, m, i, i, i, i, Laurent::q(2));
    const int ip = conj_letter(i, m);
    add_unit(out, m, i, ip, ip, i, Laurent(1));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (j == i || j == conj_letter(i, m)) continue;
      add_unit(out, m, i, j, j, i, Laurent::q(1));
    }
  }
  const Laurent qq1 = Laurent::q(2) - Laurent(1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j < i; ++j) {
      add_unit(out, m, i, i, j, j, qq1);
      const Laurent c = Laurent::monomial(re.rho(i) - re.rho(j),
                                          Rational(re.eps(i) * re.eps(j)));
      add_unit(out, m, i, conj_letter(j, m), conj_letter(i, m), j, -(qq1 * c));
    }
  }
  return out;
}

SparseMat<Laurent> gamma_op(int m) {
  SparseMat<Laurent> out(space_dim(m, 2));
  const RhoEps re(m);
  for (int i = 1; i <= 2 * m; ++i) {
    for (int j = 1; j <= 2 * m; ++j) {
      const Laurent c = Laurent::monomial(re.rho(i) - re.rho(j),
                                          Rational(re.eps(i) * re.eps(j)));
      add_unit(out, m, i, conj_letter(j, m), conj_letter(i, m), j, c);
    }
  }
  return out;
}

SparseMat<Laurent> beta_prime(int m) {
  SparseMat<Laurent> out(space_dim(m, 2));
  const RhoEps re(m);
  const int d = 2 * m;
  for (int i = 1; i <= d; ++i) {
    add_unit(out, m, i, i, i, i, Laurent::q(1));
    const int ip = conj_letter(i, m);
    add_unit(out, m, i, ip, ip, i, Laurent::q(-1));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (j == i || j == conj_letter(i, m)) continue;
      add_unit(out, m, i, j, j, i, Laurent(1));
    }
  }
  const Laurent z = bmw_z();
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      add_unit(out, m, i, i, j, j, z);
      const Laurent c = Laurent::monomial(re.rho(j) - re.rho(i),
                                          Rational(re.eps(i) * re.eps(j)));
      add_unit(out, m, i, conj_letter(j, m), conj_letter(i, m), j, -(z * c));
    }
  }
  return out;
}

SparseMat<Laurent> gamma_prime(int m) {
  SparseMat<Laurent> out(space_dim(m, 2));
  const RhoEps re(m);
  for (int i = 1; i <= 2 * m; ++i) {
    for (int j = 1; j <= 2 * m; ++j) {
      const Laurent c = Laurent::monomial(re.rho(j) - re.rho(i),
                                          Rational(re.eps(i) * re.eps(j)));
      add_unit(out, m, i, conj_letter(j, m), conj_letter(i, m), j, c);
    }
  }
  return out;
}

SparseMat<Laurent> hecke_beta_hat(int m) {
  SparseMat<Laurent> out(space_dim(m, 2));
  const int d = 2 * m;
  for (int i = 1; i <= d; ++i) {
    add_unit(out, m, i, i, i, i, Laurent::q(1));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (j != i) add_unit(out, m, i, j, j, i, Laurent(1));
    }
  }
  const Laurent z = bmw_z();
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      add_unit(out, m, i, i, j, j, z);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings and word actions
// ---------------------------------------------------------------------------

SparseMat<Laurent> embed_at(const SparseMat<Laurent>& op2, int pos, int m, int n) {
  if (pos < 1 || pos > n - 1) throw std::out_of_range("embedding position out of range");
  const std::int64_t dim = space_dim(m, n);
  const std::int64_t left = space_dim(m, pos - 1);
  const std::int64_t right = space_dim(m, n - pos - 1);
  const std::int64_t block = space_dim(m, 2) * right;
  SparseMat<Laurent> out(dim);
  for (const auto& [rc, v] : op2.entries()) {
    for (std::int64_t a = 0; a < left; ++a) {
      for (std::int64_t b = 0; b < right; ++b) {
        out.set(a * block + rc.first * right + b, a * block + rc.second * right + b, v);
      }
    }
  }
  return out;
}

SparseMat<Laurent> identity_laurent(int m, int n) {
  return SparseMat<Laurent>::identity(space_dim(m, n), Laurent(1));
}

SparseMat<Laurent> place_action(const Permutation& w, int m) {
  const int n = w.degree();
  const std::int64_t dim = space_dim(m, n);
  SparseMat<Laurent> out(dim);
  for (std::int64_t k = 0; k < dim; ++k) {
    const MultiIndex idx = basis_multiindex(k, m, n);
    out.set(k, basis_index(place_permute(idx, w), m), Laurent(1));
  }
  return out;
}

namespace {
SparseMat<Laurent> word_action(const Permutation& w, int m,
                               const SparseMat<Laurent>& factor) {
  const int n = w.degree();
  SparseMat<Laurent> out = identity_laurent(m, n);
  for (int letter : w.reduced_word()) {
    out = out * embed_at(factor, letter, m, n);
  }
  return out;
}
}  // namespace

SparseMat<Laurent> braid_word_action(const Permutation& w, int m) {
  return word_action(w, m, beta_prime(m));
}

SparseMat<Laurent> hecke_word_action(const Permutation& w, int m) {
  return word_action(w, m, hecke_beta_hat(m));
}

// ---------------------------------------------------------------------------
// Relation checks
// ---------------------------------------------------------------------------

namespace {
CheckResult first_mismatch(const SparseMat<Laurent>& got,
                           const SparseMat<Laurent>& want, std::string name) {
  CheckResult res;
  res.name = std::move(name);
  const SparseMat<Laurent> diff = got - want;
  if (diff.is_zero()) return res;
  const auto& [rc, v] = *diff.entries().begin();
  res.pass = false;
  std::ostringstream os;
  os << "first offending entry (" << rc.first << "," << rc.second
     << "): " << v.to_string();
  res.detail = os.str();
  return res;
}
}  // namespace

CheckResult relation_bg_check_on(const SparseMat<Laurent>& bp, int m,
                                 const std::string& name) {
  const SparseMat<Laurent> id = identity_laurent(m, 2);
  const SparseMat<Laurent> rhs = bp - (id - gamma_prime(m)).scaled(bmw_z());
  // beta' * rhs = id certifies rhs = (beta')^{-1} without an inversion.
  return first_mismatch(bp * rhs, id, name);
}

CheckResult relation_bg_check(int m) {
  return relation_bg_check_on(beta_prime(m), m, "skein identity, rank " + std::to_string(m));
}

CheckResult pairfree_compatibility_check(int m, int n) {
  if (m < n) {
    throw std::invalid_argument("pair-free indices of degree n need m >= n");
  }
  CheckResult res;
  res.name = "pair-free word compatibility";
  const auto perms = all_permutations(n);
  std::vector<SparseMat<Laurent>> braid, hecke;
  braid.reserve(perms.size());
  hecke.reserve(perms.size());
  for (const auto& w : perms) {
    braid.push_back(braid_word_action(w, m));
    hecke.push_back(hecke_word_action(w, m));
  }
  const std::int64_t dim = space_dim(m, n);
  auto row_of = [&](const SparseMat<Laurent>& mat, std::int64_t row) {
    std::vector<std::pair<std::int64_t, Laurent>> out;
    for (const auto& [rc, v] : mat.entries()) {
      if (rc.first == row) out.emplace_back(rc.second, v);
    }
    return out;
  };
  for (std::int64_t k = 0; k < dim; ++k) {
    const MultiIndex idx = basis_multiindex(k, m, n);
    if (symplectic_length(idx, m) != 0) continue;  // precondition: pair-free
    bool decreasing = true;
    for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
      if (idx[t] <= idx[t + 1]) decreasing = false;
    }
    for (std::size_t wi = 0; wi < perms.size(); ++wi) {
      // Row vector convention: v_k T_w is row k of the word matrix.
      const auto braid_row = row_of(braid[wi], k);
      if (braid_row != row_of(hecke[wi], k)) {
        res.pass = false;
        res.detail = "v_i T_w != v_i T^_w at i = " + multiindex_to_string(idx, m) +
                     ", w = " + perms[wi].to_string();
        return res;
      }
      if (decreasing) {
        const std::int64_t target = basis_index(place_permute(idx, perms[wi]), m);
        if (braid_row.size() != 1 || braid_row[0].first != target ||
            braid_row[0].second != Laurent(1)) {
          res.pass = false;
          res.detail = "v_i T_w != v_{iw} at i = " + multiindex_to_string(idx, m) +
                       ", w = " + perms[wi].to_string();
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace qsw
