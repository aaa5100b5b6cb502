#include "qsw/qaction/generators.hpp"

#include <stdexcept>

namespace qsw {

int cartan_entry(int i, int j, int m) {
  // Symmetric form: (eps_a, eps_b) = delta_{a,b}; alpha_i as in the header.
  // a_{i,j} = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i).
  auto inner = [&](int a, int b) {  // (alpha_a, alpha_b)
    auto coords = [&](int r) {
      std::vector<int> v(m, 0);
      if (r < m) {
        v[r - 1] = 1;
        v[r] = -1;
      } else {
        v[m - 1] = 2;
      }
      return v;
    };
    const auto va = coords(a);
    const auto vb = coords(b);
    int s = 0;
    for (int k = 0; k < m; ++k) s += va[k] * vb[k];
    return s;
  };
  return 2 * inner(j, i) / inner(i, i);
}

NodeLength node_of(int i, int m) {
  return i == m ? NodeLength::kLong : NodeLength::kShort;
}

int coroot_pairing(const Weight& mu, int i, int m) {
  if (static_cast<int>(mu.size()) != m) throw std::invalid_argument("weight length != m");
  return i < m ? mu[i - 1] - mu[i] : mu[m - 1];
}

SparseMat<Laurent> generator_matrix(Generator g, int m) {
  if (g.i < 1 || g.i > m) throw std::invalid_argument("generator index out of range");
  SparseMat<Laurent> out(2 * m);
  const int i = g.i;
  auto unit = [&](int to, int from, Laurent c) {
    out.add(to - 1, from - 1, std::move(c));
  };
  switch (g.kind) {
    case GenKind::kE:
      if (i < m) {
        unit(i, i + 1, Laurent(1));                                  // e_i v_{i+1} = v_i
        unit(conj_letter(i + 1, m), conj_letter(i, m), Laurent(-1)); // e_i v_{i'} = -v_{(i+1)'}
      } else {
        unit(m, m + 1, Laurent(1));                                  // e_m v_{m'} = v_m
      }
      break;
    case GenKind::kF:
      if (i < m) {
        unit(i + 1, i, Laurent(1));                                  // f_i v_i = v_{i+1}
        unit(conj_letter(i, m), conj_letter(i + 1, m), Laurent(-1)); // f_i v_{(i+1)'} = -v_{i'}
      } else {
        unit(m + 1, m, Laurent(1));                                  // f_m v_m = v_{m'}
      }
      break;
    case GenKind::kK:
    case GenKind::kKinv: {
      const int sgn = g.kind == GenKind::kK ? 1 : -1;
      for (int j = 1; j <= 2 * m; ++j) {
        const Weight mu = wt({j}, m);
        const int h = coroot_pairing(mu, i, m);
        unit(j, j, Laurent::q(sgn * h));
      }
      break;
    }
  }
  return out;
}

SparseMat<Laurent> ktilde_matrix(int i, int m, bool inverse) {
  const int mult = (i == m ? 2 : 1) * (inverse ? -1 : 1);
  SparseMat<Laurent> out(2 * m);
  for (int j = 1; j <= 2 * m; ++j) {
    const int h = coroot_pairing(wt({j}, m), i, m);
    out.set(j - 1, j - 1, Laurent::q(mult * h));
  }
  return out;
}

SparseMat<Laurent> tensor_generator(Generator g, int m, int n) {
  if (n < 1) throw std::invalid_argument("tensor degree must be positive");
  const SparseMat<Laurent> one = SparseMat<Laurent>::identity(2 * m, Laurent(1));
  const SparseMat<Laurent> gen = generator_matrix(g, m);
  switch (g.kind) {
    case GenKind::kK:
    case GenKind::kKinv: {
      SparseMat<Laurent> out = gen;
      for (int k = 2; k <= n; ++k) out = kronecker(out, gen);
      return out;
    }
    case GenKind::kE: {
      // sum_k k~^(x)(k-1) (x) e_i (x) 1^(x)(n-k)
      const SparseMat<Laurent> kt = ktilde_matrix(g.i, m, false);
      SparseMat<Laurent> out(space_dim(m, n));
      for (int k = 1; k <= n; ++k) {
        SparseMat<Laurent> term = k == 1 ? gen : kt;
        for (int pos = 2; pos <= n; ++pos) {
          const SparseMat<Laurent>& factor = pos < k ? kt : (pos == k ? gen : one);
          term = kronecker(term, factor);
        }
        out = out + term;
      }
      return out;
    }
    case GenKind::kF: {
      // sum_k 1^(x)(k-1) (x) f_i (x) (k~^{-1})^(x)(n-k)
      const SparseMat<Laurent> kti = ktilde_matrix(g.i, m, true);
      SparseMat<Laurent> out(space_dim(m, n));
      for (int k = 1; k <= n; ++k) {
        SparseMat<Laurent> term = k == 1 ? gen : one;
        for (int pos = 2; pos <= n; ++pos) {
          const SparseMat<Laurent>& factor = pos < k ? one : (pos == k ? gen : kti);
          term = kronecker(term, factor);
        }
        out = out + term;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

SparseMat<Laurent> divided_power(int i, int a, int m, int n, GenKind kind) {
  if (a < 0) throw std::invalid_argument("divided power with negative exponent");
  if (kind != GenKind::kE && kind != GenKind::kF) {
    throw std::invalid_argument("divided powers exist for e and f only");
  }
  SparseMat<Laurent> power = identity_laurent(m, n);
  const SparseMat<Laurent> gen = tensor_generator({kind, i}, m, n);
  for (int s = 0; s < a; ++s) power = power * gen;
  const Laurent fact = quantum_factorial(a, node_of(i, m));
  SparseMat<Laurent> out(power.dim());
  for (const auto& [rc, v] : power.entries()) {
    out.set(rc.first, rc.second, v.div_exact(fact));  // throws when not integral
  }
  return out;
}

Weight weight_of_basis(std::int64_t k, int m, int n) {
  return wt(basis_multiindex(k, m, n), m);
}

std::map<Weight, std::vector<std::int64_t>> weight_table(int m, int n) {
  std::map<Weight, std::vector<std::int64_t>> out;
  const std::int64_t dim = space_dim(m, n);
  for (std::int64_t k = 0; k < dim; ++k) {
    out[weight_of_basis(k, m, n)].push_back(k);
  }
  return out;
}

SparseMat<Laurent> weight_projector(const Weight& mu, int m, int n) {
  SparseMat<Laurent> out(space_dim(m, n));
  for (std::int64_t k = 0; k < out.dim(); ++k) {
    if (weight_of_basis(k, m, n) == mu) out.set(k, k, Laurent(1));
  }
  return out;
}

Laurent bracket_scalar(int h, int c, int t, NodeLength len) {
  return quantum_binomial(h + c, t, len);
}

SparseMat<Laurent> quantum_binomial_bracket(int i, int c, int t, int m, int n) {
  SparseMat<Laurent> out(space_dim(m, n));
  for (std::int64_t k = 0; k < out.dim(); ++k) {
    const int h = coroot_pairing(weight_of_basis(k, m, n), i, m);
    out.set(k, k, bracket_scalar(h, c, t, node_of(i, m)));
  }
  return out;
}

SparseMat<Laurent> lusztig_projector(const Weight& lambda, int m, int n) {
  SparseMat<Laurent> out(space_dim(m, n));
  for (std::int64_t k = 0; k < out.dim(); ++k) {
    const Weight mu = weight_of_basis(k, m, n);
    Laurent scalar(1);
    for (int i = 1; i <= m && !scalar.is_zero(); ++i) {
      const NodeLength len = node_of(i, m);
      const int range = (i == m ? 4 : 2) * n;
      const int hl = coroot_pairing(lambda, i, m);
      const int h = coroot_pairing(mu, i, m);
      scalar *= bracket_scalar(h, -hl - 1, range, len);
      scalar *= bracket_scalar(h, -hl + range, range, len);
    }
    out.set(k, k, scalar);
  }
  return out;
}

}  // namespace qsw
