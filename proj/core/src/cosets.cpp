#include "qsw/combin/cosets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qsw {

std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  std::function<void(int)> dfs = [&](int next) {
    if (static_cast<int>(acc.size()) == k) {
      out.push_back(acc);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(acc.size())) + 1; ++v) {
      acc.push_back(v);
      dfs(v + 1);
      acc.pop_back();
    }
  };
  dfs(1);
  return out;
}

std::vector<int> d_J_word(const std::vector<int>& J) {
  // (s_{2f} ... s_{i_{2f}-1}) (s_{2f-1} ... s_{i_{2f-1}-1}) ... (s_1 ... s_{i_1-1})
  const int twof = static_cast<int>(J.size());
  std::vector<int> word;
  for (int t = twof; t >= 1; --t) {
    for (int s = t; s <= J[t - 1] - 1; ++s) word.push_back(s);
  }
  return word;
}

Permutation d_J(int n, const std::vector<int>& J) {
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] < 1 || J[k] > n || (k > 0 && J[k] <= J[k - 1])) {
      throw std::invalid_argument("J must be strictly increasing in {1..n}");
    }
  }
  return Permutation::from_word(n, d_J_word(J));
}

std::vector<int> d_0_word(int f) {
  // (s_{2f-2} s_{2f-1}) (s_{2f-4} ... s_{2f-1}) ... (s_2 ... s_{2f-1})
  std::vector<int> word;
  for (int j = f - 1; j >= 1; --j) {
    for (int s = 2 * j; s <= 2 * f - 1; ++s) word.push_back(s);
  }
  return word;
}

Permutation d_0(int n, int f) {
  if (2 * f > n) throw std::invalid_argument("d_0 requires 2f <= n");
  return Permutation::from_word(n, d_0_word(f));
}

namespace {
/// Standard pairings of {1..2f} as permutations: images
/// ((1)d, (2)d, ...) = (a_1, b_1, a_2, b_2, ...) with a_r < b_r and
/// a_1 < a_2 < ... < a_f.
void gen_pairings(std::vector<int>& avail, std::vector<int>& img,
                  std::vector<Permutation>& out, int n) {
  if (avail.empty()) {
    std::vector<int> full(n);
    for (int a = 1; a <= n; ++a) full[a - 1] = a;
    for (std::size_t k = 0; k < img.size(); ++k) full[k] = img[k];
    out.push_back(Permutation::from_images(full));
    return;
  }
  const int a = avail.front();
  for (std::size_t bi = 1; bi < avail.size(); ++bi) {
    const int b = avail[bi];
    std::vector<int> rest;
    for (std::size_t k = 1; k < avail.size(); ++k) {
      if (k != bi) rest.push_back(avail[k]);
    }
    img.push_back(a);
    img.push_back(b);
    gen_pairings(rest, img, out, n);
    img.pop_back();
    img.pop_back();
  }
}
}  // namespace

std::vector<Permutation> D_f_reps(int n, int f) {
  if (f == 0) return {Permutation(n)};
  std::vector<int> avail(2 * f);
  for (int a = 1; a <= 2 * f; ++a) avail[a - 1] = a;
  std::vector<int> img;
  std::vector<Permutation> out;
  gen_pairings(avail, img, out, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> coset_reps_D_nu(int f, int n) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("need 0 <= 2f <= n");
  std::vector<Permutation> out;
  const auto dfs = D_f_reps(n, f);
  for (const auto& J : increasing_subsets(n, 2 * f)) {
    const Permutation dj = d_J(n, J);
    for (const auto& d1 : dfs) {
      out.push_back(d1.compose(dj));
    }
  }
  return out;
}

bool is_coset_rep_D_nu(int f, int n, const Permutation& d) {
  // The canonical bitableau of shape ((2^f), (n-2f)) has first-component
  // rows (2r-1, 2r) and a single second-component row (2f+1, ..., n).
  // d is distinguished iff all rows stay increasing after applying d and
  // the first column (2r-1)d increases down.
  for (int r = 1; r <= f; ++r) {
    if (d(2 * r - 1) >= d(2 * r)) return false;
    if (r > 1 && d(2 * r - 3) >= d(2 * r - 1)) return false;
  }
  for (int a = 2 * f + 1; a < n; ++a) {
    if (d(a) >= d(a + 1)) return false;
  }
  return true;
}

}  // namespace qsw
