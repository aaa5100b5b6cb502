#include "qsw/combin/partition.hpp"
#include "qsw/combin/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsw {

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw std::invalid_argument("parts must be weakly decreasing and positive");
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::length() const { return static_cast<int>(parts.size()); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
}

Partition Partition::transpose() const {
  Partition t;
  if (parts.empty()) return t;
  t.parts.resize(parts[0]);
  for (int c = 1; c <= parts[0]; ++c) {
    int h = 0;
    while (h < length() && parts[h] >= c) ++h;
    t.parts[c - 1] = h;
  }
  return t;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << "]";
  return os.str();
}

namespace {
void gen_partitions(int remaining, int max_part, int max_len,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = acc;
    out.push_back(std::move(p));
    return;
  }
  if (max_len == 0) return;
  for (int a = std::min(remaining, max_part); a >= 1; --a) {
    acc.push_back(a);
    gen_partitions(remaining - a, a, max_len - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_bounded(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("negative partition bounds");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(k, k, m, acc, out);
  return out;
}

std::vector<std::pair<Partition, int>> lambda_n(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("lambda_n requires m >= 1, n >= 0");
  std::vector<std::pair<Partition, int>> out;
  for (int l = 0; 2 * l <= n; ++l) {
    for (auto& lam : partitions_bounded(n - 2 * l, m)) {
      out.emplace_back(std::move(lam), l);
    }
  }
  return out;
}

PrecOrder order_prec(const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return PrecOrder::kEqual;
  const int diff = lambda.size() - mu.size();
  if (diff != 0) {
    if (diff % 2 != 0) return PrecOrder::kIncomparable;
    // Larger partitions sit LOWER: they correspond to earlier layers of the
    // deflation-degree filtration.
    return diff > 0 ? PrecOrder::kLess : PrecOrder::kGreater;
  }
  const Partition lt = lambda.transpose();
  const Partition mt = mu.transpose();
  const int cols = std::max(lt.length(), mt.length());
  for (int s = 1; s <= cols; ++s) {
    if (lt.part(s) == mt.part(s)) continue;
    return lt.part(s) < mt.part(s) ? PrecOrder::kLess : PrecOrder::kGreater;
  }
  return PrecOrder::kEqual;  // unreachable for distinct partitions
}

Integer std_count(const Partition& lambda) {
  // Hook-length formula.
  const int n = lambda.size();
  if (n == 0) return 1;
  const Partition t = lambda.transpose();
  Integer num;
  mpz_fac_ui(num.get_mpz_t(), n);
  Integer hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.part(r); ++c) {
      const int hook = (lambda.part(r) - c) + (t.part(c) - r) + 1;
      hooks *= hook;
    }
  }
  return num / hooks;
}

Integer weyl_dim_sp(const Partition& lambda, int m) {
  if (lambda.length() > m) {
    throw std::invalid_argument("weyl_dim_sp requires at most m parts");
  }
  // With l_i = lambda_i + m - i + 1 and rho_i = m - i + 1:
  //   dim = prod_i l_i/rho_i * prod_{i<j} (l_i^2 - l_j^2)/(rho_i^2 - rho_j^2).
  Integer num = 1, den = 1;
  std::vector<long> l(m), rho(m);
  for (int i = 1; i <= m; ++i) {
    l[i - 1] = lambda.part(i) + m - i + 1;
    rho[i - 1] = m - i + 1;
  }
  for (int i = 0; i < m; ++i) {
    num *= l[i];
    den *= rho[i];
    for (int j = i + 1; j < m; ++j) {
      num *= l[i] * l[i] - l[j] * l[j];
      den *= rho[i] * rho[i] - rho[j] * rho[j];
    }
  }
  return num / den;
}

Integer double_factorial_odd(int n) {
  Integer out = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) out *= k;
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v - 1] = true;
  }
  Permutation w(0);
  w.images_ = std::move(images);
  return w;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation w(n);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation w(n);
  for (int i : word) w = w.compose(transposition(n, i));
  return w;
}

bool Permutation::is_identity() const {
  for (int a = 1; a <= degree(); ++a) {
    if (images_[a - 1] != a) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& t) const {
  std::vector<int> out(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) {
    out[a] = t.images_[images_[a] - 1];  // (a)(this*t) = ((a)this)t
  }
  Permutation w(0);
  w.images_ = std::move(out);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) out[images_[a] - 1] = a + 1;
  Permutation w(0);
  w.images_ = std::move(out);
  return w;
}

long Permutation::length() const {
  long inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++inv;
    }
  }
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Repeatedly strip the smallest left descent: if (i)w > (i+1)w then
  // w = s_i * w' with l(w') = l(w) - 1, and the letter s_i is emitted first.
  std::vector<int> word;
  std::vector<int> img = images_;
  for (;;) {
    int descent = 0;
    for (std::size_t a = 0; a + 1 < img.size(); ++a) {
      if (img[a] > img[a + 1]) {
        descent = static_cast<int>(a) + 1;
        break;
      }
    }
    if (descent == 0) break;
    word.push_back(descent);
    std::swap(img[descent - 1], img[descent]);
  }
  return word;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  const auto word = reduced_word();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ",";
    os << "s" << word[i];
  }
  os << "]";
  return os.str();
}

MultiIndex place_permute(const MultiIndex& idx, const Permutation& w) {
  const Permutation winv = w.inverse();
  MultiIndex out(idx.size());
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    out[k - 1] = idx[winv(static_cast<int>(k)) - 1];
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> window_permutations(int n, int lo, int hi) {
  if (lo > hi) return {Permutation(n)};
  std::vector<int> win(hi - lo + 1);
  std::iota(win.begin(), win.end(), lo);
  std::vector<Permutation> out;
  do {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t k = 0; k < win.size(); ++k) img[lo - 1 + k] = win[k];
    out.push_back(Permutation::from_images(std::move(img)));
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

Permutation young_longest_element(const std::vector<int>& block_sizes) {
  int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<int> img;
  img.reserve(n);
  int base = 0;
  for (int size : block_sizes) {
    for (int a = size; a >= 1; --a) img.push_back(base + a);
    base += size;
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace qsw
