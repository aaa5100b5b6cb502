#include "qsw/combin/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qsw {

int prec_rank(int letter, int m) {
  if (letter < 1 || letter > 2 * m) throw std::invalid_argument("letter out of range");
  return letter <= m ? 2 * (m - letter) : 2 * (letter - m) - 1;
}

namespace {
/// Letter with the given symplectic rank (inverse of prec_rank).
int letter_of_rank(int rank, int m) {
  return rank % 2 == 0 ? m - rank / 2 : m + 1 + (rank - 1) / 2;
}

/// Base letter of the conjugate class {i, i'}: i itself for i <= m.
int base_letter(int letter, int m) { return std::min(letter, 2 * m + 1 - letter); }

/// Column offsets of the column-major reading of shape lambda.
std::vector<int> column_offsets(const Partition& col_heights) {
  std::vector<int> off(col_heights.length() + 1, 0);
  for (int c = 1; c <= col_heights.length(); ++c) {
    off[c] = off[c - 1] + col_heights.part(c);
  }
  return off;
}
}  // namespace

MultiIndex i_lambda(const Partition& lambda) {
  const Partition heights = lambda.transpose();
  MultiIndex out;
  out.reserve(lambda.size());
  for (int c = 1; c <= heights.length(); ++c) {
    for (int r = 1; r <= heights.part(c); ++r) out.push_back(r);
  }
  return out;
}

MultiIndex hat_i_lambda(const Partition& lambda) {
  const Partition heights = lambda.transpose();
  MultiIndex out;
  out.reserve(lambda.size());
  for (int c = 1; c <= heights.length(); ++c) {
    for (int r = heights.part(c); r >= 1; --r) out.push_back(r);
  }
  return out;
}

std::vector<MultiIndex> mys_tableaux(const Partition& lambda, int m) {
  const Partition heights = lambda.transpose();
  const int cols = heights.length();
  const auto off = column_offsets(heights);
  std::vector<MultiIndex> out;
  MultiIndex fill(lambda.size(), 0);
  // Depth-first over column-major slots, letters tried in symplectic-rank
  // order, so the output is lexicographic in the rank sequence.
  std::function<void(int, int)> dfs = [&](int c, int r) {
    if (c > cols) {
      out.push_back(fill);
      return;
    }
    const int height = heights.part(c);
    if (r > height) {
      dfs(c + 1, 1);
      return;
    }
    int min_rank = 0;
    if (r > 1) {
      min_rank = prec_rank(fill[off[c - 1] + r - 2], m) + 1;  // column strict
    }
    if (c > 1) {
      min_rank = std::max(min_rank, prec_rank(fill[off[c - 2] + r - 1], m));  // row weak
    }
    for (int rank = min_rank; rank < 2 * m; ++rank) {
      const int letter = letter_of_rank(rank, m);
      if (r > m - base_letter(letter, m) + 1) continue;  // row limit for {i, i'}
      fill[off[c - 1] + r - 1] = letter;
      dfs(c, r + 1);
    }
  };
  dfs(1, 1);
  return out;
}

std::vector<MultiIndex> lt_tableaux(const Partition& lambda, int m) {
  const Partition heights = lambda.transpose();
  const int cols = heights.length();
  const auto off = column_offsets(heights);
  std::vector<MultiIndex> out;
  MultiIndex fill(lambda.size(), 0);
  std::function<void(int, int)> dfs = [&](int c, int r) {
    if (c > cols) {
      out.push_back(fill);
      return;
    }
    if (r > heights.part(c)) {
      dfs(c + 1, 1);
      return;
    }
    const int lo = r > 1 ? fill[off[c - 1] + r - 2] + 1 : 1;  // usual order, strict
    for (int letter = lo; letter <= 2 * m; ++letter) {
      fill[off[c - 1] + r - 1] = letter;
      dfs(c, r + 1);
    }
  };
  dfs(1, 1);
  return out;
}

int symplectic_length(const MultiIndex& idx, int m) {
  std::vector<int> count(2 * m + 1, 0);
  for (int a : idx) {
    if (a < 1 || a > 2 * m) throw std::invalid_argument("letter out of range");
    ++count[a];
  }
  int total = 0;
  for (int j = 1; j <= m; ++j) {
    total += std::min(count[j], count[2 * m + 1 - j]);
  }
  return total;
}

std::vector<int> wt(const MultiIndex& idx, int m) {
  std::vector<int> mu(m, 0);
  for (int a : idx) {
    if (a <= m) {
      ++mu[a - 1];
    } else {
      --mu[2 * m - a];  // a = s' contributes -eps_s
    }
  }
  return mu;
}

std::vector<int> bwt(const MultiIndex& idx, int m) {
  std::vector<int> counts(2 * m, 0);
  for (int a : idx) ++counts[a - 1];
  return counts;
}

std::string multiindex_to_string(const MultiIndex& idx, int m) {
  std::ostringstream os;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) os << " ";
    const int a = idx[k];
    if (a <= m) {
      os << a;
    } else {
      os << (2 * m + 1 - a) << "'";
    }
  }
  return os.str();
}

std::string weight_to_string(const std::vector<int>& weight) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (i) os << ",";
    os << weight[i];
  }
  os << ")";
  return os.str();
}

}  // namespace qsw
