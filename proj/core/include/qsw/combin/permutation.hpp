// Symmetric-group elements under the right-action convention
//   (a)(sigma tau) = ((a)sigma) tau,
// with deterministic reduced words and the place permutation of
// multi-indices.  Products compose left to right throughout.

#pragma once

#include <string>
#include <vector>

namespace qsw {

/// A multi-index: a word over the alphabet {1,...,2m}.
using MultiIndex = std::vector<int>;

class Permutation {
 public:
  /// Identity on {1,...,n}.
  explicit Permutation(int n = 0);

  /// From the image tuple ((1)w, ..., (n)w); validates bijectivity.
  static Permutation from_images(std::vector<int> images);

  /// The adjacent transposition s_i = (i, i+1) in S_n.
  static Permutation transposition(int n, int i);

  /// Product of the letters s_{word[0]} s_{word[1]} ... (left to right).
  static Permutation from_word(int n, const std::vector<int>& word);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int a) const { return images_[a - 1]; }  // (a)w

  bool is_identity() const;

  /// this * t: apply *this first, then t.
  Permutation compose(const Permutation& t) const;

  Permutation inverse() const;

  /// Coxeter length = inversion count.
  long length() const;

  /// The lexicographically smallest reduced word, found by repeatedly
  /// extracting the smallest left descent.  Letters are the indices i of s_i.
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

  const std::vector<int>& images() const { return images_; }

  std::string to_string() const;  // "[s2,s1]" (reduced word); "[]" for id

 private:
  std::vector<int> images_;
};

/// The place permutation: (i w)_k = i_{(k) w^{-1}}, i.e. v_i . w = v_{iw}.
MultiIndex place_permute(const MultiIndex& idx, const Permutation& w);

/// All of S_n in lexicographic order of image tuples.
std::vector<Permutation> all_permutations(int n);

/// The permutations of {lo,...,hi} inside S_n (fixing everything else),
/// in lexicographic order of image tuples.
std::vector<Permutation> window_permutations(int n, int lo, int hi);

/// Longest element of the Young subgroup with consecutive blocks of the
/// given sizes (each block's elements are reversed).
Permutation young_longest_element(const std::vector<int>& block_sizes);

}  // namespace qsw
