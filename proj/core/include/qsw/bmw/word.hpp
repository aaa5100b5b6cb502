// Words in the BMW generators.  The alphabet is {T(i), E(i) : 1 <= i <= n-1}
// only: generator inverses are not letters (T_i^{-1} expands through the
// skein relation T_i - z(1 - E_i) whenever an inverse is needed), which keeps
// every relation check division-free.

#pragma once

#include <string>
#include <vector>

namespace qsw {

struct BmwLetter {
  enum class Kind { kT, kE };

  Kind kind = Kind::kT;
  int index = 1;  // the i of T_i / E_i, 1-based

  static BmwLetter T(int i) { return {Kind::kT, i}; }
  static BmwLetter E(int i) { return {Kind::kE, i}; }

  bool operator==(const BmwLetter& rhs) const {
    return kind == rhs.kind && index == rhs.index;
  }
};

struct BmwWord {
  int n = 2;  // the number of strands; letter indices range over 1..n-1
  std::vector<BmwLetter> letters;

  bool empty() const { return letters.empty(); }

  void push_t(int i) { letters.push_back(BmwLetter::T(i)); }
  void push_e(int i) { letters.push_back(BmwLetter::E(i)); }

  /// The word read backwards (the image under the anti-involution *).
  BmwWord reversed() const;

  /// "T1 E1 T2"; the empty word prints as "1".
  std::string to_string() const;

  bool operator==(const BmwWord& rhs) const {
    return n == rhs.n && letters == rhs.letters;
  }
};

}  // namespace qsw
