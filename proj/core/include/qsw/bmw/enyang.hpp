// The Enyang basis labels of the BMW algebra on n strands and their
// defining words
//
//     T_{d1}* . E_1 E_3 ... E_{2f-1} . T_sigma . T_{d2},
//
// where 0 <= f <= n/2 counts contractions, d1 and d2 run over the
// distinguished coset representatives D_{nu_f}, and sigma permutes the free
// strands {2f+1, ..., n}.  There are (2n-1)!! labels; they form a basis of
// the algebra, and the anti-involution * (which fixes generators and
// reverses words) acts on labels by swapping d1 and d2.

#pragma once

#include "qsw/bmw/word.hpp"
#include "qsw/combin/cosets.hpp"
#include "qsw/combin/permutation.hpp"

#include <string>
#include <vector>

namespace qsw {

struct EnyangIndex {
  int n = 1;
  int f = 0;
  Permutation d1, d2;  // elements of D_{nu_f} inside S_n
  Permutation sigma;   // permutes {2f+1..n}, fixes {1..2f}

  /// "f=1; d1=[s2,s1]; sigma=[]; d2=[s2]"
  std::string to_string() const;

  bool operator==(const EnyangIndex& rhs) const {
    return n == rhs.n && f == rhs.f && d1 == rhs.d1 && d2 == rhs.d2 &&
           sigma == rhs.sigma;
  }
};

/// All (2n-1)!! labels in canonical order: f ascending, then d1, sigma, d2,
/// each in its own canonical order (coset order for d1/d2, image-lex for
/// sigma).
std::vector<EnyangIndex> enyang_indices(int n);

/// The defining word of a label: reversed reduced word of d1 (realizing
/// T_{d1}* = T_{d1^{-1}}), then E_1 E_3 ... E_{2f-1}, then the reduced words
/// of sigma and d2 as T letters.
BmwWord enyang_word(const EnyangIndex& idx);

}  // namespace qsw
