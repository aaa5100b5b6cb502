// Tableau combinatorics for the symplectic letters {1,...,2m} with the
// conjugation i' = 2m+1-i.  Fillings of a partition shape are stored
// column-major (column 1 top to bottom, then column 2, ...), and a filling
// is identified with the multi-index obtained by that reading.

#pragma once

#include "qsw/combin/partition.hpp"
#include "qsw/combin/permutation.hpp"

#include <string>
#include <vector>

namespace qsw {

/// Conjugate letter i' = 2m+1-i.
inline int conj_letter(int i, int m) { return 2 * m + 1 - i; }

/// Position of a letter in the symplectic order
///   m < m' < (m-1) < (m-1)' < ... < 1 < 1';
/// smaller rank means earlier.
int prec_rank(int letter, int m);

/// The canonical filling: row j filled with the letter j, read column-major.
MultiIndex i_lambda(const Partition& lambda);

/// The column-reversed companion of i_lambda: each column of the canonical
/// filling is reversed (the place permutation by the longest element of the
/// column Young subgroup).
MultiIndex hat_i_lambda(const Partition& lambda);

/// Symplectic semistandard fillings: rows weakly increase and columns
/// strictly increase in the symplectic order, and the letters i, i' may only
/// occupy the first m-i+1 rows.  Enumerated in lexicographic order of the
/// column-major rank sequence.
std::vector<MultiIndex> mys_tableaux(const Partition& lambda, int m);

/// Column-strict fillings w.r.t. the USUAL order 1 < 2 < ... < 2m, with no
/// row condition (the index set of the comultiplication expansion).
std::vector<MultiIndex> lt_tableaux(const Partition& lambda, int m);

/// Maximal number of disjoint symplectic pairs (s < t with i_s = (i_t)'),
/// which equals sum_j min(#j, #j') by completeness of the conflict graph.
int symplectic_length(const MultiIndex& idx, int m);

/// Symplectic weight in the epsilon-basis: mu_s = #{j : i_j = s} - #{j : i_j = s'}.
std::vector<int> wt(const MultiIndex& idx, int m);

/// Occurrence-count weight: the composition (#1, #2, ..., #2m).
std::vector<int> bwt(const MultiIndex& idx, int m);

/// Text form "1 2 1'" with primes for letters above m.
std::string multiindex_to_string(const MultiIndex& idx, int m);

/// Text form "(2,1)" of an epsilon-basis weight.
std::string weight_to_string(const std::vector<int>& weight);

}  // namespace qsw
