// Combinatorial layer: permutations under the right-action convention,
// partitions and dimension counts, distinguished coset representatives, and
// symplectic tableaux.

#include "doctest.h"

#include "qsw/combin/cosets.hpp"
#include "qsw/combin/partition.hpp"
#include "qsw/combin/permutation.hpp"
#include "qsw/combin/tableaux.hpp"

#include <algorithm>
#include <set>

using namespace qsw;

TEST_CASE("Permutation composition is left to right") {
  const Permutation s1 = Permutation::transposition(3, 1);
  const Permutation s2 = Permutation::transposition(3, 2);

  // (1)(s1 s2): (1)s1 = 2, then (2)s2 = 3.
  CHECK(s1.compose(s2) == Permutation::from_images({3, 1, 2}));
  CHECK(s2.compose(s1) == Permutation::from_images({2, 3, 1}));
  CHECK(s1.compose(s1).is_identity());
  CHECK(Permutation::from_word(3, {1, 2}) == s1.compose(s2));

  const Permutation w = Permutation::from_images({3, 1, 2});
  CHECK(w.inverse() == Permutation::from_images({2, 3, 1}));
  CHECK(w.compose(w.inverse()).is_identity());
  CHECK(w(1) == 3);
}

TEST_CASE("Length, reduced words, braid equality") {
  const Permutation w0 = Permutation::from_images({3, 2, 1});
  CHECK(w0.length() == 3);
  CHECK(w0.reduced_word() == std::vector<int>{1, 2, 1});
  CHECK(Permutation::from_word(3, {1, 2, 1}) ==
        Permutation::from_word(3, {2, 1, 2}));
  CHECK(Permutation(4).length() == 0);
  CHECK(Permutation(4).reduced_word().empty());
  CHECK(w0.to_string() == "[s1,s2,s1]");
  CHECK(Permutation(3).to_string() == "[]");
}

TEST_CASE("Permutation enumeration helpers") {
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(0).size() == 1);

  // Permutations of the window {2,3,4} inside S_4 fix the point 1.
  const auto win = window_permutations(4, 2, 4);
  CHECK(win.size() == 6);
  for (const auto& w : win) CHECK(w(1) == 1);

  CHECK(young_longest_element({2, 2}) ==
        Permutation::from_images({2, 1, 4, 3}));
  CHECK(young_longest_element({3}) == Permutation::from_images({3, 2, 1}));
}

TEST_CASE("Place permutation moves entries, not values") {
  // (i w)_k = i_{(k) w^{-1}}.
  const Permutation s1 = Permutation::transposition(3, 1);
  CHECK(place_permute({5, 6, 7}, s1) == MultiIndex{6, 5, 7});

  const Permutation w = Permutation::from_word(3, {1, 2});  // images (3,1,2)
  CHECK(place_permute({5, 6, 7}, w) == MultiIndex{6, 7, 5});

  // Right action: permuting by a product is permuting twice.
  const Permutation s2 = Permutation::transposition(3, 2);
  CHECK(place_permute(place_permute({5, 6, 7}, s1), s2) ==
        place_permute({5, 6, 7}, s1.compose(s2)));
}

TEST_CASE("Partitions: transpose, bounded enumeration, lambda_n") {
  const Partition lam({3, 1});
  CHECK(lam.size() == 4);
  CHECK(lam.length() == 2);
  CHECK(lam.part(1) == 3);
  CHECK(lam.part(5) == 0);  // parts beyond the length read as 0
  CHECK(lam.transpose() == Partition({2, 1, 1}));
  CHECK(Partition({}).transpose() == Partition({}));
  CHECK(lam.to_string() == "[3,1]");
  CHECK(Partition({}).to_string() == "[]");

  const auto p42 = partitions_bounded(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == Partition({4}));
  CHECK(p42[1] == Partition({3, 1}));
  CHECK(p42[2] == Partition({2, 2}));

  // lambda_n(2,3): contraction count l ascending, partitions of n - 2l
  // with at most 2 rows at each layer.
  const auto l23 = lambda_n(2, 3);
  REQUIRE(l23.size() == 3);
  CHECK(l23[0].first == Partition({3}));
  CHECK(l23[0].second == 0);
  CHECK(l23[1].first == Partition({2, 1}));
  CHECK(l23[1].second == 0);
  CHECK(l23[2].first == Partition({1}));
  CHECK(l23[2].second == 1);
}

TEST_CASE("Deflation-filtration comparison") {
  // Equal sizes compare column lengths left to right: (2) has the shorter
  // first column, so it sits strictly below (1,1).
  CHECK(order_prec(Partition({2}), Partition({1, 1})) == PrecOrder::kLess);
  CHECK(order_prec(Partition({1, 1}), Partition({2})) == PrecOrder::kGreater);
  CHECK(order_prec(Partition({2}), Partition({2})) == PrecOrder::kEqual);
  // Larger partitions sit lower (earlier deflation layers); odd size
  // differences never occur in one filtration and are incomparable.
  CHECK(order_prec(Partition({3}), Partition({1})) == PrecOrder::kLess);
  CHECK(order_prec(Partition({1}), Partition({3})) == PrecOrder::kGreater);
  CHECK(order_prec(Partition({3, 1, 1}), Partition({2, 2, 2})) ==
        PrecOrder::kIncomparable);
}

TEST_CASE("Counting: standard tableaux, Weyl dimensions, factorials") {
  CHECK(std_count(Partition({2, 1})) == 2);
  CHECK(std_count(Partition({2, 2})) == 2);
  CHECK(std_count(Partition({3})) == 1);
  CHECK(std_count(Partition({})) == 1);

  // sp_2: dim V_(k) = k + 1.
  CHECK(weyl_dim_sp(Partition({2}), 1) == 3);
  // sp_4.
  CHECK(weyl_dim_sp(Partition({2}), 2) == 10);
  CHECK(weyl_dim_sp(Partition({1, 1}), 2) == 5);
  // sp_6.
  CHECK(weyl_dim_sp(Partition({3}), 3) == 56);
  CHECK(weyl_dim_sp(Partition({2, 1}), 3) == 64);
  CHECK(weyl_dim_sp(Partition({1}), 3) == 6);
  CHECK(weyl_dim_sp(Partition({1, 1, 1}), 3) == 14);
  // sp_8.
  CHECK(weyl_dim_sp(Partition({4}), 4) == 330);
  CHECK(weyl_dim_sp(Partition({3, 1}), 4) == 594);
  CHECK(weyl_dim_sp(Partition({2, 2}), 4) == 308);
  CHECK(weyl_dim_sp(Partition({2, 1, 1}), 4) == 315);
  CHECK(weyl_dim_sp(Partition({1, 1, 1, 1}), 4) == 42);
  CHECK(weyl_dim_sp(Partition({2}), 4) == 36);
  CHECK(weyl_dim_sp(Partition({1, 1}), 4) == 27);
  CHECK(weyl_dim_sp(Partition({}), 4) == 1);

  CHECK(double_factorial_odd(1) == 1);
  CHECK(double_factorial_odd(2) == 3);
  CHECK(double_factorial_odd(3) == 15);
  CHECK(double_factorial_odd(8) == 2027025);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
}

TEST_CASE("Distinguished coset representatives") {
  // |D_{nu_f}| = n! / (2^f f! (n-2f)!).
  CHECK(coset_reps_D_nu(0, 3).size() == 1);
  CHECK(coset_reps_D_nu(1, 3).size() == 3);
  CHECK(coset_reps_D_nu(0, 4).size() == 1);
  CHECK(coset_reps_D_nu(1, 4).size() == 6);
  CHECK(coset_reps_D_nu(2, 4).size() == 3);

  // Representatives are pairwise distinct and contain the identity.
  const auto reps = coset_reps_D_nu(1, 4);
  std::set<Permutation> uniq(reps.begin(), reps.end());
  CHECK(uniq.size() == reps.size());
  CHECK(std::any_of(reps.begin(), reps.end(),
                    [](const Permutation& d) { return d.is_identity(); }));
  for (const auto& d : reps) CHECK(is_coset_rep_D_nu(1, 4, d));

  // Brauer count: sum_f |D_{nu_f}|^2 (n-2f)! = (2n-1)!!.
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    Integer fact = 1;
    std::vector<Integer> factorials{1};
    for (int k = 1; k <= n; ++k) {
      fact *= k;
      factorials.push_back(fact);
    }
    for (int f = 0; 2 * f <= n; ++f) {
      const Integer reps_count(coset_reps_D_nu(f, n).size());
      total += reps_count * reps_count * factorials[n - 2 * f];
    }
    CHECK(total == double_factorial_odd(n));
  }

  CHECK(increasing_subsets(4, 2).size() == 6);
  CHECK(d_J(4, {}).is_identity());
}

TEST_CASE("Symplectic alphabet and canonical fillings") {
  // m = 2 alphabet order: 2 < 2' < 1 < 1', i.e. 2 < 3 < 1 < 4 as letters.
  CHECK(conj_letter(1, 2) == 4);
  CHECK(conj_letter(2, 2) == 3);
  CHECK(prec_rank(2, 2) < prec_rank(3, 2));
  CHECK(prec_rank(3, 2) < prec_rank(1, 2));
  CHECK(prec_rank(1, 2) < prec_rank(4, 2));

  // i_lambda reads row fillings column-major; hat reverses each column.
  CHECK(i_lambda(Partition({2, 1})) == MultiIndex{1, 2, 1});
  CHECK(hat_i_lambda(Partition({2, 1})) == MultiIndex{2, 1, 1});
  CHECK(i_lambda(Partition({})) == MultiIndex{});
}

TEST_CASE("Tableau enumeration counts") {
  CHECK(mys_tableaux(Partition({2}), 1).size() == 3);
  CHECK(mys_tableaux(Partition({1}), 1).size() == 2);
  CHECK(mys_tableaux(Partition({}), 1).size() == 1);  // the empty filling
  CHECK(mys_tableaux(Partition({2}), 2).size() == 10);
  CHECK(mys_tableaux(Partition({1, 1}), 2).size() == 5);
  CHECK(mys_tableaux(Partition({1}), 2).size() == 4);
  CHECK(mys_tableaux(Partition({2, 1}), 2).size() == 16);
  CHECK(mys_tableaux(Partition({3}), 2).size() == 20);

  CHECK(lt_tableaux(Partition({1, 1}), 2).size() == 6);
  CHECK(lt_tableaux(Partition({1}), 2).size() == 4);
}

TEST_CASE("Weights and rendering") {
  // (1, 2, 4) at m = 2: letters 1, 2, 1'; weight mu_s = #s - #s'.
  CHECK(wt({1, 2, 4}, 2) == std::vector<int>{0, 1});
  // bwt counts every letter separately.
  CHECK(bwt({1, 2, 4}, 2) == std::vector<int>{1, 1, 0, 1});
  // One conjugate pair {1, 1'} present; none in (1, 2).
  CHECK(symplectic_length(MultiIndex{1, 4}, 2) == 1);
  CHECK(symplectic_length(MultiIndex{1, 2}, 2) == 0);
  CHECK(multiindex_to_string({1, 2, 4}, 2) == "1 2 1'");
  CHECK(weight_to_string({2, 1}) == "(2,1)");
}
