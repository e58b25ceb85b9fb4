#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <utility>
#include <vector>

#include "grm/cyclotomic.hpp"

using namespace grm;

namespace {

long pow_long(int q, int m) {
  long r = 1;
  for (int i = 0; i < m; ++i) r *= q;
  return r;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("cosets mod 15 under doubling") {
  CHECK(coset_of(1, 15, 2) == std::vector<long>{1, 2, 4, 8});
  CHECK(coset_of(5, 15, 2) == std::vector<long>{5, 10});
  CHECK(coset_of(0, 15, 2) == std::vector<long>{0});
  CHECK(coset_of(8, 15, 2) == coset_of(1, 15, 2));  // any member names the orbit
}

TEST_CASE("coset structure partitions the residues") {
  CosetStructure cs = all_cosets(15, 2);
  CHECK(cs.leaders == std::vector<long>{0, 1, 3, 5, 7});
  CHECK(cs.cosets.size() == 5);
  long total = 0;
  std::vector<int> seen(15, 0);
  for (const auto& c : cs.cosets) {
    total += static_cast<long>(c.size());
    for (long a : c) seen[a]++;
  }
  CHECK(total == 15);
  for (int v = 0; v < 15; ++v) CHECK(seen[v] == 1);
  for (long a = 0; a < 15; ++a) {
    const auto& orbit = cs.cosets[cs.coset_index[a]];
    CHECK(std::find(orbit.begin(), orbit.end(), a) != orbit.end());
  }
}

TEST_CASE("n = q - 1 makes every coset a singleton") {
  CosetStructure cs = all_cosets(6, 7);
  CHECK(cs.cosets.size() == 6);
  for (const auto& c : cs.cosets) CHECK(c.size() == 1);
}

TEST_CASE("multiplicative orders") {
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(3, 26) == 3);
  CHECK(multiplicative_order(4, 63) == 3);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(5, 24) == 2);
  CHECK_THROWS_AS(multiplicative_order(3, 27), std::invalid_argument);
}

TEST_CASE("digit statistics of base-q expansions") {
  // 26 = (2,2,2) base 3; 11 = (1,0,2) base 3 read low to high.
  CHECK(q_weight(26, 3, 3) == 6);
  CHECK(digit_hamming_weight(26, 3, 3) == 3);
  CHECK(interior_digit_count(26, 3, 3) == 0);
  CHECK(q_weight(11, 3, 3) == 3);
  CHECK(digit_hamming_weight(11, 3, 3) == 2);
  CHECK(interior_digit_count(11, 3, 3) == 1);
  CHECK(q_weight(0, 3, 3) == 0);
  // Base 2 has no interior digits at all.
  for (long a = 0; a < 32; ++a) CHECK(interior_digit_count(a, 2, 5) == 0);
  CHECK_THROWS_AS(q_weight(27, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(q_weight(-1, 3, 3), std::invalid_argument);
}

TEST_CASE("index sets of bounded digit weight") {
  CHECK(index_set(3, 3, 1).members() == std::vector<long>{1, 2, 3, 6, 9, 18});
  CHECK(index_set(2, 4, 1).members() == std::vector<long>{1, 2, 4, 8});
  // Size is the closed-form count, summed over exact weights.
  const std::pair<int, int> cases[] = {{2, 5}, {3, 3}, {4, 2}, {5, 2}, {3, 4}};
  for (auto [q, m] : cases)
    for (int h = 1; h <= m; ++h) {
      long expect = 0;
      for (int i = 1; i <= h; ++i) expect += binom(m, i) * pow_long(q - 1, i);
      // The all-(q-1) top value equals n and is excluded from the range.
      if (h == m) expect -= 1;
      CHECK(static_cast<long>(index_set(q, m, h).size()) == expect);
    }
}

TEST_CASE("digit weights are constant on cosets") {
  const std::pair<int, int> cases[] = {{2, 6}, {3, 3}, {4, 3}, {5, 2}};
  for (auto [q, m] : cases) {
    long n = pow_long(q, m) - 1;
    CosetStructure cs = all_cosets(n, q);
    for (const auto& c : cs.cosets) {
      int wt = digit_hamming_weight(c[0], q, m);
      int qw = q_weight(c[0], q, m);
      for (long a : c) {
        CHECK(digit_hamming_weight(a, q, m) == wt);
        CHECK(q_weight(a, q, m) == qw);
      }
    }
  }
}

TEST_CASE("negation identity for digit weights") {
  // wt(n - a) = m - wt(a) + (interior digits of a), i.e. m minus the
  // number of digits of a equal to q - 1.
  const std::pair<int, int> cases[] = {{2, 4}, {2, 6}, {3, 3}, {3, 4}, {4, 2}, {5, 2}};
  for (auto [q, m] : cases) {
    long n = pow_long(q, m) - 1;
    for (long a = 0; a < n; ++a) {
      int lhs = digit_hamming_weight(n - a, q, m);
      int rhs = m - digit_hamming_weight(a, q, m) + interior_digit_count(a, q, m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("negated weight classes split by interior digit count") {
  // Among the values of digit weight i, exactly C(m,i) C(i,j) (q-2)^j have
  // a negation of digit weight m - i + j.
  const std::pair<int, int> cases[] = {{3, 3}, {4, 2}, {5, 2}, {2, 5}, {3, 4}};
  for (auto [q, m] : cases) {
    long n = pow_long(q, m) - 1;
    for (int i = 0; i <= m; ++i) {
      std::vector<long> histogram(m + 1, 0);
      long class_size = 0;
      for (long a = 0; a <= n; ++a) {
        if (digit_hamming_weight(a, q, m) != i) continue;
        ++class_size;
        histogram[digit_hamming_weight(n - a, q, m)]++;
      }
      CHECK(class_size == binom(m, i) * pow_long(q - 1, i));
      for (int j = 0; j <= i; ++j)
        CHECK(histogram[m - i + j] == binom(m, i) * binom(i, j) * pow_long(q - 2, j));
    }
  }
}

TEST_CASE("low-weight index sets avoid their negations") {
  const std::pair<int, int> cases[] = {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 4}};
  for (auto [q, m] : cases) {
    for (int t = 1; t <= (m + 1) / 2 - 1; ++t) {
      IndexSet s = index_set(q, m, t);
      CHECK(intersect_sets(s, negate_set(s)).size() == 0);
    }
  }
  // One step higher the intersection becomes nonempty.
  IndexSet s = index_set(2, 4, 2);
  CHECK(intersect_sets(s, negate_set(s)).size() > 0);
}

TEST_CASE("set algebra on defining sets") {
  IndexSet s(15, 2, 4, {3, 1, 2});
  CHECK(s.members() == std::vector<long>{1, 2, 3});  // sorted and deduplicated
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));

  IndexSet i1 = index_set(2, 4, 1);
  CHECK(negate_set(negate_set(i1)).members() == i1.members());
  CHECK(complement_set(complement_set(i1)).members() == i1.members());
  CHECK(negate_set(i1).members() == std::vector<long>{7, 11, 13, 14});
  CHECK(complement_set(i1).size() == 15 - i1.size());
  CHECK(union_sets(i1, negate_set(i1)).size() == 8);
  CHECK(intersect_sets(i1, i1).members() == i1.members());

  // The extension marker n is reserved: arithmetic refuses to touch it.
  IndexSet marked(15, 2, 4, {0, 15});
  CHECK(marked.has_extension_marker());
  CHECK_THROWS_AS(negate_set(marked), std::invalid_argument);
  CHECK_THROWS_AS(complement_set(marked), std::invalid_argument);
}

TEST_CASE("digit-wise partial order") {
  // 4 = (1,1) base 3 sits below 13 = (1,1,1); 5 = (2,1) does not sit below
  // 7 = (1,2) because of the low digit.
  CHECK(p_adic_leq(4, 13, 3, 3));
  CHECK_FALSE(p_adic_leq(5, 7, 3, 2));
  CHECK(p_adic_leq(0, 7, 3, 2));
  for (long r = 0; r < 32; ++r)
    for (long s = 0; s < 32; ++s)
      CHECK(p_adic_leq(r, s, 2, 5) == ((r & s) == r));
  for (long r = 0; r < 27; ++r)
    for (long s = 0; s < 27; ++s) {
      if (p_adic_leq(r, s, 3, 3)) CHECK(r <= s);
      if (p_adic_leq(r, s, 3, 3) && p_adic_leq(s, r, 3, 3)) CHECK(r == s);
    }
}

TEST_CASE("union-of-cosets recognition") {
  CosetStructure cs15 = all_cosets(15, 2);
  CHECK(is_union_of_cosets(index_set(2, 4, 1), cs15));
  CHECK(is_union_of_cosets(index_set(2, 4, 2), cs15));
  CHECK_FALSE(is_union_of_cosets(IndexSet(15, 2, 4, {1}), cs15));
  CosetStructure cs26 = all_cosets(26, 3);
  CHECK(is_union_of_cosets(index_set(3, 3, 2), cs26));
  CHECK_FALSE(is_union_of_cosets(IndexSet(26, 3, 3, {1, 2, 3}), cs26));
}
