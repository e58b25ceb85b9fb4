#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <vector>

#include "grm/analysis.hpp"
#include "grm/code.hpp"
#include "grm/cyclotomic.hpp"
#include "grm/polynomial.hpp"

using namespace grm;

namespace {

// Message-space enumeration straight off the generator matrix; quadratic
// and slow on purpose, used only as an oracle for tiny codes.
std::vector<long> slow_weights(const std::vector<std::vector<uint8_t>>& gen,
                               const FieldTable& f, long n) {
  long k = static_cast<long>(gen.size());
  std::vector<long> hist(n + 1, 0);
  std::vector<uint32_t> msg(k, 0);
  while (true) {
    std::vector<uint32_t> word(n, 0);
    for (long i = 0; i < k; ++i)
      if (msg[i])
        for (long j = 0; j < n; ++j)
          word[j] = f.add(word[j], f.mul(msg[i], gen[i][j]));
    long w = 0;
    for (long j = 0; j < n; ++j)
      if (word[j]) ++w;
    hist[w]++;
    long pos = 0;
    while (pos < k && msg[pos] + 1 == f.size()) msg[pos++] = 0;
    if (pos == k) break;
    msg[pos]++;
  }
  return hist;
}

long min_weight(const std::vector<long>& hist) {
  for (long w = 1; w < static_cast<long>(hist.size()); ++w)
    if (hist[w]) return w;
  return 0;
}

}  // namespace

TEST_CASE("binary length-15 base instance") {
  CyclicCode c = make_grm(2, 4, 1);
  CHECK(c.n == 15);
  CHECK(c.dimension() == 11);
  CHECK(c.family == "grm");
  CHECK(c.params.at("h") == 1);
  CHECK_FALSE(c.flagged_trivial);
  CHECK(c.defining_set.members() == std::vector<long>{1, 2, 4, 8});
  CHECK(c.generator.serialize() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(c.base->size() == 2);
  CHECK(c.ext->size() == 16);
  CHECK(c.m == 4);
}

TEST_CASE("punctured family instances") {
  CyclicCode c = make_pgrm(2, 4, 1);
  CHECK(c.n == 15);
  CHECK(c.dimension() == 5);
  CHECK(c.family == "pgrm");
  CHECK(c.params.at("ell") == 1);
  // Its 32 codewords form the classical {0, 7, 8, 15} weight pattern.
  auto hist = slow_weights(generator_matrix(c), *c.base, c.n);
  CHECK(hist[0] == 1);
  CHECK(hist[7] == 15);
  CHECK(hist[8] == 15);
  CHECK(hist[15] == 1);
  CHECK(min_weight(hist) == 7);

  // Level 0 leaves only the repetition-style code.
  CHECK(make_pgrm(3, 2, 0).dimension() == 1);
  CHECK(make_pgrm(2, 4, 0).dimension() == 1);
  // The defining set never includes exponent 0.
  CHECK_FALSE(make_pgrm(3, 2, 2).defining_set.contains(0));
}

TEST_CASE("bch constructions") {
  CyclicCode c = make_bch(2, 15, 5, 1);
  CHECK(c.dimension() == 7);
  CHECK(c.defining_set.members() ==
        std::vector<long>{1, 2, 3, 4, 6, 8, 9, 12});
  CHECK(c.generator.degree() == 8);
  CHECK(c.family == "bch");
  CHECK(c.params.at("delta") == 5);
  CHECK(c.params.at("b") == 1);

  // Narrow-sense length-26 instance coincides with the h = 1 code.
  CyclicCode b = make_bch(3, 26, 4, 1);
  CyclicCode g = make_grm(3, 3, 1);
  CHECK(b.defining_set.members() == g.defining_set.members());
  CHECK(b.generator == g.generator);
}

TEST_CASE("construction argument validation") {
  CHECK_THROWS_AS(make_grm(2, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_grm(2, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_grm(6, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_pgrm(2, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_pgrm(2, 4, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_bch(2, 15, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_bch(2, 15, 16, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_bch(2, 14, 3, 1), std::invalid_argument);  // gcd(14,2) != 1
  CHECK_THROWS_AS(
      cyclic_code_from_defining_set(FieldTable::make(2, 1), FieldTable::make(2, 4),
                                    15, IndexSet(15, 2, 4, {1})),
      std::invalid_argument);
}

TEST_CASE("trivial top level is flagged") {
  CyclicCode c = make_grm(3, 2, 2);
  CHECK(c.flagged_trivial);
  CHECK(c.dimension() == 1);
  // Generator is 1 + x + ... + x^(n-1).
  CHECK(c.generator.degree() == c.n - 1);
  for (long i = 0; i < c.n; ++i) CHECK(c.generator.coeff(i) == 1);
}

TEST_CASE("dual and complement") {
  CyclicCode c = make_grm(3, 3, 1);
  CyclicCode d = dual_code(c);
  CHECK(d.family == "dual");
  CHECK(d.parent_family == "grm");
  CHECK(d.params.at("h") == 1);
  CHECK(d.dimension() == 6);
  CyclicCode dd = dual_code(d);
  CHECK(dd.defining_set.members() == c.defining_set.members());
  CHECK(dd.generator == c.generator);

  CyclicCode k = complement_code(c);
  CHECK(k.family == "complement");
  CHECK(k.dimension() == d.dimension());
  // The dual's defining set is the negated complement set.
  CHECK(negate_set(k.defining_set).members() == d.defining_set.members());
  // Check polynomial: g * complement generator spans x^n - 1.
  CHECK((c.generator * k.generator).monic() ==
        Polynomial::xn_minus_1(c.base, c.n));

  CyclicCode e = make_bch(2, 15, 5, 1);
  CHECK(dual_code(dual_code(e)).defining_set.members() ==
        e.defining_set.members());
  CHECK(dual_code(e).dimension() == 15 - e.dimension());
}

TEST_CASE("extension appends the parity root") {
  CyclicCode c = make_grm(2, 4, 1);
  ExtendedCode ec = extend_code(c);
  CHECK(ec.length() == 16);
  CHECK(ec.dimension() == 11);
  CHECK(ec.defining_set.members() == std::vector<long>{0, 1, 2, 4, 8});
  CHECK_FALSE(ec.defining_set.has_extension_marker());
  // The classical [16, 11, 4] extension.
  auto hist = slow_weights(generator_matrix(ec), *c.base, ec.length());
  CHECK(min_weight(hist) == 4);
  long total = 0;
  for (long cnt : hist) total += cnt;
  CHECK(total == 2048);
  // Every extended word sums to zero across all coordinates.
  auto gen = generator_matrix(ec);
  for (const auto& row : gen) {
    uint32_t s = 0;
    for (uint8_t v : row) s = c.base->add(s, v);
    CHECK(s == 0);
  }
}

TEST_CASE("extending a code whose set already holds 0 uses the marker") {
  CyclicCode c = make_reversible_grm(2, 4, 1);
  CHECK(c.defining_set.contains(0));
  ExtendedCode ec = extend_code(c);
  CHECK(ec.defining_set.has_extension_marker());
  CHECK(ec.length() == 16);
  CHECK(ec.dimension() == c.dimension());
}

TEST_CASE("reversible construction") {
  CyclicCode c = make_reversible_grm(3, 3, 1);
  CHECK(c.family == "reversible");
  CHECK(c.n == 26);
  CHECK(c.dimension() == 13);
  CHECK(c.defining_set.contains(0));
  // Self-reciprocal generator; the root exponents close under negation.
  CHECK(reciprocal(c.generator) == c.generator);
  IndexSet t = c.defining_set;
  CHECK(negate_set(t).members() == t.members());
  // Reversal symmetry collapses dual and complement to the same set, which
  // is exactly the complementary-dual property.
  CyclicCode d = dual_code(c);
  CyclicCode k = complement_code(c);
  CHECK(d.defining_set.members() == k.defining_set.members());
  CHECK(gcd(c.generator, d.generator).degree() == 0);

  // Binary top-of-range parameters collapse to dimension zero.
  CHECK_THROWS_AS(make_reversible_grm(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_reversible_grm(2, 4, 2), std::invalid_argument);
}

TEST_CASE("reversible parameter range") {
  // h may reach ceil(m/2); beyond that the negated set floods everything.
  CHECK_THROWS_AS(make_reversible_grm(3, 4, 3), std::invalid_argument);
  CHECK(make_reversible_grm(3, 3, 2).dimension() > 0);
  CHECK(make_reversible_grm(5, 2, 1).dimension() == 9);
  CHECK(make_reversible_grm(4, 3, 2).dimension() == 8);
  CHECK(make_reversible_grm(2, 6, 2).dimension() == 20);
}

TEST_CASE("subcode lattice of the levels") {
  CHECK(is_subcode(make_grm(3, 3, 2), make_grm(3, 3, 1)));
  CHECK_FALSE(is_subcode(make_grm(3, 3, 1), make_grm(3, 3, 2)));
  CHECK(is_subcode(make_grm(2, 4, 2), make_grm(2, 4, 1)));
  // Length mismatch is rejected outright.
  CHECK_THROWS_AS(is_subcode(make_grm(2, 4, 1), make_grm(3, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("narrow-sense bch codes cover the family") {
  // Each level code is contained in the bch code whose designed distance
  // is the family lower bound; the two extreme levels coincide with it.
  // (Some small middle levels coincide too, which is fine.)
  const std::pair<int, int> cases[] = {{2, 4}, {3, 3}, {2, 5}, {2, 6}};
  for (auto [q, m] : cases) {
    for (int h = 1; h < m; ++h) {
      long qpow = 1;
      for (int i = 0; i <= h; ++i) qpow *= q;
      long delta = (qpow - 1) / (q - 1);
      CyclicCode g = make_grm(q, m, h);
      CyclicCode b = make_bch(q, g.n, static_cast<int>(delta), 1);
      CHECK(is_subcode(g, b));
      if (h == 1 || h == m - 1) CHECK(is_subcode(b, g));
    }
  }
  // A middle level where the cover is strictly bigger.
  CHECK_FALSE(is_subcode(make_bch(2, 63, 7, 1), make_grm(2, 6, 2)));
  // Strict middle level: the bch code is genuinely bigger.
  CyclicCode g = make_grm(3, 4, 2);
  CyclicCode b = make_bch(3, 80, 13, 1);
  CHECK(is_subcode(g, b));
  CHECK_FALSE(is_subcode(b, g));
  CHECK(b.dimension() > g.dimension());
}

TEST_CASE("punctured codes sit inside the matching level") {
  // pgrm(q, m, (m-h)(q-1) - 1) is a subcode of grm(q, m, h).
  CyclicCode p = make_pgrm(3, 3, 3);
  CyclicCode g = make_grm(3, 3, 1);
  CHECK(is_subcode(p, g));
  CHECK_FALSE(is_subcode(g, p));
  CHECK(p.dimension() == 17);

  // Over GF(2) the two families coincide level by level.
  CyclicCode p2 = make_pgrm(2, 4, 1);
  CyclicCode g2 = make_grm(2, 4, 2);
  CHECK(is_subcode(p2, g2));
  CHECK(is_subcode(g2, p2));
}

TEST_CASE("duals land strictly inside the mirrored level") {
  const std::tuple<int, int, int> cases[] = {{3, 3, 1}, {2, 4, 1}, {2, 5, 2}, {4, 3, 1}};
  for (auto [q, m, h] : cases) {
    CyclicCode d = dual_code(make_grm(q, m, h));
    CyclicCode g = make_grm(q, m, m - 1 - h);
    CHECK(is_subcode(d, g));
    CHECK_FALSE(is_subcode(g, d));
  }
  // Over GF(2) the dual's defining set is exactly {0} plus the mirror level.
  const std::pair<int, int> binary_cases[] = {{4, 1}, {5, 2}, {4, 2}};
  for (auto [m, h] : binary_cases) {
    CyclicCode d = dual_code(make_grm(2, m, h));
    long n = (1L << m) - 1;
    IndexSet expect =
        union_sets(IndexSet(n, 2, m, {0}), index_set(2, m, m - 1 - h));
    CHECK(d.defining_set.members() == expect.members());
  }
}

TEST_CASE("dual of a punctured code is the complementary level with 0") {
  const std::tuple<int, int, int> cases[] = {
      {2, 4, 1}, {2, 4, 0}, {3, 2, 2}, {3, 3, 3}, {4, 2, 1}};
  for (auto [q, m, ell] : cases) {
    CyclicCode d = dual_code(make_pgrm(q, m, ell));
    int mirrored = m * (q - 1) - 1 - ell;
    CyclicCode p = make_pgrm(q, m, mirrored);
    IndexSet expect = union_sets(IndexSet(p.n, q, m, {0}), p.defining_set);
    CHECK(d.defining_set.members() == expect.members());
  }
}

TEST_CASE("generator matrices have full rank") {
  for (const CyclicCode& c : {make_grm(3, 3, 1), make_bch(2, 15, 5, 1),
                              make_reversible_grm(3, 3, 1)}) {
    auto gen = generator_matrix(c);
    CHECK(static_cast<long>(gen.size()) == c.dimension());
    auto kernel = null_space(gen, *c.base);
    CHECK(static_cast<long>(kernel.size()) == c.n - c.dimension());
  }
}
