#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <vector>

#include "grm/errors.hpp"
#include "grm/field.hpp"

using namespace grm;

namespace {

// Reference multiplication in GF(2)[x] mod a given polynomial, written
// independently of the library's table machinery.
uint32_t slow_mul_gf2(uint32_t a, uint32_t b, const std::vector<int>& mod) {
  int k = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      prod[i + j] ^= ((a >> i) & 1) & ((b >> j) & 1);
  for (int d = 2 * k - 1; d >= k; --d) {
    if (!prod[d]) continue;
    prod[d] = 0;
    for (int j = 0; j < k; ++j) prod[d - k + j] ^= mod[j];
  }
  uint32_t enc = 0;
  for (int i = 0; i < k; ++i) enc |= static_cast<uint32_t>(prod[i]) << i;
  return enc;
}

}  // namespace

TEST_CASE("canonical moduli are the classical ones") {
  auto f16 = FieldTable::make(2, 4);
  CHECK(f16->modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1
  auto f4 = FieldTable::make(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  auto f27 = FieldTable::make(3, 3);
  CHECK(f27->size() == 27);
  CHECK(f27->modulus().size() == 4);
  CHECK(f27->modulus().back() == 1);
}

TEST_CASE("GF(16) multiplication matches a direct polynomial model") {
  auto f = FieldTable::make(2, 4);
  for (uint32_t a = 0; a < 16; ++a)
    for (uint32_t b = 0; b < 16; ++b) {
      CHECK(f->mul(a, b) == slow_mul_gf2(a, b, f->modulus()));
      CHECK(f->add(a, b) == (a ^ b));
    }
}

TEST_CASE("GF(4) small products") {
  auto f = FieldTable::make(2, 2);
  // 2 encodes x, 3 encodes x + 1; x^2 = x + 1 under x^2 + x + 1.
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->inv(2) == 3);
}

TEST_CASE("GF(16) powers of the generator") {
  auto f = FieldTable::make(2, 4);
  CHECK(f->generator() == 2);   // class of x
  CHECK(f->pow(2, 4) == 3);     // x^4 = x + 1
  CHECK(f->pow(2, 15) == 1);
  CHECK(f->exp(1) == 2);
  CHECK(f->log(3) == 4);
}

TEST_CASE("multiplicative group of GF(27) is cyclic of order 26") {
  auto f = FieldTable::make(3, 3);
  uint32_t g = f->generator();
  CHECK(f->pow(g, 26) == 1);
  CHECK(f->pow(g, 13) != 1);
  CHECK(f->pow(g, 2) != 1);
  // Every nonzero element appears exactly once among the generator powers.
  std::vector<int> seen(27, 0);
  for (int e = 0; e < 26; ++e) seen[f->exp(e)]++;
  CHECK(seen[0] == 0);
  for (int v = 1; v < 27; ++v) CHECK(seen[v] == 1);
}

TEST_CASE("field axioms hold on full sweeps of GF(27)") {
  auto f = FieldTable::make(3, 3);
  for (uint32_t a = 0; a < 27; ++a) {
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) {
      CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, 26) == 1);  // Fermat
    }
    for (uint32_t b = 0; b < 27; ++b) {
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (uint32_t c = 0; c < 27; ++c)
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
}

TEST_CASE("from_int reduces residues into the prime subfield") {
  auto f = FieldTable::make(3, 3);
  CHECK(f->from_int(0) == 0);
  CHECK(f->from_int(1) == 1);
  CHECK(f->from_int(5) == 2);
  CHECK(f->from_int(-1) == 2);
  auto f2 = FieldTable::make(2, 1);
  CHECK(f2->from_int(7) == 1);
  CHECK(f2->from_int(-4) == 0);
}

TEST_CASE("table budget and parameter validation") {
  CHECK_THROWS_AS(FieldTable::make(2, 25, 1u << 20), budget_error);
  CHECK_THROWS_AS(FieldTable::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldTable::make(2, 0), std::invalid_argument);
}

TEST_CASE("make_with_modulus rejects non-primitive polynomials") {
  // x^4 + x^3 + x^2 + x + 1 divides x^5 - 1, so the class of x has order 5.
  CHECK_THROWS_AS(FieldTable::make_with_modulus(2, {1, 1, 1, 1, 1}),
                  std::invalid_argument);
  // x^2 + 1 = (x+1)^2 over GF(2) is not even irreducible.
  CHECK_THROWS_AS(FieldTable::make_with_modulus(2, {1, 0, 1}),
                  std::invalid_argument);
  // Coefficients out of range.
  CHECK_THROWS_AS(FieldTable::make_with_modulus(3, {3, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("alternate primitive modulus gives the same field up to tables") {
  // x^4 + x^3 + 1 is the other degree-4 primitive polynomial over GF(2).
  auto f = FieldTable::make_with_modulus(2, {1, 0, 0, 1, 1});
  CHECK(f->size() == 16);
  CHECK(f->pow(f->generator(), 15) == 1);
  CHECK(f->pow(f->generator(), 5) != 1);
  CHECK(f->pow(f->generator(), 3) != 1);
  CHECK_FALSE(f->same_field(*FieldTable::make(2, 4)));
}

TEST_CASE("subfield embedding GF(4) -> GF(16) is a ring homomorphism") {
  auto base = FieldTable::make(2, 2);
  auto ext = FieldTable::make(2, 4);
  SubfieldEmbedding emb(base, ext);
  CHECK(emb.embed(0) == 0);
  CHECK(emb.embed(1) == 1);
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 4; ++b) {
      CHECK(emb.embed(base->add(a, b)) == ext->add(emb.embed(a), emb.embed(b)));
      CHECK(emb.embed(base->mul(a, b)) == ext->mul(emb.embed(a), emb.embed(b)));
    }
  // The image of the GF(4) generator has order 3 inside GF(16)*.
  uint32_t img = emb.embed(base->generator());
  CHECK(ext->pow(img, 3) == 1);
  CHECK(img != 1);
  // lift round-trips exactly on the embedded subfield.
  int lifted = 0;
  for (uint32_t v = 0; v < 16; ++v) {
    auto back = emb.lift(v);
    if (back) {
      ++lifted;
      CHECK(emb.embed(*back) == v);
    }
  }
  CHECK(lifted == 4);
}

TEST_CASE("subfield embedding GF(3) -> GF(27) fixes the prime field") {
  auto base = FieldTable::make(3, 1);
  auto ext = FieldTable::make(3, 3);
  SubfieldEmbedding emb(base, ext);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      CHECK(emb.embed(base->add(a, b)) == ext->add(emb.embed(a), emb.embed(b)));
      CHECK(emb.embed(base->mul(a, b)) == ext->mul(emb.embed(a), emb.embed(b)));
    }
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(2) == std::pair<int, int>{2, 1});
  CHECK(prime_power_decompose(27) == std::pair<int, int>{3, 3});
  CHECK(prime_power_decompose(1024) == std::pair<int, int>{2, 10});
  CHECK_THROWS_AS(prime_power_decompose(6), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_decompose(1), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_decompose(0), std::invalid_argument);
}
