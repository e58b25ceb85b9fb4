#include "grm/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grm {
namespace {

long pow_long(int q, int m) {
  long r = 1;
  for (int i = 0; i < m; ++i) r *= q;
  return r;
}

void check_grm_args(int q, int m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  prime_power_decompose(q);  // validates q
}

}  // namespace

std::pair<std::shared_ptr<const FieldTable>, std::shared_ptr<const FieldTable>>
make_field_pair(int q, int m, uint64_t table_budget) {
  auto [p, s] = prime_power_decompose(q);
  auto base = FieldTable::make(p, s, table_budget);
  auto ext = FieldTable::make(p, s * m, table_budget);
  return {std::move(base), std::move(ext)};
}

CyclicCode cyclic_code_from_defining_set(std::shared_ptr<const FieldTable> base,
                                         std::shared_ptr<const FieldTable> ext,
                                         long n, IndexSet defining_set,
                                         std::string family,
                                         std::map<std::string, long> params) {
  if (!base || !ext) throw std::invalid_argument("missing field tables");
  if (base->characteristic() != ext->characteristic() ||
      ext->degree() % base->degree() != 0)
    throw std::invalid_argument("extension field does not contain the base field");
  if (n < 1 || ext->group_order() % n != 0)
    throw std::invalid_argument("n must divide the extension group order");
  if (defining_set.n() != n) throw std::invalid_argument("defining set length mismatch");
  if (defining_set.has_extension_marker())
    throw std::invalid_argument("defining set of a cyclic code cannot hold the marker");

  CyclicCode c;
  c.q = static_cast<int>(base->size());
  c.n = n;
  c.m = multiplicative_order(c.q, n);
  c.base = std::move(base);
  c.ext = std::move(ext);
  c.family = std::move(family);
  c.params = std::move(params);

  CosetStructure cs = all_cosets(n, c.q);
  if (!is_union_of_cosets(defining_set, cs))
    throw std::invalid_argument("defining set is not a union of q-cosets");

  SubfieldEmbedding emb(c.base, c.ext);
  Polynomial g = Polynomial::one(c.base);
  for (long leader : cs.leaders)
    if (defining_set.contains(leader))
      g = g * minimal_polynomial(leader, emb, n);

  if (g.degree() != static_cast<long>(defining_set.size()))
    throw std::logic_error("generator degree does not match defining set size");
  if (!(Polynomial::xn_minus_1(c.base, n) % g).is_zero())
    throw std::logic_error("generator does not divide x^n - 1");

  c.defining_set = std::move(defining_set);
  c.generator = std::move(g);
  return c;
}

CyclicCode make_grm(int q, int m, int h, uint64_t table_budget) {
  check_grm_args(q, m);
  if (h < 1 || h > m) throw std::invalid_argument("need 1 <= h <= m");
  auto [base, ext] = make_field_pair(q, m, table_budget);
  long n = pow_long(q, m) - 1;
  CyclicCode c = cyclic_code_from_defining_set(std::move(base), std::move(ext), n,
                                               index_set(q, m, h), "grm", {{"h", h}});
  c.flagged_trivial = (h == m);  // defining set is everything but 0: dimension 1
  return c;
}

CyclicCode make_pgrm(int q, int m, int ell, uint64_t table_budget) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  prime_power_decompose(q);
  if (ell < 0 || ell > m * (q - 1) - 1)
    throw std::invalid_argument("need 0 <= ell <= m(q-1) - 1");
  auto [base, ext] = make_field_pair(q, m, table_budget);
  long n = pow_long(q, m) - 1;
  int bound = (q - 1) * m - ell;
  std::vector<long> members;
  for (long a = 1; a <= n - 1; ++a)
    if (q_weight(a, q, m) < bound) members.push_back(a);
  return cyclic_code_from_defining_set(std::move(base), std::move(ext), n,
                                       IndexSet(n, q, m, std::move(members)), "pgrm",
                                       {{"ell", ell}});
}

CyclicCode make_bch(int q, long n, int delta, long b, uint64_t table_budget) {
  prime_power_decompose(q);
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (std::gcd(n, static_cast<long>(q)) != 1)
    throw std::invalid_argument("need gcd(n, q) = 1");
  if (delta < 2 || delta > n) throw std::invalid_argument("need 2 <= delta <= n");
  int m = multiplicative_order(q, n);
  auto [p, s] = prime_power_decompose(q);
  auto base = FieldTable::make(p, s, table_budget);
  auto ext = FieldTable::make(p, s * m, table_budget);

  std::vector<long> members;
  for (long j = 0; j <= delta - 2; ++j) {
    long rep = ((b + j) % n + n) % n;
    for (long a : coset_of(rep, n, q)) members.push_back(a);
  }
  CyclicCode c = cyclic_code_from_defining_set(std::move(base), std::move(ext), n,
                                               IndexSet(n, q, m, std::move(members)), "bch",
                                               {{"delta", delta}, {"b", b}});
  return c;
}

CyclicCode make_reversible_grm(int q, int m, int h, uint64_t table_budget) {
  check_grm_args(q, m);
  int half_up = (m + 1) / 2;
  if (h < 1 || h > half_up)
    throw std::invalid_argument("need 1 <= h <= ceil(m/2)");

  CyclicCode grm = make_grm(q, m, h, table_budget);
  IndexSet zero(grm.n, q, m, {0});
  IndexSet t = union_sets(zero, union_sets(grm.defining_set, negate_set(grm.defining_set)));
  if (static_cast<long>(t.size()) >= grm.n)
    throw std::invalid_argument("reversible construction has dimension <= 0 here");

  CyclicCode c = cyclic_code_from_defining_set(grm.base, grm.ext, grm.n, std::move(t),
                                               "reversible", {{"h", h}});

  // Cross-check the generator against its closed form.
  Polynomial x_minus_1(grm.base, {grm.base->neg(1), 1});
  Polynomial expected = x_minus_1 * lcm(grm.generator, reciprocal(grm.generator));
  if (c.generator != expected.monic())
    throw std::logic_error("reversible generator disagrees with (x-1)*lcm(g, g*)");
  return c;
}

CyclicCode dual_code(const CyclicCode& c) {
  CyclicCode d = cyclic_code_from_defining_set(
      c.base, c.ext, c.n, negate_set(complement_set(c.defining_set)), "dual", c.params);
  d.parent_family = c.family;
  d.flagged_trivial = false;
  return d;
}

CyclicCode complement_code(const CyclicCode& c) {
  CyclicCode k = cyclic_code_from_defining_set(c.base, c.ext, c.n,
                                               complement_set(c.defining_set), "complement",
                                               c.params);
  k.parent_family = c.family;

  // Same code as the check-polynomial construction (x^n - 1) / g.
  Polynomial check = (Polynomial::xn_minus_1(c.base, c.n) / c.generator).monic();
  if (k.generator != check)
    throw std::logic_error("complement generator disagrees with (x^n - 1)/g");
  return k;
}

ExtendedCode extend_code(const CyclicCode& c) {
  std::vector<long> members(c.defining_set.members().begin(), c.defining_set.members().end());
  if (c.defining_set.contains(0)) members.push_back(c.n);  // marker
  members.push_back(0);
  ExtendedCode e;
  e.parent = c;
  e.defining_set = IndexSet(c.n, c.q, c.m, std::move(members));
  return e;
}

bool is_subcode(const CyclicCode& sub, const CyclicCode& super) {
  if (sub.q != super.q || sub.n != super.n)
    throw std::invalid_argument("subcode test requires equal q and n");
  if (!sub.ext->same_field(*super.ext))
    throw std::invalid_argument("subcode test requires the same extension field");

  const auto& ts = super.defining_set.members();
  bool by_sets = std::includes(sub.defining_set.members().begin(),
                               sub.defining_set.members().end(), ts.begin(), ts.end());
  bool by_generators = (sub.generator % super.generator).is_zero();
  if (by_sets != by_generators)
    throw std::logic_error("defining-set and generator subcode criteria disagree");
  return by_sets;
}

std::vector<std::vector<uint8_t>> generator_matrix(const CyclicCode& c) {
  if (c.q > 256) throw std::invalid_argument("matrix form supported only for q <= 256");
  long k = c.dimension();
  std::vector<std::vector<uint8_t>> g(k, std::vector<uint8_t>(c.n, 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j <= c.generator.degree(); ++j)
      g[i][i + j] = static_cast<uint8_t>(c.generator.coeff(j));
  return g;
}

std::vector<std::vector<uint8_t>> generator_matrix(const ExtendedCode& c) {
  auto g = generator_matrix(c.parent);
  const auto& f = *c.parent.base;
  for (auto& row : g) {
    uint32_t sum = 0;
    for (uint8_t v : row) sum = f.add(sum, v);
    row.push_back(static_cast<uint8_t>(f.neg(sum)));
  }
  return g;
}

}  // namespace grm
