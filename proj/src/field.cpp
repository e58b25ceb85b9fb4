#include "grm/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grm {
namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomial arithmetic over GF(p) used only while testing candidate
// defining polynomials, before any field table exists.
std::vector<int> pmul_mod(const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& f, int p) {
  std::vector<int> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // reduce by monic f of degree k
  int k = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(r.size()) - 1; d >= k; --d) {
    int c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (int j = 0; j < k; ++j)
      r[d - k + j] = ((r[d - k + j] - c * f[j]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

std::vector<int> ppow_mod(std::vector<int> base, long long e,
                          const std::vector<int>& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  std::vector<int> acc(k, 0);
  acc[0] = 1;
  while (e > 0) {
    if (e & 1) acc = pmul_mod(acc, base, f, p);
    base = pmul_mod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

bool is_one(const std::vector<int>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i]) return false;
  return true;
}

// A monic f with f(0) != 0 is primitive iff the class of x has
// multiplicative order p^k - 1 in GF(p)[x]/(f); that order also forces f
// to be irreducible.
bool is_primitive_poly(const std::vector<int>& f, int p,
                       const std::vector<long long>& factors_of_order) {
  if (f[0] == 0) return false;
  int k = static_cast<int>(f.size()) - 1;
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  order -= 1;
  std::vector<int> x(k, 0);
  if (k == 1) {
    x[0] = ((-f[0]) % p + p) % p;  // class of x is the root itself
  } else {
    x[1] = 1;
  }
  if (!is_one(ppow_mod(x, order, f, p))) return false;
  for (long long r : factors_of_order)
    if (is_one(ppow_mod(x, order / r, f, p))) return false;
  return true;
}

}  // namespace

std::shared_ptr<const FieldTable> FieldTable::make(int p, int k, uint64_t table_budget) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be at least 1");
  uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<uint64_t>(p);
    if (size > table_budget)
      throw budget_error("field table budget exceeded: p^k > " + std::to_string(table_budget));
  }
  auto factors = prime_factors(static_cast<long long>(size) - 1);

  // Candidates in ascending order of the coefficient tuple read as a
  // base-p integer; the first primitive one is the canonical choice.
  std::vector<int> f(k + 1, 0);
  f[k] = 1;
  for (uint64_t v = 1; v < size; ++v) {
    uint64_t t = v;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (f[0] == 0) continue;
    if (size == 2) {
      // GF(2): the only candidate x+1 is primitive (trivial group).
      return build(p, f, table_budget, true);
    }
    if (is_primitive_poly(f, p, factors)) return build(p, f, table_budget, true);
  }
  throw std::logic_error("no primitive polynomial found (impossible)");
}

std::shared_ptr<const FieldTable> FieldTable::make_with_modulus(int p, std::vector<int> modulus,
                                                                uint64_t table_budget) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  int k = static_cast<int>(modulus.size()) - 1;
  uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<uint64_t>(p);
    if (size > table_budget)
      throw budget_error("field table budget exceeded: p^k > " + std::to_string(table_budget));
  }
  if (size > 2) {
    auto factors = prime_factors(static_cast<long long>(size) - 1);
    if (!is_primitive_poly(modulus, p, factors))
      throw std::invalid_argument("modulus is not a primitive polynomial");
  } else if (modulus[0] == 0) {
    throw std::invalid_argument("modulus is not a primitive polynomial");
  }
  return build(p, std::move(modulus), table_budget, true);
}

std::shared_ptr<const FieldTable> FieldTable::build(int p, std::vector<int> modulus,
                                                    uint64_t /*table_budget*/, bool /*checked*/) {
  auto ft = std::shared_ptr<FieldTable>(new FieldTable());
  ft->p_ = p;
  ft->k_ = static_cast<int>(modulus.size()) - 1;
  uint64_t size = 1;
  for (int i = 0; i < ft->k_; ++i) size *= static_cast<uint64_t>(p);
  ft->size_ = static_cast<uint32_t>(size);
  ft->modulus_ = std::move(modulus);

  // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1}); precompute t times that
  // encoding for every prime-field scalar t so reduction is table-driven.
  uint32_t red = 0, pw = 1;
  for (int i = 0; i < ft->k_; ++i) {
    red += static_cast<uint32_t>(((p - ft->modulus_[i]) % p)) * pw;
    pw *= p;
  }
  ft->xk_multiples_.resize(p);
  for (int t = 0; t < p; ++t) {
    uint32_t enc = 0, w = 1, r = red;
    for (int i = 0; i < ft->k_; ++i) {
      enc += static_cast<uint32_t>((static_cast<uint64_t>(r % p) * t) % p) * w;
      r /= p;
      w *= p;
    }
    ft->xk_multiples_[t] = enc;
  }

  ft->exp_table_.assign(ft->size_ - 1, 0);
  ft->log_table_.assign(ft->size_, -1);
  uint32_t cur = 1;
  for (uint32_t e = 0; e < ft->size_ - 1; ++e) {
    if (ft->log_table_[cur] != -1)
      throw std::logic_error("defining polynomial is not primitive (cycle too short)");
    ft->exp_table_[e] = cur;
    ft->log_table_[cur] = static_cast<int32_t>(e);
    // multiply by x: shift digits, fold the overflow digit back in
    uint64_t val = static_cast<uint64_t>(cur) * p;
    uint32_t top = static_cast<uint32_t>(val / ft->size_);
    cur = ft->add(static_cast<uint32_t>(val % ft->size_), ft->xk_multiples_[top]);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch in field table build");
  return ft;
}

uint32_t FieldTable::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_) + (b % p_)) % p_ * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

uint32_t FieldTable::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - (a % p_)) % p_) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

uint32_t FieldTable::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldTable::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t e = static_cast<uint64_t>(log_table_[a]) + log_table_[b];
  return exp_table_[e % group_order()];
}

uint32_t FieldTable::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  uint32_t ord = group_order();
  return exp_table_[(ord - log_table_[a]) % ord];
}

uint32_t FieldTable::pow(uint32_t a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("negative power of zero");
  }
  long long ord = group_order();
  long long r = ((e % ord) * (log_table_[a] % ord)) % ord;
  if (r < 0) r += ord;
  return exp_table_[r];
}

uint32_t FieldTable::exp(long long e) const {
  long long ord = group_order();
  long long r = e % ord;
  if (r < 0) r += ord;
  return exp_table_[r];
}

long FieldTable::log(uint32_t a) const {
  if (a == 0) throw std::domain_error("log of zero");
  if (a >= size_) throw std::invalid_argument("element out of range");
  return log_table_[a];
}

uint32_t FieldTable::from_int(long long c) const {
  long long r = c % p_;
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

std::pair<int, int> prime_power_decompose(long long q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  long long p = q;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int s = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++s;
  }
  if (t != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), s};
}

SubfieldEmbedding::SubfieldEmbedding(std::shared_ptr<const FieldTable> base,
                                     std::shared_ptr<const FieldTable> ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
  if (base_->characteristic() != ext_->characteristic())
    throw std::invalid_argument("subfield embedding requires equal characteristic");
  int s = base_->degree();
  if (ext_->degree() % s != 0)
    throw std::invalid_argument("base degree must divide extension degree");

  const int p = base_->characteristic();
  const uint32_t q = base_->size();

  // Roots of the base defining polynomial inside the extension lie in the
  // unique subfield of size q: the cyclic group of order q-1 plus zero.
  uint32_t z = 0;
  bool found = false;
  if (s == 1) {
    z = ext_->from_int(p - base_->modulus()[0]);  // the root of x + c0
    found = true;
  } else {
    uint64_t step = ext_->group_order() / (q - 1);
    std::vector<uint32_t> candidates;
    for (uint32_t j = 0; j < q - 1; ++j)
      candidates.push_back(ext_->exp(static_cast<long long>(j * step)));
    std::sort(candidates.begin(), candidates.end());
    for (uint32_t c : candidates) {
      // evaluate the base modulus at c, coefficients via the prime subfield
      uint32_t acc = 0;
      for (int i = s; i >= 0; --i)
        acc = ext_->add(ext_->mul(acc, c), ext_->from_int(base_->modulus()[i]));
      if (acc == 0) {
        z = c;
        found = true;
        break;
      }
    }
  }
  if (!found) throw std::logic_error("no root of base modulus in extension field");

  // Map digit vectors through powers of the chosen root.
  std::vector<uint32_t> zpow(s, 1);
  for (int i = 1; i < s; ++i) zpow[i] = ext_->mul(zpow[i - 1], z);
  fwd_.assign(q, 0);
  back_.assign(ext_->size(), -1);
  for (uint32_t a = 0; a < q; ++a) {
    uint32_t t = a, img = 0;
    for (int i = 0; i < s; ++i) {
      uint32_t d = t % p;
      t /= p;
      if (d) img = ext_->add(img, ext_->mul(d, zpow[i]));
    }
    fwd_[a] = img;
    if (back_[img] != -1) throw std::logic_error("subfield embedding is not injective");
    back_[img] = static_cast<int32_t>(a);
  }

  // The digit map is a homomorphism exactly when z is a root of the base
  // modulus; verify on all pairs anyway to catch table bugs early.
  uint64_t limit = (q <= 512) ? q : 512;
  for (uint64_t a = 0; a < limit; ++a) {
    for (uint64_t b = 0; b < limit; ++b) {
      uint32_t ea = fwd_[a], eb = fwd_[b];
      if (fwd_[base_->add(a, b)] != ext_->add(ea, eb) ||
          fwd_[base_->mul(a, b)] != ext_->mul(ea, eb))
        throw std::logic_error("subfield embedding fails homomorphism check");
    }
  }
}

uint32_t SubfieldEmbedding::embed(uint32_t base_elem) const {
  if (base_elem >= fwd_.size()) throw std::invalid_argument("element out of range");
  return fwd_[base_elem];
}

std::optional<uint32_t> SubfieldEmbedding::lift(uint32_t ext_elem) const {
  if (ext_elem >= back_.size()) throw std::invalid_argument("element out of range");
  if (back_[ext_elem] < 0) return std::nullopt;
  return static_cast<uint32_t>(back_[ext_elem]);
}

}  // namespace grm
