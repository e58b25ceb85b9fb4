#include "grm/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grm {
namespace {

void check_n_q(long n, int q) {
  if (n < 1) throw std::invalid_argument("modulus n must be positive");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (std::gcd(n, static_cast<long>(q)) != 1)
    throw std::invalid_argument("q must be invertible mod n");
}

}  // namespace

std::vector<long> coset_of(long s, long n, int q) {
  check_n_q(n, q);
  if (s < 0 || s >= n) throw std::invalid_argument("coset representative out of range");
  std::vector<long> orbit;
  long cur = s;
  do {
    orbit.push_back(cur);
    cur = (cur * q) % n;
  } while (cur != s);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

CosetStructure all_cosets(long n, int q) {
  check_n_q(n, q);
  CosetStructure cs;
  cs.n = n;
  cs.q = q;
  cs.coset_index.assign(n, -1);
  for (long s = 0; s < n; ++s) {
    if (cs.coset_index[s] != -1) continue;
    int idx = static_cast<int>(cs.cosets.size());
    std::vector<long> orbit;
    long cur = s;
    do {
      orbit.push_back(cur);
      cs.coset_index[cur] = idx;
      cur = (cur * q) % n;
    } while (cur != s);
    std::sort(orbit.begin(), orbit.end());
    cs.leaders.push_back(s);  // s is smallest: all smaller values are already placed
    cs.cosets.push_back(std::move(orbit));
  }
  return cs;
}

int multiplicative_order(int q, long n) {
  check_n_q(n, q);
  if (n == 1) return 1;
  long cur = static_cast<long>(q) % n;
  int ord = 1;
  while (cur != 1 % n) {
    cur = (cur * q) % n;
    ++ord;
    if (ord > n) throw std::logic_error("order computation did not terminate");
  }
  return ord;
}

namespace {

void check_digit_args(long a, int q, int m) {
  if (q < 2 || m < 1) throw std::invalid_argument("need q >= 2 and m >= 1");
  long limit = 1;
  for (int i = 0; i < m; ++i) limit *= q;
  if (a < 0 || a > limit - 1)
    throw std::invalid_argument("value out of range [0, q^m - 1]");
}

}  // namespace

int q_weight(long a, int q, int m) {
  check_digit_args(a, q, m);
  int s = 0;
  for (int i = 0; i < m; ++i) {
    s += static_cast<int>(a % q);
    a /= q;
  }
  return s;
}

int digit_hamming_weight(long a, int q, int m) {
  check_digit_args(a, q, m);
  int s = 0;
  for (int i = 0; i < m; ++i) {
    if (a % q) ++s;
    a /= q;
  }
  return s;
}

int interior_digit_count(long a, int q, int m) {
  check_digit_args(a, q, m);
  int s = 0;
  for (int i = 0; i < m; ++i) {
    long d = a % q;
    if (d >= 1 && d < q - 1) ++s;
    a /= q;
  }
  return s;
}

IndexSet::IndexSet(long n, int q, int m, std::vector<long> members)
    : n_(n), q_(q), m_(m), members_(std::move(members)) {
  if (n_ < 1) throw std::invalid_argument("index set length must be positive");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (long a : members_)
    if (a < 0 || a > n_) throw std::invalid_argument("index set member out of range [0, n]");
}

bool IndexSet::contains(long a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool IndexSet::has_extension_marker() const {
  return !members_.empty() && members_.back() == n_;
}

IndexSet index_set(int q, int m, int h) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (h < 0 || h > m) throw std::invalid_argument("need 0 <= h <= m");
  long n = 1;
  for (int i = 0; i < m; ++i) n *= q;
  n -= 1;
  std::vector<long> members;
  for (long a = 1; a <= n - 1; ++a) {
    int w = digit_hamming_weight(a, q, m);
    if (w >= 1 && w <= h) members.push_back(a);
  }
  return IndexSet(n, q, m, std::move(members));
}

IndexSet negate_set(const IndexSet& s) {
  if (s.has_extension_marker())
    throw std::invalid_argument("cannot negate a set holding the extension marker");
  std::vector<long> out;
  out.reserve(s.size());
  for (long a : s.members()) out.push_back((s.n() - a) % s.n());
  return IndexSet(s.n(), s.q(), s.m(), std::move(out));
}

IndexSet complement_set(const IndexSet& s) {
  if (s.has_extension_marker())
    throw std::invalid_argument("cannot complement a set holding the extension marker");
  std::vector<long> out;
  out.reserve(s.n() - s.size());
  auto it = s.members().begin();
  for (long a = 0; a < s.n(); ++a) {
    if (it != s.members().end() && *it == a) {
      ++it;
      continue;
    }
    out.push_back(a);
  }
  return IndexSet(s.n(), s.q(), s.m(), std::move(out));
}

namespace {

void check_same_universe(const IndexSet& a, const IndexSet& b) {
  if (a.n() != b.n() || a.q() != b.q() || a.m() != b.m())
    throw std::invalid_argument("index sets live over different universes");
}

}  // namespace

IndexSet union_sets(const IndexSet& a, const IndexSet& b) {
  check_same_universe(a, b);
  std::vector<long> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return IndexSet(a.n(), a.q(), a.m(), std::move(out));
}

IndexSet intersect_sets(const IndexSet& a, const IndexSet& b) {
  check_same_universe(a, b);
  std::vector<long> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return IndexSet(a.n(), a.q(), a.m(), std::move(out));
}

bool p_adic_leq(long r, long s, int p, int digit_count) {
  if (p < 2 || digit_count < 1) throw std::invalid_argument("need p >= 2 and digits >= 1");
  long limit = 1;
  for (int i = 0; i < digit_count; ++i) limit *= p;
  if (r < 0 || s < 0 || r > limit - 1 || s > limit - 1)
    throw std::invalid_argument("value out of digit range");
  for (int i = 0; i < digit_count; ++i) {
    if (r % p > s % p) return false;
    r /= p;
    s /= p;
  }
  return true;
}

bool is_union_of_cosets(const IndexSet& s, const CosetStructure& cs) {
  if (s.n() != cs.n) throw std::invalid_argument("length mismatch");
  for (long a : s.members()) {
    if (a == s.n()) return false;  // marker is never part of a coset
    for (long b : cs.cosets[cs.coset_index[a]])
      if (!s.contains(b)) return false;
  }
  return true;
}

}  // namespace grm
