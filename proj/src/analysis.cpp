#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grm/analysis.hpp"
#include "grm/errors.hpp"

namespace grm {

namespace {

long long binom_ll(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

long long pow_ll(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_family_args(int q, int m, int h) {
  prime_power_decompose(q);
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (h < 1 || h > m) throw std::invalid_argument("need 1 <= h <= m");
}

// sum over digit-weight classes 1..h of the number of base-q strings of
// length m in each class
long long nonzero_digit_count_sum(int q, int m, int h) {
  long long s = 0;
  for (int i = 1; i <= h; ++i) s += binom_ll(m, i) * pow_ll(q - 1, i);
  return s;
}

}  // namespace

long grm_dimension(int q, int m, int h) {
  check_family_args(q, m, h);
  if (h == m) return 1;  // defining set covers every nonzero exponent
  return static_cast<long>(pow_ll(q, m) - 1 - nonzero_digit_count_sum(q, m, h));
}

long grm_dual_dimension(int q, int m, int h) {
  check_family_args(q, m, h);
  if (h == m) return static_cast<long>(pow_ll(q, m) - 2);
  return static_cast<long>(nonzero_digit_count_sum(q, m, h));
}

long pgrm_dimension(int q, int m, int ell) {
  prime_power_decompose(q);
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (ell < 0 || ell > m * (q - 1) - 1)
    throw std::invalid_argument("need 0 <= ell <= m(q-1) - 1");
  long long k = 0;
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= m; ++j) {
      long long c = binom_ll(m, j) * binom_ll(i - static_cast<long long>(j) * q + m - 1, m - 1);
      k += (j % 2 == 0) ? c : -c;
    }
  return static_cast<long>(k);
}

long pgrm_distance(int q, int m, int ell) {
  prime_power_decompose(q);
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (ell < 0 || ell > m * (q - 1) - 1)
    throw std::invalid_argument("need 0 <= ell <= m(q-1) - 1");
  int ell1 = ell / (q - 1);
  int ell0 = ell % (q - 1);
  return static_cast<long>((q - ell0) * pow_ll(q, m - ell1 - 1) - 1);
}

long reversible_grm_dimension(int q, int m, int h) {
  check_family_args(q, m, h);
  if (h > (m + 1) / 2) throw std::invalid_argument("need h <= ceil(m/2)");
  long long n = pow_ll(q, m) - 1;
  long long twice = 2 * nonzero_digit_count_sum(q, m, h);
  long long overlap = 0;
  if (h <= (m + 1) / 2 - 1) {
    overlap = 0;  // the set and its mirror are disjoint in this range
  } else if (m % 2 == 0) {
    overlap = binom_ll(m, m / 2);
  } else {
    overlap = binom_ll(m, (m - 1) / 2) * (4 + static_cast<long long>(q - 2) * (m + 1)) / 2;
  }
  return static_cast<long>(n - 1 - twice + overlap);
}

long grm_distance_lower(int q, int h) {
  return static_cast<long>((pow_ll(q, h + 1) - 1) / (q - 1));
}

long grm_distance_upper(int q, int h) {
  return static_cast<long>(2 * pow_ll(q, h) - 1);
}

long extended_grm_distance_upper(int q, int h) {
  return static_cast<long>(2 * pow_ll(q, h));
}

long grm_dual_distance_lower(int q, int m, int h) {
  return static_cast<long>(pow_ll(q, m - h) + q - 2);
}

long reversible_grm_distance_lower(int q, int m, int h) {
  (void)m;
  return static_cast<long>(2 * (pow_ll(q, h + 1) - 1) / (q - 1));
}

long dimension_checked(const CyclicCode& c) {
  long k = c.dimension();
  std::optional<long> closed;
  auto param = [&](const char* key) { return c.params.at(key); };
  if (c.family == "grm") {
    closed = grm_dimension(c.q, c.m, static_cast<int>(param("h")));
  } else if (c.family == "pgrm") {
    closed = pgrm_dimension(c.q, c.m, static_cast<int>(param("ell")));
  } else if (c.family == "reversible") {
    closed = reversible_grm_dimension(c.q, c.m, static_cast<int>(param("h")));
  } else if (c.family == "dual" || c.family == "complement") {
    if (c.parent_family == "grm")
      closed = grm_dual_dimension(c.q, c.m, static_cast<int>(param("h")));
    else if (c.parent_family == "pgrm")
      closed = c.n - pgrm_dimension(c.q, c.m, static_cast<int>(param("ell")));
    else if (c.parent_family == "reversible")
      closed = c.n - reversible_grm_dimension(c.q, c.m, static_cast<int>(param("h")));
  }
  if (closed && *closed != k)
    throw std::logic_error("constructed dimension disagrees with the closed form");
  return k;
}

long bch_bound(const IndexSet& t) {
  if (t.has_extension_marker())
    throw std::invalid_argument("bounds apply to cyclic defining sets only");
  long n = t.n();
  if (static_cast<long>(t.size()) == n) return n + 1;  // zero code
  std::vector<char> member(n, 0);
  for (long s : t.members()) member[s] = 1;
  long best = 0;
  for (long s = 0; s < n; ++s) {
    if (!member[s] || member[(s + n - 1) % n]) continue;
    long len = 0;
    while (member[(s + len) % n]) ++len;
    best = std::max(best, len);
  }
  return best + 1;
}

long hartmann_tzeng_bound(const IndexSet& t, const HTCaps& caps) {
  if (t.has_extension_marker())
    throw std::invalid_argument("bounds apply to cyclic defining sets only");
  long n = t.n();
  if (static_cast<long>(t.size()) == n) return n + 1;
  if (t.size() == 0) return 1;
  std::vector<char> member(n, 0);
  for (long s : t.members()) member[s] = 1;

  std::vector<std::pair<long, long>> runs;  // (start, length), maximal
  for (long s = 0; s < n; ++s) {
    if (!member[s] || member[(s + n - 1) % n]) continue;
    long len = 0;
    while (member[(s + len) % n]) ++len;
    runs.emplace_back(s, len);
  }

  long best = 1;
  for (const auto& [st, len] : runs) best = std::max(best, len + 1);

  std::vector<long> shifts;
  for (long b : caps.extra_shifts)
    if (b >= 1 && b <= n - 1) shifts.push_back(b);
  for (long b = 1; b <= n - 1; ++b) shifts.push_back(b);

  std::uint64_t work = 0;
  for (const auto& [st, run_len] : runs) {
    for (long len = run_len; len >= 1; --len) {
      long delta = len + 1;
      for (long off = 0; off + len <= run_len; ++off) {
        long a0 = (st + off) % n;
        for (long b : shifts) {
          long g = std::gcd(b, n);
          if (g >= delta) continue;
          long max_j = n / g - 1;  // distinct shift values only
          long s = 0;
          long base = 0;
          for (long j = 1; j <= max_j; ++j) {
            base = (base + b) % n;
            bool ok = true;
            for (long idx = 0; idx < len; ++idx)
              if (!member[(a0 + idx + base) % n]) {
                ok = false;
                break;
              }
            work += len;
            if (!ok) break;
            s = j;
          }
          best = std::max(best, delta + s);
          if (work > caps.work_limit) return best;
        }
      }
    }
  }
  return best;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int q,
                                         long k) {
  long n = w.length;
  if (static_cast<long>(w.counts.size()) != n + 1)
    throw std::invalid_argument("counts must have length+1 entries");
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= length");

  using i128 = __int128;
  const i128 lim = (i128(1) << 126);
  auto mul_checked = [&](i128 a, i128 b) {
    if (a != 0 && (b > lim / a)) throw budget_error("transform intermediate overflow");
    return a * b;
  };

  std::vector<std::vector<i128>> pas(n + 1, std::vector<i128>(n + 1, 0));
  for (long i = 0; i <= n; ++i) {
    pas[i][0] = 1;
    for (long j = 1; j <= i; ++j)
      pas[i][j] = pas[i - 1][j - 1] + (j <= i - 1 ? pas[i - 1][j] : 0);
  }
  std::vector<i128> qm1pow(n + 1, 1);
  for (long i = 1; i <= n; ++i) qm1pow[i] = mul_checked(qm1pow[i - 1], q - 1);
  i128 qk = 1;
  for (long i = 0; i < k; ++i) qk = mul_checked(qk, q);

  WeightDistribution out;
  out.length = n;
  out.counts.assign(n + 1, 0);
  for (long j = 0; j <= n; ++j) {
    i128 sum = 0;
    for (long i = 0; i <= n; ++i) {
      if (w.counts[i] == 0) continue;
      i128 kr = 0;  // Krawtchouk value K_j(i)
      for (long h = std::max<long>(0, j - (n - i)); h <= std::min(i, j); ++h) {
        i128 term = mul_checked(mul_checked(pas[i][h], pas[n - i][j - h]), qm1pow[j - h]);
        kr += (h % 2 == 0) ? term : -term;
      }
      sum += mul_checked(static_cast<i128>(w.counts[i]), kr);
    }
    if (sum % qk != 0)
      throw std::logic_error("transform output is not integral; input distribution invalid");
    i128 val = sum / qk;
    if (val < 0 || val > static_cast<i128>(UINT64_MAX))
      throw std::logic_error("transform output out of range; input distribution invalid");
    out.counts[j] = static_cast<std::uint64_t>(val);
  }
  return out;
}

AffineInvarianceResult affine_invariance_from_set(const IndexSet& tbar, int p,
                                                  int digit_count) {
  if (p < 2 || digit_count < 1) throw std::invalid_argument("bad digit arguments");
  long long full = 1;
  for (int i = 0; i < digit_count; ++i) {
    full *= p;
    if (full > (1LL << 40)) throw budget_error("digit space too large");
  }
  if (full != tbar.n() + 1)
    throw std::invalid_argument("p^digit_count must equal the extended length");

  std::vector<char> member(full, 0);
  for (long s : tbar.members()) member[s] = 1;  // the marker encodes exponent n itself

  std::vector<int> digits(digit_count), r_digits(digit_count);
  for (long s : tbar.members()) {
    long v = s;
    for (int i = 0; i < digit_count; ++i) {
      digits[i] = static_cast<int>(v % p);
      v /= p;
    }
    // odometer over all digit-wise dominated values, ascending
    std::fill(r_digits.begin(), r_digits.end(), 0);
    for (;;) {
      long r = 0;
      for (int i = digit_count - 1; i >= 0; --i) r = r * p + r_digits[i];
      if (!member[r]) return {false, r, s};
      int pos = 0;
      while (pos < digit_count && r_digits[pos] == digits[pos]) r_digits[pos++] = 0;
      if (pos == digit_count) break;
      ++r_digits[pos];
    }
  }
  return {true, -1, -1};
}

AffineInvarianceResult is_affine_invariant(const ExtendedCode& c) {
  int p = c.parent.base->characteristic();
  auto [pp, s] = prime_power_decompose(c.parent.q);
  (void)pp;
  return affine_invariance_from_set(c.defining_set, p, c.parent.m * s);
}

DesignCertificate extract_design(const ExtendedCode& ec, long weight,
                                 const EnumerationOptions& opts) {
  const CyclicCode& c = ec.parent;
  long v = c.n + 1;
  if (weight < 1 || weight > v) throw std::invalid_argument("weight out of range");
  long k = c.dimension();
  int q = static_cast<int>(c.base->size());
  {
    std::uint64_t total = 1;
    for (long i = 0; i < k; ++i) {
      total *= q;
      if (total > opts.max_codewords)
        throw budget_error("codeword space exceeds max_codewords");
    }
  }
  auto rows = generator_matrix(ec);
  const FieldTable& f = *c.base;

  std::set<std::vector<int>> supports;
  std::vector<std::uint8_t> word(v, 0);

  struct Walker {
    const FieldTable& f;
    int q;
    long k, v, weight;
    const std::vector<std::vector<std::uint8_t>>& rows;
    std::vector<std::uint8_t>& word;
    std::set<std::vector<int>>& supports;
    void rec(long i) {
      if (i == k) {
        std::vector<int> sup;
        for (long j = 0; j < v; ++j)
          if (word[j]) sup.push_back(static_cast<int>(j));
        if (static_cast<long>(sup.size()) == weight) supports.insert(std::move(sup));
        return;
      }
      rec(i + 1);
      auto saved = word;
      for (int val = 1; val < q; ++val) {
        for (long j = 0; j < v; ++j)
          word[j] = static_cast<std::uint8_t>(f.add(saved[j], f.mul(val, rows[i][j])));
        rec(i + 1);
      }
      word = saved;
    }
  } walker{f, q, k, v, weight, rows, word, supports};
  walker.rec(0);

  DesignCertificate cert;
  cert.points = v;
  cert.block_size = weight;
  cert.strength = 2;
  cert.block_count = supports.size();

  std::vector<std::vector<std::uint64_t>> pair_cov(v, std::vector<std::uint64_t>(v, 0));
  for (const auto& sup : supports)
    for (size_t a = 0; a < sup.size(); ++a)
      for (size_t b = a + 1; b < sup.size(); ++b) ++pair_cov[sup[a]][sup[b]];
  for (long a = 0; a < v; ++a)
    for (long b = a + 1; b < v; ++b) ++cert.coverage_histogram[pair_cov[a][b]];
  cert.uniform = (cert.coverage_histogram.size() == 1);
  cert.lambda = cert.uniform ? cert.coverage_histogram.begin()->first : 0;
  return cert;
}

std::vector<std::vector<std::uint8_t>> null_space(
    const std::vector<std::vector<std::uint8_t>>& rows, const FieldTable& f) {
  if (rows.empty()) throw std::invalid_argument("need at least one row");
  long r = static_cast<long>(rows.size());
  long n = static_cast<long>(rows[0].size());
  for (const auto& row : rows)
    if (static_cast<long>(row.size()) != n)
      throw std::invalid_argument("rows must have equal length");

  auto m = rows;
  std::vector<long> pivot_col;
  long rr = 0;
  for (long col = 0; col < n && rr < r; ++col) {
    long pr = -1;
    for (long row = rr; row < r; ++row)
      if (m[row][col]) {
        pr = row;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rr], m[pr]);
    std::uint32_t inv = f.inv(m[rr][col]);
    for (long j = 0; j < n; ++j)
      m[rr][j] = static_cast<std::uint8_t>(f.mul(inv, m[rr][j]));
    for (long row = 0; row < r; ++row) {
      if (row == rr || !m[row][col]) continue;
      std::uint32_t fac = m[row][col];
      for (long j = 0; j < n; ++j)
        m[row][j] = static_cast<std::uint8_t>(f.sub(m[row][j], f.mul(fac, m[rr][j])));
    }
    pivot_col.push_back(col);
    ++rr;
  }

  std::vector<char> is_pivot(n, 0);
  for (long c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<std::uint8_t>> basis;
  for (long fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<std::uint8_t> vec(n, 0);
    vec[fc] = 1;
    for (long prow = 0; prow < rr; ++prow)
      vec[pivot_col[prow]] = static_cast<std::uint8_t>(f.neg(m[prow][fc]));
    basis.push_back(std::move(vec));
  }
  return basis;
}

bool dual_matches_kernel(const CyclicCode& c) {
  CyclicCode dual = dual_code(c);
  long k = c.dimension();
  if (k == 0) return dual.dimension() == c.n;
  if (k == c.n) return dual.dimension() == 0;

  auto g_rows = generator_matrix(c);
  auto kernel = null_space(g_rows, *c.base);
  if (static_cast<long>(kernel.size()) != dual.dimension()) return false;

  for (const auto& vec : kernel) {
    std::vector<std::uint32_t> coeffs(vec.begin(), vec.end());
    Polynomial p(c.base, std::move(coeffs));
    if (!(p % dual.generator).is_zero()) return false;
  }
  auto h_rows = generator_matrix(dual);
  const FieldTable& f = *c.base;
  for (const auto& h : h_rows)
    for (const auto& g : g_rows) {
      std::uint32_t acc = 0;
      for (long j = 0; j < c.n; ++j) acc = f.add(acc, f.mul(h[j], g[j]));
      if (acc != 0) return false;
    }
  return true;
}

FamilyBounds family_distance_bounds(const CyclicCode& c) {
  FamilyBounds fb;
  auto param = [&](const char* key) -> std::optional<long> {
    auto it = c.params.find(key);
    if (it == c.params.end()) return std::nullopt;
    return it->second;
  };
  if (c.family == "grm") {
    auto h = param("h");
    if (!h) return fb;
    if (c.flagged_trivial) {
      fb.lower = c.n;  // repetition-like: the single generator has full weight
      fb.upper = c.n;
    } else {
      fb.lower = grm_distance_lower(c.q, static_cast<int>(*h));
      fb.upper = grm_distance_upper(c.q, static_cast<int>(*h));
    }
  } else if (c.family == "pgrm") {
    auto ell = param("ell");
    if (!ell) return fb;
    long d = pgrm_distance(c.q, c.m, static_cast<int>(*ell));
    fb.lower = d;
    fb.upper = d;
  } else if (c.family == "bch") {
    auto delta = param("delta");
    if (delta) fb.lower = *delta;
  } else if ((c.family == "dual" || c.family == "complement") &&
             c.parent_family == "grm") {
    auto h = param("h");
    if (h && *h < c.m) fb.lower = grm_dual_distance_lower(c.q, c.m, static_cast<int>(*h));
  } else if (c.family == "reversible") {
    auto h = param("h");
    if (h) fb.lower = reversible_grm_distance_lower(c.q, c.m, static_cast<int>(*h));
  }
  return fb;
}

FamilyBounds family_distance_bounds(const ExtendedCode& ec) {
  FamilyBounds fb;
  const CyclicCode& c = ec.parent;
  if (c.family == "grm" && !c.flagged_trivial) {
    auto it = c.params.find("h");
    if (it != c.params.end()) {
      fb.lower = grm_distance_lower(c.q, static_cast<int>(it->second));
      fb.upper = extended_grm_distance_upper(c.q, static_cast<int>(it->second));
    }
  }
  return fb;
}

AnalysisReport analyze(const CyclicCode& c, const AnalyzeRequest& req) {
  AnalysisReport r;
  r.extended = false;
  r.code = c;
  r.length = c.n;
  r.dimension = dimension_checked(c);
  r.bch = bch_bound(c.defining_set);
  r.hartmann_tzeng = hartmann_tzeng_bound(c.defining_set, req.ht);
  FamilyBounds fb = family_distance_bounds(c);
  r.family_lower = fb.lower;
  r.family_upper = fb.upper;
  if (req.want_weights) r.weights = weight_distribution(c, req.enumeration);
  if (req.want_distance) {
    if (r.weights) {
      DistanceResult d;
      d.method = DistanceMethod::exhaustive;
      d.status = DistanceStatus::exact;
      for (long w = 1; w <= r.length; ++w)
        if (r.weights->counts[w]) {
          d.value = w;
          break;
        }
      if (d.value == 0) throw std::domain_error("the zero code has no minimum distance");
      d.best_found = d.value;
      r.distance = d;
    } else {
      r.distance = min_distance(c, req.enumeration);
    }
  }
  return r;
}

AnalysisReport analyze(const ExtendedCode& ec, const AnalyzeRequest& req) {
  AnalysisReport r;
  r.extended = true;
  r.code = ec.parent;
  r.extended_set = ec.defining_set;
  r.length = ec.length();
  r.dimension = dimension_checked(ec.parent);
  r.bch = bch_bound(ec.parent.defining_set);
  r.hartmann_tzeng = hartmann_tzeng_bound(ec.parent.defining_set, req.ht);
  FamilyBounds fb = family_distance_bounds(ec);
  r.family_lower = fb.lower;
  r.family_upper = fb.upper;
  if (req.want_weights || req.want_distance || req.want_designs)
    r.weights = weight_distribution(ec, req.enumeration);
  if (req.want_distance) {
    DistanceResult d;
    d.method = DistanceMethod::exhaustive;
    d.status = DistanceStatus::exact;
    for (long w = 1; w <= r.length; ++w)
      if (r.weights->counts[w]) {
        d.value = w;
        break;
      }
    if (d.value == 0) throw std::domain_error("the zero code has no minimum distance");
    d.best_found = d.value;
    r.distance = d;
  }
  if (req.want_designs) {
    for (long w = 1; w <= r.length; ++w)
      if (r.weights->counts[w])
        r.designs.push_back(extract_design(ec, w, req.enumeration));
  }
  if (req.want_affine) r.affine = is_affine_invariant(ec);
  return r;
}

}  // namespace grm
