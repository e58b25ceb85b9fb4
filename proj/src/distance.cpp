#include <algorithm>
#include <climits>
#include <cstring>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "grm/analysis.hpp"
#include "grm/errors.hpp"

namespace grm {

namespace {

// q^k, saturating at UINT64_MAX/2 so comparisons against budgets stay safe.
std::uint64_t pow_saturating(std::uint64_t q, long k) {
  std::uint64_t acc = 1;
  const std::uint64_t lim = UINT64_MAX / 2;
  for (long i = 0; i < k; ++i) {
    if (acc > lim / q) return lim;
    acc *= q;
  }
  return acc;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

struct GrayContext {
  const FieldTable* f = nullptr;
  int q = 0;
  long n = 0;
  long k = 0;
  long degg = 0;
  std::vector<std::uint8_t> g;          // generator coefficients, ascending
  std::vector<std::uint8_t> add_tab;    // q*q addition table
  std::vector<std::uint8_t> scaled_g;   // q rows of e*g(x)
  std::vector<std::uint8_t> mul_g1;     // e * g(1), per-row coordinate sum
  bool extended = false;
};

GrayContext make_gray_context(const CyclicCode& c, bool extended) {
  GrayContext ctx;
  ctx.f = c.base.get();
  ctx.q = static_cast<int>(c.base->size());
  if (ctx.q > 256)
    throw budget_error("enumeration kernels require an alphabet of size <= 256");
  ctx.n = c.n;
  ctx.k = c.dimension();
  ctx.degg = c.generator.degree();
  ctx.extended = extended;
  ctx.g.resize(ctx.degg + 1);
  for (long j = 0; j <= ctx.degg; ++j)
    ctx.g[j] = static_cast<std::uint8_t>(c.generator.coeff(j));
  ctx.add_tab.resize(static_cast<size_t>(ctx.q) * ctx.q);
  for (int a = 0; a < ctx.q; ++a)
    for (int b = 0; b < ctx.q; ++b)
      ctx.add_tab[static_cast<size_t>(a) * ctx.q + b] =
          static_cast<std::uint8_t>(ctx.f->add(a, b));
  ctx.scaled_g.resize(static_cast<size_t>(ctx.q) * (ctx.degg + 1));
  for (int e = 0; e < ctx.q; ++e)
    for (long j = 0; j <= ctx.degg; ++j)
      ctx.scaled_g[static_cast<size_t>(e) * (ctx.degg + 1) + j] =
          static_cast<std::uint8_t>(ctx.f->mul(e, ctx.g[j]));
  std::uint32_t g1 = c.generator.eval(1);
  ctx.mul_g1.resize(ctx.q);
  for (int e = 0; e < ctx.q; ++e)
    ctx.mul_g1[e] = static_cast<std::uint8_t>(ctx.f->mul(e, g1));
  return ctx;
}

// Walks message counters [lo, hi) in reflected base-q Gray order and adds
// one to hist[weight] per codeword.  Consecutive counters differ in one
// message digit, so each step touches only degg+1 word positions.
void gray_walk(const GrayContext& ctx, std::uint64_t lo, std::uint64_t hi,
               std::vector<std::uint64_t>& hist) {
  const int q = ctx.q;
  const long k = ctx.k;
  const long degg = ctx.degg;
  if (lo >= hi) return;

  std::vector<int> cnt(k, 0);
  {
    std::uint64_t v = lo;
    for (long i = 0; i < k; ++i) {
      cnt[i] = static_cast<int>(v % q);
      v /= q;
    }
  }
  // par_above[i]: parity of the integer formed by counter digits above i.
  std::vector<int> par_above(k, 0);
  for (long i = k - 2; i >= 0; --i) {
    int hi_par = par_above[i + 1];
    int d = cnt[i + 1];
    par_above[i] = (q % 2 == 0) ? (d & 1) : ((hi_par + d) & 1);
  }
  std::vector<int> gd(k, 0);
  for (long i = 0; i < k; ++i)
    gd[i] = par_above[i] ? (q - 1 - cnt[i]) : cnt[i];

  std::vector<std::uint8_t> word(ctx.n, 0);
  for (long i = 0; i < k; ++i) {
    if (gd[i] == 0) continue;
    const std::uint8_t* row = &ctx.scaled_g[static_cast<size_t>(gd[i]) * (degg + 1)];
    for (long j = 0; j <= degg; ++j)
      word[i + j] = ctx.add_tab[static_cast<size_t>(word[i + j]) * q + row[j]];
  }
  long weight = 0;
  int sum = 0;
  for (long j = 0; j < ctx.n; ++j) {
    if (word[j]) ++weight;
    sum = ctx.add_tab[static_cast<size_t>(sum) * q + word[j]];
  }

  const std::uint8_t* add = ctx.add_tab.data();
  for (std::uint64_t idx = lo;; ++idx) {
    long w = weight;
    if (ctx.extended && sum != 0) ++w;
    ++hist[w];
    if (idx + 1 == hi) break;

    long t = 0;
    while (cnt[t] == q - 1) {
      cnt[t] = 0;
      ++t;
    }
    ++cnt[t];
    // Digits below t were reset; their Gray values are unchanged because the
    // parity above them flipped in step with the reset.  Refresh the parity
    // cache below t for future carries.
    for (long i = t - 1; i >= 0; --i) {
      int d = cnt[i + 1];
      par_above[i] = (q % 2 == 0) ? (d & 1) : ((par_above[i + 1] + d) & 1);
    }
    int nv = par_above[t] ? (q - 1 - cnt[t]) : cnt[t];
    int delta = ctx.f->sub(nv, gd[t]);
    gd[t] = nv;
    const std::uint8_t* row = &ctx.scaled_g[static_cast<size_t>(delta) * (degg + 1)];
    std::uint8_t* wp = word.data() + t;
    for (long j = 0; j <= degg; ++j) {
      std::uint8_t old = wp[j];
      std::uint8_t nw = add[static_cast<size_t>(old) * q + row[j]];
      weight += (nw != 0) - (old != 0);
      wp[j] = nw;
    }
    if (ctx.extended) sum = add[static_cast<size_t>(sum) * q + ctx.mul_g1[delta]];
  }
}

std::vector<std::uint64_t> exhaust_hist(const CyclicCode& c, bool extended,
                                        const EnumerationOptions& opts) {
  GrayContext ctx = make_gray_context(c, extended);
  long length = extended ? c.n + 1 : c.n;
  std::vector<std::uint64_t> hist(length + 1, 0);
  if (ctx.k == 0) {
    hist[0] = 1;
    return hist;
  }
  std::uint64_t total = pow_saturating(ctx.q, ctx.k);
  int threads = std::clamp(opts.threads, 1, 256);
  if (total < static_cast<std::uint64_t>(threads) * 4) threads = 1;
  if (threads == 1) {
    gray_walk(ctx, 0, total, hist);
    return hist;
  }
  std::vector<std::vector<std::uint64_t>> parts(
      threads, std::vector<std::uint64_t>(length + 1, 0));
  std::vector<std::thread> pool;
  std::uint64_t chunk = total / threads, rem = total % threads, lo = 0;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
    pool.emplace_back([&ctx, lo, hi, &parts, t] { gray_walk(ctx, lo, hi, parts[t]); });
    lo = hi;
  }
  for (auto& th : pool) th.join();
  for (const auto& part : parts)
    for (long w = 0; w <= length; ++w) hist[w] += part[w];
  return hist;
}

// Row-reduces the shifted-generator matrix so the first k columns form the
// identity.  Valid for cyclic codes: row i of the raw matrix starts at
// column i, so the leading k x k block is upper triangular with nonzero
// diagonal g(0).
struct SystematicForm {
  long k = 0, n = 0;
  std::vector<std::vector<std::uint8_t>> parity;  // k rows of n-k redundancy
};

SystematicForm window_systematic(const CyclicCode& c) {
  const FieldTable& f = *c.base;
  auto m = generator_matrix(c);
  long k = c.dimension(), n = c.n;
  for (long i = 0; i < k; ++i) {
    std::uint32_t inv = f.inv(m[i][i]);
    for (long j = 0; j < n; ++j) m[i][j] = static_cast<std::uint8_t>(f.mul(inv, m[i][j]));
    for (long r = 0; r < i; ++r) {
      std::uint32_t fac = m[r][i];
      if (!fac) continue;
      for (long j = i; j < n; ++j)
        m[r][j] = static_cast<std::uint8_t>(f.sub(m[r][j], f.mul(fac, m[i][j])));
    }
  }
  SystematicForm s;
  s.k = k;
  s.n = n;
  s.parity.assign(k, std::vector<std::uint8_t>(n - k, 0));
  for (long i = 0; i < k; ++i)
    for (long j = k; j < n; ++j) s.parity[i][j - k] = m[i][j];
  return s;
}

struct PassShared {
  const FieldTable* f;
  int q;
  long k, r;  // r = n - k
  std::vector<std::uint8_t> add_tab;
  std::vector<std::vector<std::uint8_t>> scaled;  // [i*q + v] -> v * parity row i
};

PassShared make_pass_shared(const SystematicForm& sys, const FieldTable& f) {
  PassShared ps;
  ps.f = &f;
  ps.q = static_cast<int>(f.size());
  ps.k = sys.k;
  ps.r = sys.n - sys.k;
  ps.add_tab.resize(static_cast<size_t>(ps.q) * ps.q);
  for (int a = 0; a < ps.q; ++a)
    for (int b = 0; b < ps.q; ++b)
      ps.add_tab[static_cast<size_t>(a) * ps.q + b] = static_cast<std::uint8_t>(f.add(a, b));
  ps.scaled.assign(static_cast<size_t>(ps.k) * ps.q, {});
  for (long i = 0; i < ps.k; ++i)
    for (int v = 0; v < ps.q; ++v) {
      std::vector<std::uint8_t> row(ps.r);
      for (long j = 0; j < ps.r; ++j)
        row[j] = static_cast<std::uint8_t>(f.mul(v, sys.parity[i][j]));
      ps.scaled[static_cast<size_t>(i) * ps.q + v] = std::move(row);
    }
  return ps;
}

// Enumerates window patterns of weight exactly w whose first support
// position lies in [i0_lo, i0_hi); first nonzero value pinned to 1 since
// scalar multiples share a weight.
struct PassWorker {
  const PassShared* ps;
  long w;
  long best = LONG_MAX;
  std::uint64_t visited = 0;
  std::vector<std::vector<std::uint8_t>> stack;

  void run(long i0_lo, long i0_hi) {
    stack.assign(w + 1, std::vector<std::uint8_t>(ps->r, 0));
    for (long i0 = i0_lo; i0 < i0_hi; ++i0) descend(1, i0, 0);
  }

  void descend(long depth, long pos, int parent) {
    // first support position carries value 1 only; scalar multiples repeat weights
    int vhi = (depth == 1) ? 1 : ps->q - 1;
    const auto& prev = stack[parent];
    for (int v = 1; v <= vhi; ++v) {
      auto& cur = stack[depth];
      const auto& row = ps->scaled[static_cast<size_t>(pos) * ps->q + v];
      for (long j = 0; j < ps->r; ++j)
        cur[j] = ps->add_tab[static_cast<size_t>(prev[j]) * ps->q + row[j]];
      if (depth == w) {
        ++visited;
        long wt = w;
        for (long j = 0; j < ps->r; ++j)
          if (cur[j]) ++wt;
        if (wt < best) best = wt;
      } else {
        for (long nxt = pos + 1; nxt <= ps->k - (w - depth); ++nxt)
          descend(depth + 1, nxt, depth);
      }
    }
  }
};

struct PassOutcome {
  long best = LONG_MAX;
  std::uint64_t visited = 0;
};

PassOutcome run_pass(const PassShared& ps, long w, int threads) {
  long span = ps.k - w + 1;  // admissible first positions
  threads = std::clamp(threads, 1, 256);
  if (threads > span) threads = static_cast<int>(std::max<long>(1, span));
  std::vector<PassWorker> workers(threads);
  for (auto& wk : workers) {
    wk.ps = &ps;
    wk.w = w;
  }
  if (threads == 1) {
    workers[0].run(0, span);
  } else {
    std::vector<std::thread> pool;
    long chunk = span / threads, rem = span % threads, lo = 0;
    for (int t = 0; t < threads; ++t) {
      long hi = lo + chunk + (t < rem ? 1 : 0);
      pool.emplace_back([&workers, t, lo, hi] { workers[t].run(lo, hi); });
      lo = hi;
    }
    for (auto& th : pool) th.join();
  }
  PassOutcome out;
  for (const auto& wk : workers) {
    out.best = std::min(out.best, wk.best);
    out.visited += wk.visited;
  }
  return out;
}

std::uint64_t pass_cost(long k, long w, int q) {
  // C(k, w) * (q-1)^(w-1), saturating
  const std::uint64_t lim = UINT64_MAX / 2;
  std::uint64_t acc = 1;
  for (long i = 0; i < w; ++i) {
    if (acc > lim / (k - i)) return lim;
    acc = acc * (k - i) / (i + 1);
  }
  for (long i = 0; i + 1 < w; ++i) {
    if (acc > lim / (q - 1)) return lim;
    acc *= (q - 1);
  }
  return acc;
}

// One Lee-Brickell round: row-reduce against a random column order, then
// scan all systematic codewords with one or two nonzero message symbols.
struct LeeBrickell {
  const FieldTable* f;
  int q;
  long k, n;
  std::vector<std::vector<std::uint8_t>> base_rows;
  std::mt19937_64 rng{0x5DEECE66DULL};
  std::vector<long> perm;
  std::uint64_t visited = 0;

  explicit LeeBrickell(const CyclicCode& c)
      : f(c.base.get()),
        q(static_cast<int>(c.base->size())),
        k(c.dimension()),
        n(c.n),
        base_rows(generator_matrix(c)),
        perm(c.n) {
    for (long i = 0; i < n; ++i) perm[i] = i;
  }

  long round() {
    for (long i = n - 1; i > 0; --i) {
      long j = static_cast<long>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(perm[i], perm[j]);
    }
    auto m = base_rows;
    std::vector<long> pivots;
    std::vector<char> is_pivot(n, 0);
    long r = 0;
    for (long ci = 0; ci < n && r < k; ++ci) {
      long col = perm[ci];
      long pr = -1;
      for (long row = r; row < k; ++row)
        if (m[row][col]) {
          pr = row;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[r], m[pr]);
      std::uint32_t inv = f->inv(m[r][col]);
      for (long j = 0; j < n; ++j) m[r][j] = static_cast<std::uint8_t>(f->mul(inv, m[r][j]));
      for (long row = 0; row < k; ++row) {
        if (row == r || !m[row][col]) continue;
        std::uint32_t fac = m[row][col];
        for (long j = 0; j < n; ++j)
          m[row][j] = static_cast<std::uint8_t>(f->sub(m[row][j], f->mul(fac, m[r][j])));
      }
      pivots.push_back(col);
      is_pivot[col] = 1;
      ++r;
    }
    if (r < k) return LONG_MAX;  // cannot happen for a rank-k matrix

    std::vector<long> np;
    np.reserve(n - k);
    for (long j = 0; j < n; ++j)
      if (!is_pivot[j]) np.push_back(j);

    long best = LONG_MAX;
    // weight-1 messages
    for (long t = 0; t < k; ++t) {
      ++visited;
      long wt = 1;
      for (long j : np)
        if (m[t][j]) ++wt;
      if (wt < best) best = wt;
    }
    // weight-2 messages, first value pinned to 1
    for (long t1 = 0; t1 + 1 < k; ++t1)
      for (long t2 = t1 + 1; t2 < k; ++t2)
        for (int v = 1; v <= q - 1; ++v) {
          ++visited;
          long wt = 2;
          for (long j : np)
            if (f->add(m[t1][j], f->mul(v, m[t2][j]))) ++wt;
          if (wt < best) best = wt;
        }
    return best;
  }
};

}  // namespace

WeightDistribution weight_distribution(const CyclicCode& c,
                                       const EnumerationOptions& opts) {
  std::uint64_t total = pow_saturating(c.base->size(), c.dimension());
  if (total > opts.max_codewords)
    throw budget_error("codeword space exceeds max_codewords");
  WeightDistribution w;
  w.length = c.n;
  w.counts = exhaust_hist(c, false, opts);
  return w;
}

WeightDistribution weight_distribution(const ExtendedCode& ec,
                                       const EnumerationOptions& opts) {
  const CyclicCode& c = ec.parent;
  std::uint64_t total = pow_saturating(c.base->size(), c.dimension());
  if (total > opts.max_codewords)
    throw budget_error("codeword space exceeds max_codewords");
  WeightDistribution w;
  w.length = c.n + 1;
  w.counts = exhaust_hist(c, true, opts);
  return w;
}

DistanceResult min_distance(const CyclicCode& c, const EnumerationOptions& opts) {
  long k = c.dimension();
  if (k == 0) throw std::domain_error("the zero code has no minimum distance");
  DistanceResult res;
  if (k == c.n) {
    res.value = 1;
    res.best_found = 1;
    res.method = DistanceMethod::exhaustive;
    return res;
  }

  std::uint64_t total = pow_saturating(c.base->size(), k);
  if (total <= opts.max_codewords) {
    auto hist = exhaust_hist(c, false, opts);
    long d = 0;
    for (long w = 1; w <= c.n; ++w)
      if (hist[w]) {
        d = w;
        break;
      }
    res.value = d;
    res.best_found = d;
    res.status = DistanceStatus::exact;
    res.method = DistanceMethod::exhaustive;
    res.enumeration_count = total;
    return res;
  }

  res.method = DistanceMethod::information_set;
  long seed = std::max(bch_bound(c.defining_set),
                       hartmann_tzeng_bound(c.defining_set, HTCaps{}));
  long best = LONG_MAX;
  std::uint64_t used = 0;

  // Randomized info-set rounds first: cheap, and often land directly on a
  // minimum-weight word, which the seed bound then certifies.
  {
    LeeBrickell lb(c);
    for (int iter = 0; iter < 800 && best > seed; ++iter)
      best = std::min(best, lb.round());
    used += lb.visited;
  }
  if (best == seed) {
    res.value = seed;
    res.best_found = seed;
    res.status = DistanceStatus::exact;
    res.enumeration_count = used;
    return res;
  }

  // Single consecutive information window, pattern weight rising one at a
  // time.  After a full pass at weight w every unseen codeword has some
  // cyclic shift with window weight > w, forcing weight >= n(w+1)/k.
  SystematicForm sys = window_systematic(c);
  PassShared ps = make_pass_shared(sys, *c.base);
  long lb_val = seed;
  int q = static_cast<int>(c.base->size());
  for (long w = 1; w <= k; ++w) {
    std::uint64_t cost = pass_cost(k, w, q);
    if (used + cost > opts.max_candidates) break;
    PassOutcome out = run_pass(ps, w, opts.threads);
    used += out.visited;
    best = std::min(best, out.best);
    lb_val = std::max(lb_val, ceil_div(c.n * (w + 1), k));
    if (best <= lb_val) {
      res.value = best;
      res.best_found = best;
      res.status = DistanceStatus::exact;
      res.enumeration_count = used;
      return res;
    }
  }
  res.value = lb_val;
  res.best_found = (best == LONG_MAX) ? 0 : best;
  res.status = DistanceStatus::lower_bound_only;
  res.enumeration_count = used;
  return res;
}

}  // namespace grm
