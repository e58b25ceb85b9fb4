#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grm/code.hpp"

namespace grm {

// Budgets for codeword enumeration.  Exhaustive search runs only when the
// message space q^k fits under max_codewords; otherwise the information-set
// path is used and gives up (lower bound only) once the number of candidate
// messages it would have to inspect exceeds max_candidates.
struct EnumerationOptions {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_candidates = std::uint64_t{1} << 28;
  int threads = 1;
};

// Caps for the Hartmann-Tzeng search.  extra_shifts are step candidates b
// tried before the generic 1..n-1 scan, so a known-good construction is
// found even when work_limit truncates the full search.
struct HTCaps {
  std::uint64_t work_limit = 50'000'000;
  std::vector<long> extra_shifts;
};

enum class DistanceStatus { exact, lower_bound_only };
enum class DistanceMethod { exhaustive, information_set };

struct DistanceResult {
  long value = 0;  // exact distance, or the certified lower bound
  DistanceStatus status = DistanceStatus::exact;
  DistanceMethod method = DistanceMethod::exhaustive;
  long best_found = 0;  // lightest nonzero weight seen (an upper bound)
  std::uint64_t enumeration_count = 0;  // diagnostic, not part of reports
};

struct WeightDistribution {
  long length = 0;
  std::vector<std::uint64_t> counts;  // counts[w] = codewords of weight w
};

struct DesignCertificate {
  long points = 0;      // v
  long block_size = 0;  // cardinality of each support
  int strength = 2;
  bool uniform = false;          // every point pair covered equally often
  std::uint64_t lambda = 0;      // common pair coverage when uniform
  std::uint64_t block_count = 0; // number of distinct supports
  std::map<std::uint64_t, std::uint64_t> coverage_histogram;
};

struct AffineInvarianceResult {
  bool invariant = true;
  // When not invariant: r is digit-wise below s, s is in the set, r is not.
  long witness_r = -1;
  long witness_s = -1;
};

// Closed-form dimensions and distance bounds per family.
long grm_dimension(int q, int m, int h);
long grm_dual_dimension(int q, int m, int h);
long pgrm_dimension(int q, int m, int ell);
long reversible_grm_dimension(int q, int m, int h);
long pgrm_distance(int q, int m, int ell);
long grm_distance_lower(int q, int h);
long grm_distance_upper(int q, int h);
long extended_grm_distance_upper(int q, int h);
long grm_dual_distance_lower(int q, int m, int h);
long reversible_grm_distance_lower(int q, int m, int h);

// Dimension from the construction (length minus generator degree), checked
// against the family closed form when one applies.
long dimension_checked(const CyclicCode& c);

// Consecutive-run bound from the defining set.
long bch_bound(const IndexSet& t);

// Hartmann-Tzeng bound: best delta + s over runs A of length delta-1 and
// shift sets {jb : 0 <= j <= s} with gcd(b, n) < delta, all inside t.
long hartmann_tzeng_bound(const IndexSet& t, const HTCaps& caps = {});

DistanceResult min_distance(const CyclicCode& c,
                            const EnumerationOptions& opts = {});

WeightDistribution weight_distribution(const CyclicCode& c,
                                       const EnumerationOptions& opts = {});
WeightDistribution weight_distribution(const ExtendedCode& c,
                                       const EnumerationOptions& opts = {});

// Weight distribution of the dual code computed from the primal one.
// Exact integer arithmetic; throws std::logic_error if the transform does
// not divide evenly (which would mean the input was not a valid
// distribution for a [n, k] code over GF(q)).
WeightDistribution macwilliams_transform(const WeightDistribution& w, int q,
                                         long k);

// Digit-wise downward closure test on an extended defining set over base-p
// digits.  p^digit_count must equal the extended length.
AffineInvarianceResult affine_invariance_from_set(const IndexSet& tbar, int p,
                                                  int digit_count);
AffineInvarianceResult is_affine_invariant(const ExtendedCode& c);

// Supports of the weight-w codewords of the extended code, collapsed across
// scalar multiples, checked for 2-design uniformity.
DesignCertificate extract_design(const ExtendedCode& c, long weight,
                                 const EnumerationOptions& opts = {});

// Basis of the right null space of a row-major matrix over the given field.
std::vector<std::vector<std::uint8_t>> null_space(
    const std::vector<std::vector<std::uint8_t>>& rows, const FieldTable& f);

// Independent check of dual_code: the null space of the generator matrix
// must span exactly the dual's codewords.  Intended for small lengths.
bool dual_matches_kernel(const CyclicCode& c);

struct FamilyBounds {
  std::optional<long> lower;
  std::optional<long> upper;
};
FamilyBounds family_distance_bounds(const CyclicCode& c);
FamilyBounds family_distance_bounds(const ExtendedCode& c);

struct AnalyzeRequest {
  bool want_distance = true;
  bool want_weights = false;
  bool want_designs = false;
  bool want_affine = false;
  EnumerationOptions enumeration;
  HTCaps ht;
};

struct AnalysisReport {
  bool extended = false;
  CyclicCode code;  // the cyclic code itself, or the parent when extended
  std::optional<IndexSet> extended_set;
  long length = 0;
  long dimension = 0;
  std::optional<DistanceResult> distance;
  long bch = 0;
  long hartmann_tzeng = 0;
  std::optional<long> family_lower;
  std::optional<long> family_upper;
  std::optional<WeightDistribution> weights;
  std::vector<DesignCertificate> designs;  // one per nonzero weight if asked
  std::optional<AffineInvarianceResult> affine;
};

AnalysisReport analyze(const CyclicCode& c, const AnalyzeRequest& req = {});
AnalysisReport analyze(const ExtendedCode& c, const AnalyzeRequest& req = {});

}  // namespace grm
