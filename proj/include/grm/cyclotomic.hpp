#pragma once

#include <vector>

namespace grm {

// Orbits of multiplication by q on Z/nZ (gcd(n, q) = 1).
struct CosetStructure {
  long n = 0;
  int q = 0;
  std::vector<std::vector<long>> cosets;  // each sorted, ordered by leader
  std::vector<long> leaders;              // smallest member of each coset
  std::vector<int> coset_index;           // element -> index into cosets
};

// The orbit {s, s*q, s*q^2, ...} mod n, sorted ascending.
std::vector<long> coset_of(long s, long n, int q);

// All orbits, as a partition of {0, ..., n-1}.
CosetStructure all_cosets(long n, int q);

// Multiplicative order of q modulo n.
int multiplicative_order(int q, long n);

// Sum of the base-q digits of a (a in [0, q^m - 1]).
int q_weight(long a, int q, int m);

// Number of nonzero base-q digits of a.
int digit_hamming_weight(long a, int q, int m);

// Number of base-q digits of a strictly between 0 and q-1.
int interior_digit_count(long a, int q, int m);

// A sorted subset of {0, ..., n} used as the defining set of a cyclic code
// of length n = q^m - 1.  The value n itself is reserved as the marker an
// extended code gains when the parent already had 0 in its set.
class IndexSet {
 public:
  // Empty placeholder over the trivial universe.
  IndexSet() = default;
  IndexSet(long n, int q, int m, std::vector<long> members);

  long n() const { return n_; }
  int q() const { return q_; }
  int m() const { return m_; }
  const std::vector<long>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(long a) const;
  bool has_extension_marker() const;

 private:
  long n_ = 1;
  int q_ = 2;
  int m_ = 1;
  std::vector<long> members_;  // sorted, unique, in [0, n]
};

// {a : 1 <= a <= n-1, 1 <= digit_hamming_weight(a) <= h} for n = q^m - 1.
IndexSet index_set(int q, int m, int h);

// {(n - a) mod n : a in s}.  Rejects sets holding the extension marker.
IndexSet negate_set(const IndexSet& s);

// {0, ..., n-1} minus the members.  Rejects sets holding the marker.
IndexSet complement_set(const IndexSet& s);

IndexSet union_sets(const IndexSet& a, const IndexSet& b);
IndexSet intersect_sets(const IndexSet& a, const IndexSet& b);

// Digit-wise partial order on base-p expansions over digit_count digits:
// true when every digit of r is <= the matching digit of s.
bool p_adic_leq(long r, long s, int p, int digit_count);

// True when the set is a union of whole q-cosets mod n.
bool is_union_of_cosets(const IndexSet& s, const CosetStructure& cs);

}  // namespace grm
