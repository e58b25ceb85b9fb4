#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grm/cyclotomic.hpp"
#include "grm/field.hpp"
#include "grm/polynomial.hpp"

namespace grm {

// A q-ary cyclic code of length n, described by its defining set (the
// exponents a for which beta^a is a root of every codeword polynomial,
// beta the canonical n-th root of unity) together with the monic generator
// polynomial recomputed from that set.
struct CyclicCode {
  int q = 0;
  long n = 0;
  int m = 0;  // multiplicative order of q mod n
  std::shared_ptr<const FieldTable> base;
  std::shared_ptr<const FieldTable> ext;
  IndexSet defining_set;
  Polynomial generator;
  std::string family = "custom";        // grm | pgrm | bch | reversible | dual | complement | custom
  std::string parent_family;            // set on dual/complement codes
  std::map<std::string, long> params;   // h / ell / delta / b as applicable
  bool flagged_trivial = false;

  long dimension() const { return n - static_cast<long>(defining_set.size()); }
};

// Length n + 1 extension: every codeword gains a final coordinate equal to
// minus the sum of the cyclic coordinates.
struct ExtendedCode {
  CyclicCode parent;
  IndexSet defining_set;  // subset of {0..n}, n acting as the marker
  long length() const { return parent.n + 1; }
  long dimension() const { return parent.dimension(); }
};

// Builds the code belonging to a defining set (which must be a union of
// q-cosets mod n); the generator is the product of the minimal polynomials
// of the coset leaders involved.
CyclicCode cyclic_code_from_defining_set(std::shared_ptr<const FieldTable> base,
                                         std::shared_ptr<const FieldTable> ext,
                                         long n, IndexSet defining_set,
                                         std::string family = "custom",
                                         std::map<std::string, long> params = {});

// Helper shared by the family constructors: GF(q) and GF(q^m) with the
// canonical moduli.
std::pair<std::shared_ptr<const FieldTable>, std::shared_ptr<const FieldTable>>
make_field_pair(int q, int m, uint64_t table_budget = FieldTable::default_table_budget);

// Defining set {a : 1 <= digit_hamming_weight(a) <= h}; length q^m - 1.
// h = m is accepted but yields the one-dimensional repetition-style code,
// marked by flagged_trivial.
CyclicCode make_grm(int q, int m, int h,
                    uint64_t table_budget = FieldTable::default_table_budget);

// Defining set {a in [1, n-1] : q_weight(a) < (q-1)m - ell}.
CyclicCode make_pgrm(int q, int m, int ell,
                     uint64_t table_budget = FieldTable::default_table_budget);

// Classical BCH code of designed distance delta starting at exponent b:
// defining set is the union of the cosets of b, ..., b + delta - 2.
CyclicCode make_bch(int q, long n, int delta, long b,
                    uint64_t table_budget = FieldTable::default_table_budget);

// Reversible code with generator (x - 1) * lcm(g, g*) where g generates
// make_grm(q, m, h); equivalently the defining set {0} union I union -I.
// Valid for 1 <= h <= ceil(m/2); rejects parameter sets whose dimension
// would be zero (q = 2 at the top of that range).
CyclicCode make_reversible_grm(
    int q, int m, int h,
    uint64_t table_budget = FieldTable::default_table_budget);

// Defining set -(complement of T); same length.
CyclicCode dual_code(const CyclicCode& c);

// The code generated by (x^n - 1) / g: defining set is the complement of
// T.  Shares its dimension (and, for these families, its distance) with
// the dual.
CyclicCode complement_code(const CyclicCode& c);

ExtendedCode extend_code(const CyclicCode& c);

// True when every codeword of `sub` lies in `super`; checked both through
// defining-set containment and generator divisibility, which must agree.
bool is_subcode(const CyclicCode& sub, const CyclicCode& super);

// k x n matrix whose rows are x^i * g(x), i = 0..k-1.  Entries are field
// encodings; requires q <= 256.
std::vector<std::vector<uint8_t>> generator_matrix(const CyclicCode& c);

// Extended generator matrix: k x (n+1), last column the negated row sums.
std::vector<std::vector<uint8_t>> generator_matrix(const ExtendedCode& c);

}  // namespace grm
