#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "grm/errors.hpp"

namespace grm {

// Arithmetic in GF(p^k) backed by exponent/log tables.
//
// Elements are encoded as integers in [0, p^k): the base-p digits of the
// encoding are the coordinates in the polynomial basis {1, x, ..., x^(k-1)}
// of GF(p)[x] modulo the defining polynomial.  Encoding 0 and 1 are the
// field's zero and one.  The defining polynomial is primitive, so the class
// of x (encoding p for k > 1) generates the multiplicative group.
//
// Tables are immutable after construction; a FieldTable may be shared
// freely across threads.
class FieldTable {
 public:
  static constexpr uint64_t default_table_budget = 1u << 20;

  // Builds GF(p^k) with the canonical defining polynomial: the primitive
  // polynomial of degree k over GF(p) whose ascending coefficient tuple,
  // read as a base-p integer, is smallest.  Deterministic across runs.
  // Throws std::invalid_argument for bad p/k, budget_error if p^k exceeds
  // the table budget.
  static std::shared_ptr<const FieldTable> make(int p, int k,
                                                uint64_t table_budget = default_table_budget);

  // Same field but with a caller-chosen defining polynomial (ascending
  // coefficients, monic, primitive).  Used to cross-check that derived
  // code parameters do not depend on the generator choice.
  static std::shared_ptr<const FieldTable> make_with_modulus(int p, std::vector<int> modulus,
                                                             uint64_t table_budget = default_table_budget);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  uint32_t size() const { return size_; }
  uint32_t group_order() const { return size_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }

  // The fixed generator of the multiplicative group (class of x).
  uint32_t generator() const { return exp_table_[1 % group_order()]; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;            // throws std::domain_error on 0
  uint32_t pow(uint32_t a, long long e) const;
  uint32_t exp(long long e) const;           // generator^e, any integer e
  long log(uint32_t a) const;                // throws std::domain_error on 0

  // Element from an integer residue: c mod p embedded via the prime subfield.
  uint32_t from_int(long long c) const;

  bool same_field(const FieldTable& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  FieldTable() = default;
  static std::shared_ptr<const FieldTable> build(int p, std::vector<int> modulus,
                                                 uint64_t table_budget, bool search_checked);

  int p_ = 0;
  int k_ = 0;
  uint32_t size_ = 0;
  std::vector<int> modulus_;            // ascending, degree k, monic
  std::vector<uint32_t> exp_table_;     // size-1 entries, exp_table_[e] = x^e
  std::vector<int32_t> log_table_;      // size entries, log_table_[0] = -1
  std::vector<uint32_t> xk_multiples_;  // t -> encoding of t * (x^k reduced)
};

// Writes q as p^s with p prime; throws std::invalid_argument when q is not
// a prime power.
std::pair<int, int> prime_power_decompose(long long q);

// The field homomorphism GF(p^s) -> GF(p^(s*m)) that fixes the prime
// subfield and sends the class of x in the small field to the smallest
// (by encoding) root of the small field's defining polynomial inside the
// big field.  Deterministic; verified to be a ring homomorphism at
// construction time.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(std::shared_ptr<const FieldTable> base,
                    std::shared_ptr<const FieldTable> ext);

  const FieldTable& base() const { return *base_; }
  const FieldTable& ext() const { return *ext_; }
  const std::shared_ptr<const FieldTable>& base_ptr() const { return base_; }
  const std::shared_ptr<const FieldTable>& ext_ptr() const { return ext_; }

  uint32_t embed(uint32_t base_elem) const;
  // Preimage of an extension element, if it lies in the embedded subfield.
  std::optional<uint32_t> lift(uint32_t ext_elem) const;

 private:
  std::shared_ptr<const FieldTable> base_;
  std::shared_ptr<const FieldTable> ext_;
  std::vector<uint32_t> fwd_;   // base encoding -> ext encoding
  std::vector<int32_t> back_;   // ext encoding -> base encoding or -1
};

}  // namespace grm
