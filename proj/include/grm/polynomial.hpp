#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "grm/field.hpp"

namespace grm {

// Dense univariate polynomial over a FieldTable.  Coefficients are stored
// ascending (coeffs[i] multiplies x^i) with no trailing zeros; the zero
// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  // Placeholder with no field attached; any arithmetic on it throws.
  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<const FieldTable> field);
  Polynomial(std::shared_ptr<const FieldTable> field, std::vector<uint32_t> coeffs);

  static Polynomial zero(std::shared_ptr<const FieldTable> field);
  static Polynomial one(std::shared_ptr<const FieldTable> field);
  // x^n - 1 over the given field.
  static Polynomial xn_minus_1(std::shared_ptr<const FieldTable> field, long n);

  const std::shared_ptr<const FieldTable>& field() const { return field_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  uint32_t coeff(long i) const;  // 0 beyond the degree
  const std::vector<uint32_t>& coeffs() const { return coeffs_; }

  uint32_t eval(uint32_t x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator/(const Polynomial& rhs) const;
  Polynomial operator%(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Quotient and remainder in one pass; rhs must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(uint32_t c) const;  // c * this
  Polynomial monic() const;             // unit multiple with leading coefficient 1

  // Ascending coefficient encodings as plain integers (serialization form).
  std::vector<int> serialize() const;

 private:
  void prune();
  std::shared_ptr<const FieldTable> field_;
  std::vector<uint32_t> coeffs_;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
// Monic least common multiple; zero if either side is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// x^deg(f) * f(1/x) normalized by the inverse of f(0); requires f(0) != 0.
// Self-reciprocal polynomials are exactly those whose root set is closed
// under inversion.
Polynomial reciprocal(const Polynomial& f);

// Minimal polynomial over the base field of beta^s, where beta is the
// canonical n-th root of unity in the extension field (generator raised to
// (|ext*|)/n).  Computed as the product over the q-coset of s and mapped
// back through the subfield embedding; every coefficient must land in the
// base field or the construction is rejected.
Polynomial minimal_polynomial(long s, const SubfieldEmbedding& emb, long n);

// The canonical factorization of x^n - 1 over GF(q): one minimal
// polynomial per coset leader, keyed by leader.
std::map<long, Polynomial> factor_xn_minus_1(long n, int q,
                                             uint64_t table_budget = FieldTable::default_table_budget);

}  // namespace grm
