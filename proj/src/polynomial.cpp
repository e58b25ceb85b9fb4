#include "grm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "grm/cyclotomic.hpp"

namespace grm {
namespace {

void check_fields_match(const Polynomial& a, const Polynomial& b) {
  if (!a.field() || !b.field())
    throw std::logic_error("arithmetic on a placeholder polynomial");
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Polynomial::Polynomial(std::shared_ptr<const FieldTable> field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
}

Polynomial::Polynomial(std::shared_ptr<const FieldTable> field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  for (uint32_t c : coeffs_)
    if (c >= field_->size()) throw std::invalid_argument("coefficient out of field range");
  prune();
}

void Polynomial::prune() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::zero(std::shared_ptr<const FieldTable> field) {
  return Polynomial(std::move(field));
}

Polynomial Polynomial::one(std::shared_ptr<const FieldTable> field) {
  return Polynomial(std::move(field), {1});
}

Polynomial Polynomial::xn_minus_1(std::shared_ptr<const FieldTable> field, long n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = field->neg(1);
  c[n] = 1;
  return Polynomial(std::move(field), std::move(c));
}

uint32_t Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[i];
}

uint32_t Polynomial::eval(uint32_t x) const {
  if (!field_) throw std::logic_error("eval on a placeholder polynomial");
  uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_fields_match(*this, rhs);
  std::vector<uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(coeff(i), rhs.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  check_fields_match(*this, rhs);
  std::vector<uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(coeff(i), rhs.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_fields_match(*this, rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<uint32_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (!rhs.coeffs_[j]) continue;
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  check_fields_match(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& f = a.field_;
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<uint32_t> rem = a.coeffs_;
  std::vector<uint32_t> quot(a.degree() - b.degree() + 1, 0);
  uint32_t lead_inv = f->inv(b.coeffs_.back());
  for (long d = a.degree(); d >= b.degree(); --d) {
    uint32_t c = rem[d];
    if (!c) continue;
    uint32_t s = f->mul(c, lead_inv);
    quot[d - b.degree()] = s;
    for (long j = 0; j <= b.degree(); ++j)
      rem[d - b.degree() + j] = f->sub(rem[d - b.degree() + j], f->mul(s, b.coeffs_[j]));
  }
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial Polynomial::operator/(const Polynomial& rhs) const { return divmod(*this, rhs).first; }
Polynomial Polynomial::operator%(const Polynomial& rhs) const { return divmod(*this, rhs).second; }

bool Polynomial::operator==(const Polynomial& rhs) const {
  return field_->same_field(*rhs.field_) && coeffs_ == rhs.coeffs_;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  if (!field_) throw std::logic_error("scaling a placeholder polynomial");
  if (c >= field_->size()) throw std::invalid_argument("scalar out of field range");
  std::vector<uint32_t> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
  if (coeffs_.back() == 1) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

std::vector<int> Polynomial::serialize() const {
  std::vector<int> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = static_cast<int>(coeffs_[i]);
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  check_fields_match(a, b);
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  check_fields_match(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
  Polynomial g = gcd(a, b);
  return ((a * b) / g).monic();
}

Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero() || f.coeff(0) == 0)
    throw std::domain_error("reciprocal needs a nonzero constant term");
  std::vector<uint32_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
  Polynomial r(f.field(), std::move(rev));
  return r.scaled(f.field()->inv(f.coeff(0)));
}

Polynomial minimal_polynomial(long s, const SubfieldEmbedding& emb, long n) {
  const FieldTable& ext = emb.ext();
  const FieldTable& base = emb.base();
  if (n < 1 || ext.group_order() % n != 0)
    throw std::invalid_argument("n must divide the extension group order");
  long long step = ext.group_order() / n;
  int q = static_cast<int>(base.size());
  std::vector<long> orbit = coset_of(((s % n) + n) % n, n, q);

  // Product of (x - beta^i) over the coset, with extension coefficients.
  std::vector<uint32_t> acc = {1};
  for (long i : orbit) {
    uint32_t root = ext.exp(step * i);
    std::vector<uint32_t> next(acc.size() + 1, 0);
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = ext.add(next[j + 1], acc[j]);
      next[j] = ext.sub(next[j], ext.mul(acc[j], root));
    }
    acc = std::move(next);
  }

  std::vector<uint32_t> mapped(acc.size());
  for (size_t j = 0; j < acc.size(); ++j) {
    auto lifted = emb.lift(acc[j]);
    if (!lifted)
      throw std::logic_error("minimal polynomial coefficient fell outside the base field");
    mapped[j] = *lifted;
  }
  return Polynomial(emb.base_ptr(), std::move(mapped));
}

std::map<long, Polynomial> factor_xn_minus_1(long n, int q, uint64_t table_budget) {
  auto [p, s] = prime_power_decompose(q);
  int m = multiplicative_order(q, n);
  auto base = FieldTable::make(p, s, table_budget);
  auto ext = FieldTable::make(p, s * m, table_budget);
  SubfieldEmbedding emb(base, ext);

  std::map<long, Polynomial> out;
  CosetStructure cs = all_cosets(n, q);
  Polynomial product = Polynomial::one(base);
  for (long leader : cs.leaders) {
    Polynomial ms = minimal_polynomial(leader, emb, n);
    product = product * ms;
    out.emplace(leader, std::move(ms));
  }
  if (product != Polynomial::xn_minus_1(base, n))
    throw std::logic_error("minimal polynomial product does not recompose x^n - 1");
  return out;
}

}  // namespace grm
