#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "operlab/error.hpp"

namespace operlab {

bool is_prime(uint64_t n);
uint64_t pow_u64(uint64_t base, uint64_t exp);  // throws on overflow
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Odd prime p with the optional standing hypothesis 2n < p (n = guard_rank).
struct PrimeModulus {
  uint32_t p;
  std::optional<uint32_t> guard_rank;

  explicit PrimeModulus(uint32_t prime, std::optional<uint32_t> rank = std::nullopt);
};

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

// An element of F_{p^d}, reduced modulo the field's modulus polynomial.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<uint32_t> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool in_prime_field() const;           // all coefficients above constant vanish
  uint32_t constant() const { return c_.empty() ? 0 : c_[0]; }
  uint64_t index() const;                // base-p encoding, total order on the field

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(uint64_t e) const;
  FieldElem frobenius() const;           // x -> x^p
  uint64_t multiplicative_order() const; // of a nonzero element

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<uint32_t> c_;
};

// F_{p^d} presented as F_p[t]/(m) for a monic irreducible m of degree d.
// d = 1 uses the modulus t, so F_p itself fits the same interface.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  // Checked constructor helpers; construction verifies irreducibility (Rabin).
  static FieldPtr prime(uint32_t p);
  static FieldPtr extension(uint32_t p, uint32_t degree);  // lowest-lex monic irreducible
  static FieldPtr with_modulus(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  uint32_t degree() const { return d_; }
  uint64_t size() const { return size_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(int64_t v) const;        // image of an integer (prime subfield)
  FieldElem element(uint64_t index) const;    // inverse of FieldElem::index()
  FieldElem generator_t() const;              // the class of t (d >= 2)

  std::string str() const;

 private:
  FqField(uint32_t p, uint32_t d, std::vector<uint32_t> modulus, uint64_t size);

  uint32_t p_ = 0;
  uint32_t d_ = 0;
  std::vector<uint32_t> modulus_;  // length d+1, monic
  uint64_t size_ = 0;

  friend class FieldElem;
};

// Element of the truncated Witt ring W_N(F_p) = Z/p^N.
class WittElem {
 public:
  WittElem() = default;
  WittElem(uint32_t p, uint32_t length, int64_t value);

  uint32_t p() const { return p_; }
  uint32_t length() const { return n_; }
  uint64_t modulus() const { return mod_; }
  uint64_t value() const { return v_; }
  uint32_t residue_mod_p() const { return static_cast<uint32_t>(v_ % p_); }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ % p_ != 0; }

  WittElem operator+(const WittElem& o) const;
  WittElem operator-(const WittElem& o) const;
  WittElem operator-() const;
  WittElem operator*(const WittElem& o) const;
  WittElem inverse() const;
  WittElem pow(uint64_t e) const;
  WittElem reduce(uint32_t shorter_length) const;  // ring morphism Z/p^N -> Z/p^N'

  bool operator==(const WittElem& o) const;
  bool operator!=(const WittElem& o) const { return !(*this == o); }
  // Lexicographic helper order: by (p, N, value).
  bool operator<(const WittElem& o) const;

  std::string str() const { return std::to_string(v_); }

 private:
  void check_compatible(const WittElem& o) const;

  uint64_t v_ = 0;
  uint32_t p_ = 0;
  uint32_t n_ = 0;
  uint64_t mod_ = 1;
};

// Monic polynomial over Z/p^N, constant-first coefficient order.
class MonicPoly {
 public:
  MonicPoly(uint32_t p, uint32_t length, std::vector<int64_t> coeffs_low_to_high);

  uint32_t p() const { return p_; }
  uint32_t length() const { return n_; }
  size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<WittElem>& coeffs() const { return coeffs_; }

  WittElem eval(const WittElem& x) const;
  WittElem eval_derivative(const WittElem& x) const;

 private:
  uint32_t p_ = 0;
  uint32_t n_ = 0;
  std::vector<WittElem> coeffs_;  // coeffs_[deg] == 1
};

// All roots of f in Z/p^N when f splits into distinct linear factors mod p.
// Each returned root lifts exactly one mod-p root and satisfies f(root) == 0.
std::vector<WittElem> hensel_lift_roots(const MonicPoly& f);

// C(k, j) mod p via base-p digit products (Lucas).
uint32_t lucas_binom_u(uint64_t k, uint64_t j, uint32_t p);
FieldElem lucas_binom(uint64_t k, uint64_t j, uint32_t p);

// Some lambda in h's own field with lambda^{p-1} = h, or absent when no such
// scale exists there.  The supersingular case h = 0 is rejected.
std::optional<FieldElem> find_root_of_unity_scale(const FieldElem& h);

}  // namespace operlab
