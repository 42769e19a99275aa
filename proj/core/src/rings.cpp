#include "operlab/rings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace operlab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t pow_u64(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) fail(errc::internal, "integer power overflow");
    r *= base;
  }
  return r;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  base %= mod;
  uint64_t r = 1 % mod;
  while (exp) {
    if (exp & 1) r = (__uint128_t)r * base % mod;
    base = (__uint128_t)base * base % mod;
    exp >>= 1;
  }
  return r;
}

PrimeModulus::PrimeModulus(uint32_t prime, std::optional<uint32_t> rank)
    : p(prime), guard_rank(rank) {
  if (p <= 2 || !is_prime(p)) fail(errc::validation, "p must be an odd prime, got " + std::to_string(p));
  if (guard_rank && 2ull * *guard_rank >= p)
    fail(errc::prime_too_small,
         "2n < p required, got n = " + std::to_string(*guard_rank) + ", p = " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Raw polynomial arithmetic over F_p (coefficient vectors, constant first),
// used only for modulus validation and extension-field reduction.

namespace {

using Raw = std::vector<uint32_t>;

void raw_trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mul(const Raw& a, const Raw& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Raw r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % p;
  raw_trim(r);
  return r;
}

// Remainder of a modulo monic m.
Raw raw_mod(Raw a, const Raw& m, uint32_t p) {
  raw_trim(a);
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      uint64_t sub = (uint64_t)lead * m[i] % p;
      a[shift + i] = (uint32_t)((a[shift + i] + p - sub) % p);
    }
    raw_trim(a);
  }
  return a;
}

Raw raw_pow_mod(Raw base, uint64_t e, const Raw& m, uint32_t p) {
  Raw r = {1};
  base = raw_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = raw_mod(raw_mul(r, base, p), m, p);
    base = raw_mod(raw_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Raw raw_gcd(Raw a, Raw b, uint32_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    // make b monic for the division step
    uint32_t inv = (uint32_t)pow_mod(b.back(), p - 2, p);
    Raw bm = b;
    for (auto& c : bm) c = (uint32_t)((uint64_t)c * inv % p);
    a = raw_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's irreducibility test for a monic polynomial over F_p.
bool raw_irreducible(const Raw& m, uint32_t p) {
  size_t d = m.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  Raw t = {0, 1};
  // x^{p^d} == x mod m
  Raw xp = t;
  for (size_t i = 0; i < d; ++i) xp = raw_pow_mod(xp, p, m, p);
  Raw diff = xp;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  raw_trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^{p^{d/r}} - x, m) == 1 for each prime r | d
  for (size_t r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(r)) continue;
    Raw xq = t;
    for (size_t i = 0; i < d / r; ++i) xq = raw_pow_mod(xq, p, m, p);
    Raw g = xq;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    raw_trim(g);
    g = raw_gcd(g, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::mutex field_cache_mutex;
std::map<std::pair<uint32_t, uint32_t>, FieldPtr> field_cache;

}  // namespace

// ---------------------------------------------------------------------------
// FqField

FqField::FqField(uint32_t p, uint32_t d, std::vector<uint32_t> modulus, uint64_t size)
    : p_(p), d_(d), modulus_(std::move(modulus)), size_(size) {}

FieldPtr FqField::with_modulus(uint32_t p, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) fail(errc::validation, "field characteristic must be prime");
  raw_trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    fail(errc::validation, "modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p) fail(errc::validation, "modulus coefficients must be reduced mod p");
  uint32_t d = (uint32_t)modulus.size() - 1;
  if (d > 1 && !raw_irreducible(modulus, p))
    fail(errc::validation, "modulus is reducible over F_p");
  uint64_t size = pow_u64(p, d);
  return FieldPtr(new FqField(p, d, std::move(modulus), size));
}

FieldPtr FqField::prime(uint32_t p) { return extension(p, 1); }

FieldPtr FqField::extension(uint32_t p, uint32_t degree) {
  if (!is_prime(p)) fail(errc::validation, "field characteristic must be prime");
  if (degree == 0) fail(errc::validation, "extension degree must be positive");
  std::lock_guard<std::mutex> lock(field_cache_mutex);
  auto key = std::make_pair(p, degree);
  auto it = field_cache.find(key);
  if (it != field_cache.end()) return it->second;

  FieldPtr f;
  if (degree == 1) {
    f = with_modulus(p, {0, 1});  // t - 0 convention
  } else {
    if (pow_u64(p, degree) > (1ull << 22))
      fail(errc::extension_too_large,
           "F_{" + std::to_string(p) + "^" + std::to_string(degree) + "} exceeds the search cap");
    // lowest (c_0, c_1, ..., c_{d-1}) in lexicographic order
    uint64_t count = pow_u64(p, degree);
    for (uint64_t idx = 0; idx < count; ++idx) {
      Raw m(degree + 1, 0);
      uint64_t v = idx;
      for (uint32_t i = 0; i < degree; ++i) {
        m[i] = (uint32_t)(v % p);
        v /= p;
      }
      m[degree] = 1;
      if (raw_irreducible(m, p)) {
        f = with_modulus(p, m);
        break;
      }
    }
    if (!f) fail(errc::internal, "no irreducible modulus found");
  }
  field_cache.emplace(key, f);
  return f;
}

FieldElem FqField::zero() const { return FieldElem(shared_from_this(), Raw(d_, 0)); }

FieldElem FqField::one() const { return from_int(1); }

FieldElem FqField::from_int(int64_t v) const {
  Raw c(d_, 0);
  int64_t r = v % (int64_t)p_;
  if (r < 0) r += p_;
  c[0] = (uint32_t)r;
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FqField::element(uint64_t index) const {
  if (index >= size_) fail(errc::validation, "element index out of range");
  Raw c(d_, 0);
  for (uint32_t i = 0; i < d_; ++i) {
    c[i] = (uint32_t)(index % p_);
    index /= p_;
  }
  return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FqField::generator_t() const {
  if (d_ < 2) fail(errc::validation, "prime field has no generator t");
  Raw c(d_, 0);
  c[1] = 1;
  return FieldElem(shared_from_this(), std::move(c));
}

std::string FqField::str() const {
  std::ostringstream os;
  if (d_ == 1)
    os << "F_" << p_;
  else
    os << "F_" << p_ << "^" << d_;
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) fail(errc::internal, "element without a field");
  c_.resize(field_->degree(), 0);
  for (auto v : c_)
    if (v >= field_->p()) fail(errc::internal, "unreduced field element");
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool FieldElem::in_prime_field() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

uint64_t FieldElem::index() const {
  uint64_t idx = 0;
  for (size_t i = c_.size(); i-- > 0;) idx = idx * field_->p() + c_[i];
  return idx;
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
  const auto& fa = *a.field();
  const auto& fb = *b.field();
  if (fa.p() != fb.p() || fa.modulus() != fb.modulus())
    fail(errc::validation, "field mismatch: " + fa.str() + " vs " + fb.str());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(*this, o);
  Raw r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % field_->p();
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(*this, o);
  Raw r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + field_->p() - o.c_[i]) % field_->p();
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-() const {
  Raw r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (field_->p() - c_[i]) % field_->p();
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(*this, o);
  Raw prod = raw_mul(c_, o.c_, field_->p());
  prod = raw_mod(std::move(prod), field_->modulus(), field_->p());
  prod.resize(field_->degree(), 0);
  return FieldElem(field_, std::move(prod));
}

FieldElem FieldElem::pow(uint64_t e) const {
  FieldElem r = field_->one();
  FieldElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(errc::zero_input, "inverse of zero");
  return pow(field_->size() - 2);
}

FieldElem FieldElem::frobenius() const { return pow(field_->p()); }

uint64_t FieldElem::multiplicative_order() const {
  if (is_zero()) fail(errc::zero_input, "order of zero");
  uint64_t m = field_->size() - 1;
  uint64_t ord = m, rem = m;
  for (uint64_t q = 2; q * q <= rem; ++q) {
    if (rem % q) continue;
    while (rem % q == 0) rem /= q;
    while (ord % q == 0 && pow(ord / q) == field_->one()) ord /= q;
  }
  if (rem > 1)
    while (ord % rem == 0 && pow(ord / rem) == field_->one()) ord /= rem;
  return ord;
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

std::string FieldElem::str() const {
  if (field_->degree() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// WittElem

WittElem::WittElem(uint32_t p, uint32_t length, int64_t value) : p_(p), n_(length) {
  if (!is_prime(p)) fail(errc::validation, "Witt ring characteristic must be prime");
  if (length == 0) fail(errc::validation, "Witt length must be >= 1");
  mod_ = pow_u64(p, length);
  int64_t r = value % (int64_t)mod_;
  if (r < 0) r += (int64_t)mod_;
  v_ = (uint64_t)r;
}

void WittElem::check_compatible(const WittElem& o) const {
  if (p_ != o.p_ || n_ != o.n_)
    fail(errc::validation, "Witt ring mismatch: Z/" + std::to_string(mod_) + " vs Z/" + std::to_string(o.mod_));
}

WittElem WittElem::operator+(const WittElem& o) const {
  check_compatible(o);
  WittElem r = *this;
  r.v_ = (v_ + o.v_) % mod_;
  return r;
}

WittElem WittElem::operator-(const WittElem& o) const {
  check_compatible(o);
  WittElem r = *this;
  r.v_ = (v_ + mod_ - o.v_) % mod_;
  return r;
}

WittElem WittElem::operator-() const {
  WittElem r = *this;
  r.v_ = (mod_ - v_) % mod_;
  return r;
}

WittElem WittElem::operator*(const WittElem& o) const {
  check_compatible(o);
  WittElem r = *this;
  r.v_ = (__uint128_t)v_ * o.v_ % mod_;
  return r;
}

WittElem WittElem::pow(uint64_t e) const {
  WittElem r = *this;
  r.v_ = pow_mod(v_, e, mod_);
  if (e == 0) r.v_ = 1 % mod_;
  return r;
}

WittElem WittElem::inverse() const {
  if (!is_unit()) fail(errc::validation, "non-unit has no inverse in Z/p^N");
  // Euler: unit group has order p^{N-1}(p-1)
  uint64_t order = (mod_ / p_) * (p_ - 1);
  return pow(order - 1);
}

WittElem WittElem::reduce(uint32_t shorter_length) const {
  if (shorter_length == 0 || shorter_length > n_)
    fail(errc::validation, "reduction target length out of range");
  return WittElem(p_, shorter_length, (int64_t)(v_ % pow_u64(p_, shorter_length)));
}

bool WittElem::operator==(const WittElem& o) const {
  check_compatible(o);
  return v_ == o.v_;
}

bool WittElem::operator<(const WittElem& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  if (n_ != o.n_) return n_ < o.n_;
  return v_ < o.v_;
}

// ---------------------------------------------------------------------------
// MonicPoly and Hensel lifting

MonicPoly::MonicPoly(uint32_t p, uint32_t length, std::vector<int64_t> coeffs)
    : p_(p), n_(length) {
  if (coeffs.empty()) fail(errc::validation, "polynomial needs at least one coefficient");
  coeffs_.reserve(coeffs.size());
  for (int64_t c : coeffs) coeffs_.emplace_back(p, length, c);
  if (!(coeffs_.back() == WittElem(p, length, 1)))
    fail(errc::validation, "polynomial must be monic");
}

WittElem MonicPoly::eval(const WittElem& x) const {
  WittElem acc(p_, n_, 0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

WittElem MonicPoly::eval_derivative(const WittElem& x) const {
  WittElem acc(p_, n_, 0);
  for (size_t i = coeffs_.size(); i-- > 1;)
    acc = acc * x + coeffs_[i] * WittElem(p_, n_, (int64_t)i);
  return acc;
}

std::vector<WittElem> hensel_lift_roots(const MonicPoly& f) {
  uint32_t p = f.p(), N = f.length();
  std::vector<int64_t> c1;
  for (auto& w : f.coeffs()) c1.push_back((int64_t)w.reduce(1).value());
  MonicPoly f1(p, 1, std::move(c1));
  // roots of the mod-p reduction
  std::vector<uint32_t> residues;
  for (uint32_t r = 0; r < p; ++r) {
    WittElem x(p, 1, r);
    if (f1.eval(x).is_zero()) {
      if (f1.eval_derivative(x).is_zero())
        fail(errc::non_separable_reduction,
             "mod-p reduction has a repeated root at " + std::to_string(r));
      residues.push_back(r);
    }
  }
  if (residues.size() != f.degree())
    fail(errc::non_split_reduction, "mod-p reduction does not split into " +
                                        std::to_string(f.degree()) + " distinct linear factors");
  std::vector<WittElem> roots;
  roots.reserve(residues.size());
  for (uint32_t r : residues) {
    WittElem x(p, N, r);
    for (uint32_t it = 0; it < N + 2 && !f.eval(x).is_zero(); ++it)
      x = x - f.eval(x) * f.eval_derivative(x).inverse();
    if (!f.eval(x).is_zero()) fail(errc::internal, "Newton lifting failed to converge");
    roots.push_back(x);
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Lucas binomials and (p-1)-th root scaling

uint32_t lucas_binom_u(uint64_t k, uint64_t j, uint32_t p) {
  if (!is_prime(p)) fail(errc::validation, "Lucas binomial needs a prime modulus");
  uint64_t r = 1;
  while (j > 0 || k > 0) {
    uint64_t kd = k % p, jd = j % p;
    if (jd > kd) return 0;
    // C(kd, jd) for digits < p, exactly
    uint64_t num = 1, den = 1;
    for (uint64_t i = 1; i <= jd; ++i) {
      num = num * ((kd + 1 - i) % p) % p;
      den = den * (i % p) % p;
    }
    r = r * (num * pow_mod(den, p - 2, p) % p) % p;
    k /= p;
    j /= p;
  }
  return (uint32_t)r;
}

FieldElem lucas_binom(uint64_t k, uint64_t j, uint32_t p) {
  return FqField::prime(p)->from_int((int64_t)lucas_binom_u(k, j, p));
}

std::optional<FieldElem> find_root_of_unity_scale(const FieldElem& h) {
  if (h.is_zero()) fail(errc::zero_input, "no scale normalizes the zero Hasse invariant");
  const auto& field = *h.field();
  uint32_t p = field.p();
  for (uint64_t idx = 1; idx < field.size(); ++idx) {
    FieldElem lam = field.element(idx);
    if (lam.pow(p - 1) == h) return lam;
  }
  return std::nullopt;
}

}  // namespace operlab
