#include "operlab/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace operlab {

RootFamily parse_family(const std::string& s) {
  if (s == "A" || s == "a") return RootFamily::A;
  if (s == "B" || s == "b") return RootFamily::B;
  if (s == "C" || s == "c") return RootFamily::C;
  if (s == "D" || s == "d") return RootFamily::D;
  fail(errc::validation, "unknown root-system family '" + s + "'");
}

const char* family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
  }
  return "?";
}

std::vector<uint32_t> SignedPerm::apply_mod_p(const std::vector<uint32_t>& v, uint32_t p) const {
  std::vector<uint32_t> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    uint32_t x = v[perm[i]];
    r[i] = sign[i] > 0 ? x : (p - x) % p;
  }
  return r;
}

SignedPerm SignedPerm::compose(const SignedPerm& inner) const {
  SignedPerm r;
  size_t n = perm.size();
  r.perm.resize(n);
  r.sign.resize(n);
  for (size_t i = 0; i < n; ++i) {
    r.perm[i] = inner.perm[perm[i]];
    r.sign[i] = (int8_t)(sign[i] * inner.sign[perm[i]]);
  }
  return r;
}

bool SignedPerm::operator<(const SignedPerm& o) const {
  if (perm != o.perm) return perm < o.perm;
  return sign < o.sign;
}

bool SignedPerm::operator==(const SignedPerm& o) const {
  return perm == o.perm && sign == o.sign;
}

namespace {

SignedPerm sp_identity(uint32_t dim) {
  SignedPerm s;
  s.perm.resize(dim);
  s.sign.assign(dim, 1);
  for (uint32_t i = 0; i < dim; ++i) s.perm[i] = i;
  return s;
}

SignedPerm sp_swap(uint32_t dim, uint32_t i, uint32_t j) {
  SignedPerm s = sp_identity(dim);
  std::swap(s.perm[i], s.perm[j]);
  return s;
}

}  // namespace

RootDatum RootDatum::make(RootFamily family, uint32_t rank) {
  if (rank == 0) fail(errc::validation, "rank must be positive");
  if ((family == RootFamily::B || family == RootFamily::C) && rank < 2)
    fail(errc::validation, "families B and C need rank >= 2");
  if (family == RootFamily::D && rank < 2)
    fail(errc::validation, "family D needs rank >= 2");

  RootDatum d;
  d.family = family;
  d.rank = rank;
  d.dim = family == RootFamily::A ? rank + 1 : rank;

  auto unit = [&](uint32_t i, int32_t s) {
    std::vector<int32_t> v(d.dim, 0);
    v[i] = s;
    return v;
  };
  auto add = [](std::vector<int32_t> a, const std::vector<int32_t>& b) {
    for (size_t t = 0; t < a.size(); ++t) a[t] += b[t];
    return a;
  };

  switch (family) {
    case RootFamily::A:
      for (uint32_t i = 0; i < d.dim; ++i)
        for (uint32_t j = 0; j < d.dim; ++j)
          if (i != j) d.roots.push_back(add(unit(i, 1), unit(j, -1)));
      for (uint32_t i = 0; i + 1 < d.dim; ++i) d.weyl_generators.push_back(sp_swap(d.dim, i, i + 1));
      break;
    case RootFamily::B:
    case RootFamily::C:
      for (uint32_t i = 0; i < rank; ++i) {
        int32_t len = family == RootFamily::C ? 2 : 1;
        d.roots.push_back(unit(i, len));
        d.roots.push_back(unit(i, -len));
      }
      for (uint32_t i = 0; i < rank; ++i)
        for (uint32_t j = i + 1; j < rank; ++j)
          for (int32_t si : {1, -1})
            for (int32_t sj : {1, -1}) d.roots.push_back(add(unit(i, si), unit(j, sj)));
      for (uint32_t i = 0; i + 1 < rank; ++i) d.weyl_generators.push_back(sp_swap(rank, i, i + 1));
      {
        SignedPerm flip = sp_identity(rank);
        flip.sign[rank - 1] = -1;
        d.weyl_generators.push_back(flip);
      }
      break;
    case RootFamily::D:
      for (uint32_t i = 0; i < rank; ++i)
        for (uint32_t j = i + 1; j < rank; ++j)
          for (int32_t si : {1, -1})
            for (int32_t sj : {1, -1}) d.roots.push_back(add(unit(i, si), unit(j, sj)));
      for (uint32_t i = 0; i + 1 < rank; ++i) d.weyl_generators.push_back(sp_swap(rank, i, i + 1));
      {
        // reflection in e_{r-1} + e_r: swap the last two coordinates and negate both
        SignedPerm s = sp_swap(rank, rank - 2, rank - 1);
        s.sign[rank - 2] = -1;
        s.sign[rank - 1] = -1;
        d.weyl_generators.push_back(s);
      }
      break;
  }
  return d;
}

uint64_t RootDatum::weyl_order() const {
  auto fact = [](uint64_t n) {
    uint64_t f = 1;
    for (uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (family) {
    case RootFamily::A: return fact(rank + 1);
    case RootFamily::B:
    case RootFamily::C: return fact(rank) << rank;
    case RootFamily::D: return fact(rank) << (rank - 1);
  }
  return 0;
}

uint32_t RootDatum::coxeter_number() const {
  switch (family) {
    case RootFamily::A: return rank + 1;
    case RootFamily::B:
    case RootFamily::C: return 2 * rank;
    case RootFamily::D: return 2 * rank - 2;
  }
  return 0;
}

std::vector<SignedPerm> RootDatum::weyl_elements() const {
  std::set<SignedPerm> seen;
  std::vector<SignedPerm> todo = {sp_identity(dim)};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    SignedPerm cur = todo.back();
    todo.pop_back();
    for (const auto& g : weyl_generators) {
      SignedPerm nxt = g.compose(cur);
      if (seen.insert(nxt).second) todo.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string TorusPoint::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  return os.str();
}

TorusPoint canonical_torus_point(const RootDatum& datum, std::vector<uint32_t> coords, uint32_t p) {
  if (coords.size() != datum.dim) fail(errc::validation, "torus point has wrong dimension");
  for (auto& c : coords) c %= p;
  if (datum.family == RootFamily::A) {
    uint32_t shift = coords[0];
    for (auto& c : coords) c = (c + p - shift) % p;
  }
  return TorusPoint{std::move(coords)};
}

std::vector<TorusPoint> regular_points(const RootDatum& datum, const PrimeModulus& pm) {
  uint32_t p = pm.p;
  // For type A enumerate canonical representatives (first coordinate 0).
  uint32_t free_dims = datum.family == RootFamily::A ? datum.dim - 1 : datum.dim;
  uint64_t total = pow_u64(p, free_dims);
  std::vector<TorusPoint> out;
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<uint32_t> v(datum.dim, 0);
    uint64_t t = idx;
    for (uint32_t i = datum.dim - free_dims; i < datum.dim; ++i) {
      v[i] = (uint32_t)(t % p);
      t /= p;
    }
    bool regular = true;
    for (const auto& root : datum.roots) {
      int64_t s = 0;
      for (size_t i = 0; i < v.size(); ++i) s += (int64_t)root[i] * v[i];
      if ((s % p + p) % p == 0) {
        regular = false;
        break;
      }
    }
    if (regular) out.push_back(TorusPoint{std::move(v)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t weyl_orbit_count(const RootDatum& datum, const PrimeModulus& pm) {
  uint32_t p = pm.p;
  std::vector<TorusPoint> pts = regular_points(datum, pm);
  std::vector<SignedPerm> group = datum.weyl_elements();
  if (group.size() != datum.weyl_order())
    fail(errc::internal, "Weyl closure has wrong order");

  std::set<TorusPoint> remaining(pts.begin(), pts.end());
  uint64_t orbits = 0;
  while (!remaining.empty()) {
    TorusPoint seed = *remaining.begin();
    std::set<TorusPoint> orbit;
    for (const auto& w : group) {
      TorusPoint img = canonical_torus_point(datum, w.apply_mod_p(seed.coords, p), p);
      orbit.insert(img);
    }
    if (orbit.size() != group.size())
      fail(errc::verification,
           "W does not act freely on regular points (orbit of " + seed.str() + " has size " +
               std::to_string(orbit.size()) + ")");
    for (const auto& q : orbit) {
      if (remaining.erase(q) == 0)
        fail(errc::internal, "orbit left the regular locus at " + q.str());
    }
    ++orbits;
  }
  return orbits;
}

// --- Type A matrix realization ------------------------------------------

bool AdjointQuotientPoint::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool AdjointQuotientPoint::operator==(const AdjointQuotientPoint& o) const {
  if (conv != o.conv || coeffs.size() != o.coeffs.size()) return false;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != o.coeffs[i]) return false;
  return true;
}

std::string AdjointQuotientPoint::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ",";
    os << coeffs[i].str();
  }
  return os.str();
}

AdjointQuotientPoint chi(const LieMatrix& lm) {
  const Mat<FieldElem>& m = lm.mat;
  size_t n = m.n();
  std::vector<FieldElem> cp = char_poly_coeffs(m);  // c_0..c_n, constant first
  // char(t) = sum_i cp[i] t^i; e_j = (-1)^j * (coefficient of t^{n-j})
  std::vector<FieldElem> e(n);
  for (size_t j = 1; j <= n; ++j) {
    FieldElem v = cp[n - j];
    if (j % 2 == 1) v = -v;
    e[j - 1] = v;
  }
  if (lm.conv != TraceConv::gl) {
    if (!e[0].is_zero()) fail(errc::validation, "sl matrix has nonzero trace");
    e.erase(e.begin());
  }
  return AdjointQuotientPoint{std::move(e), lm.conv};
}

Mat<FieldElem> q_minus1_matrix(uint32_t n, const FieldPtr& field) {
  Mat<FieldElem> m(n, field->zero());
  for (uint32_t i = 1; i < n; ++i) m.at(i, i - 1) = field->one();
  return m;
}

Mat<FieldElem> q_1_matrix(uint32_t n, const FieldPtr& field) {
  Mat<FieldElem> m(n, field->zero());
  for (uint32_t i = 0; i + 1 < n; ++i)
    m.at(i, i + 1) = field->from_int((int64_t)(i + 1) * (int64_t)(n - 1 - i));
  return m;
}

LieMatrix kostant_section(const AdjointQuotientPoint& rho) {
  if (rho.coeffs.empty()) fail(errc::validation, "empty adjoint-quotient point");
  size_t n = rho.n();
  FieldPtr field = rho.coeffs[0].field();
  // target elementary symmetric values e_1..e_n
  std::vector<FieldElem> target(n, field->zero());
  size_t off = rho.conv == TraceConv::gl ? 0 : 1;
  for (size_t i = 0; i < rho.coeffs.size(); ++i) target[off + i] = rho.coeffs[i];
  if (rho.conv != TraceConv::gl && !target[0].is_zero())
    fail(errc::internal, "sl target with nonzero e_1");
  if (rho.conv == TraceConv::gl && !target[0].is_zero())
    fail(errc::unrealized_family, "gl Kostant section only realized for traceless points");

  Mat<FieldElem> qm = q_minus1_matrix((uint32_t)n, field);
  Mat<FieldElem> q1 = q_1_matrix((uint32_t)n, field);
  // basis q_1^j of the traceless centralizer of q_1, j = 1..n-1
  std::vector<Mat<FieldElem>> basis;
  Mat<FieldElem> pw = q1;
  for (size_t j = 1; j < n; ++j) {
    basis.push_back(pw);
    if (j + 1 < n) pw = pw * q1;
  }
  std::vector<FieldElem> b(n - 1, field->zero());
  auto assemble = [&](const std::vector<FieldElem>& bs) {
    Mat<FieldElem> m = qm;
    for (size_t j = 0; j < bs.size(); ++j) m = m + basis[j].scaled(bs[j]);
    return m;
  };
  auto e_of = [&](const Mat<FieldElem>& m) {
    std::vector<FieldElem> cp = char_poly_coeffs(m);
    std::vector<FieldElem> e(n);
    for (size_t j = 1; j <= n; ++j) {
      FieldElem v = cp[n - j];
      if (j % 2 == 1) v = -v;
      e[j - 1] = v;
    }
    return e;
  };
  // e_{j+1} is affine in b_j with constant slope (principal grading), so one
  // probe per coordinate solves the triangular system.
  for (size_t j = 1; j < n; ++j) {
    std::vector<FieldElem> e0 = e_of(assemble(b));
    std::vector<FieldElem> probe = b;
    probe[j - 1] = field->one();
    std::vector<FieldElem> e1 = e_of(assemble(probe));
    FieldElem slope = e1[j] - e0[j];
    if (slope.is_zero())
      fail(errc::prime_too_small, "Kostant solve pivot vanished at this characteristic");
    b[j - 1] = (target[j] - e0[j]) * slope.inverse();
  }
  Mat<FieldElem> result = assemble(b);
  std::vector<FieldElem> check = e_of(result);
  for (size_t j = 0; j < n; ++j)
    if (check[j] != target[j]) fail(errc::internal, "Kostant section round trip failed");
  return LieMatrix{result, rho.conv};
}

Sl2Triple sl2_triple(uint32_t n, const PrimeModulus& pm) {
  if (2ull * n >= pm.p)
    fail(errc::prime_too_small, "sl2 triple needs 2n < p");
  FieldPtr field = FqField::prime(pm.p);
  Mat<FieldElem> h(n, field->zero());
  for (uint32_t i = 0; i < n; ++i) h.at(i, i) = field->from_int((int64_t)n - 1 - 2 * (int64_t)i);
  return Sl2Triple{LieMatrix{q_minus1_matrix(n, field), TraceConv::sl},
                   LieMatrix{h, TraceConv::sl},
                   LieMatrix{q_1_matrix(n, field), TraceConv::sl}};
}

std::vector<FieldElem> elementary_symmetric(const std::vector<FieldElem>& xs) {
  if (xs.empty()) return {};
  FieldPtr field = xs[0].field();
  std::vector<FieldElem> e(xs.size() + 1, field->zero());
  e[0] = field->one();
  size_t used = 0;
  for (const auto& x : xs) {
    ++used;
    for (size_t j = used; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
  }
  return {e.begin() + 1, e.end()};
}

AdjointQuotientPoint chi_of_torus_point(const TorusPoint& v, uint32_t p, uint32_t n,
                                        const FieldPtr& field) {
  if (v.coords.size() != n) fail(errc::validation, "torus point dimension != n");
  if (n % p == 0) fail(errc::prime_too_small, "traceless normalization needs p not dividing n");
  // traceless representative of the class mod constant shift
  int64_t sum = 0;
  for (auto c : v.coords) sum += c;
  int64_t ninv = (int64_t)pow_mod((uint64_t)(n % p), p - 2, p);
  int64_t mean = (sum % p) * ninv % p;
  std::vector<FieldElem> xs;
  xs.reserve(n);
  for (auto c : v.coords) xs.push_back(field->from_int((int64_t)c - mean));
  std::vector<FieldElem> e = elementary_symmetric(xs);
  if (!e[0].is_zero()) fail(errc::internal, "traceless normalization failed");
  return AdjointQuotientPoint{{e.begin() + 1, e.end()}, TraceConv::pgl_as_sl};
}

}  // namespace operlab
