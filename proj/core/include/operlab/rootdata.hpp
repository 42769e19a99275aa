#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "operlab/linalg.hpp"
#include "operlab/rings.hpp"

namespace operlab {

enum class RootFamily { A, B, C, D };

RootFamily parse_family(const std::string& s);
const char* family_name(RootFamily f);

// Signed permutation of the standard torus coordinates: v -> (sign_i * v_{perm_i}).
struct SignedPerm {
  std::vector<uint32_t> perm;
  std::vector<int8_t> sign;

  std::vector<uint32_t> apply_mod_p(const std::vector<uint32_t>& v, uint32_t p) const;
  SignedPerm compose(const SignedPerm& inner) const;  // this after inner
  bool operator<(const SignedPerm& o) const;
  bool operator==(const SignedPerm& o) const;
};

// Root system of classical type in the standard coordinates.
// Type A_{rank} lives in Z^{rank+1} (roots e_i - e_j); B/C/D_{rank} in Z^{rank}.
struct RootDatum {
  RootFamily family;
  uint32_t rank;
  uint32_t dim;                             // coordinate dimension
  std::vector<std::vector<int32_t>> roots;
  std::vector<SignedPerm> weyl_generators;

  static RootDatum make(RootFamily family, uint32_t rank);

  uint64_t weyl_order() const;     // classical closed form
  uint32_t coxeter_number() const;
  std::vector<SignedPerm> weyl_elements() const;  // closure of the generators
};

// Point of t(F_p) in the standard coordinates.  For type A the canonical
// representative of the class mod constant shift has first coordinate 0.
struct TorusPoint {
  std::vector<uint32_t> coords;

  bool operator==(const TorusPoint& o) const { return coords == o.coords; }
  bool operator<(const TorusPoint& o) const { return coords < o.coords; }
  std::string str() const;
};

TorusPoint canonical_torus_point(const RootDatum& datum, std::vector<uint32_t> coords, uint32_t p);

// All v in t_reg(F_p): alpha(v) != 0 for every root, lexicographic order.
std::vector<TorusPoint> regular_points(const RootDatum& datum, const PrimeModulus& p);

// #(t_reg(F_p)/W), computed by explicit orbit partition; the free action is
// checked against #W along the way.
uint64_t weyl_orbit_count(const RootDatum& datum, const PrimeModulus& p);

// --- Type A matrix realization ------------------------------------------

enum class TraceConv { gl, sl, pgl_as_sl };

struct LieMatrix {
  Mat<FieldElem> mat;
  TraceConv conv;
};

// Point of the adjoint quotient c, stored as elementary symmetric values of
// the eigenvalues: (e_1..e_n) for gl, (e_2..e_n) for sl/pgl (e_1 = 0).
struct AdjointQuotientPoint {
  std::vector<FieldElem> coeffs;
  TraceConv conv;

  size_t n() const { return conv == TraceConv::gl ? coeffs.size() : coeffs.size() + 1; }
  bool is_zero() const;
  bool operator==(const AdjointQuotientPoint& o) const;
  bool operator!=(const AdjointQuotientPoint& o) const { return !(*this == o); }
  std::string str() const;
};

// chi: characteristic-polynomial coefficients, invariant under conjugation.
AdjointQuotientPoint chi(const LieMatrix& m);

// Kostant section: the unique q_{-1} + v, v in the centralizer of q_1, with
// chi(q_{-1} + v) = rho.  Companion-type; chi(kostant_section(rho)) == rho exactly.
LieMatrix kostant_section(const AdjointQuotientPoint& rho);

// Principal sl_2 in gl_n projected to sl_n:
// [2rho^, q_1] = 2q_1, [2rho^, q_{-1}] = -2q_{-1}, [q_1, q_{-1}] = 2rho^.
struct Sl2Triple {
  LieMatrix q_minus1;
  LieMatrix two_rho_check;
  LieMatrix q_1;
};
Sl2Triple sl2_triple(uint32_t n, const PrimeModulus& p);

// q_{-1} (subdiagonal ones) and the weighted principal nilpotent q_1 over a field.
Mat<FieldElem> q_minus1_matrix(uint32_t n, const FieldPtr& field);
Mat<FieldElem> q_1_matrix(uint32_t n, const FieldPtr& field);

// chi of the traceless diagonal lift of a type-A torus point, over `field`
// (which must contain F_p).  Requires p not dividing n.
AdjointQuotientPoint chi_of_torus_point(const TorusPoint& v, uint32_t p, uint32_t n,
                                        const FieldPtr& field);

// Elementary symmetric values e_1..e_n of given field elements.
std::vector<FieldElem> elementary_symmetric(const std::vector<FieldElem>& xs);

}  // namespace operlab
