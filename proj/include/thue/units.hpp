#pragma once

#include <array>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numerics.hpp"

namespace thue {

// e0 + e1 theta + e2 theta^2 in Z[theta].
struct OrderElement {
  Int e0, e1, e2;

  bool is_zero() const { return e0 == 0 && e1 == 0 && e2 == 0; }
  bool is_pm_one() const { return (e0 == 1 || e0 == -1) && e1 == 0 && e2 == 0; }

  friend bool operator==(const OrderElement& a, const OrderElement& b) {
    return a.e0 == b.e0 && a.e1 == b.e1 && a.e2 == b.e2;
  }
  friend bool operator<(const OrderElement& a, const OrderElement& b) {
    if (a.e0 != b.e0) return a.e0 < b.e0;
    if (a.e1 != b.e1) return a.e1 < b.e1;
    return a.e2 < b.e2;
  }
};

using Vec3 = std::array<Real, 3>;

// The order Z[theta] for theta a root of an irreducible positive-discriminant
// cubic with leading coefficient +-1 (a = -1 is negated to a monic generator
// with the same roots). Real embeddings are ordered by theta ascending.
class CubicOrder {
 public:
  CubicOrder(const BinaryCubicForm& f, unsigned prec_bits);

  const BinaryCubicForm& form() const { return f_; }
  const RootTriple& roots() const { return roots_; }
  unsigned prec_bits() const { return prec_; }
  unsigned work_prec() const { return work_prec_; }

  // Exact norm det(e0 I + e1 M + e2 M^2), M the companion matrix; equals the
  // resultant of F(x,1) and e2 x^2 + e1 x + e0.
  Int norm(const OrderElement& e) const;

  // Ring product and inverse (inverse requires norm +-1).
  OrderElement mul(const OrderElement& a, const OrderElement& b) const;
  OrderElement inverse(const OrderElement& e) const;
  OrderElement power(const OrderElement& e, long n) const;

  // (log|sigma1 e|, log|sigma2 e|, log|sigma3 e|); throws ZeroElement.
  Vec3 log_embed(const OrderElement& e) const;

  // Absolute logarithmic height: (1/6)(sum |log|sigma_i e|| + log|N(e)|).
  Real abs_log_height(const OrderElement& e) const;

 private:
  BinaryCubicForm f_;
  unsigned prec_;
  unsigned work_prec_;
  RootTriple roots_;
};

// Exhaustive box search: all e with |e_i| <= coeff_bound and norm +-1,
// excluding 0 and +-1, sorted lexicographically. Throws EmptySearch when the
// box contains no unit.
std::vector<OrderElement> search_units(const CubicOrder& order, long coeff_bound);

// Rank-2 logarithmic unit lattice with a Lagrange-Gauss reduced basis.
struct UnitLattice {
  std::vector<OrderElement> generators;
  OrderElement b1_element, b2_element;
  Vec3 b1, b2;
  Real covolume;
  unsigned prec_bits = kDefaultPrecBits;
};

// Lattice generated by the log-vectors of all given units. Throws
// RankDeficient when they span less than rank 2.
UnitLattice build_lattice(const CubicOrder& order, const std::vector<OrderElement>& units);

struct LogDecomposition {
  long m = 0, n = 0;
  Vec3 residual;
};

// Closest lattice point (m b1 + n b2) to the target log-vector.
LogDecomposition decompose_log(const Vec3& target, const UnitLattice& lattice);

// Sylvester-matrix resultant of a cubic and a quadratic (exact).
Int resultant_cubic_quadratic(const Int& a3, const Int& a2, const Int& a1, const Int& a0,
                              const Int& b2, const Int& b1, const Int& b0);

// The non-unit constant |(rho - rho'') / (rho' - rho)| of the logarithm
// decomposition, for the ascending root labels.
Real lambda1_ratio(const RootTriple& roots);

// Height cap (1/6)(3 ||u(x0,y0)|| + log D) used in place of a minimal
// polynomial for lambda1.
Real lambda1_height_bound(const Real& u0_norm, const Int& D);

// Louboutin-style upper bound (sqrt3/8) sqrt(D) log^2 D for the covolume.
Real covolume_upper_bound(const Int& D, unsigned prec_bits);

// Euclidean and L1 norms of a log-vector.
Real vec_norm(const Vec3& v);
Real vec_l1(const Vec3& v);

}  // namespace thue
