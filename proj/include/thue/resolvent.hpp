#pragma once

#include <array>

#include "thue/forms.hpp"
#include "thue/numerics.hpp"

namespace thue {

// Rectangular complex enclosure.
struct CInterval {
  Interval re, im;

  CInterval conj() const { return {re, -im}; }
  Interval abs2() const { return re.sqr() + im.sqr(); }

  friend CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

CInterval c_div(const CInterval& a, const CInterval& b);
CInterval c_pow3(const CInterval& a);

// Geometric annotation of one integer point against a fixed resolvent.
// u/p/q/t/s are evaluated with the resolvent pair the point is related to.
struct PointEvaluation {
  long long x = 0, y = 0;
  Real u1, u2, u3;
  Real p, q;
  Real t, s;
  int related_index = 0;  // k minimizing |omega^k - eta/xi|
};

// Resolvent data of an irreducible positive-discriminant form: certified
// roots of F(x,1) and the complex coefficients of the base resolvent pair,
// oriented so that xi^3 - eta^3 = 3 sqrt(-3D) F holds with the principal
// branch (positive imaginary part).
class ResolventData {
 public:
  ResolventData(const BinaryCubicForm& f, unsigned prec_bits);

  const BinaryCubicForm& form() const { return form_; }
  const Int& disc() const { return disc_; }
  unsigned prec_bits() const { return prec_; }
  unsigned work_prec() const { return work_prec_; }
  const RootTriple& roots() const { return roots_; }
  Interval theta(int i) const { return roots_.interval(i); }

  const CInterval& xi1() const { return xi1_; }
  const CInterval& xi2() const { return xi2_; }
  const CInterval& eta1() const { return eta1_; }
  const CInterval& eta2() const { return eta2_; }

  CInterval xi_at(long long x, long long y) const;
  CInterval eta_at(long long x, long long y) const;

  // root index j of the related class <-> twist index k of the pair list
  static int k_of_j(int j) { return j == 0 ? 0 : 3 - j; }
  static int j_of_k(int k) { return k == 0 ? 0 : 3 - k; }

 private:
  BinaryCubicForm form_;
  Int disc_;
  unsigned prec_;
  unsigned work_prec_;
  RootTriple roots_;
  CInterval xi1_, xi2_, eta1_, eta2_;
};

ResolventData build_resolvent(const BinaryCubicForm& f, unsigned prec_bits);

// Full evaluation at an integer point (throws OriginPoint at (0,0)).
PointEvaluation eval_point(const ResolventData& r, long long x, long long y);

// Same, but with the resolvent pair fixed by root index j instead of the
// related one (used for cross-class lattice decompositions).
PointEvaluation eval_point_in_class(const ResolventData& r, long long x, long long y,
                                    int j);

// Index k in {0,1,2} minimizing |omega^k - eta(x,y)/xi(x,y)|.
int classify_related(const ResolventData& r, long long x, long long y);

// g(t) = sqrt2 * asinh(exp(-sqrt6 t / 2) / 2); throws NegativeArgument.
Real g_function(const Real& t);
Interval g_interval(const Interval& t);

// Upper bound for H along the solution curve from the (t, s) coordinates.
// literal_exponent reproduces the decay term as e^{-4t/6} instead of
// e^{-4t/sqrt6}.
Interval hessian_coordinate_bound(const Interval& t, const Interval& s, const Int& D,
                                  unsigned prec_bits, bool literal_exponent = false);

}  // namespace thue
