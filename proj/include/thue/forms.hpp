#pragma once

#include <utility>

#include "thue/numerics.hpp"

namespace thue {

// Binary cubic form a x^3 + b x^2 y + c x y^2 + d y^3 with exact integer
// coefficients.
struct BinaryCubicForm {
  Int a, b, c, d;

  friend bool operator==(const BinaryCubicForm& f, const BinaryCubicForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
  }
};

// A x^2 + B x y + C y^2
struct QuadraticForm {
  Int A, B, C;

  friend bool operator==(const QuadraticForm& f, const QuadraticForm& g) {
    return f.A == g.A && f.B == g.B && f.C == g.C;
  }
};

// Integer matrix [[a1, a2], [a3, a4]] of determinant +-1, acting by
// (x, y) -> (a1 x + a2 y, a3 x + a4 y).
struct UnimodularMap {
  Int a1, a2, a3, a4;

  static UnimodularMap identity() { return {1, 0, 0, 1}; }
  Int det() const { return a1 * a4 - a2 * a3; }
  bool is_unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
  }
  UnimodularMap inverse() const;  // throws NotUnimodular

  friend bool operator==(const UnimodularMap& f, const UnimodularMap& g) {
    return f.a1 == g.a1 && f.a2 == g.a2 && f.a3 == g.a3 && f.a4 == g.a4;
  }
};

// gamma * delta, so that (F o gamma) o delta = F o (gamma * delta).
UnimodularMap compose(const UnimodularMap& gamma, const UnimodularMap& delta);

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y);
Int evaluate(const QuadraticForm& h, const Int& x, const Int& y);

// 18abcd + b^2c^2 - 27a^2d^2 - 4ac^3 - 4b^3d
Int discriminant(const BinaryCubicForm& f);

// Hessian covariant (b^2-3ac, bc-9ad, c^2-3bd); B^2 - 4AC = -3 D.
QuadraticForm hessian(const BinaryCubicForm& f);

// G = F_x H_y - F_y H_x; satisfies 4H^3 = G^2 + 27 D F^2.
BinaryCubicForm g_covariant(const BinaryCubicForm& f);

// Verifies the syzygy 4H^3 = G^2 + 27 D F^2 coefficient-wise in exact
// integer arithmetic.
bool syzygy_check(const BinaryCubicForm& f);

BinaryCubicForm apply_unimodular(const BinaryCubicForm& f, const UnimodularMap& g);
QuadraticForm apply_unimodular(const QuadraticForm& h, const UnimodularMap& g);

// True when the Hessian satisfies C >= A >= |B|.
bool is_reduced(const BinaryCubicForm& f);

// Gauss-reduces the (positive definite) Hessian, driving the form with it.
// Returns (f_red, gamma) with f_red = f o gamma and discriminant unchanged.
// Requires discriminant(f) > 0.
std::pair<BinaryCubicForm, UnimodularMap> reduce(const BinaryCubicForm& f);

// A cubic form is reducible over Q iff a == 0 or F(x,1) has a rational root.
bool irreducible_over_q(const BinaryCubicForm& f);

}  // namespace thue
