#include "thue/forms.hpp"

#include <array>

namespace thue {

UnimodularMap UnimodularMap::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw NotUnimodular("determinant " + d.get_str());
  return {d * a4, -d * a2, -d * a3, d * a1};
}

UnimodularMap compose(const UnimodularMap& g, const UnimodularMap& h) {
  return {g.a1 * h.a1 + g.a2 * h.a3, g.a1 * h.a2 + g.a2 * h.a4,
          g.a3 * h.a1 + g.a4 * h.a3, g.a3 * h.a2 + g.a4 * h.a4};
}

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y) {
  return f.a * x * x * x + f.b * x * x * y + f.c * x * y * y + f.d * y * y * y;
}

Int evaluate(const QuadraticForm& h, const Int& x, const Int& y) {
  return h.A * x * x + h.B * x * y + h.C * y * y;
}

Int discriminant(const BinaryCubicForm& f) {
  return cubic_poly_discriminant(f.a, f.b, f.c, f.d);
}

QuadraticForm hessian(const BinaryCubicForm& f) {
  return {f.b * f.b - 3 * f.a * f.c, f.b * f.c - 9 * f.a * f.d,
          f.c * f.c - 3 * f.b * f.d};
}

BinaryCubicForm g_covariant(const BinaryCubicForm& f) {
  QuadraticForm h = hessian(f);
  return {3 * f.a * h.B - 2 * f.b * h.A,
          6 * f.a * h.C + f.b * h.B - 4 * f.c * h.A,
          4 * f.b * h.C - f.c * h.B - 6 * f.d * h.A,
          2 * f.c * h.C - 3 * f.d * h.B};
}

namespace {

// coefficients of a degree-6 binary form, index = power of x
using Sextic = std::array<Int, 7>;

Sextic cube_of_quadratic(const QuadraticForm& h) {
  // (A x^2 + B xy + C y^2)^3
  Sextic r{};
  const Int &A = h.A, &B = h.B, &C = h.C;
  r[6] = A * A * A;
  r[5] = 3 * A * A * B;
  r[4] = 3 * A * A * C + 3 * A * B * B;
  r[3] = 6 * A * B * C + B * B * B;
  r[2] = 3 * A * C * C + 3 * B * B * C;
  r[1] = 3 * B * C * C;
  r[0] = C * C * C;
  return r;
}

Sextic square_of_cubic(const BinaryCubicForm& f) {
  Sextic r{};
  const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  r[6] = a * a;
  r[5] = 2 * a * b;
  r[4] = 2 * a * c + b * b;
  r[3] = 2 * a * d + 2 * b * c;
  r[2] = 2 * b * d + c * c;
  r[1] = 2 * c * d;
  r[0] = d * d;
  return r;
}

}  // namespace

bool syzygy_check(const BinaryCubicForm& f) {
  Int D = discriminant(f);
  Sextic lhs = cube_of_quadratic(hessian(f));
  Sextic g2 = square_of_cubic(g_covariant(f));
  Sextic f2 = square_of_cubic(f);
  for (int i = 0; i < 7; ++i) {
    if (4 * lhs[static_cast<size_t>(i)] !=
        g2[static_cast<size_t>(i)] + 27 * D * f2[static_cast<size_t>(i)])
      return false;
  }
  return true;
}

BinaryCubicForm apply_unimodular(const BinaryCubicForm& f, const UnimodularMap& g) {
  if (!g.is_unimodular()) throw NotUnimodular("determinant " + g.det().get_str());
  // F(a1 x + a2 y, a3 x + a4 y), expanded by evaluating the new coefficients:
  // new_a = F(a1, a3), new_d = F(a2, a4), and the mixed terms from the
  // trinomial expansion of each monomial.
  const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  const Int &p = g.a1, &q = g.a2, &r = g.a3, &s = g.a4;
  BinaryCubicForm out;
  out.a = evaluate(f, p, r);
  out.d = evaluate(f, q, s);
  out.b = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) +
          c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
  out.c = 3 * a * p * q * q + b * (2 * p * q * s + q * q * r) +
          c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
  return out;
}

QuadraticForm apply_unimodular(const QuadraticForm& h, const UnimodularMap& g) {
  if (!g.is_unimodular()) throw NotUnimodular("determinant " + g.det().get_str());
  const Int &A = h.A, &B = h.B, &C = h.C;
  const Int &p = g.a1, &q = g.a2, &r = g.a3, &s = g.a4;
  return {A * p * p + B * p * r + C * r * r,
          2 * A * p * q + B * (p * s + q * r) + 2 * C * r * s,
          A * q * q + B * q * s + C * s * s};
}

bool is_reduced(const BinaryCubicForm& f) {
  QuadraticForm h = hessian(f);
  Int aB(::abs(h.B));
  return h.C >= h.A && h.A >= aB;
}

std::pair<BinaryCubicForm, UnimodularMap> reduce(const BinaryCubicForm& f) {
  Int D = discriminant(f);
  if (D <= 0)
    throw NonPositiveDiscriminant("discriminant " + D.get_str() + " <= 0");

  BinaryCubicForm cur = f;
  UnimodularMap total = UnimodularMap::identity();
  const UnimodularMap swap_xy{0, 1, 1, 0};

  for (;;) {
    QuadraticForm h = hessian(cur);
    Int aB(::abs(h.B));
    if (h.C >= h.A && h.A >= aB) break;
    if (h.A > aB || (h.A == aB && h.C < h.A)) {
      // |B| <= A already; bring the smaller outer coefficient to the front
      cur = apply_unimodular(cur, swap_xy);
      total = compose(total, swap_xy);
    } else {
      // shear x -> x + k y with k = floor((A - B) / 2A), giving B' in (-A, A]
      Int k;
      Int num = h.A - h.B;
      Int den = 2 * h.A;
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      UnimodularMap shear{1, k, 0, 1};
      cur = apply_unimodular(cur, shear);
      total = compose(total, shear);
    }
  }
  return {cur, total};
}

bool irreducible_over_q(const BinaryCubicForm& f) {
  if (f.a == 0) return false;
  return !cubic_has_rational_root(f.a, f.b, f.c, f.d);
}

}  // namespace thue
