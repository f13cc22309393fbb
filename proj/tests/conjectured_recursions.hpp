#pragma once

// Recursions stated only conjecturally, with their coefficient formulas
// transcribed as polynomials in the sequence parameters.

#include "detseq/detseq.hpp"

namespace detseq::testing {

/// Three-periodic symmetric triangle alpha = (a0, a1, a2, a0, ...): order 5.
inline RecursionReport periodic3_symmetric_recursion(const Scalar& a0, const Scalar& a1, const Scalar& a2) {
  const Scalar s = a0 + a1 + a2;
  const Scalar d1 = Scalar(11) * a1 + Scalar(5) * a2;
  const Scalar d2 = -(Scalar(3) * a0 * a0 + Scalar(37) * a1 * a1 + Scalar(3) * a2 * a2 + Scalar(15) * a0 * a1 +
                      Scalar(5) * a0 * a2 + Scalar(24) * a1 * a2);
  return make_report({d1, d2, -s * d2, -pow(s, 3) * d1, pow(s, 5)}, 1, 6);
}

/// Two three-periodic sequences with common first term g: order 6.
inline RecursionReport periodic3_pair_recursion(const Scalar& g, const Scalar& a1, const Scalar& a2, const Scalar& b1,
                                                const Scalar& b2) {
  const Scalar q = (g + a1 + a2) * (g + b1 + b2);
  const Scalar d1 = g + Scalar(6) * (a1 + b1) + Scalar(3) * (a2 + b2);
  const Scalar d2 = -(Scalar(3) * g * g + Scalar(12) * (a1 * a1 + b1 * b1) + Scalar(13) * g * (a1 + b1) +
                      Scalar(5) * g * (a2 + b2) + Scalar(9) * (a1 * a2 + b1 * b2) + Scalar(11) * (a1 * b2 + a2 * b1) +
                      Scalar(24) * a1 * b1 + Scalar(8) * a2 * b2);
  const Scalar d3 =
      Scalar(6) * pow(g, 3) + g * g * (Scalar(18) * (a1 + b1) + Scalar(8) * (a2 + b2)) +
      g * (Scalar(25) * (a1 * a1 + b1 * b1) + Scalar(3) * (a2 * a2 + b2 * b2) + Scalar(18) * (a1 * a2 + b1 * b2) +
           Scalar(54) * a1 * b1 + Scalar(26) * (a1 * b2 + a2 * b1) + Scalar(10) * a2 * b2) +
      Scalar(9) * (pow(a1, 3) + pow(b1, 3)) + Scalar(9) * (a1 * a1 * a2 + b1 * b1 * b2) +
      Scalar(28) * (a1 * a1 * b1 + a1 * b1 * b1) + Scalar(22) * (a1 * a1 * b2 + a2 * b1 * b1) +
      Scalar(3) * (a1 * b2 * b2 + a2 * a2 * b1) + Scalar(3) * (a2 * a2 * b2 + a2 * b2 * b2) +
      Scalar(30) * (a1 * a2 * b1 + a1 * b1 * b2) + Scalar(24) * (a1 * a2 * b2 + a2 * b1 * b2);
  return make_report({d1, d2, d3, q * d2, q * q * d1, -pow(q, 3)}, 1, 7);
}

struct Order3SymmetricInstance {
  Scalar a0, a1, a2;
  Scalar A1, A2, A3;
};

inline Scalar order3_rho(const Order3SymmetricInstance& x) {
  return -x.A3 * x.a0 + (Scalar(-2) + Scalar(2) * x.A1 + x.A2 + x.A3) * x.a1 - x.a2;
}

/// Symmetric triangle of an order-3 recurrence: order 5 with the rho-symmetry.
inline RecursionReport order3_symmetric_recursion(const Order3SymmetricInstance& x) {
  const Scalar &A1 = x.A1, &A2 = x.A2, &A3 = x.A3;
  const Scalar rho = order3_rho(x);
  const Scalar d1 = A3 * (Scalar(1) - Scalar(2) * A1 - Scalar(2) * A2 - A3) * x.a0 +
                    (Scalar(10) - Scalar(10) * A1 - A2 + A3 + Scalar(4) * A1 * A1 + Scalar(2) * A1 * A2) * x.a1 +
                    (Scalar(5) - Scalar(4) * A1 - Scalar(2) * A2) * x.a2;
  const Scalar s = Scalar(2) * A1 + A2 + A3;
  const Scalar c00 = -A3 * A3 * (Scalar(2) - Scalar(2) * A1 + Scalar(2) * A2 + A3 + A1 * A1);
  const Scalar c11 = Scalar(-40) + Scalar(80) * A1 + Scalar(16) * A2 + Scalar(4) * A3 - Scalar(64) * A1 * A1 -
                     Scalar(2) * A2 * A2 - A3 * A3 - Scalar(28) * A1 * A2 - Scalar(20) * A1 * A3 -
                     Scalar(2) * A2 * A3 + Scalar(2) * A1 * s * (Scalar(6) * A1 + A2 + A3) - A1 * A1 * s * s;
  const Scalar c22 = Scalar(-10) + Scalar(12) * A1 + Scalar(6) * A2 + Scalar(8) * A3 - s * s;
  const Scalar c01 = -A3 * (Scalar(16) - Scalar(28) * A1 + Scalar(16) * A1 * A1 - Scalar(2) * A2 * A2 - A3 * A3 +
                            Scalar(2) * A1 * A3 - Scalar(3) * A2 * A3 - Scalar(2) * A1 * A1 * s);
  const Scalar c02 = -A3 * (Scalar(8) - Scalar(10) * A1 - Scalar(3) * A3 + Scalar(2) * A1 * s);
  const Scalar c12 = Scalar(2) * (Scalar(-20) + Scalar(32) * A1 + Scalar(10) * A2 + Scalar(9) * A3 -
                                  Scalar(18) * A1 * A1 - A2 * A2 - A3 * A3 - Scalar(11) * A1 * A2 -
                                  Scalar(12) * A1 * A3 - Scalar(2) * A2 * A3 + A1 * s * s);
  const Scalar d2 = c00 * x.a0 * x.a0 + c11 * x.a1 * x.a1 + c22 * x.a2 * x.a2 + c01 * x.a0 * x.a1 +
                    c02 * x.a0 * x.a2 + c12 * x.a1 * x.a2;
  return make_report({d1, d2, rho * d2, pow(rho, 3) * d1, -pow(rho, 5)}, 1, 6);
}

/// d(1), d(2), d(3) for the same family.
inline std::vector<Scalar> order3_symmetric_initial(const Order3SymmetricInstance& x) {
  return {x.a0, Scalar(2) * x.a0 * x.a1 - x.a1 * x.a1,
          (Scalar(2) * x.a1 - x.a2) * (x.a0 * (Scalar(2) * x.a1 + x.a2) - Scalar(2) * x.a1 * x.a1)};
}

}  // namespace detseq::testing
