#pragma once

#include <cstdint>
#include <vector>

#include "galois.hpp"

namespace mixedcode {

// element a + u*b of F_q[u]/(u^2)
struct QGR {
  uint8_t a = 0, b = 0;
  bool operator==(const QGR&) const = default;
};

inline QGR qgr_add(const Field& F, QGR x, QGR y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
inline QGR qgr_sub(const Field& F, QGR x, QGR y) { return {F.sub(x.a, y.a), F.sub(x.b, y.b)}; }
// (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1)
inline QGR qgr_mul(const Field& F, QGR x, QGR y) {
  return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}
inline bool qgr_is_unit(QGR x) { return x.a != 0; }

// vector over F_q[u]/(u^2): entry i is d[i] + u*e[i]
struct QGRVector {
  const Field* F = nullptr;
  std::vector<uint8_t> d, e;

  bool operator==(const QGRVector& o) const { return d == o.d && e == o.e; }
  bool operator<(const QGRVector& o) const { return d != o.d ? d < o.d : e < o.e; }
};

// one coordinate of the mixed alphabet F_q[u]/(u^2) x F_q
struct MixedSymbol {
  QGR ring;
  uint8_t field = 0;
};

// vector over the mixed alphabet, stored as three parallel F_q^m vectors:
// entry i is (w1[i] + u*w2[i], w3[i])
struct MixedVector {
  const Field* F = nullptr;
  std::vector<uint8_t> w1, w2, w3;

  MixedSymbol symbol(size_t i) const { return {{w1[i], w2[i]}, w3[i]}; }
  bool operator==(const MixedVector& o) const { return w1 == o.w1 && w2 == o.w2 && w3 == o.w3; }
  bool operator<(const MixedVector& o) const {
    if (w1 != o.w1) return w1 < o.w1;
    if (w2 != o.w2) return w2 < o.w2;
    return w3 < o.w3;
  }
};

// <r, s> = sum_i (ring parts multiplied) + u * sum_i (field parts multiplied);
// throws length_mismatch when the lengths differ.
QGR mixed_inner_product(const MixedVector& r, const MixedVector& s);

// Phi(d + u e) = (e, d + e), an F_q-linear Lee/Hamming isometry
FieldVector gray_map(const QGRVector& v);

// wt_L(d + u e) = wt_H(e) + wt_H(d + e)
unsigned lee_weight(const QGRVector& v);

}  // namespace mixedcode
