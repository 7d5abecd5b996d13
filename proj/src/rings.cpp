#include "mixedcode/rings.hpp"

namespace mixedcode {

QGR mixed_inner_product(const MixedVector& r, const MixedVector& s) {
  if (r.w1.size() != s.w1.size())
    fail(errc::length_mismatch, "mixed inner product of unequal lengths");
  const Field& F = *r.F;
  uint8_t a = 0, b = 0;
  for (size_t i = 0; i < r.w1.size(); ++i) {
    a = F.add(a, F.mul(r.w1[i], s.w1[i]));
    b = F.add(b, F.add(F.mul(r.w1[i], s.w2[i]), F.mul(r.w2[i], s.w1[i])));
    b = F.add(b, F.mul(r.w3[i], s.w3[i]));
  }
  return {a, b};
}

FieldVector gray_map(const QGRVector& v) {
  const Field& F = *v.F;
  size_t n = v.d.size();
  FieldVector out{&F, std::vector<uint8_t>(2 * n)};
  for (size_t i = 0; i < n; ++i) {
    out.v[i] = v.e[i];
    out.v[n + i] = F.add(v.d[i], v.e[i]);
  }
  return out;
}

unsigned lee_weight(const QGRVector& v) {
  const Field& F = *v.F;
  unsigned w = 0;
  for (size_t i = 0; i < v.d.size(); ++i) {
    w += v.e[i] != 0;
    w += F.add(v.d[i], v.e[i]) != 0;
  }
  return w;
}

}  // namespace mixedcode
