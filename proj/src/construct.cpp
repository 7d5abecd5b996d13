#include "mixedcode/construct.hpp"

#include <algorithm>
#include <map>

namespace mixedcode {

namespace {

uint64_t ipow_checked(uint64_t base, uint64_t e, uint64_t cap) {
  uint64_t r = 1;
  while (e--) {
    if (r > cap / base) fail(errc::too_large, "enumeration exceeds budget");
    r *= base;
  }
  return r;
}

uint8_t dot(const Field& F, const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
  uint8_t acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
  return acc;
}

std::vector<uint8_t> normalize_column(const Field& F, const std::vector<uint8_t>& col) {
  for (uint8_t v : col)
    if (v) {
      uint8_t s = F.inv(v);
      std::vector<uint8_t> out(col.size());
      for (size_t i = 0; i < col.size(); ++i) out[i] = F.mul(s, col[i]);
      return out;
    }
  fail(errc::zero_column, "cannot normalize the zero column");
}

}  // namespace

RingMatrix ring_spanning_matrix(const Field& F, unsigned m, const std::vector<MixedVector>& D) {
  RingMatrix M(F, 2 * size_t(m), D.size());
  for (size_t j = 0; j < D.size(); ++j) {
    const MixedVector& w = D[j];
    for (unsigned i = 0; i < m; ++i) {
      M.at_d(i, j) = w.w1[i];
      M.at_e(i, j) = w.w2[i];
      M.at_e(m + i, j) = w.w3[i];
    }
  }
  return M;
}

FieldMatrix gray_spanning_matrix(const Field& F, unsigned m, const std::vector<MixedVector>& D) {
  FieldMatrix G(F, 3 * size_t(m), 2 * D.size());
  for (size_t j = 0; j < D.size(); ++j) {
    const MixedVector& w = D[j];
    for (unsigned i = 0; i < m; ++i) {
      G.at(i, 2 * j) = w.w2[i];
      G.at(m + i, 2 * j) = w.w3[i];
      G.at(2 * m + i, 2 * j) = w.w1[i];
      G.at(i, 2 * j + 1) = F.add(w.w1[i], w.w2[i]);
      G.at(m + i, 2 * j + 1) = w.w3[i];
      G.at(2 * m + i, 2 * j + 1) = w.w1[i];
    }
  }
  return G;
}

RingCode code_from_defining_set(const DefiningSetSpec& spec) {
  uint64_t n = defining_set_size(spec);
  if (n > (uint64_t(1) << 26)) fail(errc::too_large, "defining set too large to materialize");
  auto D = build_defining_set(spec);
  const Field& F = field_cache(spec.q);
  RingCode code;
  code.spec = spec;
  code.length = D.size();
  code.span = ring_spanning_matrix(F, spec.m, D);
  return code;
}

FieldCode gray_code(const RingCode& code) {
  auto D = build_defining_set(code.spec);
  const Field& F = *code.span.F;
  FieldCode out;
  out.F = &F;
  out.length = 2 * code.length;
  out.span = gray_spanning_matrix(F, code.spec.m, D);
  return out;
}

FieldMatrix ColumnMultiset::as_matrix() const {
  FieldMatrix M(*F, dim, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < dim; ++i) M.at(i, j) = cols[j][i];
  return M;
}

ColumnMultiset gray_multiset(MultisetKind kind, const DefiningSetSpec& spec) {
  DefiningSetSpec s = spec;
  switch (kind) {
    case MultisetKind::N1: s.kind = SetKind::S1; break;
    case MultisetKind::N2: s.kind = SetKind::S2; break;
    case MultisetKind::N3: s.kind = SetKind::S3; break;
    case MultisetKind::N4: s.kind = SetKind::S4; break;
  }
  auto D = build_defining_set(s);
  const Field& F = field_cache(s.q);
  unsigned m = s.m;
  ColumnMultiset out;
  out.F = &F;
  out.dim = 3 * size_t(m);
  out.cols.reserve(2 * D.size());
  for (const auto& w : D) {
    for (int pick = 0; pick < 2; ++pick) {
      std::vector<uint8_t> col(3 * size_t(m));
      for (unsigned i = 0; i < m; ++i) {
        uint8_t t = pick ? w.w1[i] : 0;
        col[i] = F.add(w.w2[i], t);
        col[m + i] = w.w3[i];
        col[2 * m + i] = w.w1[i];
      }
      out.cols.push_back(std::move(col));
    }
  }
  return out;
}

ColumnMultiset dedupe_projective(const ColumnMultiset& src, bool require_full_classes) {
  const Field& F = *src.F;
  ColumnMultiset out;
  out.F = src.F;
  out.dim = src.dim;
  std::map<std::vector<uint8_t>, std::multiset<std::vector<uint8_t>>> classes;
  for (const auto& col : src.cols) {
    auto norm = normalize_column(F, col);
    auto it = classes.find(norm);
    if (it == classes.end()) {
      classes.emplace(norm, std::multiset<std::vector<uint8_t>>{col});
      out.cols.push_back(norm);
    } else {
      it->second.insert(col);
    }
  }
  if (require_full_classes) {
    for (const auto& [norm, members] : classes) {
      if (members.size() != size_t(F.q) - 1)
        fail(errc::internal_error, "projective class size differs from q-1");
      std::multiset<std::vector<uint8_t>> expect;
      for (unsigned a = 1; a < F.q; ++a) {
        std::vector<uint8_t> scaled(norm.size());
        for (size_t i = 0; i < norm.size(); ++i) scaled[i] = F.mul(uint8_t(a), norm[i]);
        expect.insert(std::move(scaled));
      }
      if (members != expect)
        fail(errc::internal_error, "projective class is not a full scalar orbit");
    }
  }
  return out;
}

ColumnMultiset projective_representatives(RepKind kind, const DefiningSetSpec& spec) {
  MultisetKind mk;
  switch (kind) {
    case RepKind::N2bar:
      if (!spec.B.subset_of(spec.A))
        fail(errc::side_condition_violated, "N2bar requires B subseteq A");
      if (spec.A.is_full()) fail(errc::side_condition_violated, "N2bar requires |A| < m");
      mk = MultisetKind::N2;
      break;
    case RepKind::N4bar:
      if (!spec.A.disjoint_from(spec.B))
        fail(errc::side_condition_violated, "N4bar requires A and B disjoint");
      if (spec.C.is_full()) fail(errc::side_condition_violated, "N4bar requires |C| < m");
      if (spec.A.size() < 2) fail(errc::side_condition_violated, "N4bar requires |A| >= 2");
      mk = MultisetKind::N4;
      break;
    default:
      fail(errc::internal_error, "unreachable kind");
  }
  return dedupe_projective(gray_multiset(mk, spec), true);
}

FieldCode code_from_columns(const ColumnMultiset& cols) {
  FieldCode out;
  out.F = cols.F;
  out.length = cols.cols.size();
  out.span = cols.as_matrix();
  return out;
}

std::set<std::vector<uint8_t>> ring_code_direct_eval(const Field& F, unsigned m,
                                                     const std::vector<MixedVector>& D,
                                                     uint64_t budget) {
  uint64_t total = ipow_checked(F.q, 3 * uint64_t(m), budget);
  std::set<std::vector<uint8_t>> out;
  std::vector<uint8_t> x(m), y(m), z(m);
  for (uint64_t msg = 0; msg < total; ++msg) {
    uint64_t rem = msg;
    for (unsigned i = 0; i < m; ++i) { x[i] = uint8_t(rem % F.q); rem /= F.q; }
    for (unsigned i = 0; i < m; ++i) { y[i] = uint8_t(rem % F.q); rem /= F.q; }
    for (unsigned i = 0; i < m; ++i) { z[i] = uint8_t(rem % F.q); rem /= F.q; }
    // message (x + u*y, z): coordinate at (w1 + u*w2, w3) is
    // x.w1 + u*(x.w2 + y.w1 + z.w3)
    std::vector<uint8_t> word(D.size());
    for (size_t j = 0; j < D.size(); ++j) {
      uint8_t a = dot(F, x, D[j].w1);
      uint8_t b = F.add(F.add(dot(F, x, D[j].w2), dot(F, y, D[j].w1)), dot(F, z, D[j].w3));
      word[j] = uint8_t(a + F.q * b);
    }
    out.insert(std::move(word));
  }
  return out;
}

std::set<std::vector<uint8_t>> ring_row_space_set(const RingMatrix& M, uint64_t budget) {
  const Field& F = *M.F;
  uint64_t total = ipow_checked(uint64_t(F.q) * F.q, M.rows, budget);
  std::set<std::vector<uint8_t>> out;
  std::vector<uint8_t> cd(M.rows), ce(M.rows);
  for (uint64_t msg = 0; msg < total; ++msg) {
    uint64_t rem = msg;
    for (size_t r = 0; r < M.rows; ++r) {
      cd[r] = uint8_t(rem % F.q); rem /= F.q;
      ce[r] = uint8_t(rem % F.q); rem /= F.q;
    }
    std::vector<uint8_t> word(M.cols);
    for (size_t j = 0; j < M.cols; ++j) {
      uint8_t a = 0, b = 0;
      for (size_t r = 0; r < M.rows; ++r) {
        // (cd + u*ce)(d + u*e) = cd*d + u*(cd*e + ce*d)
        a = F.add(a, F.mul(cd[r], M.at_d(r, j)));
        b = F.add(b, F.add(F.mul(cd[r], M.at_e(r, j)), F.mul(ce[r], M.at_d(r, j))));
      }
      word[j] = uint8_t(a + F.q * b);
    }
    out.insert(std::move(word));
  }
  return out;
}

std::set<std::vector<uint8_t>> gray_image_set(const Field& F, unsigned m,
                                              const std::vector<MixedVector>& D,
                                              uint64_t budget) {
  auto ring_words = ring_code_direct_eval(F, m, D, budget);
  std::set<std::vector<uint8_t>> out;
  for (const auto& word : ring_words) {
    std::vector<uint8_t> img(2 * word.size());
    for (size_t j = 0; j < word.size(); ++j) {
      uint8_t a = uint8_t(word[j] % F.q), b = uint8_t(word[j] / F.q);
      img[2 * j] = b;
      img[2 * j + 1] = F.add(a, b);
    }
    out.insert(std::move(img));
  }
  return out;
}

std::set<std::vector<uint8_t>> field_row_space_set(const FieldMatrix& G, uint64_t budget) {
  std::set<std::vector<uint8_t>> out;
  EnumerationConfig cfg;
  cfg.budget = budget;
  row_space_enumerate(G, [&](const uint8_t* word, unsigned) {
    out.insert(std::vector<uint8_t>(word, word + G.cols));
  }, cfg);
  return out;
}

}  // namespace mixedcode
