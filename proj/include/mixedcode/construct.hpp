#pragma once

#include <set>

#include "mixedcode/complexes.hpp"
#include "mixedcode/rings.hpp"

namespace mixedcode {

// Matrix over F_q[u]/(u^2), stored as parallel F_q parts: entry(r,c) = d + u*e.
struct RingMatrix {
  const Field* F = nullptr;
  size_t rows = 0, cols = 0;
  std::vector<uint8_t> d, e;

  RingMatrix() = default;
  RingMatrix(const Field& f, size_t r, size_t c)
      : F(&f), rows(r), cols(c), d(r * c, 0), e(r * c, 0) {}
  uint8_t& at_d(size_t r, size_t c) { return d[r * cols + c]; }
  uint8_t at_d(size_t r, size_t c) const { return d[r * cols + c]; }
  uint8_t& at_e(size_t r, size_t c) { return e[r * cols + c]; }
  uint8_t at_e(size_t r, size_t c) const { return e[r * cols + c]; }
};

// Ring-linear code presented by a spanning matrix. The code is the set of all
// R-linear combinations of the rows; rows need not be independent.
struct RingCode {
  DefiningSetSpec spec;
  size_t length = 0;
  RingMatrix span;
};

// F_q-linear code presented by a spanning matrix (rows need not be independent).
struct FieldCode {
  const Field* F = nullptr;
  size_t length = 0;
  FieldMatrix span;
};

// Spanning matrix of the ring code of a defining set D = {(w1 + u*w2, w3)}:
// 2m rows, |D| columns; column j is (w1 + u*w2 ; u*w3) of the j-th element.
RingMatrix ring_spanning_matrix(const Field& F, unsigned m, const std::vector<MixedVector>& D);

// Spanning matrix of the Gray image: 3m rows, 2|D| columns. Element j of D
// contributes column 2j = (w2, w3, w1) and column 2j+1 = (w1+w2, w3, w1).
FieldMatrix gray_spanning_matrix(const Field& F, unsigned m, const std::vector<MixedVector>& D);

RingCode code_from_defining_set(const DefiningSetSpec& spec);
FieldCode gray_code(const RingCode& code);

// Column multiset over F_q^dim, kept in construction order.
struct ColumnMultiset {
  const Field* F = nullptr;
  size_t dim = 0;
  std::vector<std::vector<uint8_t>> cols;

  FieldMatrix as_matrix() const;
};

// The Gray column multisets of the four families, produced directly from the
// set ranges: elements (w2 + t, w3, w1) with w1, w2, w3 iterated exactly as in
// the matching defining-set kind and t running over {0, w1} innermost. This
// yields the columns of gray_spanning_matrix in identical order.
enum class MultisetKind { N1, N2, N3, N4 };

ColumnMultiset gray_multiset(MultisetKind kind, const DefiningSetSpec& spec);

// Projective representatives of the two repetition-free families.
//   N2bar: requires B subseteq A, |A| < m.
//   N4bar: requires A disjoint from B, |C| < m, |A| >= 2.
// Every projective class in the source multiset must consist of exactly the
// q-1 nonzero scalar multiples of its representative; violations raise
// internal_error. Representatives are normalized (first nonzero entry = 1)
// and kept in first-seen order.
enum class RepKind { N2bar, N4bar };

ColumnMultiset projective_representatives(RepKind kind, const DefiningSetSpec& spec);
ColumnMultiset dedupe_projective(const ColumnMultiset& src, bool require_full_classes);

FieldCode code_from_columns(const ColumnMultiset& cols);

// Exhaustive codeword sets for small parameters. Ring codewords over
// F_q[u]/(u^2) are serialized entrywise as a + q*b; Gray/field codewords as
// raw digit strings. Throws too_large when the message space exceeds budget.
// Code-level Gray images place the pair (e_j, d_j + e_j) at positions
// (2j, 2j+1), matching the gray_spanning_matrix column layout, so the image
// set equals that matrix's row space coordinate for coordinate. The
// vector-level gray_map keeps the block layout (e, d+e); the two differ by a
// fixed coordinate shuffle and carry identical weights.
std::set<std::vector<uint8_t>> ring_code_direct_eval(const Field& F, unsigned m,
                                                     const std::vector<MixedVector>& D,
                                                     uint64_t budget);
std::set<std::vector<uint8_t>> ring_row_space_set(const RingMatrix& M, uint64_t budget);
std::set<std::vector<uint8_t>> gray_image_set(const Field& F, unsigned m,
                                              const std::vector<MixedVector>& D, uint64_t budget);
std::set<std::vector<uint8_t>> field_row_space_set(const FieldMatrix& G, uint64_t budget);

}  // namespace mixedcode
