#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace mixedcode {

// Arithmetic tables for GF(q), q = p^k with 2 <= q <= 256.
//
// Element encoding: the base-p digit string of the coordinate vector in the
// power basis 1, x, ..., x^{k-1}, i.e. value = sum c_i p^i. The reduction
// modulus is the monic irreducible degree-k polynomial over GF(p) whose
// non-leading coefficient string has the smallest base-p integer value;
// irreducibility is re-verified during construction.
class Field {
public:
  unsigned q = 0, p = 0, k = 0;
  std::vector<uint8_t> modulus;    // k+1 coefficients, constant term first, leading coefficient 1
  std::vector<uint8_t> exp_table;  // exp_table[i] = g^i for i in [0, q-1), g the smallest generator
  std::vector<uint8_t> log_table;  // inverse of exp_table on nonzero elements; log_table[0] = 0 (unused)
  std::vector<uint8_t> add_t, mul_t;  // flat q*q lookup tables
  std::vector<uint8_t> neg_t, inv_t;  // inv_t[0] unused

  uint8_t add(uint8_t a, uint8_t b) const { return add_t[size_t(a) * q + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_t[size_t(a) * q + neg_t[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_t[size_t(a) * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_t[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return inv_t[a];
  }
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
};

// Throws out_of_range unless 2 <= q <= 256, non_prime_power unless q = p^k.
Field make_field(unsigned q);

// Shared immutable instance, built once per q.
const Field& field_cache(unsigned q);

struct FieldVector {
  const Field* F = nullptr;
  std::vector<uint8_t> v;

  bool operator==(const FieldVector& o) const { return v == o.v; }
  bool operator<(const FieldVector& o) const { return v < o.v; }
};

struct FieldMatrix {
  const Field* F = nullptr;
  size_t rows = 0, cols = 0;
  std::vector<uint8_t> a;  // row-major

  FieldMatrix() = default;
  FieldMatrix(const Field& field, size_t r, size_t c) : F(&field), rows(r), cols(c), a(r * c, 0) {}
  uint8_t& at(size_t r, size_t c) { return a[r * cols + c]; }
  uint8_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

unsigned hamming_weight(const FieldVector& v);
unsigned hamming_weight(const uint8_t* v, size_t n);

// Canonical integer form: first coordinate is the most significant base-q digit.
uint64_t encode_vector(const Field& F, const uint8_t* v, size_t n);
inline uint64_t encode_vector(const FieldVector& v) { return encode_vector(*v.F, v.v.data(), v.v.size()); }
FieldVector decode_vector(const Field& F, size_t n, uint64_t value);

// Reduced row echelon form with zero rows stripped; result.rows == rank(M).
FieldMatrix row_reduce(const FieldMatrix& M);
size_t rank(const FieldMatrix& M);

// Rows of the result span {x in F^cols : M x^T = 0}; result.rows == cols - rank(M).
FieldMatrix kernel_basis(const FieldMatrix& M);

struct EnumerationConfig {
  uint64_t budget = uint64_t(1) << 30;  // max row-space size before too_large
  unsigned threads = 1;
};

// Visits every vector of the row space of G exactly once, in reflected base-q
// Gray order over a reduced row basis: consecutive codewords differ by one
// scalar multiple of a single basis row. visit receives the codeword (length
// G.cols) and its Hamming weight. Throws too_large when q^rank(G) exceeds
// cfg.budget. Single-threaded; the visit order is deterministic.
void row_space_enumerate(const FieldMatrix& G,
                         const std::function<void(const uint8_t*, unsigned)>& visit,
                         const EnumerationConfig& cfg = {});

// Hamming weight histogram of the row space of G (index = weight). Same
// budget rule as row_space_enumerate. Result is byte-identical for any thread
// count: parallel runs partition the enumeration by leading Gray digits and
// merge per-block histograms in block order.
std::vector<uint64_t> weight_histogram(const FieldMatrix& G, const EnumerationConfig& cfg = {});

}  // namespace mixedcode
