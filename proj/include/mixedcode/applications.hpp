#pragma once

#include <optional>

#include "mixedcode/analysis.hpp"

namespace mixedcode {

// Recovery rule for one coordinate: code.span column j equals the given
// F_q-combination of helper columns (empty for an identically-zero coordinate).
struct LocalityWitness {
  std::vector<uint32_t> helpers;
  std::vector<uint8_t> coefficients;
};

struct LocalityReport {
  unsigned locality = 0;  // max over coordinates
  std::vector<unsigned> per_coordinate;
  std::vector<LocalityWitness> witnesses;
  unsigned searched_up_to = 0;
};

// Least r per coordinate such that the coordinate is a combination of r other
// coordinates, searched exhaustively for r <= cap (cap at most 4). Witnesses
// are re-verified before returning. Throws not_found_within_cap when some
// coordinate needs more than cap helpers.
LocalityReport locality(const FieldCode& code, unsigned cap = 4);

// Dimension bound for an [n, k, d] locally recoverable code with locality r,
// with the alphabet-optimal k_opt term replaced by the largest k the Griesmer
// bound admits: bound = min over t >= 1 of t*r + k_griesmer(n - t(r+1), d).
struct CMOptimalityReport {
  uint64_t bound = 0;
  bool optimal = false;  // k == bound ("alphabet-optimal under the Griesmer proxy")
};
CMOptimalityReport cm_alphabet_optimality(uint64_t n, unsigned k, uint64_t d, unsigned q,
                                          unsigned r);

// Secret sharing in Massey's scheme: the shares are generated by the dual of
// the given code, the secret sits at coordinate h0_index. A participant set T
// can access the secret iff some codeword of the given code has entry 1 at h0
// and support inside T u {h0}; minimal access sets are the inclusion-minimal
// supports minus h0. When the code is minimal there are exactly q^{k-1} of
// them and the non-dictatorial membership count is (q-1) q^{k-2}.
struct MasseyReport {
  uint32_t h0_index = 0;
  uint32_t participants = 0;
  std::vector<uint32_t> participant_columns;   // original column indices, in order
  std::vector<uint64_t> minimal_access_sets;   // bitmasks over participant positions
  std::vector<uint32_t> dictatorial;           // column indices whose singleton set has access
  std::vector<uint64_t> per_participant_membership;  // minimal sets containing each participant
  std::optional<bool> code_is_minimal;         // exhaustive check when the code fits 2^14
};

// Requires participants = length - 1 <= 20 (the access structure is walked as
// a 2^participants table). Throws zero_column when column h0 is zero.
MasseyReport massey_report(const FieldCode& code, uint32_t h0_index = 0);

// Independent access test by direct rank comparison (for cross-checking).
bool massey_can_access(const FieldCode& code, uint32_t h0_index,
                       const std::vector<uint32_t>& participant_cols);

// Coset graph of a code: vertices are the q^(n-k) syndromes of a full-rank
// parity matrix, s adjacent to s + syndrome(alpha e_j). Simple and regular of
// degree |connection|; a zero parity column (a single-symbol change that stays
// in the code) raises loop_error.
struct CosetGraph {
  const Field* F = nullptr;
  FieldMatrix parity;  // (n - k) x n, full row rank
  uint64_t vertices = 0;
  std::vector<uint64_t> connection;               // sorted distinct vertex ids
  std::vector<std::vector<uint8_t>> connection_vec;  // the same syndromes as digit vectors
  uint64_t degree = 0;

  std::vector<uint64_t> neighbors(uint64_t v) const;
  // dense boolean matrix, vertices x vertices; guarded by matrix_cap on vertices
  std::vector<uint8_t> adjacency_matrix(uint64_t matrix_cap = uint64_t(1) << 12) const;
};

CosetGraph coset_graph(const FieldCode& code, uint64_t vertex_cap = uint64_t(1) << 16);

bool is_connected(const CosetGraph& g);

// Exact spectrum by character sums: eigenvalue n'(q-1) - q * wt(y H') where H'
// is the parity matrix with columns deduplicated up to scalars (n' classes)
// and y runs over all syndromes. Pairs (eigenvalue, multiplicity), descending.
std::vector<std::pair<int64_t, uint64_t>> coset_graph_spectrum(const CosetGraph& g,
                                                               const EnumerationConfig& cfg = {});

// Walk counts at length ell: nu over identical pairs, lambda over adjacent
// pairs, mu over distinct non-adjacent pairs. is_swrg iff each class is
// constant (vacuously for an empty class).
struct SWRGReport {
  unsigned ell = 0;
  uint64_t degree = 0;
  bool connected = false;
  uint64_t lambda = 0, mu = 0, nu = 0;
  bool is_swrg = false;
  std::vector<std::pair<int64_t, uint64_t>> spectrum;
};

// Dense uint64 matrix powers; vertices capped (vertex_cap <= 2^12) and
// degree^ell checked against 2^63 before multiplying.
SWRGReport walk_regularity_check(const CosetGraph& g, unsigned ell,
                                 uint64_t vertex_cap = uint64_t(1) << 12);

// Predicted invariants for the coset graph attached to the q = 4, B = A,
// |A| = m-1 projective family with |C| = c: theta = 2^{4m+2c-3}, degree
// 3*theta, spectrum {3theta:1, theta:6, 0:4^{2m+c}-16, -theta:9}, and for odd
// ell >= 3 the walk counts lambda = (3^ell - 3) theta^ell / 4^{2m+c} +
// theta^{ell-1}, mu = nu = (3^ell - 3) theta^ell / 4^{2m+c}.
struct SWRGPrediction {
  uint64_t theta = 0;
  uint64_t degree = 0;
  uint64_t vertices = 0;
  uint64_t lambda = 0, mu = 0, nu = 0;
  std::vector<std::pair<int64_t, uint64_t>> spectrum;
};
SWRGPrediction swrg_predicted(unsigned m, unsigned c, unsigned ell);

}  // namespace mixedcode
