#pragma once

#include <cstdint>
#include <map>

#include "mixedcode/construct.hpp"

namespace mixedcode {

enum class Metric { hamming, lee };

// Weight -> frequency over a whole code, zero word included.
struct WeightDistribution {
  std::map<uint64_t, uint64_t> counts;

  uint64_t total() const;
  uint64_t min_nonzero_weight() const;  // zero_code when only weight 0 occurs
  uint64_t max_weight() const;
  size_t distinct_nonzero_weights() const;
  bool operator==(const WeightDistribution&) const = default;
};

// Hamming distribution of an F_q-linear code by exhaustive row-space
// enumeration. Metric::lee is rejected (invalid_metric): Lee weights live on
// ring codes.
WeightDistribution weight_distribution(const FieldCode& code, Metric metric = Metric::hamming,
                                       const EnumerationConfig& cfg = {});

// Lee or Hamming distribution of a ring-linear code, by enumerating the row
// space of the expanded Gray spanning matrix (rows Phi(g), Phi(u g) for each
// ring row g, interleaved layout). Hamming weight of an expanded word equals
// the Lee weight of its ring preimage; the ring Hamming weight counts the
// coordinate pairs (2j, 2j+1) that are not both zero.
WeightDistribution weight_distribution(const RingCode& code, Metric metric,
                                       const EnumerationConfig& cfg = {});

// The expanded Gray spanning matrix described above: 2*span.rows rows,
// 2*length columns, row space = Gray image of the ring code.
FieldMatrix expanded_gray_matrix(const RingCode& code);

// Closed-form weight distribution tables. T1-T4 give the Lee distributions of
// the four defining-set families S1-S4; T6 and T7 give the Hamming
// distributions of the projective N2bar and N4bar codes (same rows as T2 and
// T4 with every weight divided by q-1).
enum class Table { T1, T2, T3, T4, T6, T7 };

struct ClosedFormRow {
  uint64_t weight = 0;
  uint64_t frequency = 0;
  bool operator==(const ClosedFormRow&) const = default;
};

struct ClosedFormParams {
  Table table = Table::T1;
  unsigned q = 0, m = 0;
  SupportSet A, B, C;
};

// The table rows in printed order, before merging equal weights; rows whose
// frequency vanishes on the given branch are kept. Row counts: T1 has 4 rows,
// T2 and T6 have 5, T3 has 3, T4 and T7 have 6. Side conditions (A, B, C
// nonempty and): T1 needs |C| < m; T2 and T6 need |A| < m, T6 also B subseteq
// A; T3 needs |B| < m; T4 needs |C| < m and rejects the invalid corner q = 2,
// |A| = 1, |C| = m-1, where the family's size formula itself fails; T7 needs
// |C| < m, A disjoint from B, |A| >= 2.
std::vector<ClosedFormRow> closed_form_rows(const ClosedFormParams& p);

// Rows merged by weight, zero frequencies dropped, weight-0 row (frequency 1)
// added. Total is q^{m+|A|+|A u B|} for T1/T4/T7 and q^{2m+|C|} for T2/T6,
// q^{m+|A|+|C|} for T3.
WeightDistribution closed_form_distribution(const ClosedFormParams& p);

// Number of rows with nonzero frequency before merging.
unsigned nonzero_row_count(const ClosedFormParams& p);

// The branch-conditional distinct-weight clause attached to families T1-T4:
//   T1: 2 if A subseteq B, else 4
//   T2: 2 if B = [m]; 3 if A subseteq B != [m]; else 5
//   T3: 2 if A u B = [m] or A subseteq B; else 3
//   T4: 4 if A subseteq B, else 6
// The clause counts nonzero-frequency rows before equal weights merge, so the
// merged distribution can have fewer distinct weights (T2 rows 2-3 tie iff
// q = 2 and |A| = m-1; T4 rows 4 and 6 tie iff |A| + |C| = m). As stated,
// T2's last branch over-counts when A u B = [m], where row 2's frequency
// 2(q^{m-|AuB|} - 1) vanishes; corrected = true returns 4 on that branch.
unsigned clause_weight_count(const ClosedFormParams& p, bool corrected);

// Stated parameters of the projective families (p.table must be T6 or T7):
//   T6: [2 q^{b+c} (q^m - q^a) / (q-1),  2m + c,  (q^m - rho q^a) q^{b+c-1}]
//       with rho = 0 iff B = A, else 1
//   T7: [2 (q^m - q^c)(q^a - 1) q^b / (q-1), m + 2a + b, (q^m - q^c) q^{a+b-1}]
struct CodeParams {
  uint64_t n = 0;
  unsigned k = 0;
  uint64_t d = 0;
  bool operator==(const CodeParams&) const = default;
};
CodeParams projective_family_params(const ClosedFormParams& p);

size_t code_dimension(const FieldCode& code);
uint64_t code_size(const FieldCode& code);

FieldCode dual_code(const FieldCode& code);

// Least weight (up to limit <= 4) of a nonzero dual codeword, located as a
// dependent column set of the reduced generator: weight 1 = zero column,
// 2 = proportional pair, 3 = pair-plus-lookup, 4 = meet in the middle.
// Returns 0 when every nonzero dual word is heavier than limit.
unsigned dual_distance_by_columns(const FieldMatrix& G, unsigned limit);

// No zero column and no proportional column pair.
bool is_projective(const FieldMatrix& G);

enum class GriesmerVerdict { griesmer, near_griesmer, near_griesmer_distance_optimal, none };
struct GriesmerReport {
  uint64_t sum = 0;  // sum_{i<k} ceil(d / q^i)
  GriesmerVerdict verdict = GriesmerVerdict::none;
};
// griesmer when sum == n; near_griesmer when sum == n-1, upgraded to
// near_griesmer_distance_optimal when additionally q | d.
GriesmerReport griesmer_status(uint64_t n, unsigned k, uint64_t d, unsigned q);

struct SpherePackingReport {
  bool satisfied = false;      // (n, k, d) satisfies the bound
  bool next_violates = false;  // (n, k, d+1) violates it
  bool optimal = false;        // both of the above
  bool perfect = false;        // equality at (n, k, d)
};
// Exact big-integer evaluation of q^k * sum_{i<=t} C(n,i)(q-1)^i <= q^n with
// t = floor((d-1)/2).
SpherePackingReport sphere_packing(uint64_t n, unsigned k, uint64_t d, unsigned q);
inline bool sphere_packing_optimal(uint64_t n, unsigned k, uint64_t d, unsigned q) {
  return sphere_packing(n, k, d, q).optimal;
}

// Euclidean self-orthogonality of the spanned code: every pair of spanning
// rows has zero inner product (over F_q, or over F_q[u]/(u^2)).
bool is_self_orthogonal(const FieldCode& code);
bool is_self_orthogonal(const RingCode& code);

// Exhaustive minimality: no nonzero codeword's support strictly contains
// another's, and equal supports occur only between proportional codewords.
// Throws too_large when the code size exceeds size_cap.
bool is_minimal_exact(const FieldCode& code, uint64_t size_cap = uint64_t(1) << 14);

// Ashikhmin-Barg sufficient condition: q * w_min > (q-1) * w_max (strict).
bool ab_minimality_sufficient(const WeightDistribution& dist, unsigned q);

// Dual Hamming distribution via the q-ary MacWilliams identity with exact
// big-integer Krawtchouk sums; n is the code length. Throws internal_error if
// the transform is not a nonnegative integer distribution.
WeightDistribution macwilliams_transform(const WeightDistribution& dist, uint64_t n, unsigned q);

}  // namespace mixedcode
