#include "mixedcode/analysis.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

namespace mixedcode {

namespace {

using boost::multiprecision::cpp_int;

uint64_t to_u64(const cpp_int& v, const char* what) {
  if (v < 0 || v > cpp_int(std::numeric_limits<uint64_t>::max()))
    fail(errc::overflow, std::string(what) + " outside 64-bit range");
  return v.convert_to<uint64_t>();
}

uint64_t checked_pow_u64(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  while (e--) {
    if (base != 0 && r > std::numeric_limits<uint64_t>::max() / base)
      fail(errc::overflow, "power exceeds 64 bits");
    r *= base;
  }
  return r;
}

WeightDistribution from_histogram(const std::vector<uint64_t>& hist) {
  WeightDistribution d;
  for (size_t w = 0; w < hist.size(); ++w)
    if (hist[w]) d.counts[w] = hist[w];
  return d;
}

}  // namespace

uint64_t WeightDistribution::total() const {
  uint64_t t = 0;
  for (auto& [w, f] : counts) {
    if (f > std::numeric_limits<uint64_t>::max() - t) fail(errc::overflow, "distribution total");
    t += f;
  }
  return t;
}

uint64_t WeightDistribution::min_nonzero_weight() const {
  for (auto& [w, f] : counts)
    if (w != 0 && f != 0) return w;
  fail(errc::zero_code, "code has no nonzero codeword");
}

uint64_t WeightDistribution::max_weight() const {
  return counts.empty() ? 0 : counts.rbegin()->first;
}

size_t WeightDistribution::distinct_nonzero_weights() const {
  size_t n = counts.size();
  if (counts.count(0)) --n;
  return n;
}

WeightDistribution weight_distribution(const FieldCode& code, Metric metric,
                                       const EnumerationConfig& cfg) {
  if (metric == Metric::lee) fail(errc::invalid_metric, "Lee weights require a ring code");
  return from_histogram(weight_histogram(code.span, cfg));
}

FieldMatrix expanded_gray_matrix(const RingCode& code) {
  const Field& F = *code.span.F;
  size_t n = code.length;
  FieldMatrix out(F, 2 * code.span.rows, 2 * n);
  for (size_t r = 0; r < code.span.rows; ++r) {
    for (size_t j = 0; j < n; ++j) {
      uint8_t d = code.span.at_d(r, j), e = code.span.at_e(r, j);
      out.at(2 * r, 2 * j) = e;              // Phi(g): (e, d+e)
      out.at(2 * r, 2 * j + 1) = F.add(d, e);
      out.at(2 * r + 1, 2 * j) = d;          // Phi(u g) = Phi(u d): (d, d)
      out.at(2 * r + 1, 2 * j + 1) = d;
    }
  }
  return out;
}

WeightDistribution weight_distribution(const RingCode& code, Metric metric,
                                       const EnumerationConfig& cfg) {
  FieldMatrix G = expanded_gray_matrix(code);
  if (metric == Metric::lee) return from_histogram(weight_histogram(G, cfg));
  size_t n = code.length;
  std::vector<uint64_t> hist(n + 1, 0);
  row_space_enumerate(
      G,
      [&](const uint8_t* word, unsigned) {
        unsigned wt = 0;
        for (size_t j = 0; j < n; ++j)
          wt += (word[2 * j] | word[2 * j + 1]) != 0;
        ++hist[wt];
      },
      cfg);
  return from_histogram(hist);
}

namespace {

// Evaluated side-condition context shared by the table formulas.
struct TableCtx {
  cpp_int q;
  long m, a, b, c, ab;
  bool AsubB, BsubA, ABfull, Bfull, AdisjB;

  cpp_int Q(long e) const {
    if (e < 0) fail(errc::internal_error, "negative exponent in table formula");
    return boost::multiprecision::pow(q, unsigned(e));
  }
};

TableCtx make_ctx(const ClosedFormParams& p) {
  field_cache(p.q);  // validates q
  if (p.m == 0) fail(errc::out_of_range, "m must be positive");
  auto chk = [&](const SupportSet& s, const char* name) {
    if (s.m != p.m) fail(errc::length_mismatch, std::string(name) + " lives in a different [m]");
    if (s.members.empty()) fail(errc::empty_support, std::string(name) + " must be nonempty");
  };
  chk(p.A, "A");
  chk(p.B, "B");
  chk(p.C, "C");
  TableCtx t;
  t.q = p.q;
  t.m = long(p.m);
  t.a = long(p.A.size());
  t.b = long(p.B.size());
  t.c = long(p.C.size());
  t.ab = long(p.A.unite(p.B).size());
  t.AsubB = p.A.subset_of(p.B);
  t.BsubA = p.B.subset_of(p.A);
  t.ABfull = (t.ab == t.m);
  t.Bfull = (t.b == t.m);
  t.AdisjB = p.A.disjoint_from(p.B);

  switch (p.table) {
    case Table::T1:
      if (t.c == t.m) fail(errc::side_condition_violated, "T1 requires |C| < m");
      break;
    case Table::T2:
      if (t.a == t.m) fail(errc::side_condition_violated, "T2 requires |A| < m");
      break;
    case Table::T3:
      if (t.b == t.m) fail(errc::side_condition_violated, "T3 requires |B| < m");
      break;
    case Table::T4:
      if (t.c == t.m) fail(errc::side_condition_violated, "T4 requires |C| < m");
      if (p.q == 2 && t.a == 1 && t.c == t.m - 1)
        fail(errc::side_condition_violated,
             "T4 is invalid at q = 2, |A| = 1, |C| = m-1 (the size formula fails there)");
      break;
    case Table::T6:
      if (t.a == t.m) fail(errc::side_condition_violated, "T6 requires |A| < m");
      if (!t.BsubA) fail(errc::side_condition_violated, "T6 requires B subseteq A");
      break;
    case Table::T7:
      if (t.c == t.m) fail(errc::side_condition_violated, "T7 requires |C| < m");
      if (!t.AdisjB) fail(errc::side_condition_violated, "T7 requires A disjoint from B");
      if (t.a < 2) fail(errc::side_condition_violated, "T7 requires |A| >= 2");
      break;
  }
  return t;
}

using RawRows = std::vector<std::pair<cpp_int, cpp_int>>;

RawRows rows_t1(const TableCtx& t) {
  cpp_int w1 = (t.q - 1) * t.Q(t.a + t.b - 1) * (t.Q(t.m) - t.Q(t.c));
  return {
      {w1, 2 * (t.Q(t.ab - t.b) - 1)},
      {2 * w1, t.Q(t.m + t.a + t.ab) - 2 * t.Q(t.m - t.c + t.ab - t.b) + t.Q(t.m - t.c)},
      {(t.q - 1) * t.Q(t.a + t.b - 1) * (2 * t.Q(t.m) - t.Q(t.c)),
       2 * (t.Q(t.ab - t.b) - 1) * (t.Q(t.m - t.c) - 1)},
      {2 * (t.q - 1) * t.Q(t.m + t.a + t.b - 1), t.Q(t.m - t.c) - 1},
  };
}

RawRows rows_t2(const TableCtx& t) {
  cpp_int U = t.Q(t.m - t.b) - t.Q(t.m - t.ab);
  cpp_int w1 = (t.q - 1) * (t.Q(t.m) - t.Q(t.a)) * t.Q(t.b + t.c - 1);
  // The third and fourth frequencies are independent of the parity of q.
  // Variants that dress them with a parity flag (U*(2Q+1-eta), U*(2Q-1-eta)
  // with eta = 1 iff q even) shift a mass of U off the 2*w1 row for odd q;
  // exhaustive enumeration pins the parity-free form used here.
  return {
      {w1, 2 * U},
      {(t.q - 1) * t.Q(t.m + t.b + t.c - 1), 2 * (t.Q(t.m - t.ab) - 1)},
      {2 * w1,
       t.Q(2 * t.m + t.c) - 2 * U * t.Q(t.m - t.a) - t.Q(2 * t.m - t.ab - t.a)},
      {(t.q - 1) * (2 * t.Q(t.m) - t.Q(t.a)) * t.Q(t.b + t.c - 1),
       2 * U * (t.Q(t.m - t.a) - 1)},
      {2 * (t.q - 1) * t.Q(t.m + t.b + t.c - 1),
       (t.Q(t.m - t.a) - 1) * (t.Q(t.m - t.ab) - 1) + t.Q(t.m - t.a) - t.Q(t.m - t.ab)},
  };
}

RawRows rows_t3(const TableCtx& t) {
  return {
      {2 * (t.q - 1) * t.Q(t.a + t.c - 1) * (t.Q(t.m) - t.Q(t.b)),
       t.Q(t.m + t.a + t.c) - 2 * t.Q(t.m - t.b) + t.Q(t.m - t.ab)},
      {(t.q - 1) * t.Q(t.a + t.c - 1) * (2 * t.Q(t.m) - t.Q(t.b)),
       2 * (t.Q(t.m - t.b) - t.Q(t.m - t.ab))},
      {2 * (t.q - 1) * t.Q(t.m + t.a + t.c - 1), t.Q(t.m - t.ab) - 1},
  };
}

RawRows rows_t4(const TableCtx& t) {
  cpp_int G = (t.Q(t.a) - 1) + (t.Q(t.a) - 2) * (t.Q(t.ab - t.b) - 1);
  cpp_int reach = t.Q(t.m) - t.Q(t.c);
  return {
      {(t.q - 1) * reach * t.Q(t.a + t.b - 1), 2 * (t.Q(t.ab - t.b) - 1)},
      {2 * (t.q - 1) * t.Q(t.b - 1) * (reach * (t.Q(t.a) - 1) - t.Q(t.c)),
       G * (t.Q(t.m - t.c) - 1)},
      {2 * (t.q - 1) * reach * (t.Q(t.a) - 1) * t.Q(t.b - 1),
       t.Q(t.m + t.a + t.ab) - t.Q(t.m + t.a + t.ab - t.c - t.b)},
      {2 * (t.q - 1) * reach * t.Q(t.a + t.b - 1), G},
      {(t.q - 1) * t.Q(t.b - 1) * ((2 * t.Q(t.m) - t.Q(t.c)) * (t.Q(t.a) - 1) - t.Q(t.c)),
       2 * (t.Q(t.ab - t.b) - 1) * (t.Q(t.m - t.c) - 1)},
      {2 * (t.q - 1) * t.Q(t.m + t.b - 1) * (t.Q(t.a) - 1), t.Q(t.m - t.c) - 1},
  };
}

RawRows raw_rows(const ClosedFormParams& p, const TableCtx& t) {
  switch (p.table) {
    case Table::T1: return rows_t1(t);
    case Table::T2: return rows_t2(t);
    case Table::T3: return rows_t3(t);
    case Table::T4: return rows_t4(t);
    case Table::T6:
    case Table::T7: {
      RawRows rows = (p.table == Table::T6) ? rows_t2(t) : rows_t4(t);
      for (auto& [w, f] : rows) {
        if (w % (t.q - 1) != 0) fail(errc::internal_error, "table weight not divisible by q-1");
        w /= (t.q - 1);
      }
      return rows;
    }
  }
  fail(errc::internal_error, "unknown table");
}

}  // namespace

std::vector<ClosedFormRow> closed_form_rows(const ClosedFormParams& p) {
  TableCtx t = make_ctx(p);
  std::vector<ClosedFormRow> out;
  for (auto& [w, f] : raw_rows(p, t)) {
    if (f < 0) fail(errc::internal_error, "negative table frequency");
    out.push_back({to_u64(w, "table weight"), to_u64(f, "table frequency")});
  }
  return out;
}

WeightDistribution closed_form_distribution(const ClosedFormParams& p) {
  WeightDistribution d;
  d.counts[0] = 1;
  for (auto& row : closed_form_rows(p)) {
    if (row.frequency == 0) continue;
    if (row.weight == 0) fail(errc::internal_error, "zero-weight table row with nonzero frequency");
    d.counts[row.weight] += row.frequency;
  }
  return d;
}

unsigned nonzero_row_count(const ClosedFormParams& p) {
  unsigned n = 0;
  for (auto& row : closed_form_rows(p)) n += row.frequency != 0;
  return n;
}

unsigned clause_weight_count(const ClosedFormParams& p, bool corrected) {
  TableCtx t = make_ctx(p);
  switch (p.table) {
    case Table::T1: return t.AsubB ? 2 : 4;
    case Table::T2:
      if (t.Bfull) return 2;
      if (t.AsubB) return 3;
      return (corrected && t.ABfull) ? 4 : 5;
    case Table::T3: return (t.ABfull || t.AsubB) ? 2 : 3;
    case Table::T4: return t.AsubB ? 4 : 6;
    default: fail(errc::side_condition_violated, "weight-count clauses attach to T1-T4 only");
  }
}

CodeParams projective_family_params(const ClosedFormParams& p) {
  TableCtx t = make_ctx(p);
  CodeParams out;
  if (p.table == Table::T6) {
    cpp_int n2 = 2 * t.Q(t.b + t.c) * (t.Q(t.m) - t.Q(t.a));
    if (n2 % (t.q - 1) != 0) fail(errc::internal_error, "T6 length not divisible by q-1");
    int rho = (t.AsubB && t.BsubA) ? 0 : 1;
    out.n = to_u64(n2 / (t.q - 1), "T6 length");
    out.k = unsigned(2 * t.m + t.c);
    out.d = to_u64((t.Q(t.m) - rho * t.Q(t.a)) * t.Q(t.b + t.c - 1), "T6 distance");
  } else if (p.table == Table::T7) {
    cpp_int n2 = 2 * (t.Q(t.m) - t.Q(t.c)) * (t.Q(t.a) - 1) * t.Q(t.b);
    if (n2 % (t.q - 1) != 0) fail(errc::internal_error, "T7 length not divisible by q-1");
    out.n = to_u64(n2 / (t.q - 1), "T7 length");
    out.k = unsigned(t.m + 2 * t.a + t.b);
    out.d = to_u64((t.Q(t.m) - t.Q(t.c)) * t.Q(t.a + t.b - 1), "T7 distance");
  } else {
    fail(errc::side_condition_violated, "projective family parameters attach to T6/T7 only");
  }
  return out;
}

size_t code_dimension(const FieldCode& code) { return rank(code.span); }

uint64_t code_size(const FieldCode& code) {
  return checked_pow_u64(code.F->q, code_dimension(code));
}

FieldCode dual_code(const FieldCode& code) {
  return {code.F, code.length, kernel_basis(code.span)};
}

namespace {

std::string normalized_column(const Field& F, const std::string& v) {
  size_t s = 0;
  while (s < v.size() && v[s] == 0) ++s;
  if (s == v.size()) fail(errc::zero_column, "cannot normalize a zero column");
  uint8_t scale = F.inv(uint8_t(v[s]));
  std::string out(v.size(), 0);
  for (size_t i = s; i < v.size(); ++i) out[i] = char(F.mul(scale, uint8_t(v[i])));
  return out;
}

}  // namespace

unsigned dual_distance_by_columns(const FieldMatrix& G, unsigned limit) {
  if (limit == 0 || limit > 4) fail(errc::out_of_range, "column search limit must be 1..4");
  const Field& F = *G.F;
  FieldMatrix R = row_reduce(G);
  size_t n = G.cols, r = R.rows;
  if (n == 0) fail(errc::zero_code, "generator has no columns");

  std::vector<std::string> col(n, std::string(r, 0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < r; ++i) col[j][i] = char(R.at(i, j));

  std::string zero(r, 0);
  for (size_t j = 0; j < n; ++j)
    if (col[j] == zero) return 1;
  if (limit == 1) return 0;

  std::unordered_map<std::string, size_t> cls;  // normalized column -> representative index
  for (size_t j = 0; j < n; ++j) {
    auto [it, fresh] = cls.emplace(normalized_column(F, col[j]), j);
    if (!fresh) return 2;
  }
  if (limit == 2) return 0;

  auto combine = [&](const std::string& x, const std::string& y, uint8_t beta) {
    std::string v(r, 0);
    for (size_t i = 0; i < r; ++i)
      v[i] = char(F.add(uint8_t(x[i]), F.mul(beta, uint8_t(y[i]))));
    return v;
  };

  // weight 3: c_i + beta c_j proportional to some third column. The combination
  // cannot vanish here, a proportional pair would already have returned 2.
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (unsigned beta = 1; beta < F.q; ++beta) {
        auto it = cls.find(normalized_column(F, combine(col[i], col[j], uint8_t(beta))));
        if (it != cls.end() && it->second != i && it->second != j) return 3;
      }
  if (limit == 3) return 0;

  // weight 4: two index-disjoint pairs spanning a common projective point.
  uint64_t combos = uint64_t(n) * (n - 1) / 2 * (F.q - 1);
  if (combos > (uint64_t(1) << 26)) fail(errc::too_large, "weight-4 column search too large");
  std::unordered_map<std::string, std::vector<std::pair<uint32_t, uint32_t>>> sums;
  sums.reserve(size_t(combos));
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (unsigned beta = 1; beta < F.q; ++beta) {
        auto& list = sums[normalized_column(F, combine(col[i], col[j], uint8_t(beta)))];
        for (auto& [pi, pj] : list)
          if (pi != i && pi != j && pj != i && pj != j) return 4;
        list.emplace_back(uint32_t(i), uint32_t(j));
      }
  return 0;
}

bool is_projective(const FieldMatrix& G) { return dual_distance_by_columns(G, 2) == 0; }

GriesmerReport griesmer_status(uint64_t n, unsigned k, uint64_t d, unsigned q) {
  if (q < 2 || k == 0 || d == 0 || n == 0) fail(errc::out_of_range, "need n, k, d >= 1 and q >= 2");
  GriesmerReport rep;
  uint64_t p = 1;
  bool huge = false;
  for (unsigned i = 0; i < k; ++i) {
    uint64_t term = huge ? 1 : (d + p - 1) / p;
    rep.sum += term;
    if (!huge) {
      if (p > std::numeric_limits<uint64_t>::max() / q) huge = true;
      else {
        p *= q;
        if (p >= d) huge = true;
      }
    }
  }
  if (rep.sum == n) rep.verdict = GriesmerVerdict::griesmer;
  else if (rep.sum + 1 == n)
    rep.verdict = (d % q == 0) ? GriesmerVerdict::near_griesmer_distance_optimal
                               : GriesmerVerdict::near_griesmer;
  else rep.verdict = GriesmerVerdict::none;
  return rep;
}

SpherePackingReport sphere_packing(uint64_t n, unsigned k, uint64_t d, unsigned q) {
  if (q < 2 || k == 0 || d == 0 || n == 0 || d > n)
    fail(errc::out_of_range, "need 1 <= d <= n, k >= 1, q >= 2");
  auto ball = [&](uint64_t t) {
    cpp_int s = 0, binom = 1;
    for (uint64_t i = 0; i <= t && i <= n; ++i) {
      if (i > 0) {
        binom *= n - i + 1;
        binom /= i;
      }
      s += binom * boost::multiprecision::pow(cpp_int(q - 1), unsigned(i));
    }
    return s;
  };
  cpp_int space = boost::multiprecision::pow(cpp_int(q), unsigned(n));
  cpp_int size = boost::multiprecision::pow(cpp_int(q), k);
  cpp_int at_d = size * ball((d - 1) / 2);
  cpp_int at_d1 = size * ball(d / 2);
  SpherePackingReport rep;
  rep.satisfied = at_d <= space;
  rep.perfect = at_d == space;
  rep.next_violates = at_d1 > space;
  rep.optimal = rep.satisfied && rep.next_violates;
  return rep;
}

bool is_self_orthogonal(const FieldCode& code) {
  const Field& F = *code.F;
  const FieldMatrix& G = code.span;
  for (size_t i = 0; i < G.rows; ++i)
    for (size_t j = i; j < G.rows; ++j) {
      uint8_t acc = 0;
      for (size_t t = 0; t < G.cols; ++t) acc = F.add(acc, F.mul(G.at(i, t), G.at(j, t)));
      if (acc != 0) return false;
    }
  return true;
}

bool is_self_orthogonal(const RingCode& code) {
  const Field& F = *code.span.F;
  const RingMatrix& G = code.span;
  for (size_t i = 0; i < G.rows; ++i)
    for (size_t j = i; j < G.rows; ++j) {
      QGR acc{0, 0};
      for (size_t t = 0; t < G.cols; ++t)
        acc = qgr_add(F, acc, qgr_mul(F, {G.at_d(i, t), G.at_e(i, t)}, {G.at_d(j, t), G.at_e(j, t)}));
      if (acc != QGR{0, 0}) return false;
    }
  return true;
}

bool is_minimal_exact(const FieldCode& code, uint64_t size_cap) {
  const Field& F = *code.F;
  FieldMatrix R = row_reduce(code.span);
  uint64_t size = checked_pow_u64(F.q, R.rows);
  if (size > size_cap) fail(errc::too_large, "code too large for exhaustive minimality check");
  if (R.rows == 0) return true;

  size_t n = code.length;
  size_t words = (n + 63) / 64;
  size_t count = size_t(size - 1);
  std::vector<uint64_t> masks;
  masks.reserve(count * words);
  std::vector<std::string> norm;
  norm.reserve(count);
  std::vector<unsigned> wts;
  wts.reserve(count);

  row_space_enumerate(R, [&](const uint8_t* word, unsigned wt) {
    if (wt == 0) return;
    size_t base = masks.size();
    masks.resize(base + words, 0);
    size_t first = n;
    for (size_t j = 0; j < n; ++j)
      if (word[j]) {
        masks[base + j / 64] |= uint64_t(1) << (j % 64);
        if (first == n) first = j;
      }
    uint8_t scale = F.inv(word[first]);
    std::string s(n, 0);
    for (size_t j = first; j < n; ++j) s[j] = char(F.mul(scale, word[j]));
    norm.push_back(std::move(s));
    wts.push_back(wt);
  });

  // equal supports must mean proportional codewords
  std::unordered_map<std::string_view, size_t> by_support;
  by_support.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    std::string_view key(reinterpret_cast<const char*>(&masks[i * words]), words * 8);
    auto [it, fresh] = by_support.emplace(key, i);
    if (!fresh && norm[it->second] != norm[i]) return false;
  }

  // strict support containment across different weights
  std::vector<uint32_t> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = uint32_t(i);
  std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) { return wts[x] < wts[y]; });
  for (size_t jj = 0; jj < count; ++jj) {
    const uint64_t* mj = &masks[size_t(order[jj]) * words];
    for (size_t ii = 0; ii < jj; ++ii) {
      if (wts[order[ii]] == wts[order[jj]]) continue;  // same weight: containment is equality
      const uint64_t* mi = &masks[size_t(order[ii]) * words];
      bool inside = true;
      for (size_t w = 0; w < words; ++w)
        if (mi[w] & ~mj[w]) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
  }
  return true;
}

bool ab_minimality_sufficient(const WeightDistribution& dist, unsigned q) {
  if (q < 2) fail(errc::out_of_range, "q >= 2");
  unsigned __int128 lhs = (unsigned __int128)q * dist.min_nonzero_weight();
  unsigned __int128 rhs = (unsigned __int128)(q - 1) * dist.max_weight();
  return lhs > rhs;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist, uint64_t n, unsigned q) {
  if (q < 2) fail(errc::out_of_range, "q >= 2");
  for (auto& [w, f] : dist.counts)
    if (w > n) fail(errc::out_of_range, "weight exceeds length");
  cpp_int size = 0;
  for (auto& [w, f] : dist.counts) size += f;
  if (size == 0) fail(errc::zero_code, "empty distribution");

  // binomial rows for every top value that appears
  std::unordered_map<uint64_t, std::vector<cpp_int>> binom;
  auto row = [&](uint64_t top) -> const std::vector<cpp_int>& {
    auto it = binom.find(top);
    if (it != binom.end()) return it->second;
    std::vector<cpp_int> r(size_t(n) + 1, 0);
    r[0] = 1;
    for (size_t i = 1; i <= size_t(std::min(top, n)); ++i) r[i] = r[i - 1] * (top - i + 1) / i;
    return binom.emplace(top, std::move(r)).first->second;
  };
  std::vector<cpp_int> qm1(size_t(n) + 1);
  qm1[0] = 1;
  for (size_t i = 1; i <= size_t(n); ++i) qm1[i] = qm1[i - 1] * (q - 1);

  WeightDistribution out;
  for (uint64_t j = 0; j <= n; ++j) {
    cpp_int acc = 0;
    for (auto& [i, Ai] : dist.counts) {
      const auto& ci = row(i);
      const auto& cni = row(n - i);
      cpp_int K = 0;
      for (uint64_t s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        cpp_int term = ci[size_t(s)] * cni[size_t(j - s)] * qm1[size_t(j - s)];
        K += (s % 2 == 0) ? term : -term;
      }
      acc += cpp_int(Ai) * K;
    }
    if (acc % size != 0 || acc < 0)
      fail(errc::internal_error, "MacWilliams transform is not a nonnegative integer distribution");
    cpp_int Aj = acc / size;
    if (Aj != 0) out.counts[j] = to_u64(Aj, "dual frequency");
  }
  return out;
}

}  // namespace mixedcode
