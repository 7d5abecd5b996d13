#include "mixedcode/applications.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace mixedcode {

namespace {

using boost::multiprecision::cpp_int;

uint64_t to_u64(const cpp_int& v, const char* what) {
  if (v < 0 || v > cpp_int(std::numeric_limits<uint64_t>::max()))
    fail(errc::overflow, std::string(what) + " outside 64-bit range");
  return v.convert_to<uint64_t>();
}

int64_t to_i64(const cpp_int& v, const char* what) {
  if (v < cpp_int(std::numeric_limits<int64_t>::min()) ||
      v > cpp_int(std::numeric_limits<int64_t>::max()))
    fail(errc::overflow, std::string(what) + " outside signed 64-bit range");
  return v.convert_to<int64_t>();
}

std::vector<std::string> reduced_columns(const Field&, const FieldMatrix& R) {
  std::vector<std::string> col(R.cols, std::string(R.rows, 0));
  for (size_t j = 0; j < R.cols; ++j)
    for (size_t i = 0; i < R.rows; ++i) col[j][i] = char(R.at(i, j));
  return col;
}

std::string norm_col(const Field& F, const std::string& v) {
  size_t s = 0;
  while (s < v.size() && v[s] == 0) ++s;
  if (s == v.size()) fail(errc::zero_column, "cannot normalize a zero column");
  uint8_t scale = F.inv(uint8_t(v[s]));
  std::string out(v.size(), 0);
  for (size_t i = s; i < v.size(); ++i) out[i] = char(F.mul(scale, uint8_t(v[i])));
  return out;
}

// coefficient r with num = r * den, assuming proportionality
uint8_t proportion(const Field& F, const std::string& num, const std::string& den) {
  size_t s = 0;
  while (s < den.size() && den[s] == 0) ++s;
  if (s == den.size()) fail(errc::internal_error, "proportion against a zero vector");
  return F.div(uint8_t(num[s]), uint8_t(den[s]));
}

}  // namespace

LocalityReport locality(const FieldCode& code, unsigned cap) {
  if (cap == 0 || cap > 4) fail(errc::out_of_range, "locality search cap must be 1..4");
  const Field& F = *code.F;
  FieldMatrix R = row_reduce(code.span);
  size_t n = code.length;
  auto col = reduced_columns(F, R);
  std::string zero(R.rows, 0);

  std::unordered_map<std::string, std::vector<uint32_t>> cls;
  for (size_t j = 0; j < n; ++j)
    if (col[j] != zero) cls[norm_col(F, col[j])].push_back(uint32_t(j));

  auto sub_scaled = [&](const std::string& x, uint8_t coef, const std::string& y) {
    std::string v(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i)
      v[i] = char(F.sub(uint8_t(x[i]), F.mul(coef, uint8_t(y[i]))));
    return v;
  };

  // all scaled pair combinations, for the 3- and 4-helper searches
  struct PairEntry {
    uint32_t k, l;
    uint8_t beta;
  };
  std::unordered_map<std::string, std::vector<PairEntry>> pair_map;
  bool pair_map_built = false;
  auto build_pair_map = [&]() {
    if (pair_map_built) return;
    pair_map_built = true;
    uint64_t combos = uint64_t(n) * (n ? n - 1 : 0) / 2 * (F.q - 1);
    if (combos > (uint64_t(1) << 26)) fail(errc::too_large, "pair combination map too large");
    for (size_t k = 0; k + 1 < n; ++k) {
      if (col[k] == zero) continue;
      for (size_t l = k + 1; l < n; ++l) {
        if (col[l] == zero) continue;
        for (unsigned beta = 1; beta < F.q; ++beta) {
          std::string v = sub_scaled(col[k], F.neg(uint8_t(beta)), col[l]);  // col_k + beta col_l
          if (v == zero) continue;  // proportional pair
          pair_map[norm_col(F, v)].push_back({uint32_t(k), uint32_t(l), uint8_t(beta)});
        }
      }
    }
  };

  LocalityReport rep;
  rep.searched_up_to = cap;
  rep.per_coordinate.resize(n, 0);
  rep.witnesses.resize(n);

  auto accept = [&](size_t j, unsigned r, std::vector<uint32_t> helpers,
                    std::vector<uint8_t> coefs) {
    std::string sum(R.rows, 0);
    for (size_t t = 0; t < helpers.size(); ++t)
      for (size_t i = 0; i < R.rows; ++i)
        sum[i] = char(F.add(uint8_t(sum[i]), F.mul(coefs[t], uint8_t(col[helpers[t]][i]))));
    if (sum != col[j]) fail(errc::internal_error, "locality witness failed re-verification");
    rep.per_coordinate[j] = r;
    rep.witnesses[j] = {std::move(helpers), std::move(coefs)};
    rep.locality = std::max(rep.locality, r);
  };

  for (size_t j = 0; j < n; ++j) {
    if (col[j] == zero) continue;  // identically-zero coordinate: locality 0

    // one helper: a proportional column
    bool done = false;
    for (uint32_t k : cls[norm_col(F, col[j])])
      if (k != j) {
        accept(j, 1, {k}, {proportion(F, col[j], col[k])});
        done = true;
        break;
      }
    if (done) continue;
    if (cap < 2) fail(errc::not_found_within_cap, "coordinate needs more than cap helpers");

    // two helpers
    for (size_t k = 0; k < n && !done; ++k) {
      if (k == j || col[k] == zero) continue;
      for (unsigned alpha = 1; alpha < F.q && !done; ++alpha) {
        std::string v = sub_scaled(col[j], uint8_t(alpha), col[k]);
        if (v == zero) continue;
        auto it = cls.find(norm_col(F, v));
        if (it == cls.end()) continue;
        for (uint32_t l : it->second)
          if (l != j && l != k) {
            accept(j, 2, {uint32_t(k), l}, {uint8_t(alpha), proportion(F, v, col[l])});
            done = true;
            break;
          }
      }
    }
    if (done) continue;
    if (cap < 3) fail(errc::not_found_within_cap, "coordinate needs more than cap helpers");

    // three helpers: strip one column, land on a pair combination
    build_pair_map();
    for (size_t s = 0; s < n && !done; ++s) {
      if (s == j || col[s] == zero) continue;
      for (unsigned gamma = 1; gamma < F.q && !done; ++gamma) {
        std::string v = sub_scaled(col[j], uint8_t(gamma), col[s]);
        if (v == zero) continue;
        auto it = pair_map.find(norm_col(F, v));
        if (it == pair_map.end()) continue;
        for (auto& e : it->second)
          if (e.k != j && e.k != s && e.l != j && e.l != s) {
            std::string combo = sub_scaled(col[e.k], F.neg(e.beta), col[e.l]);
            uint8_t delta = proportion(F, v, combo);
            accept(j, 3, {uint32_t(s), e.k, e.l},
                   {uint8_t(gamma), delta, F.mul(delta, e.beta)});
            done = true;
            break;
          }
      }
    }
    if (done) continue;
    if (cap < 4) fail(errc::not_found_within_cap, "coordinate needs more than cap helpers");

    // four helpers: strip two columns, land on a pair combination
    for (size_t s = 0; s + 1 < n && !done; ++s) {
      if (s == j || col[s] == zero) continue;
      for (size_t t = s + 1; t < n && !done; ++t) {
        if (t == j || col[t] == zero) continue;
        for (unsigned gamma = 1; gamma < F.q && !done; ++gamma)
          for (unsigned delta = 1; delta < F.q && !done; ++delta) {
            std::string v = sub_scaled(sub_scaled(col[j], uint8_t(gamma), col[s]),
                                       uint8_t(delta), col[t]);
            if (v == zero) continue;
            auto it = pair_map.find(norm_col(F, v));
            if (it == pair_map.end()) continue;
            for (auto& e : it->second)
              if (e.k != j && e.k != s && e.k != t && e.l != j && e.l != s && e.l != t) {
                std::string combo = sub_scaled(col[e.k], F.neg(e.beta), col[e.l]);
                uint8_t sc = proportion(F, v, combo);
                accept(j, 4, {uint32_t(s), uint32_t(t), e.k, e.l},
                       {uint8_t(gamma), uint8_t(delta), sc, F.mul(sc, e.beta)});
                done = true;
                break;
              }
          }
      }
    }
    if (!done) fail(errc::not_found_within_cap, "coordinate needs more than cap helpers");
  }
  return rep;
}

namespace {

// largest k whose Griesmer sum fits in n
uint64_t k_griesmer_proxy(uint64_t n, uint64_t d, unsigned q) {
  if (n < d) return 0;
  uint64_t sum = 0, p = 1, k = 0;
  while (true) {
    uint64_t term = (d + p - 1) / p;
    if (term == 1) break;
    if (sum + term > n) return k;
    sum += term;
    ++k;
    p *= q;
  }
  return k + (n - sum);
}

}  // namespace

CMOptimalityReport cm_alphabet_optimality(uint64_t n, unsigned k, uint64_t d, unsigned q,
                                          unsigned r) {
  if (q < 2 || n == 0 || k == 0 || d == 0) fail(errc::out_of_range, "need n, k, d >= 1, q >= 2");
  if (r == 0) fail(errc::out_of_range, "locality must be >= 1");
  CMOptimalityReport rep;
  uint64_t best = k_griesmer_proxy(n, d, q);
  for (uint64_t t = 1; t * (uint64_t(r) + 1) <= n; ++t) {
    if (t * r >= best) break;
    best = std::min(best, t * r + k_griesmer_proxy(n - t * (r + 1), d, q));
  }
  rep.bound = best;
  rep.optimal = (k == best);
  return rep;
}

bool massey_can_access(const FieldCode& code, uint32_t h0_index,
                       const std::vector<uint32_t>& participant_cols) {
  const Field& F = *code.F;
  FieldMatrix R = row_reduce(code.span);
  if (h0_index >= code.length) fail(errc::out_of_range, "secret column index");
  std::vector<char> in_set(code.length, 0);
  for (uint32_t src : participant_cols) {
    if (src >= code.length) fail(errc::out_of_range, "participant column index");
    if (src == h0_index) fail(errc::out_of_range, "secret column cannot participate");
    in_set[src] = 1;
  }
  // The shares are generated by the dual code, so T has access iff some
  // codeword of the spanned code has entry 1 at h0 and support inside
  // T u {h0}. Equivalently the h0 column is independent of the columns
  // outside T: appending it to them raises the rank.
  std::vector<uint32_t> outside;
  for (uint32_t j = 0; j < code.length; ++j)
    if (!in_set[j] && j != h0_index) outside.push_back(j);
  FieldMatrix U(F, R.rows, outside.size());
  FieldMatrix Uh(F, R.rows, outside.size() + 1);
  for (size_t i = 0; i < R.rows; ++i) {
    for (size_t c = 0; c < outside.size(); ++c) {
      U.at(i, c) = R.at(i, outside[c]);
      Uh.at(i, c) = R.at(i, outside[c]);
    }
    Uh.at(i, outside.size()) = R.at(i, h0_index);
  }
  return rank(Uh) == rank(U) + 1;
}

MasseyReport massey_report(const FieldCode& code, uint32_t h0_index) {
  const Field& F = *code.F;
  FieldMatrix R = row_reduce(code.span);
  size_t n = code.length, r = R.rows;
  if (h0_index >= n) fail(errc::out_of_range, "secret column index");
  if (n < 2) fail(errc::out_of_range, "need at least one participant");
  if (n - 1 > 20) fail(errc::too_large, "participant enumeration is capped at 20");
  auto col = reduced_columns(F, R);
  std::string zero(r, 0);
  if (col[h0_index] == zero) fail(errc::zero_column, "the secret coordinate is identically zero");

  MasseyReport rep;
  rep.h0_index = h0_index;
  rep.participants = uint32_t(n - 1);
  std::vector<uint32_t> position_of(n, 0);
  for (uint32_t j = 0; j < n; ++j)
    if (j != h0_index) {
      position_of[j] = uint32_t(rep.participant_columns.size());
      rep.participant_columns.push_back(j);
    }

  // Minimal access sets of the dual-generated scheme are the inclusion-minimal
  // supports (minus h0) of codewords with a nonzero h0 entry.
  uint64_t cw_count = 1;
  for (size_t i = 0; i < r; ++i) {
    if (cw_count > (uint64_t(1) << 22) / F.q) fail(errc::too_large, "codeword enumeration");
    cw_count *= F.q;
  }
  std::set<uint64_t> supports;
  row_space_enumerate(R, [&](const uint8_t* w, unsigned) {
    if (w[h0_index] == 0) return;
    uint64_t mask = 0;
    for (uint32_t j = 0; j < n; ++j)
      if (j != h0_index && w[j]) mask |= uint64_t(1) << position_of[j];
    supports.insert(mask);
  });
  // ascending popcount: a non-minimal support strictly contains some support,
  // hence some already-accepted minimal one of smaller popcount
  std::vector<uint64_t> ordered(supports.begin(), supports.end());
  std::sort(ordered.begin(), ordered.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  rep.per_participant_membership.assign(rep.participants, 0);
  for (uint64_t T : ordered) {
    bool minimal = true;
    for (uint64_t M : rep.minimal_access_sets)
      if ((M & T) == M) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    rep.minimal_access_sets.push_back(T);
    for (uint32_t b = 0; b < rep.participants; ++b)
      if (T & (uint64_t(1) << b)) ++rep.per_participant_membership[b];
  }
  std::sort(rep.minimal_access_sets.begin(), rep.minimal_access_sets.end());

  // dictatorial participants: columns proportional to the h0 column, so every
  // codeword with a nonzero secret entry is nonzero there too
  for (uint32_t t = 0; t < rep.participants; ++t) {
    const std::string& cj = col[rep.participant_columns[t]];
    if (cj == zero) continue;
    bool prop = false;
    for (unsigned beta = 1; beta < F.q && !prop; ++beta) {
      prop = true;
      for (size_t i = 0; i < r && prop; ++i)
        if (uint8_t(cj[i]) != F.mul(uint8_t(beta), uint8_t(col[h0_index][i]))) prop = false;
    }
    if (prop) rep.dictatorial.push_back(rep.participant_columns[t]);
  }

  try {
    rep.code_is_minimal = is_minimal_exact(code);
  } catch (const error& e) {
    if (e.code != errc::too_large) throw;
  }
  return rep;
}

CosetGraph coset_graph(const FieldCode& code, uint64_t vertex_cap) {
  const Field& F = *code.F;
  CosetGraph g;
  g.F = &F;
  g.parity = kernel_basis(code.span);
  size_t n = code.length, r = g.parity.rows;
  if (r == 0)
    fail(errc::loop_error, "code is the whole space: every single-symbol step is a loop");
  for (size_t j = 0; j < n; ++j) {
    bool all_zero = true;
    for (size_t i = 0; i < r && all_zero; ++i) all_zero = g.parity.at(i, j) == 0;
    if (all_zero)
      fail(errc::loop_error, "zero parity column: a single-symbol change stays in the code");
  }
  uint64_t V = 1;
  for (size_t i = 0; i < r; ++i) {
    if (V > vertex_cap / F.q) fail(errc::too_large, "too many syndromes");
    V *= F.q;
  }
  if (V > vertex_cap) fail(errc::too_large, "too many syndromes");
  g.vertices = V;

  std::map<uint64_t, std::vector<uint8_t>> conn;
  std::vector<uint8_t> s(r);
  for (size_t j = 0; j < n; ++j)
    for (unsigned alpha = 1; alpha < F.q; ++alpha) {
      for (size_t i = 0; i < r; ++i) s[i] = F.mul(uint8_t(alpha), g.parity.at(i, j));
      conn.emplace(encode_vector(F, s.data(), r), s);
    }
  for (auto& [id, vec] : conn) {
    g.connection.push_back(id);
    g.connection_vec.push_back(vec);
  }
  g.degree = g.connection.size();
  return g;
}

std::vector<uint64_t> CosetGraph::neighbors(uint64_t v) const {
  size_t r = parity.rows;
  FieldVector base = decode_vector(*F, r, v);
  std::vector<uint64_t> out;
  out.reserve(connection_vec.size());
  std::vector<uint8_t> s(r);
  for (auto& c : connection_vec) {
    for (size_t i = 0; i < r; ++i) s[i] = F->add(base.v[i], c[i]);
    out.push_back(encode_vector(*F, s.data(), r));
  }
  return out;
}

std::vector<uint8_t> CosetGraph::adjacency_matrix(uint64_t matrix_cap) const {
  if (vertices > matrix_cap) fail(errc::too_large, "adjacency matrix too large");
  size_t V = size_t(vertices);
  std::vector<uint8_t> M(V * V, 0);
  for (size_t v = 0; v < V; ++v)
    for (uint64_t u : neighbors(uint64_t(v))) M[v * V + size_t(u)] = 1;
  return M;
}

bool is_connected(const CosetGraph& g) {
  size_t V = size_t(g.vertices);
  std::vector<char> seen(V, 0);
  std::vector<uint64_t> stack{0};
  seen[0] = 1;
  size_t visited = 1;
  while (!stack.empty()) {
    uint64_t v = stack.back();
    stack.pop_back();
    for (uint64_t u : g.neighbors(v))
      if (!seen[size_t(u)]) {
        seen[size_t(u)] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == V;
}

std::vector<std::pair<int64_t, uint64_t>> coset_graph_spectrum(const CosetGraph& g,
                                                               const EnumerationConfig& cfg) {
  const Field& F = *g.F;
  size_t r = g.parity.rows, n = g.parity.cols;
  ColumnMultiset cm;
  cm.F = &F;
  cm.dim = r;
  for (size_t j = 0; j < n; ++j) {
    std::vector<uint8_t> c(r);
    for (size_t i = 0; i < r; ++i) c[i] = g.parity.at(i, j);
    cm.cols.push_back(std::move(c));
  }
  ColumnMultiset reps = dedupe_projective(cm, false);
  size_t np = reps.cols.size();
  if (np * (F.q - 1) != g.degree) fail(errc::internal_error, "projective class count mismatch");

  FieldMatrix Hp = reps.as_matrix();
  size_t rk = rank(Hp);
  uint64_t scale = 1;
  for (size_t i = rk; i < r; ++i) scale *= F.q;

  std::vector<uint64_t> hist = weight_histogram(Hp, cfg);
  std::map<int64_t, uint64_t, std::greater<int64_t>> spec;
  for (size_t w = 0; w < hist.size(); ++w)
    if (hist[w]) spec[int64_t(np) * (F.q - 1) - int64_t(F.q) * int64_t(w)] += hist[w] * scale;

  uint64_t total = 0;
  std::vector<std::pair<int64_t, uint64_t>> out;
  for (auto& [ev, mult] : spec) {
    out.emplace_back(ev, mult);
    total += mult;
  }
  if (total != g.vertices) fail(errc::internal_error, "spectrum multiplicities do not sum to V");
  return out;
}

SWRGReport walk_regularity_check(const CosetGraph& g, unsigned ell, uint64_t vertex_cap) {
  if (ell == 0) fail(errc::out_of_range, "walk length must be >= 1");
  if (g.vertices > vertex_cap) fail(errc::too_large, "walk matrices too large");
  if (boost::multiprecision::pow(cpp_int(g.degree), ell) >= cpp_int(1) << 63)
    fail(errc::overflow, "walk counts may exceed 63 bits");

  size_t V = size_t(g.vertices);
  std::vector<uint8_t> adj = g.adjacency_matrix(vertex_cap);
  std::vector<uint64_t> A(V * V), P(V * V), next;
  for (size_t i = 0; i < V * V; ++i) A[i] = adj[i];
  P = A;
  for (unsigned step = 2; step <= ell; ++step) {
    next.assign(V * V, 0);
    for (size_t i = 0; i < V; ++i) {
      const uint64_t* Pi = &P[i * V];
      uint64_t* Ri = &next[i * V];
      for (size_t k = 0; k < V; ++k) {
        uint64_t a = Pi[k];
        if (!a) continue;
        const uint64_t* Ak = &A[k * V];
        for (size_t j = 0; j < V; ++j) Ri[j] += a * Ak[j];
      }
    }
    P.swap(next);
  }

  SWRGReport rep;
  rep.ell = ell;
  rep.degree = g.degree;
  rep.connected = is_connected(g);
  bool has_l = false, has_m = false, has_n = false, ok = true;
  for (size_t i = 0; i < V && ok; ++i)
    for (size_t j = 0; j < V; ++j) {
      uint64_t x = P[i * V + j];
      uint64_t* slot;
      bool* seen;
      if (i == j) {
        slot = &rep.nu;
        seen = &has_n;
      } else if (adj[i * V + j]) {
        slot = &rep.lambda;
        seen = &has_l;
      } else {
        slot = &rep.mu;
        seen = &has_m;
      }
      if (!*seen) {
        *slot = x;
        *seen = true;
      } else if (*slot != x) {
        ok = false;
        break;
      }
    }
  rep.is_swrg = ok;
  rep.spectrum = coset_graph_spectrum(g);
  return rep;
}

SWRGPrediction swrg_predicted(unsigned m, unsigned c, unsigned ell) {
  if (m < 2) fail(errc::side_condition_violated, "family needs m >= 2");
  if (c < 1 || c > m) fail(errc::side_condition_violated, "C must be a nonempty subset of [m]");
  if (ell < 3 || ell % 2 == 0) fail(errc::side_condition_violated, "ell must be odd and >= 3");
  cpp_int theta = cpp_int(1) << (4 * m + 2 * c - 3);
  cpp_int V = boost::multiprecision::pow(cpp_int(4), 2 * m + c);
  cpp_int excess = (boost::multiprecision::pow(cpp_int(3), ell) - 3) *
                   boost::multiprecision::pow(theta, ell);
  if (excess % V != 0) fail(errc::internal_error, "predicted walk count is not integral");

  SWRGPrediction pred;
  pred.theta = to_u64(theta, "theta");
  pred.degree = to_u64(3 * theta, "degree");
  pred.vertices = to_u64(V, "vertex count");
  pred.mu = to_u64(excess / V, "mu");
  pred.nu = pred.mu;
  pred.lambda = to_u64(excess / V + boost::multiprecision::pow(theta, ell - 1), "lambda");
  pred.spectrum = {{to_i64(3 * theta, "eigenvalue"), 1},
                   {to_i64(theta, "eigenvalue"), 6},
                   {0, to_u64(V - 16, "multiplicity")},
                   {to_i64(-theta, "eigenvalue"), 9}};
  return pred;
}

}  // namespace mixedcode
