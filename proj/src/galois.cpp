#include "mixedcode/galois.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace mixedcode {

namespace {

// polynomial helpers over GF(p), coefficient vectors with constant term first

unsigned poly_deg(const std::vector<uint8_t>& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (f[i]) return unsigned(i);
  return 0;
}

std::vector<uint8_t> poly_mod(std::vector<uint8_t> f, const std::vector<uint8_t>& g, unsigned p) {
  unsigned dg = poly_deg(g);  // g is monic
  for (size_t i = f.size(); i-- > dg;) {
    uint8_t c = f[i];
    if (!c) continue;
    f[i] = 0;
    for (unsigned j = 0; j < dg; ++j)
      f[i - dg + j] = uint8_t((f[i - dg + j] + p - (c * g[j]) % p) % p);
  }
  f.resize(dg ? dg : 1);
  return f;
}

std::vector<uint8_t> poly_mul_mod(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                                  const std::vector<uint8_t>& mod, unsigned p) {
  std::vector<uint8_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) prod[i + j] = uint8_t((prod[i + j] + a[i] * b[j]) % p);
  return poly_mod(std::move(prod), mod, p);
}

std::vector<uint8_t> digits_of(unsigned value, unsigned p, unsigned len) {
  std::vector<uint8_t> d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = uint8_t(value % p);
    value /= p;
  }
  return d;
}

unsigned value_of(const std::vector<uint8_t>& d, unsigned p) {
  unsigned v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool poly_is_zero(const std::vector<uint8_t>& f) {
  return std::all_of(f.begin(), f.end(), [](uint8_t c) { return c == 0; });
}

// true iff the monic polynomial f (degree k >= 1) has no monic factor of degree in [1, k/2]
bool poly_irreducible(const std::vector<uint8_t>& f, unsigned p) {
  unsigned k = poly_deg(f);
  if (k == 1) return true;
  for (unsigned dd = 1; dd <= k / 2; ++dd) {
    unsigned count = 1;
    for (unsigned i = 0; i < dd; ++i) count *= p;
    for (unsigned enc = 0; enc < count; ++enc) {
      std::vector<uint8_t> div = digits_of(enc, p, dd + 1);
      div[dd] = 1;
      if (poly_is_zero(poly_mod(f, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field make_field(unsigned q) {
  if (q < 2 || q > 256) fail(errc::out_of_range, "field order must lie in [2, 256]");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned k = 0, t = q;
  while (t > 1) {
    if (t % p) fail(errc::non_prime_power, "field order is not a prime power");
    t /= p;
    ++k;
  }

  Field F;
  F.q = q;
  F.p = p;
  F.k = k;

  // smallest monic irreducible of degree k, ordered by the base-p integer
  // value of the non-leading coefficients
  unsigned span = 1;
  for (unsigned i = 0; i < k; ++i) span *= p;
  for (unsigned enc = 0; enc < span; ++enc) {
    std::vector<uint8_t> cand = digits_of(enc, p, k + 1);
    cand[k] = 1;
    if (poly_irreducible(cand, p)) {
      F.modulus = cand;
      break;
    }
  }
  if (F.modulus.empty() || !poly_irreducible(F.modulus, p))
    fail(errc::internal_error, "modulus search failed irreducibility verification");

  auto raw_mul = [&](uint8_t a, uint8_t b) -> uint8_t {
    auto prod = poly_mul_mod(digits_of(a, p, k), digits_of(b, p, k), F.modulus, p);
    prod.resize(k, 0);
    return uint8_t(value_of(prod, p));
  };

  // smallest generator of the multiplicative group
  unsigned g = 0;
  for (unsigned cand = 1; cand < q; ++cand) {
    unsigned order = 1;
    uint8_t acc = uint8_t(cand);
    while (acc != 1) {
      acc = raw_mul(acc, uint8_t(cand));
      ++order;
    }
    if (order == q - 1) {
      g = cand;
      break;
    }
  }
  if (!g) fail(errc::internal_error, "no multiplicative generator found");

  F.exp_table.resize(q - 1);
  F.log_table.assign(q, 0);
  uint8_t acc = 1;
  for (unsigned i = 0; i < q - 1; ++i) {
    F.exp_table[i] = acc;
    F.log_table[acc] = uint8_t(i);
    acc = raw_mul(acc, uint8_t(g));
  }
  if (acc != 1) fail(errc::internal_error, "generator order mismatch");

  F.add_t.resize(size_t(q) * q);
  F.mul_t.resize(size_t(q) * q);
  F.neg_t.resize(q);
  F.inv_t.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits_of(a, p, k);
    std::vector<uint8_t> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = uint8_t((p - da[i]) % p);
    F.neg_t[a] = uint8_t(value_of(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits_of(b, p, k);
      std::vector<uint8_t> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = uint8_t((da[i] + db[i]) % p);
      F.add_t[size_t(a) * q + b] = uint8_t(value_of(ds, p));
      F.mul_t[size_t(a) * q + b] =
          (a && b) ? F.exp_table[(F.log_table[a] + F.log_table[b]) % (q - 1)] : 0;
    }
  }
  for (unsigned a = 1; a < q; ++a)
    F.inv_t[a] = F.exp_table[(q - 1 - F.log_table[a]) % (q - 1)];

  // spot-verify the exp/log tables against direct polynomial arithmetic
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < std::min(q, 16u); ++b)
      if (F.mul_t[size_t(a) * q + b] != raw_mul(uint8_t(a), uint8_t(b)))
        fail(errc::internal_error, "multiplication table disagrees with polynomial arithmetic");

  return F;
}

const Field& field_cache(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::make_unique<Field>(make_field(q))).first;
  return *it->second;
}

unsigned hamming_weight(const uint8_t* v, size_t n) {
  unsigned w = 0;
  for (size_t i = 0; i < n; ++i) w += v[i] != 0;
  return w;
}

unsigned hamming_weight(const FieldVector& v) { return hamming_weight(v.v.data(), v.v.size()); }

uint64_t encode_vector(const Field& F, const uint8_t* v, size_t n) {
  uint64_t x = 0;
  for (size_t i = 0; i < n; ++i) x = x * F.q + v[i];
  return x;
}

FieldVector decode_vector(const Field& F, size_t n, uint64_t value) {
  FieldVector r{&F, std::vector<uint8_t>(n, 0)};
  for (size_t i = n; i-- > 0;) {
    r.v[i] = uint8_t(value % F.q);
    value /= F.q;
  }
  return r;
}

FieldMatrix row_reduce(const FieldMatrix& M) {
  const Field& F = *M.F;
  FieldMatrix R = M;
  size_t pr = 0;
  for (size_t c = 0; c < R.cols && pr < R.rows; ++c) {
    size_t piv = pr;
    while (piv < R.rows && R.at(piv, c) == 0) ++piv;
    if (piv == R.rows) continue;
    if (piv != pr)
      for (size_t j = c; j < R.cols; ++j) std::swap(R.at(piv, j), R.at(pr, j));
    uint8_t s = F.inv(R.at(pr, c));
    if (s != 1)
      for (size_t j = c; j < R.cols; ++j) R.at(pr, j) = F.mul(R.at(pr, j), s);
    for (size_t r = 0; r < R.rows; ++r) {
      if (r == pr) continue;
      uint8_t f = R.at(r, c);
      if (!f) continue;
      for (size_t j = c; j < R.cols; ++j)
        R.at(r, j) = F.sub(R.at(r, j), F.mul(f, R.at(pr, j)));
    }
    ++pr;
  }
  R.a.resize(pr * R.cols);
  R.rows = pr;
  return R;
}

size_t rank(const FieldMatrix& M) { return row_reduce(M).rows; }

FieldMatrix kernel_basis(const FieldMatrix& M) {
  const Field& F = *M.F;
  FieldMatrix R = row_reduce(M);
  std::vector<size_t> pivot_col(R.rows);
  std::vector<char> is_pivot(M.cols, 0);
  for (size_t r = 0; r < R.rows; ++r) {
    size_t c = 0;
    while (c < R.cols && R.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = 1;
  }
  FieldMatrix K(F, M.cols - R.rows, M.cols);
  size_t kr = 0;
  for (size_t fc = 0; fc < M.cols; ++fc) {
    if (is_pivot[fc]) continue;
    K.at(kr, fc) = 1;
    for (size_t r = 0; r < R.rows; ++r) K.at(kr, pivot_col[r]) = F.neg(R.at(r, fc));
    ++kr;
  }
  return K;
}

namespace {

// loopless reflected mixed-radix Gray walk over r digits in [0, q); step(j, dir)
// is called once per transition with dir = +1/-1
template <class Step>
void gray_walk(unsigned q, unsigned r, Step&& step) {
  std::vector<uint8_t> a(r, 0);
  std::vector<int8_t> o(r, 1);
  std::vector<unsigned> f(r + 1);
  for (unsigned j = 0; j <= r; ++j) f[j] = j;
  while (true) {
    unsigned j = f[0];
    f[0] = 0;
    if (j == r) break;
    a[j] = uint8_t(a[j] + o[j]);
    step(j, o[j]);
    if (a[j] == 0 || a[j] == q - 1) {
      o[j] = int8_t(-o[j]);
      f[j] = f[j + 1];
      f[j + 1] = j + 1;
    }
  }
}

uint64_t pow_u64_checked(uint64_t base, unsigned e, uint64_t cap) {
  // returns min(base^e, cap+1) without overflow
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// exact zero-byte count: per-byte (x & 0x7f) + 0x7f never carries across byte
// boundaries, so the high bit of each output byte is set iff the byte is zero
inline unsigned zero_bytes(uint64_t x) {
  constexpr uint64_t k7f = 0x7f7f7f7f7f7f7f7full;
  uint64_t y = (((x & k7f) + k7f) | x) | k7f;
  return unsigned(__builtin_popcountll(~y));
}

// A Gray up-step on digit v adds the field element elem(v+1) - elem(v). In the
// base-p digit encoding this delta depends only on the number t of trailing
// p-1 digits of v; the representative v = p^t - 1 yields delta_t.
std::vector<uint8_t> step_deltas(const Field& F) {
  std::vector<uint8_t> d;
  for (uint64_t pt = 1; pt < F.q; pt *= F.p) d.push_back(F.sub(uint8_t(pt), uint8_t(pt - 1)));
  return d;
}

inline unsigned trailing_level(unsigned v, unsigned p) {
  unsigned t = 0;
  while (v % p == p - 1) {
    v /= p;
    ++t;
  }
  return t;
}

// characteristic-2 core: field addition is XOR, so +row and -row coincide and
// 8 coordinates are updated per word. Rows padded with zero to whole words;
// one delta-scaled copy of each row per trailing level.
struct XorEngine {
  size_t w64;
  unsigned levels;
  std::vector<uint64_t> rows;  // r x levels x w64
  std::vector<uint64_t> cw;
  std::vector<uint8_t> dig;
  unsigned wt = 0;

  XorEngine(const FieldMatrix& G) {
    const Field& F = *G.F;
    std::vector<uint8_t> deltas = step_deltas(F);
    levels = unsigned(deltas.size());
    w64 = (G.cols + 7) / 8;
    rows.assign(G.rows * levels * w64, 0);
    for (size_t r = 0; r < G.rows; ++r)
      for (unsigned t = 0; t < levels; ++t) {
        auto* bytes = reinterpret_cast<uint8_t*>(rows.data() + (r * levels + t) * w64);
        for (size_t i = 0; i < G.cols; ++i) bytes[i] = F.mul(deltas[t], G.at(r, i));
      }
    cw.assign(w64, 0);
    dig.assign(G.rows, 0);
  }

  void apply(unsigned j, int dir) {
    unsigned lower = dir > 0 ? dig[j] : dig[j] - 1u;
    dig[j] = uint8_t(int(dig[j]) + dir);
    unsigned t = trailing_level(lower, 2);
    const uint64_t* row = rows.data() + (size_t(j) * levels + t) * w64;
    int d = 0;
    for (size_t i = 0; i < w64; ++i) {
      uint64_t oldv = cw[i];
      uint64_t newv = oldv ^ row[i];
      cw[i] = newv;
      d += int(zero_bytes(oldv)) - int(zero_bytes(newv));
    }
    wt = unsigned(int(wt) + d);
  }

  void add_scaled(const Field& F, const FieldMatrix& G, size_t row, uint8_t c) {
    auto* bytes = reinterpret_cast<uint8_t*>(cw.data());
    for (size_t i = 0; i < G.cols; ++i) {
      uint8_t oldv = bytes[i];
      uint8_t newv = F.add(oldv, F.mul(c, G.at(row, i)));
      bytes[i] = newv;
      wt += unsigned(newv != 0) - unsigned(oldv != 0);
    }
  }

  const uint8_t* bytes() const { return reinterpret_cast<const uint8_t*>(cw.data()); }
};

// generic core: one add-table lookup per coordinate; keeps +delta and -delta
// scaled copies of each row per trailing level
struct TableEngine {
  const Field& F;
  size_t n;
  unsigned levels;
  std::vector<uint8_t> rows_pos, rows_neg;  // r x levels x n each
  std::vector<uint8_t> cw;
  std::vector<uint8_t> dig;
  unsigned wt = 0;

  TableEngine(const FieldMatrix& G) : F(*G.F), n(G.cols) {
    std::vector<uint8_t> deltas = step_deltas(F);
    levels = unsigned(deltas.size());
    rows_pos.assign(G.rows * levels * n, 0);
    rows_neg.assign(G.rows * levels * n, 0);
    for (size_t r = 0; r < G.rows; ++r)
      for (unsigned t = 0; t < levels; ++t)
        for (size_t i = 0; i < n; ++i) {
          uint8_t v = F.mul(deltas[t], G.at(r, i));
          rows_pos[(r * levels + t) * n + i] = v;
          rows_neg[(r * levels + t) * n + i] = F.neg(v);
        }
    cw.assign(n, 0);
    dig.assign(G.rows, 0);
  }

  void apply(unsigned j, int dir) {
    unsigned lower = dir > 0 ? dig[j] : dig[j] - 1u;
    dig[j] = uint8_t(int(dig[j]) + dir);
    unsigned t = trailing_level(lower, F.p);
    const uint8_t* row =
        (dir > 0 ? rows_pos : rows_neg).data() + (size_t(j) * levels + t) * n;
    const uint8_t* addt = F.add_t.data();
    unsigned q = F.q;
    int d = 0;
    for (size_t i = 0; i < n; ++i) {
      uint8_t oldv = cw[i];
      uint8_t newv = addt[size_t(oldv) * q + row[i]];
      cw[i] = newv;
      d += int(newv != 0) - int(oldv != 0);
    }
    wt = unsigned(int(wt) + d);
  }

  void add_scaled(const Field& f, const FieldMatrix& G, size_t row, uint8_t c) {
    for (size_t i = 0; i < n; ++i) {
      uint8_t oldv = cw[i];
      uint8_t newv = f.add(oldv, f.mul(c, G.at(row, i)));
      cw[i] = newv;
      wt += unsigned(newv != 0) - unsigned(oldv != 0);
    }
  }

  const uint8_t* bytes() const { return cw.data(); }
};

// enumerate one block: the low walk_digits digits follow the Gray walk, the
// high digits were pre-applied to the engine by the caller
template <class Engine, class Visit>
void enumerate_block(Engine& eng, const Field& F, unsigned walk_digits, Visit&& visit) {
  visit(eng.bytes(), eng.wt);
  gray_walk(F.q, walk_digits, [&](unsigned j, int dir) {
    eng.apply(j, dir);
    visit(eng.bytes(), eng.wt);
  });
}

}  // namespace

void row_space_enumerate(const FieldMatrix& G,
                         const std::function<void(const uint8_t*, unsigned)>& visit,
                         const EnumerationConfig& cfg) {
  const Field& F = *G.F;
  FieldMatrix R = row_reduce(G);
  uint64_t total = pow_u64_checked(F.q, unsigned(R.rows), cfg.budget);
  if (total > cfg.budget) fail(errc::too_large, "row space exceeds enumeration budget");
  if (F.p == 2) {
    XorEngine eng(R);
    enumerate_block(eng, F, unsigned(R.rows), visit);
  } else {
    TableEngine eng(R);
    enumerate_block(eng, F, unsigned(R.rows), visit);
  }
}

namespace {

template <class Engine>
std::vector<uint64_t> histogram_blocks(const Field& F, const FieldMatrix& R, unsigned fixed,
                                       uint64_t block_lo, uint64_t block_hi, unsigned stride) {
  // accumulates the histogram of blocks block_lo, block_lo+stride, ... < block_hi
  std::vector<uint64_t> hist(R.cols + 1, 0);
  unsigned walk = unsigned(R.rows) - fixed;
  for (uint64_t b = block_lo; b < block_hi; b += stride) {
    Engine eng(R);
    // fixed digit i (of value d_i) scales row walk+i
    uint64_t rem = b;
    for (unsigned i = 0; i < fixed; ++i) {
      uint8_t d = uint8_t(rem % F.q);
      rem /= F.q;
      if (d) eng.add_scaled(F, R, walk + i, d);
    }
    enumerate_block(eng, F, walk, [&](const uint8_t*, unsigned w) { ++hist[w]; });
  }
  return hist;
}

}  // namespace

std::vector<uint64_t> weight_histogram(const FieldMatrix& G, const EnumerationConfig& cfg) {
  const Field& F = *G.F;
  FieldMatrix R = row_reduce(G);
  uint64_t total = pow_u64_checked(F.q, unsigned(R.rows), cfg.budget);
  if (total > cfg.budget) fail(errc::too_large, "row space exceeds enumeration budget");

  unsigned threads = cfg.threads ? cfg.threads : 1;
  unsigned fixed = 0;
  uint64_t blocks = 1;
  if (threads > 1)
    while (blocks < uint64_t(4) * threads && fixed < R.rows) {
      ++fixed;
      blocks *= F.q;
    }

  auto run = [&](uint64_t lo, unsigned stride) {
    return F.p == 2 ? histogram_blocks<XorEngine>(F, R, fixed, lo, blocks, stride)
                    : histogram_blocks<TableEngine>(F, R, fixed, lo, blocks, stride);
  };

  if (threads <= 1 || blocks == 1) return run(0, 1);

  std::vector<std::vector<uint64_t>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] { parts[t] = run(t, threads); });
  for (auto& th : pool) th.join();
  std::vector<uint64_t> hist(G.cols + 1, 0);
  for (auto& part : parts)
    for (size_t w = 0; w < part.size(); ++w) hist[w] += part[w];
  return hist;
}

}  // namespace mixedcode
