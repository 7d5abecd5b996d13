#include "mixedcode/complexes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mixedcode {

namespace {

uint64_t ipow(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

void require_nonempty(const SupportSet& s, const char* name) {
  if (s.members.empty()) fail(errc::empty_support, std::string(name) + " must be nonempty");
}

}  // namespace

bool SupportSet::contains(unsigned i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool SupportSet::subset_of(const SupportSet& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

bool SupportSet::disjoint_from(const SupportSet& other) const {
  for (unsigned i : members)
    if (other.contains(i)) return false;
  return true;
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  SupportSet u;
  u.m = m;
  std::set_union(members.begin(), members.end(), other.members.begin(), other.members.end(),
                 std::back_inserter(u.members));
  return u;
}

SupportSet make_support(unsigned m, std::vector<unsigned> members) {
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > m)
      fail(errc::out_of_range, "support member outside [1, m]");
    if (i && members[i] == members[i - 1])
      fail(errc::duplicate_element, "repeated support member");
  }
  return SupportSet{m, std::move(members)};
}

std::vector<FieldVector> enumerate_complex(const Field& F, const SupportSet& s,
                                           ComplexVariant variant) {
  unsigned m = s.m;
  std::vector<FieldVector> out;
  if (variant == ComplexVariant::complement) {
    uint64_t total = ipow(F.q, m);
    if (total > (uint64_t(1) << 26)) fail(errc::too_large, "complement enumeration too large");
    for (uint64_t val = 0; val < total; ++val) {
      FieldVector v = decode_vector(F, m, val);
      bool inside = true;
      for (unsigned i = 0; i < m && inside; ++i)
        if (v.v[i] && !s.contains(i + 1)) inside = false;
      if (!inside) out.push_back(std::move(v));
    }
    return out;
  }
  // delta / star: assignments over the support positions, canonical order
  uint64_t total = ipow(F.q, s.members.size());
  for (uint64_t val = (variant == ComplexVariant::star ? 1 : 0); val < total; ++val) {
    FieldVector v{&F, std::vector<uint8_t>(m, 0)};
    uint64_t rem = val;
    for (size_t i = s.members.size(); i-- > 0;) {
      v.v[s.members[i] - 1] = uint8_t(rem % F.q);
      rem /= F.q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<MixedVector> build_defining_set(const DefiningSetSpec& spec) {
  if (spec.kind == SetKind::custom) {
    const Field& F = field_cache(spec.q);
    std::set<MixedVector> seen;
    for (const auto& v : spec.custom_elements) {
      if (v.w1.size() != spec.m || v.w2.size() != spec.m || v.w3.size() != spec.m)
        fail(errc::length_mismatch, "custom element length differs from m");
      if (!seen.insert(v).second) fail(errc::duplicate_element, "repeated defining-set element");
      (void)F;
    }
    return spec.custom_elements;
  }

  require_nonempty(spec.A, "A");
  require_nonempty(spec.B, "B");
  require_nonempty(spec.C, "C");
  ComplexVariant r1, r2, r3;
  switch (spec.kind) {
    case SetKind::S1:
      if (spec.C.is_full()) fail(errc::side_condition_violated, "S1 requires |C| < m");
      r1 = ComplexVariant::delta;
      r2 = ComplexVariant::delta;
      r3 = ComplexVariant::complement;
      break;
    case SetKind::S2:
      if (spec.A.is_full()) fail(errc::side_condition_violated, "S2 requires |A| < m");
      r1 = ComplexVariant::complement;
      r2 = ComplexVariant::delta;
      r3 = ComplexVariant::delta;
      break;
    case SetKind::S3:
      if (spec.B.is_full()) fail(errc::side_condition_violated, "S3 requires |B| < m");
      r1 = ComplexVariant::delta;
      r2 = ComplexVariant::complement;
      r3 = ComplexVariant::delta;
      break;
    case SetKind::S4:
      if (spec.C.is_full()) fail(errc::side_condition_violated, "S4 requires |C| < m");
      r1 = ComplexVariant::star;
      r2 = ComplexVariant::delta;
      r3 = ComplexVariant::complement;
      break;
    default:
      fail(errc::internal_error, "unreachable kind");
  }
  const Field& F = field_cache(spec.q);
  auto range1 = enumerate_complex(F, spec.A, r1);
  auto range2 = enumerate_complex(F, spec.B, r2);
  auto range3 = enumerate_complex(F, spec.C, r3);
  std::vector<MixedVector> out;
  out.reserve(range1.size() * range2.size() * range3.size());
  for (const auto& w1 : range1)
    for (const auto& w2 : range2)
      for (const auto& w3 : range3) out.push_back(MixedVector{&F, w1.v, w2.v, w3.v});
  return out;
}

uint64_t defining_set_size(const DefiningSetSpec& spec) {
  if (spec.kind == SetKind::custom) return spec.custom_elements.size();
  uint64_t q = spec.q, m = spec.m;
  uint64_t a = spec.A.size(), b = spec.B.size(), c = spec.C.size();
  switch (spec.kind) {
    case SetKind::S1: return ipow(q, a + b) * (ipow(q, m) - ipow(q, c));
    case SetKind::S2: return ipow(q, b + c) * (ipow(q, m) - ipow(q, a));
    case SetKind::S3: return ipow(q, a + c) * (ipow(q, m) - ipow(q, b));
    case SetKind::S4: return (ipow(q, a) - 1) * ipow(q, b) * (ipow(q, m) - ipow(q, c));
    default: fail(errc::internal_error, "unreachable kind");
  }
}

uint64_t cardinality_xyz(unsigned q, unsigned m, const SupportSet& P, const SupportSet& Q,
                         XYZKind which) {
  require_nonempty(P, "P");
  uint64_t qm = ipow(q, m);
  uint64_t xp = ipow(q, m - P.size());
  switch (which) {
    case XYZKind::X: return xp;
    case XYZKind::Xc: return qm - xp;
    case XYZKind::Y: {
      require_nonempty(Q, "Q");
      return xp - ipow(q, m - P.unite(Q).size());
    }
    case XYZKind::Z: {
      require_nonempty(Q, "Q");
      return qm - xp - ipow(q, m - Q.size()) + ipow(q, m - P.unite(Q).size());
    }
  }
  fail(errc::internal_error, "unreachable");
}

uint64_t cardinality_mn(unsigned q, unsigned m, const SupportSet& P, const SupportSet& Q,
                        MNKind which) {
  require_nonempty(P, "P");
  require_nonempty(Q, "Q");
  uint64_t qm = ipow(q, m);
  uint64_t p = P.size(), qq = Q.size(), pq = P.unite(Q).size(), pi = p + qq - pq;  // pi = |P cap Q|
  uint64_t z = qm - ipow(q, m - p) - ipow(q, m - qq) + ipow(q, m - pq);
  switch (which) {
    case MNKind::M:
      return (qm - ipow(q, m - p)) * (ipow(q, m - qq) - ipow(q, m - pq));
    case MNKind::Mhat:
      return (ipow(q, p - pi) - 1) * ipow(q, 2 * m - p - pq);
    case MNKind::Mtilde:
      return ((ipow(q, p) - 1) * (ipow(q, pq - qq) - 1) - (ipow(q, p - pi) - 1)) *
             ipow(q, 2 * m - p - pq);
    case MNKind::N:
      return (qm - ipow(q, m - p)) * z;
    case MNKind::Nhat:
      return ipow(q, m - p) * z;
    case MNKind::Ntilde:
      return (qm - 2 * ipow(q, m - p)) * z;
  }
  fail(errc::internal_error, "unreachable");
}

}  // namespace mixedcode
