#pragma once

#include <cstdint>
#include <vector>

#include "rings.hpp"

namespace mixedcode {

// subset of [m] = {1, ..., m}; members strictly increasing, 1-indexed
struct SupportSet {
  unsigned m = 0;
  std::vector<unsigned> members;

  bool contains(unsigned i) const;
  size_t size() const { return members.size(); }
  bool subset_of(const SupportSet& other) const;
  bool disjoint_from(const SupportSet& other) const;
  SupportSet unite(const SupportSet& other) const;
  bool is_full() const { return members.size() == m; }
};

SupportSet make_support(unsigned m, std::vector<unsigned> members);  // validates

enum class ComplexVariant { delta, complement, star };

// delta:      all v in F_q^m with supp(v) subseteq s   (the simplicial complex)
// complement: F_q^m minus delta
// star:       delta minus the zero vector
// Vectors are listed in increasing canonical integer order (first coordinate
// most significant).
std::vector<FieldVector> enumerate_complex(const Field& F, const SupportSet& s,
                                           ComplexVariant variant);

enum class SetKind { S1, S2, S3, S4, custom };

struct DefiningSetSpec {
  SetKind kind = SetKind::custom;
  unsigned q = 0, m = 0;
  SupportSet A, B, C;
  std::vector<MixedVector> custom_elements;
};

// The four defining-set families, as triples (w1 + u w2, w3) ranging over:
//   S1: w1 in delta_A,   w2 in delta_B,   w3 in delta_C^c    (requires |C| < m)
//   S2: w1 in delta_A^c, w2 in delta_B,   w3 in delta_C      (requires |A| < m)
//   S3: w1 in delta_A,   w2 in delta_B^c, w3 in delta_C      (requires |B| < m)
//   S4: w1 in delta_A^*, w2 in delta_B,   w3 in delta_C^c    (requires |C| < m)
// A, B, C must be nonempty. Enumeration order: w1 outer, w2 middle, w3 inner,
// each range in canonical order. Custom sets are validated for duplicates.
std::vector<MixedVector> build_defining_set(const DefiningSetSpec& spec);

// closed-form size of build_defining_set(spec) without enumerating
uint64_t defining_set_size(const DefiningSetSpec& spec);

enum class XYZKind { X, Xc, Y, Z };

// Counting closed forms over F_q^m (P, Q nonempty; throws empty_support):
//   X  = {v : supp(v) cap P = empty}                              -> q^{m-|P|}
//   Xc = complement of X                                          -> q^m - q^{m-|P|}
//   Y  = {v : supp(v) cap P = empty, supp(v) cap Q nonempty}      -> q^{m-|P|} - q^{m-|P cup Q|}
//   Z  = {v : supp(v) cap P nonempty, supp(v) cap Q nonempty}     -> q^m - q^{m-|P|} - q^{m-|Q|} + q^{m-|P cup Q|}
uint64_t cardinality_xyz(unsigned q, unsigned m, const SupportSet& P, const SupportSet& Q,
                         XYZKind which);

enum class MNKind { M, Mhat, Mtilde, N, Nhat, Ntilde };

// Counting closed forms over pairs (e, f) in (F_q^m)^2:
//   M      : supp(f) cap P nonempty, supp(e) cap P nonempty, supp(e) cap Q = empty
//   N      : supp(f) cap P nonempty, supp(e) cap P nonempty, supp(e) cap Q nonempty
//   hats   : additionally supp(e + f) cap P = empty
//   tildes : the rest (M minus Mhat, N minus Nhat)
uint64_t cardinality_mn(unsigned q, unsigned m, const SupportSet& P, const SupportSet& Q,
                        MNKind which);

}  // namespace mixedcode
