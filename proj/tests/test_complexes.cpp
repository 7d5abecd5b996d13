#include <doctest.h>

#include <optional>
#include <set>

#include "mixedcode/complexes.hpp"

using namespace mixedcode;

namespace {

template <typename Fn>
std::optional<errc> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code;
    }
    return std::nullopt;
}

bool meets(const std::vector<uint8_t>& v, const SupportSet& s) {
    for (unsigned i = 0; i < v.size(); ++i)
        if (v[i] && s.contains(i + 1)) return true;
    return false;
}

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::vector<unsigned>> nonempty_subsets(unsigned m) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<unsigned> s;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("support set validation and operations") {
    SupportSet s = make_support(3, {3, 1});
    CHECK(s.members == std::vector<unsigned>{1, 3}); // sorted on construction
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(thrown_code([] { make_support(3, {4}); }) == errc::out_of_range);
    CHECK(thrown_code([] { make_support(3, {0}); }) == errc::out_of_range);
    CHECK(thrown_code([] { make_support(3, {2, 2}); }) == errc::duplicate_element);

    SupportSet a = make_support(4, {1, 2}), b = make_support(4, {2, 3});
    CHECK(a.unite(b).members == std::vector<unsigned>{1, 2, 3});
    CHECK(!a.disjoint_from(b));
    CHECK(a.disjoint_from(make_support(4, {3, 4})));
    CHECK(make_support(4, {2}).subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(make_support(2, {1, 2}).is_full());
}

TEST_CASE("complex enumeration sizes and canonical order") {
    const Field& f2 = field_cache(2);
    SupportSet s = make_support(3, {1, 3});

    auto delta = enumerate_complex(f2, s, ComplexVariant::delta);
    REQUIRE(delta.size() == 4);
    std::vector<uint64_t> codes;
    for (const auto& v : delta) codes.push_back(encode_vector(v));
    CHECK(codes == std::vector<uint64_t>{0, 1, 4, 5});

    auto star = enumerate_complex(f2, s, ComplexVariant::star);
    REQUIRE(star.size() == 3);
    CHECK(encode_vector(star[0]) == 1);

    auto comp = enumerate_complex(f2, s, ComplexVariant::complement);
    CHECK(comp.size() == 8 - 4);
    for (const auto& v : comp) {
        bool outside = false;
        for (unsigned i = 0; i < 3; ++i)
            if (v.v[i] && !s.contains(i + 1)) outside = true;
        CHECK(outside);
    }
    for (size_t i = 1; i < comp.size(); ++i)
        CHECK(encode_vector(comp[i - 1]) < encode_vector(comp[i]));

    const Field& f3 = field_cache(3);
    CHECK(enumerate_complex(f3, make_support(3, {2}), ComplexVariant::delta).size() == 3);
    CHECK(enumerate_complex(f3, make_support(3, {2}), ComplexVariant::star).size() == 2);
    CHECK(enumerate_complex(f3, make_support(3, {2}), ComplexVariant::complement).size() == 27 - 3);
}

TEST_CASE("defining set sizes match the closed forms") {
    struct Case {
        SetKind kind;
        unsigned q, m;
        std::vector<unsigned> A, B, C;
        uint64_t want;
    };
    // |S1| = q^{a+b}(q^m - q^c), |S2| = q^{b+c}(q^m - q^a),
    // |S3| = q^{a+c}(q^m - q^b), |S4| = (q^a - 1) q^b (q^m - q^c)
    const Case cases[] = {
        {SetKind::S1, 4, 3, {1}, {2, 3}, {3}, 3840},
        {SetKind::S2, 4, 4, {1}, {2, 3}, {2}, 16128},
        {SetKind::S3, 4, 4, {2}, {1, 3}, {1}, 3840},
        {SetKind::S4, 3, 4, {4}, {4}, {1, 2}, 432},
    };
    for (const auto& c : cases) {
        DefiningSetSpec spec;
        spec.kind = c.kind;
        spec.q = c.q;
        spec.m = c.m;
        spec.A = make_support(c.m, c.A);
        spec.B = make_support(c.m, c.B);
        spec.C = make_support(c.m, c.C);
        CHECK(defining_set_size(spec) == c.want);
        auto D = build_defining_set(spec);
        CHECK(D.size() == c.want);
        std::set<MixedVector> dedup(D.begin(), D.end());
        CHECK(dedup.size() == c.want);
    }
}

TEST_CASE("defining set enumeration order is w1 outer, w3 inner") {
    DefiningSetSpec spec;
    spec.kind = SetKind::S1;
    spec.q = 2;
    spec.m = 2;
    spec.A = make_support(2, {1});
    spec.B = make_support(2, {2});
    spec.C = make_support(2, {1});
    auto D = build_defining_set(spec);
    REQUIRE(D.size() == 8);
    CHECK(D.front().w1 == std::vector<uint8_t>{0, 0});
    CHECK(D.front().w2 == std::vector<uint8_t>{0, 0});
    CHECK(D.front().w3 == std::vector<uint8_t>{0, 1}); // first w3 outside delta_C
    CHECK(D.back().w1 == std::vector<uint8_t>{1, 0});
    CHECK(D.back().w2 == std::vector<uint8_t>{0, 1});
    CHECK(D.back().w3 == std::vector<uint8_t>{1, 1});
    // w3 varies fastest
    CHECK(D[1].w1 == D[0].w1);
    CHECK(D[1].w2 == D[0].w2);
    CHECK(D[1].w3 != D[0].w3);
}

TEST_CASE("defining set side conditions") {
    auto spec_with = [](SetKind kind, unsigned m, std::vector<unsigned> A,
                        std::vector<unsigned> B, std::vector<unsigned> C) {
        DefiningSetSpec s;
        s.kind = kind;
        s.q = 2;
        s.m = m;
        s.A = make_support(m, std::move(A));
        s.B = make_support(m, std::move(B));
        s.C = make_support(m, std::move(C));
        return s;
    };
    CHECK(thrown_code([&] { build_defining_set(spec_with(SetKind::S1, 2, {1}, {1}, {1, 2})); }) ==
          errc::side_condition_violated);
    CHECK(thrown_code([&] { build_defining_set(spec_with(SetKind::S2, 2, {1, 2}, {1}, {1})); }) ==
          errc::side_condition_violated);
    CHECK(thrown_code([&] { build_defining_set(spec_with(SetKind::S3, 2, {1}, {1, 2}, {1})); }) ==
          errc::side_condition_violated);
    CHECK(thrown_code([&] { build_defining_set(spec_with(SetKind::S4, 2, {1}, {1}, {1, 2})); }) ==
          errc::side_condition_violated);

    DefiningSetSpec empty_a = spec_with(SetKind::S1, 2, {1}, {1}, {1});
    empty_a.A.members.clear();
    CHECK(thrown_code([&] { build_defining_set(empty_a); }) == errc::empty_support);

    // S4 is accepted at |A| = 1: delta_A^* is nonempty for any nonempty A
    auto s4 = spec_with(SetKind::S4, 2, {1}, {1}, {1});
    CHECK(build_defining_set(s4).size() == (2 - 1) * 2 * (4 - 2));
}

TEST_CASE("custom defining sets validate duplicates and lengths") {
    const Field& f2 = field_cache(2);
    MixedVector v{&f2, {1, 0}, {0, 0}, {0, 1}};
    DefiningSetSpec spec;
    spec.kind = SetKind::custom;
    spec.q = 2;
    spec.m = 2;
    spec.custom_elements = {v, v};
    CHECK(thrown_code([&] { build_defining_set(spec); }) == errc::duplicate_element);
    spec.custom_elements = {MixedVector{&f2, {1}, {0}, {0}}};
    CHECK(thrown_code([&] { build_defining_set(spec); }) == errc::length_mismatch);
}

TEST_CASE("counting closed forms match brute force") {
    for (unsigned q : {2u, 3u}) {
        const Field& F = field_cache(q);
        for (unsigned m : {2u, 3u}) {
            uint64_t total = ipow(q, m);
            auto subsets = nonempty_subsets(m);
            for (const auto& Pv : subsets)
                for (const auto& Qv : subsets) {
                    SupportSet P = make_support(m, Pv), Q = make_support(m, Qv);
                    uint64_t x = 0, xc = 0, y = 0, z = 0;
                    for (uint64_t val = 0; val < total; ++val) {
                        auto v = decode_vector(F, m, val);
                        bool mp = meets(v.v, P), mq = meets(v.v, Q);
                        if (!mp) ++x; else ++xc;
                        if (!mp && mq) ++y;
                        if (mp && mq) ++z;
                    }
                    CHECK(cardinality_xyz(q, m, P, Q, XYZKind::X) == x);
                    CHECK(cardinality_xyz(q, m, P, Q, XYZKind::Xc) == xc);
                    CHECK(cardinality_xyz(q, m, P, Q, XYZKind::Y) == y);
                    CHECK(cardinality_xyz(q, m, P, Q, XYZKind::Z) == z);

                    uint64_t M = 0, Mhat = 0, N = 0, Nhat = 0;
                    for (uint64_t ev = 0; ev < total; ++ev)
                        for (uint64_t fv = 0; fv < total; ++fv) {
                            auto e = decode_vector(F, m, ev);
                            auto f = decode_vector(F, m, fv);
                            if (!meets(f.v, P) || !meets(e.v, P)) continue;
                            std::vector<uint8_t> sum(m);
                            for (unsigned i = 0; i < m; ++i) sum[i] = F.add(e.v[i], f.v[i]);
                            bool eq = meets(e.v, Q), sp = meets(sum, P);
                            if (!eq) {
                                ++M;
                                if (!sp) ++Mhat;
                            } else {
                                ++N;
                                if (!sp) ++Nhat;
                            }
                        }
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::M) == M);
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::Mhat) == Mhat);
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::Mtilde) == M - Mhat);
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::N) == N);
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::Nhat) == Nhat);
                    CHECK(cardinality_mn(q, m, P, Q, MNKind::Ntilde) == N - Nhat);
                }
        }
    }
}

TEST_CASE("frozen counting values") {
    SupportSet P1 = make_support(3, {1}), Q23 = make_support(3, {2, 3});
    CHECK(cardinality_xyz(2, 3, P1, Q23, XYZKind::Y) == 3);
    CHECK(cardinality_xyz(2, 3, P1, Q23, XYZKind::Z) == 3);

    SupportSet P = make_support(2, {1}), Q = make_support(2, {2});
    CHECK(cardinality_mn(2, 2, P, Q, MNKind::M) == 2);
    CHECK(cardinality_mn(2, 2, P, Q, MNKind::Mhat) == 2);
    CHECK(cardinality_mn(2, 2, P, Q, MNKind::Ntilde) == 0);
}
