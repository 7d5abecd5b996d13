#include <doctest.h>

#include <optional>
#include <set>

#include "mixedcode/construct.hpp"

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

DefiningSetSpec spec_of(SetKind k, unsigned q, unsigned m, std::vector<unsigned> A,
                        std::vector<unsigned> B, std::vector<unsigned> C) {
    DefiningSetSpec s;
    s.kind = k;
    s.q = q;
    s.m = m;
    s.A = make_support(m, std::move(A));
    s.B = make_support(m, std::move(B));
    s.C = make_support(m, std::move(C));
    return s;
}

} // namespace

TEST_CASE("ring spanning matrix columns") {
    auto spec = spec_of(SetKind::S1, 2, 2, {1}, {2}, {1});
    auto D = build_defining_set(spec);
    REQUIRE(D.size() == 8);
    const Field& F = field_cache(2);
    RingMatrix M = ring_spanning_matrix(F, 2, D);
    CHECK(M.rows == 4);
    CHECK(M.cols == 8);
    for (size_t j = 0; j < D.size(); ++j) {
        const MixedVector& s = D[j];
        for (unsigned i = 0; i < 2; ++i) {
            CHECK(M.at_d(i, j) == s.w1[i]); // top block: w1 + u w2
            CHECK(M.at_e(i, j) == s.w2[i]);
            CHECK(M.at_d(2 + i, j) == 0); // bottom block: u w3
            CHECK(M.at_e(2 + i, j) == s.w3[i]);
        }
    }
}

TEST_CASE("Gray spanning matrix columns") {
    auto spec = spec_of(SetKind::S1, 3, 2, {1}, {2}, {1});
    auto D = build_defining_set(spec);
    const Field& F = field_cache(3);
    FieldMatrix G = gray_spanning_matrix(F, 2, D);
    CHECK(G.rows == 6);
    CHECK(G.cols == 2 * D.size());
    for (size_t j = 0; j < D.size(); ++j) {
        const MixedVector& s = D[j];
        for (unsigned i = 0; i < 2; ++i) {
            // column 2j: (w2, w3, w1); column 2j+1: (w1 + w2, w3, w1)
            CHECK(G.at(i, 2 * j) == s.w2[i]);
            CHECK(G.at(2 + i, 2 * j) == s.w3[i]);
            CHECK(G.at(4 + i, 2 * j) == s.w1[i]);
            CHECK(G.at(i, 2 * j + 1) == F.add(s.w1[i], s.w2[i]));
            CHECK(G.at(2 + i, 2 * j + 1) == s.w3[i]);
            CHECK(G.at(4 + i, 2 * j + 1) == s.w1[i]);
        }
    }
}

TEST_CASE("column multisets reproduce the Gray spanning matrix") {
    struct Case {
        SetKind sk;
        MultisetKind mk;
    };
    const Case cases[] = {{SetKind::S1, MultisetKind::N1},
                          {SetKind::S2, MultisetKind::N2},
                          {SetKind::S3, MultisetKind::N3},
                          {SetKind::S4, MultisetKind::N4}};
    for (unsigned q : {2u, 3u}) {
        for (const auto& cs : cases) {
            auto spec = spec_of(cs.sk, q, 2, {1}, {2}, {1});
            auto D = build_defining_set(spec);
            const Field& F = field_cache(q);
            FieldMatrix G = gray_spanning_matrix(F, 2, D);
            ColumnMultiset cm = gray_multiset(cs.mk, spec);
            FieldMatrix M = cm.as_matrix();
            REQUIRE(M.rows == G.rows);
            REQUIRE(M.cols == G.cols);
            CHECK(M.a == G.a);
        }
    }
}

TEST_CASE("ring code, direct evaluation, and Gray images agree as sets") {
    for (SetKind k : {SetKind::S1, SetKind::S2, SetKind::S3, SetKind::S4}) {
        auto spec = spec_of(k, 2, 2, {1}, {2}, {1});
        auto D = build_defining_set(spec);
        const Field& F = field_cache(2);
        uint64_t budget = uint64_t(1) << 22;

        auto direct = ring_code_direct_eval(F, 2, D, budget);
        RingMatrix M = ring_spanning_matrix(F, 2, D);
        auto span_set = ring_row_space_set(M, budget);
        CHECK(direct == span_set);

        auto gray_direct = gray_image_set(F, 2, D, budget);
        FieldMatrix G = gray_spanning_matrix(F, 2, D);
        auto gray_span = field_row_space_set(G, budget);
        CHECK(gray_direct == gray_span);
        CHECK(gray_direct.size() == direct.size()); // the Gray map is a bijection
    }
    // one odd-characteristic instance
    auto spec = spec_of(SetKind::S4, 3, 2, {1, 2}, {1}, {1});
    auto D = build_defining_set(spec);
    const Field& F = field_cache(3);
    auto direct = ring_code_direct_eval(F, 2, D, 1 << 22);
    auto span_set = ring_row_space_set(ring_spanning_matrix(F, 2, D), 1 << 22);
    CHECK(direct == span_set);
    auto gi = gray_image_set(F, 2, D, 1 << 22);
    auto gs = field_row_space_set(gray_spanning_matrix(F, 2, D), 1 << 22);
    CHECK(gi == gs);
}

TEST_CASE("gray_code wraps the spanning matrix") {
    auto spec = spec_of(SetKind::S3, 3, 2, {1}, {2}, {1});
    RingCode rc = code_from_defining_set(spec);
    CHECK(rc.length == build_defining_set(spec).size());
    FieldCode gc = gray_code(rc);
    CHECK(gc.length == 2 * rc.length);
    FieldMatrix G = gray_spanning_matrix(*gc.F, spec.m, build_defining_set(spec));
    CHECK(gc.span.a == G.a);
}

TEST_CASE("projective representatives") {
    // second family: q=3, m=2, A=B={1}, C={1}
    auto spec = spec_of(SetKind::S2, 3, 2, {1}, {1}, {1});
    ColumnMultiset reps = projective_representatives(RepKind::N2bar, spec);
    // n' = 2 (q^m - q^a) q^{b+c} / (q-1) = 2 * 6 * 9 / 2 = 54
    CHECK(reps.cols.size() == 54);
    std::set<std::vector<uint8_t>> distinct(reps.cols.begin(), reps.cols.end());
    CHECK(distinct.size() == 54);
    for (const auto& col : reps.cols) {
        size_t lead = 0;
        while (lead < col.size() && col[lead] == 0) ++lead;
        REQUIRE(lead < col.size());
        CHECK(col[lead] == 1); // normalized representative
    }

    // the multiset itself has every class complete: 2 * |S2| columns in classes of size q-1
    ColumnMultiset n2 = gray_multiset(MultisetKind::N2, spec);
    CHECK(n2.cols.size() == 2 * defining_set_size(spec));
    CHECK(n2.cols.size() == reps.cols.size() * (spec.q - 1));

    // fourth family side conditions: |A| >= 2 and A disjoint from B
    auto bad = spec_of(SetKind::S4, 3, 3, {1}, {2}, {1});
    CHECK(thrown_code([&] { projective_representatives(RepKind::N4bar, bad); }) ==
          errc::side_condition_violated);
    auto overlap = spec_of(SetKind::S4, 3, 3, {1, 2}, {2}, {1});
    CHECK(thrown_code([&] { projective_representatives(RepKind::N4bar, overlap); }) ==
          errc::side_condition_violated);
    auto good = spec_of(SetKind::S4, 3, 3, {1, 2}, {3}, {1});
    ColumnMultiset n4 = projective_representatives(RepKind::N4bar, good);
    // n' = 2 (q^m - q^c)(q^a - 1) q^b / (q-1) = 2 * 24 * 8 * 3 / 2 = 576
    CHECK(n4.cols.size() == 576);
}

TEST_CASE("projective dedupe") {
    const Field& f3 = field_cache(3);
    ColumnMultiset cm;
    cm.F = &f3;
    cm.dim = 2;
    cm.cols = {{1, 0}, {2, 0}, {0, 1}};
    ColumnMultiset r = dedupe_projective(cm, false);
    CHECK(r.cols == std::vector<std::vector<uint8_t>>{{1, 0}, {0, 1}});
    // {0,1} has only one member, not q-1 = 2: full classes are violated
    CHECK(thrown_code([&] { dedupe_projective(cm, true); }) == errc::internal_error);

    FieldCode code = code_from_columns(r);
    CHECK(code.length == 2);
    CHECK(code.span.rows == 2);
    CHECK(code.span.at(0, 0) == 1);
    CHECK(code.span.at(1, 1) == 1);
}
