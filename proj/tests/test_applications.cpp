#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "mixedcode/applications.hpp"
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

FieldMatrix simplex7() {
    const Field& f2 = field_cache(2);
    FieldMatrix G(f2, 3, 7);
    for (unsigned col = 1; col <= 7; ++col)
        for (unsigned r = 0; r < 3; ++r)
            G.at(r, col - 1) = uint8_t((col >> (2 - r)) & 1);
    return G;
}

} // namespace

TEST_CASE("locality of simple codes") {
    const Field& f2 = field_cache(2);

    FieldMatrix rep(f2, 1, 3);
    for (size_t c = 0; c < 3; ++c) rep.at(0, c) = 1;
    auto lr = locality(FieldCode{&f2, 3, rep});
    CHECK(lr.locality == 1);
    CHECK(lr.per_coordinate == std::vector<unsigned>{1, 1, 1});

    FieldMatrix repz(f2, 1, 3);
    repz.at(0, 0) = 1;
    repz.at(0, 1) = 1;
    auto lz = locality(FieldCode{&f2, 3, repz});
    CHECK(lz.per_coordinate == std::vector<unsigned>{1, 1, 0}); // zero coordinate repairs itself
    CHECK(lz.locality == 1);

    auto ls = locality(FieldCode{&f2, 7, simplex7()});
    CHECK(ls.locality == 2); // distinct projective columns, every column a sum of two others
    for (unsigned r : ls.per_coordinate) CHECK(r == 2);

    FieldMatrix eye(f2, 2, 2);
    eye.at(0, 0) = 1;
    eye.at(1, 1) = 1;
    CHECK(thrown_code([&] { locality(FieldCode{&f2, 2, eye}); }) == errc::not_found_within_cap);
    CHECK(thrown_code([&] { locality(FieldCode{&f2, 3, rep}, 0); }) == errc::out_of_range);
    CHECK(thrown_code([&] { locality(FieldCode{&f2, 3, rep}, 5); }) == errc::out_of_range);
}

TEST_CASE("locality witnesses reconstruct their columns") {
    const Field& f3 = field_cache(3);
    FieldMatrix G(f3, 2, 4);
    // columns: (1,0), (0,1), (2,0), (1,1)
    G.at(0, 0) = 1;
    G.at(1, 1) = 1;
    G.at(0, 2) = 2;
    G.at(0, 3) = 1; G.at(1, 3) = 1;
    auto lr = locality(FieldCode{&f3, 4, G});
    CHECK(lr.per_coordinate[0] == 1); // (1,0) = 2 * (2,0)
    CHECK(lr.per_coordinate[2] == 1);
    CHECK(lr.per_coordinate[3] == 2); // (1,1) needs two helpers
    CHECK(lr.locality == 2);
    for (size_t j = 0; j < 4; ++j) {
        const auto& w = lr.witnesses[j];
        std::vector<uint8_t> acc(2, 0);
        for (size_t t = 0; t < w.helpers.size(); ++t)
            for (size_t r = 0; r < 2; ++r)
                acc[r] = f3.add(acc[r], f3.mul(w.coefficients[t], G.at(r, w.helpers[t])));
        for (size_t r = 0; r < 2; ++r) CHECK(acc[r] == G.at(r, j));
    }
}

TEST_CASE("alphabet optimality bound under the Griesmer proxy") {
    auto rep = cm_alphabet_optimality(7, 3, 4, 2, 2);
    CHECK(rep.bound == 3);
    CHECK(rep.optimal);
    auto worse = cm_alphabet_optimality(7, 2, 4, 2, 2);
    CHECK(worse.bound == 3);
    CHECK(!worse.optimal);
    CHECK(thrown_code([] { cm_alphabet_optimality(7, 3, 4, 2, 0); }) == errc::out_of_range);
}

TEST_CASE("Massey access structure of a tiny code") {
    const Field& f2 = field_cache(2);
    FieldMatrix G(f2, 2, 3);
    G.at(0, 0) = 1; G.at(0, 1) = 1;
    G.at(1, 1) = 1; G.at(1, 2) = 1;
    FieldCode code{&f2, 3, G};

    auto mr = massey_report(code, 0);
    CHECK(mr.participants == 2);
    CHECK(mr.participant_columns == std::vector<uint32_t>{1, 2});
    // codewords 110 and 101 have secret entry 1, so each single share
    // reconstructs: minimal sets {P1} and {P2}
    REQUIRE(mr.minimal_access_sets.size() == 2);
    CHECK(mr.minimal_access_sets == std::vector<uint64_t>{0b01, 0b10});
    CHECK(mr.dictatorial.empty());
    CHECK(mr.per_participant_membership == std::vector<uint64_t>{1, 1});
    REQUIRE(mr.code_is_minimal.has_value());
    CHECK(*mr.code_is_minimal);

    CHECK(massey_can_access(code, 0, {1, 2}));
    CHECK(massey_can_access(code, 0, {1}));
    CHECK(massey_can_access(code, 0, {2}));
    CHECK(!massey_can_access(code, 0, {}));
    CHECK(thrown_code([&] { massey_can_access(code, 0, {0}); }) == errc::out_of_range);

    // a column proportional to the secret column is dictatorial
    FieldMatrix P(f2, 1, 3);
    P.at(0, 0) = 1; P.at(0, 2) = 1;
    auto pr = massey_report(FieldCode{&f2, 3, P}, 0);
    CHECK(pr.dictatorial == std::vector<uint32_t>{2});
    REQUIRE(pr.minimal_access_sets.size() == 1);
    CHECK(pr.per_participant_membership == std::vector<uint64_t>{0, 1});

    FieldMatrix Z(f2, 1, 2);
    Z.at(0, 1) = 1;
    CHECK(thrown_code([&] { massey_report(FieldCode{&f2, 2, Z}, 0); }) == errc::zero_column);
}

TEST_CASE("Massey on the published secret-sharing instance") {
    DefiningSetSpec spec;
    spec.kind = SetKind::S3;
    spec.q = 2;
    spec.m = 2;
    spec.A = make_support(2, {1});
    spec.B = make_support(2, {2});
    spec.C = make_support(2, {1});
    FieldCode gray = gray_code(code_from_defining_set(spec));
    auto mr = massey_report(gray, 0);
    CHECK(mr.participants == 15);
    CHECK(mr.minimal_access_sets.size() == 8); // q^{m+|A|+|C|-1}
    CHECK(mr.dictatorial == std::vector<uint32_t>{1}); // 2q-3 = 1 scalar multiple
    REQUIRE(mr.code_is_minimal.has_value());
    CHECK(*mr.code_is_minimal);
    // every minimal set reported really does access the secret
    for (uint64_t mask : mr.minimal_access_sets) {
        std::vector<uint32_t> cols;
        for (size_t i = 0; i < mr.participant_columns.size(); ++i)
            if (mask & (uint64_t(1) << i)) cols.push_back(mr.participant_columns[i]);
        CHECK(massey_can_access(gray, 0, cols));
    }
}

TEST_CASE("coset graph of the repetition code is the complete graph") {
    const Field& f2 = field_cache(2);
    FieldMatrix rep(f2, 1, 3);
    for (size_t c = 0; c < 3; ++c) rep.at(0, c) = 1;
    CosetGraph g = coset_graph(FieldCode{&f2, 3, rep});
    CHECK(g.vertices == 4);
    CHECK(g.degree == 3);
    CHECK(is_connected(g));

    for (uint64_t v = 0; v < 4; ++v) {
        auto nb = g.neighbors(v);
        CHECK(nb.size() == 3);
        std::set<uint64_t> distinct(nb.begin(), nb.end());
        CHECK(distinct.size() == 3);
        CHECK(!distinct.count(v));
        for (uint64_t u : nb) {
            auto back = g.neighbors(u);
            CHECK(std::count(back.begin(), back.end(), v) == 1);
        }
    }

    auto spec = coset_graph_spectrum(g);
    std::vector<std::pair<int64_t, uint64_t>> want{{3, 1}, {-1, 3}};
    CHECK(spec == want);

    auto wr = walk_regularity_check(g, 2);
    CHECK(wr.connected);
    CHECK(wr.is_swrg);
    CHECK(wr.nu == 3);     // closed walks of length 2 = degree
    CHECK(wr.lambda == 2); // common neighbors of an edge in K4
    CHECK(wr.mu == 0);     // no non-adjacent pairs: vacuous
    CHECK(wr.spectrum == want);

    // spectral identity: sum of mult * lambda^2 = V * nu
    int64_t sum = 0;
    for (auto [lam, mult] : spec) sum += int64_t(mult) * lam * lam;
    CHECK(sum == int64_t(g.vertices * wr.nu));
}

TEST_CASE("coset graph degenerate inputs") {
    const Field& f2 = field_cache(2);
    FieldMatrix full(f2, 2, 2);
    full.at(0, 0) = 1;
    full.at(1, 1) = 1;
    CHECK(thrown_code([&] { coset_graph(FieldCode{&f2, 2, full}); }) == errc::loop_error);

    FieldMatrix zc(f2, 1, 2);
    zc.at(0, 1) = 1; // parity column for coordinate 1 is zero
    CHECK(thrown_code([&] { coset_graph(FieldCode{&f2, 2, zc}); }) == errc::loop_error);

    FieldMatrix longrep(f2, 1, 18);
    for (size_t c = 0; c < 18; ++c) longrep.at(0, c) = 1;
    CHECK(thrown_code([&] { coset_graph(FieldCode{&f2, 18, longrep}); }) == errc::too_large);
}

TEST_CASE("coset graph spectrum matches dense eigen-counts on a second example") {
    const Field& f3 = field_cache(3);
    FieldMatrix rep(f3, 1, 3);
    for (size_t c = 0; c < 3; ++c) rep.at(0, c) = 1;
    CosetGraph g = coset_graph(FieldCode{&f3, 3, rep});
    CHECK(g.vertices == 9);
    CHECK(g.degree == 6); // 3 coordinates, 2 nonzero scalars each
    auto spec = coset_graph_spectrum(g);
    uint64_t total = 0;
    int64_t trace = 0, sq = 0;
    for (auto [lam, mult] : spec) {
        total += mult;
        trace += int64_t(mult) * lam;
        sq += int64_t(mult) * lam * lam;
    }
    CHECK(total == 9);
    CHECK(trace == 0);
    CHECK(sq == int64_t(9 * g.degree)); // closed 2-walks = V * degree

    auto wr = walk_regularity_check(g, 3);
    CHECK(wr.connected);
    int64_t cubes = 0;
    for (auto [lam, mult] : spec) cubes += int64_t(mult) * lam * lam * lam;
    CHECK(cubes == int64_t(9 * wr.nu));
}

TEST_CASE("predicted walk invariants for the two-weight family") {
    auto p = swrg_predicted(2, 1, 3);
    CHECK(p.theta == 128);
    CHECK(p.degree == 384);
    CHECK(p.vertices == 1024);
    CHECK(p.lambda == 65536);
    CHECK(p.mu == 49152);
    CHECK(p.nu == 49152);
    std::vector<std::pair<int64_t, uint64_t>> want{{384, 1}, {128, 6}, {0, 1008}, {-128, 9}};
    CHECK(p.spectrum == want);

    CHECK(thrown_code([] { swrg_predicted(1, 1, 3); }) == errc::side_condition_violated);
    CHECK(thrown_code([] { swrg_predicted(2, 3, 3); }) == errc::side_condition_violated);
    CHECK(thrown_code([] { swrg_predicted(2, 1, 2); }) == errc::side_condition_violated);
    CHECK(thrown_code([] { swrg_predicted(2, 1, 1); }) == errc::side_condition_violated);
}
