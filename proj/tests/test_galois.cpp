#include <doctest.h>

#include <optional>
#include <set>

#include "mixedcode/galois.hpp"

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

} // namespace

TEST_CASE("canonical moduli and generators") {
    const Field& f4 = field_cache(4);
    CHECK(f4.p == 2);
    CHECK(f4.k == 2);
    CHECK(f4.modulus == std::vector<uint8_t>{1, 1, 1}); // x^2 + x + 1
    CHECK(f4.mul(2, 2) == 3);

    const Field& f8 = field_cache(8);
    CHECK(f8.modulus == std::vector<uint8_t>{1, 1, 0, 1}); // x^3 + x + 1

    const Field& f9 = field_cache(9);
    CHECK(f9.modulus == std::vector<uint8_t>{1, 0, 1}); // x^2 + 1
    CHECK(f9.exp_table[1] == 4);                        // generator 1 + x

    const Field& f2 = field_cache(2);
    CHECK(f2.exp_table == std::vector<uint8_t>{1});
    CHECK(f2.add(1, 1) == 0);

    const Field& f3 = field_cache(3);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.mul(2, 2) == 1);
}

TEST_CASE("invalid field sizes") {
    CHECK(thrown_code([] { make_field(6); }) == errc::non_prime_power);
    CHECK(thrown_code([] { make_field(12); }) == errc::non_prime_power);
    CHECK(thrown_code([] { make_field(1); }) == errc::out_of_range);
    CHECK(thrown_code([] { make_field(0); }) == errc::out_of_range);
    CHECK(thrown_code([] { make_field(257); }) == errc::out_of_range);
    CHECK(thrown_code([] { field_cache(2).inv(0); }) == errc::division_by_zero);
}

TEST_CASE("field axioms") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u}) {
        const Field& F = field_cache(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, 0) == a);
        }
        unsigned step = q <= 16 ? 1 : 3;
        for (unsigned a = 0; a < q; a += step)
            for (unsigned b = 0; b < q; b += step)
                for (unsigned c = 0; c < q; c += step) {
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(a, b) == F.mul(b, a));
                }
    }
    // GF(256) spot check via the exp/log structure
    const Field& F = field_cache(256);
    for (unsigned a = 1; a < 256; a += 7)
        CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("exp and log tables are mutually inverse") {
    for (unsigned q : {4u, 9u, 27u}) {
        const Field& F = field_cache(q);
        std::set<uint8_t> seen;
        for (unsigned i = 0; i + 1 < q; ++i) {
            uint8_t g = F.exp_table[i];
            CHECK(g != 0);
            CHECK(seen.insert(g).second); // powers of g enumerate the units
            CHECK(F.log_table[g] == i);
        }
    }
}

TEST_CASE("vector encode and decode use the first coordinate as most significant") {
    const Field& f3 = field_cache(3);
    uint8_t v[2] = {1, 2};
    CHECK(encode_vector(f3, v, 2) == 5);
    FieldVector w = decode_vector(f3, 2, 5);
    CHECK(w.v == std::vector<uint8_t>{1, 2});

    const Field& f4 = field_cache(4);
    for (uint64_t val = 0; val < 64; ++val) {
        FieldVector x = decode_vector(f4, 3, val);
        CHECK(encode_vector(x) == val);
    }
}

TEST_CASE("row reduce, rank, kernel") {
    const Field& f2 = field_cache(2);
    FieldMatrix M(f2, 2, 3);
    M.at(0, 0) = 1; M.at(0, 1) = 1;
    M.at(1, 1) = 1; M.at(1, 2) = 1;
    CHECK(rank(M) == 2);
    FieldMatrix K = kernel_basis(M);
    CHECK(K.rows == 1);
    CHECK(std::vector<uint8_t>(K.a.begin(), K.a.end()) == std::vector<uint8_t>{1, 1, 1});

    const Field& f3 = field_cache(3);
    FieldMatrix N(f3, 3, 3);
    // row 1 = (1,2,0), row 2 = 2*(1,2,0) = (2,1,0), row 3 = (0,0,1)
    N.at(0, 0) = 1; N.at(0, 1) = 2;
    N.at(1, 0) = 2; N.at(1, 1) = 1;
    N.at(2, 2) = 1;
    CHECK(rank(N) == 2);
    FieldMatrix KN = kernel_basis(N);
    CHECK(KN.rows == 1);

    FieldMatrix R = row_reduce(N);
    CHECK(R.rows == 2);
    FieldMatrix RR = row_reduce(R);
    CHECK(RR.a == R.a);
}

TEST_CASE("kernel rows annihilate the matrix, ranks add up") {
    for (unsigned q : {2u, 3u, 4u}) {
        const Field& F = field_cache(q);
        uint64_t seed = 12345;
        auto rnd = [&] { seed = seed * 6364136223846793005ULL + 1442695040888963407ULL; return unsigned(seed >> 33); };
        for (int trial = 0; trial < 20; ++trial) {
            size_t rows = 1 + rnd() % 4, cols = 1 + rnd() % 6;
            FieldMatrix M(F, rows, cols);
            for (auto& x : M.a) x = uint8_t(rnd() % q);
            FieldMatrix K = kernel_basis(M);
            CHECK(rank(M) + K.rows == cols);
            for (size_t kr = 0; kr < K.rows; ++kr)
                for (size_t r = 0; r < rows; ++r) {
                    uint8_t acc = 0;
                    for (size_t c = 0; c < cols; ++c)
                        acc = F.add(acc, F.mul(M.at(r, c), K.at(kr, c)));
                    CHECK(acc == 0);
                }
        }
    }
}

TEST_CASE("row space enumeration is a Gray sequence over the full row space") {
    const Field& f3 = field_cache(3);
    FieldMatrix G(f3, 2, 2);
    G.at(0, 0) = 1;
    G.at(1, 1) = 1;
    std::vector<std::vector<uint8_t>> words;
    row_space_enumerate(G, [&](const uint8_t* w, unsigned wt) {
        words.emplace_back(w, w + 2);
        CHECK(wt == hamming_weight(w, 2));
    });
    CHECK(words.size() == 9);
    std::set<std::vector<uint8_t>> dedup(words.begin(), words.end());
    CHECK(dedup.size() == 9);
    for (size_t i = 1; i < words.size(); ++i) {
        unsigned diff = 0;
        for (size_t c = 0; c < 2; ++c)
            if (words[i][c] != words[i - 1][c]) ++diff;
        CHECK(diff == 1); // consecutive words differ by one basis-row step
    }
}

TEST_CASE("row space enumeration equals direct message expansion") {
    const Field& f4 = field_cache(4);
    FieldMatrix G(f4, 2, 3);
    G.at(0, 0) = 1; G.at(0, 2) = 1;
    G.at(1, 1) = 1; G.at(1, 2) = 2;
    std::set<std::vector<uint8_t>> expected;
    for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y) {
            std::vector<uint8_t> w(3);
            for (size_t c = 0; c < 3; ++c)
                w[c] = f4.add(f4.mul(uint8_t(x), G.at(0, c)), f4.mul(uint8_t(y), G.at(1, c)));
            expected.insert(w);
        }
    std::set<std::vector<uint8_t>> got;
    row_space_enumerate(G, [&](const uint8_t* w, unsigned) { got.emplace(w, w + 3); });
    CHECK(got == expected);
    CHECK(got.size() == 16);
}

TEST_CASE("enumeration budget") {
    const Field& f3 = field_cache(3);
    FieldMatrix G(f3, 2, 2);
    G.at(0, 0) = 1;
    G.at(1, 1) = 1;
    EnumerationConfig cfg;
    cfg.budget = 8; // row space has 9 vectors
    CHECK(thrown_code([&] { row_space_enumerate(G, [](const uint8_t*, unsigned) {}, cfg); }) ==
          errc::too_large);
    CHECK(thrown_code([&] { weight_histogram(G, cfg); }) == errc::too_large);
}

TEST_CASE("weight histogram agrees with enumeration and is thread independent") {
    const Field& f2 = field_cache(2);
    // simplex code of dimension 3: columns are the 7 nonzero vectors
    FieldMatrix G(f2, 3, 7);
    for (unsigned col = 1; col <= 7; ++col)
        for (unsigned r = 0; r < 3; ++r)
            G.at(r, col - 1) = uint8_t((col >> (2 - r)) & 1);
    auto h = weight_histogram(G);
    std::vector<uint64_t> want(8, 0);
    want[0] = 1;
    want[4] = 7;
    CHECK(h == want);

    const Field& f3 = field_cache(3);
    uint64_t seed = 99;
    auto rnd = [&] { seed = seed * 6364136223846793005ULL + 1442695040888963407ULL; return unsigned(seed >> 33); };
    FieldMatrix R(f3, 3, 6);
    for (auto& x : R.a) x = uint8_t(rnd() % 3);
    std::vector<uint64_t> manual(7, 0);
    row_space_enumerate(R, [&](const uint8_t*, unsigned wt) { ++manual[wt]; });
    EnumerationConfig one, four;
    four.threads = 4;
    CHECK(weight_histogram(R, one) == manual);
    CHECK(weight_histogram(R, four) == manual);
}
