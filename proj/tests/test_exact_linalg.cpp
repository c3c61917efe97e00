#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cpog/closed_forms.hpp"
#include "cpog/exact_linalg.hpp"
#include "cpog/graph.hpp"
#include "oracle_helpers.hpp"

using namespace cpog;
using cpog::testing::cofactor_det;
using cpog::testing::eval_char_poly;
using cpog::testing::is_zero_matrix;
using cpog::testing::plain_nullity;
using cpog::testing::random_matrix;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    ExactMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = BigInt(rows[i][j]);
    return m;
}

std::vector<BigInt> poly_from_roots(const std::vector<std::int64_t>& roots) {
    std::vector<BigInt> coeffs{BigInt(1)};
    for (std::int64_t r : roots) {
        std::vector<BigInt> next(coeffs.size() + 1, BigInt(0));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= BigInt(r) * coeffs[i];
        }
        coeffs = next;
    }
    return coeffs;
}

}  // namespace

TEST_CASE("elimination on hand-checked matrices") {
    auto k4 = laplacian(build_graph(parse_group_spec("Z2xZ2")));
    auto r = bareiss_eliminate(k4);
    CHECK(r.rank == 3);
    CHECK(r.determinant == BigInt(0));

    auto zero = ExactMatrix::Zero(3, 3).eval();
    auto rz = bareiss_eliminate(zero);
    CHECK(rz.rank == 0);
    CHECK(rz.determinant == BigInt(0));

    auto m = from_rows({{2, 1}, {1, 2}});
    auto rm = bareiss_eliminate(m);
    CHECK(rm.rank == 2);
    CHECK(rm.determinant == BigInt(3));

    auto one = from_rows({{-7}});
    CHECK(bareiss_eliminate(one).determinant == BigInt(-7));
    CHECK(bareiss_eliminate(one).rank == 1);
}

TEST_CASE("elimination handles leading-column degeneracy") {
    auto m = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    auto r = bareiss_eliminate(m);
    CHECK(r.rank == 2);
    CHECK(r.determinant == BigInt(0));

    auto swap = from_rows({{0, 1}, {1, 0}});
    CHECK(bareiss_eliminate(swap).determinant == BigInt(-1));
}

TEST_CASE("determinants agree with cofactor expansion on random matrices") {
    CHECK(cpog::testing::determinant_battery(1000, 6, 0x5eed0001) == 0);
}

TEST_CASE("characteristic polynomial of hand-checked matrices") {
    auto path2 = from_rows({{1, -1}, {-1, 1}});
    auto p = char_poly(path2);
    CHECK(p.coeffs == std::vector<BigInt>{BigInt(0), BigInt(-2), BigInt(1)});
    CHECK(p.degree() == 2);

    auto path3 = from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
    auto p3 = char_poly(path3);
    CHECK(p3.coeffs ==
          std::vector<BigInt>{BigInt(0), BigInt(3), BigInt(-4), BigInt(1)});

    auto scalar = from_rows({{5}});
    CHECK(char_poly(scalar).coeffs == std::vector<BigInt>{BigInt(-5), BigInt(1)});
}

TEST_CASE("characteristic polynomial coefficients match trace and determinant") {
    std::mt19937_64 rng(0x5eed0002);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + static_cast<int>(rng() % 6);
        ExactMatrix m = random_matrix(rng, n, -9, 9);
        CharPoly p = char_poly(m);
        REQUIRE(p.degree() == n);
        CHECK(p.coeffs[static_cast<size_t>(n)] == BigInt(1));
        CHECK(p.coeffs[static_cast<size_t>(n - 1)] == -m.trace());
        BigInt det = bareiss_eliminate(m).determinant;
        BigInt c0 = p.coeffs[0];
        CHECK(c0 == (n % 2 == 0 ? det : -det));
    }
}

TEST_CASE("matrices satisfy their own characteristic polynomial") {
    CHECK(cpog::testing::cayley_hamilton_battery(100, 8, 0x5eed0003) == 0);
}

TEST_CASE("characteristic polynomial refuses oversized input") {
    auto m = ExactMatrix::Zero(4, 4).eval();
    CHECK_THROWS_AS(char_poly(m, 3), std::length_error);
}

TEST_CASE("integer root extraction on hand-built polynomials") {
    IntegerRootResult r =
        integer_roots(CharPoly{{BigInt(0), BigInt(3), BigInt(-4), BigInt(1)}});
    CHECK(r.roots == make_spectrum({{3, 1}, {1, 1}, {0, 1}}));
    CHECK(r.remainder == std::vector<BigInt>{BigInt(1)});

    IntegerRootResult quartic = integer_roots(CharPoly{poly_from_roots({0, 6, 6, 6, 6, 4})});
    CHECK(quartic.roots == make_spectrum({{6, 4}, {4, 1}, {0, 1}}));
    CHECK(quartic.remainder == std::vector<BigInt>{BigInt(1)});

    IntegerRootResult irr = integer_roots(CharPoly{{BigInt(1), BigInt(0), BigInt(1)}});
    CHECK(irr.roots.pairs.empty());
    CHECK(irr.remainder == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});

    IntegerRootResult neg = integer_roots(CharPoly{poly_from_roots({0, -1, -2})});
    CHECK(neg.roots == make_spectrum({{0, 1}, {-1, 1}, {-2, 1}}));

    IntegerRootResult mixed = integer_roots(CharPoly{poly_from_roots({2, -3, 5, 5})});
    CHECK(mixed.roots == make_spectrum({{5, 2}, {2, 1}, {-3, 1}}));

    CHECK_THROWS_AS(integer_roots(CharPoly{{BigInt(1), BigInt(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(CharPoly{}), std::invalid_argument);
}

TEST_CASE("integer roots of a partially integral polynomial") {
    std::vector<BigInt> partial = poly_from_roots({4});
    std::vector<BigInt> x2p1{BigInt(1), BigInt(0), BigInt(1)};
    std::vector<BigInt> product(partial.size() + x2p1.size() - 1, BigInt(0));
    for (size_t i = 0; i < partial.size(); ++i)
        for (size_t j = 0; j < x2p1.size(); ++j) product[i + j] += partial[i] * x2p1[j];
    IntegerRootResult r = integer_roots(CharPoly{product});
    CHECK(r.roots == make_spectrum({{4, 1}}));
    CHECK(r.remainder == x2p1);
}

TEST_CASE("uniform block detection on the two-class model matrix") {
    ExactMatrix L = build_block_L(3, 4);
    UniformBlockStructure s = detect_uniform_blocks(L);
    CHECK(s.classes() == 2);
    std::vector<std::int64_t> sizes = s.class_size;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{3, 4});
}

TEST_CASE("structured nullity agrees with plain elimination") {
    ExactMatrix L = build_block_L(3, 4);
    UniformBlockStructure s = detect_uniform_blocks(L);
    for (std::int64_t lambda : {0, 1, 3, 5, 7, 10}) {
        std::int64_t direct = plain_nullity(shifted(L, BigInt(lambda)));
        CHECK(nullity_of_shift(s, BigInt(lambda)) == direct);
        CHECK(nullity(shifted(L, BigInt(lambda))) == direct);
    }
}

TEST_CASE("structured nullity agrees with plain elimination on group Laplacians") {
    for (const char* name : {"Z4xZ2", "D9", "Z30", "Z8xZ2"}) {
        auto g = build_graph(parse_group_spec(name));
        ExactMatrix L = laplacian(g);
        UniformBlockStructure s = detect_uniform_blocks(L);
        std::set<std::int64_t> probes{0, 1, g.n};
        for (std::int64_t d : g.degrees) {
            probes.insert(d);
            probes.insert(d + 1);
        }
        for (std::int64_t lambda : probes) {
            CHECK(nullity_of_shift(s, BigInt(lambda)) ==
                  plain_nullity(shifted(L, BigInt(lambda))));
        }
    }
}

TEST_CASE("block detection falls back cleanly on unstructured matrices") {
    std::mt19937_64 rng(0x5eed0004);
    for (int i = 0; i < 20; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        ExactMatrix m = random_matrix(rng, n, -3, 3);
        ExactMatrix sym = m + ExactMatrix(m.transpose());
        UniformBlockStructure s = detect_uniform_blocks(sym);
        for (std::int64_t lambda : {0, 1, -2}) {
            CHECK(nullity_of_shift(s, BigInt(lambda)) ==
                  plain_nullity(shifted(sym, BigInt(lambda))));
        }
    }
}

TEST_CASE("connected graph Laplacians have one-dimensional kernel") {
    for (const char* name : {"Z30", "D12", "Z8xZ2xZ9", "Z2xZ2"}) {
        ExactMatrix L = laplacian(build_graph(parse_group_spec(name)));
        CHECK(nullity(L) == 1);
    }
}

TEST_CASE("spectrum certification accepts correct claims") {
    auto g = build_graph(parse_group_spec("Z2xZ3"));
    ExactMatrix L = laplacian(g);
    SpectrumCertificate cert = certify_spectrum(L, make_spectrum({{6, 4}, {4, 1}, {0, 1}}));
    CHECK(cert.pass);
    CHECK(cert.multiplicities_complete);
    CHECK(cert.trace_matches);
    CHECK(cert.dimension == 6);
    for (const auto& check : cert.checks) CHECK(check.pass);
}

TEST_CASE("spectrum certification pinpoints a wrong multiplicity") {
    auto k4 = laplacian(build_graph(parse_group_spec("Z2xZ2")));
    CHECK(certify_spectrum(k4, make_spectrum({{4, 3}, {0, 1}})).pass);

    SpectrumCertificate bad = certify_spectrum(k4, make_spectrum({{4, 2}, {3, 1}, {0, 1}}));
    CHECK(!bad.pass);
    CHECK(bad.multiplicities_complete);
    CHECK(!bad.trace_matches);
    bool found = false;
    for (const auto& check : bad.checks) {
        if (check.eigenvalue == 3) {
            found = true;
            CHECK(check.nullity == 0);
            CHECK(!check.pass);
        }
    }
    CHECK(found);
}

TEST_CASE("spectrum certification flags incomplete multiplicity totals") {
    auto k4 = laplacian(build_graph(parse_group_spec("Z2xZ2")));
    SpectrumCertificate cert = certify_spectrum(k4, make_spectrum({{4, 3}}));
    CHECK(!cert.multiplicities_complete);
    CHECK(!cert.pass);
}

TEST_CASE("exact integer spectrum of a fully integral Laplacian") {
    ExactMatrix L = laplacian(build_graph(parse_group_spec("Z30")));
    IntegerSpectrumResult r = exact_integer_spectrum(L);
    CHECK(r.integer_part ==
          make_spectrum({{30, 8}, {22, 2}, {20, 1}, {18, 3}, {14, 7}, {8, 8}, {0, 1}}));
    CHECK(r.remainder == std::vector<BigInt>{BigInt(1)});
    CHECK(certify_spectrum(L, r.integer_part).pass);
}

TEST_CASE("exact integer spectrum reports non-integral leftovers") {
    auto m = from_rows({{0, 1}, {-1, 0}});
    IntegerSpectrumResult r = exact_integer_spectrum(m);
    CHECK(r.integer_part.pairs.empty());
    CHECK(r.remainder == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});
}

TEST_CASE("exact integer spectrum matches certification on family Laplacians") {
    for (const char* name : {"Z4xZ2", "Z9", "D9", "Z2xZ3"}) {
        ExactMatrix L = laplacian(build_graph(parse_group_spec(name)));
        IntegerSpectrumResult r = exact_integer_spectrum(L);
        CHECK(r.remainder == std::vector<BigInt>{BigInt(1)});
        CHECK(r.integer_part.total_multiplicity() == L.rows());
        CHECK(certify_spectrum(L, r.integer_part).pass);
    }
}

TEST_CASE("square input is required throughout") {
    ExactMatrix rect(2, 3);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) rect(i, j) = BigInt(0);
    CHECK_THROWS_AS(bareiss_eliminate(rect), std::invalid_argument);
    CHECK_THROWS_AS(char_poly(rect), std::invalid_argument);
    CHECK_THROWS_AS(detect_uniform_blocks(rect), std::invalid_argument);
}
