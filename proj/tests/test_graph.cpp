#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cpog/graph.hpp"

using namespace cpog;

namespace {

std::int64_t count_occurrences(const std::string& text, const std::string& needle) {
    std::int64_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("adjacency predicate on element orders") {
    CHECK(adjacent(1, 12));
    CHECK(adjacent(1, 1));
    CHECK(adjacent(2, 2));
    CHECK(adjacent(4, 6));
    CHECK(adjacent(9, 3));
    CHECK(adjacent(5, 7));
    CHECK(!adjacent(6, 6));
    CHECK(!adjacent(4, 4));
    CHECK(!adjacent(12, 18));
    CHECK(!adjacent(4, 12));
    CHECK_THROWS_AS(adjacent(0, 3), std::domain_error);
    CHECK_THROWS_AS(adjacent(3, -1), std::domain_error);
}

TEST_CASE("elementary abelian 2-group gives a complete graph") {
    auto g = build_graph(parse_group_spec("Z2xZ2"));
    REQUIRE(g.n == 4);
    for (std::int64_t i = 0; i < 4; ++i)
        for (std::int64_t j = 0; j < 4; ++j) CHECK(g.edge(i, j) == (i != j));
    CHECK(g.degrees == std::vector<std::int64_t>{3, 3, 3, 3});
}

TEST_CASE("degree vector of Z4xZ2 in canonical vertex order") {
    auto g = build_graph(parse_group_spec("Z4xZ2"));
    REQUIRE(g.n == 8);
    CHECK(g.degrees == std::vector<std::int64_t>{7, 7, 7, 7, 4, 4, 4, 4});
    CHECK(g.orders == std::vector<std::int64_t>{1, 2, 2, 2, 4, 4, 4, 4});
}

TEST_CASE("D3 gives a complete graph on six vertices") {
    auto g = build_graph(parse_group_spec("D3"));
    REQUIRE(g.n == 6);
    std::int64_t degree_sum = std::accumulate(g.degrees.begin(), g.degrees.end(),
                                              std::int64_t{0});
    CHECK(degree_sum == 30);
    for (std::int64_t v = 0; v < 6; ++v) CHECK(g.degrees[v] == 5);
}

TEST_CASE("adjacency matrix invariants hold on sample groups") {
    for (const char* name : {"Z30", "D12", "Z8xZ2xZ9", "Z25xZ5"}) {
        auto g = build_graph(parse_group_spec(name));
        for (std::int64_t i = 0; i < g.n; ++i) {
            CHECK(!g.edge(i, i));
            CHECK(g.edge(0, i) == (i != 0));
            for (std::int64_t j = i + 1; j < g.n; ++j) CHECK(g.edge(i, j) == g.edge(j, i));
        }
        for (std::int64_t i = 0; i < g.n; ++i) {
            if (g.orders[i] > 1 && is_prime(g.orders[i]) == false) continue;
            CHECK(g.degrees[i] == g.n - 1);
        }
    }
}

TEST_CASE("stored degrees agree with row recounts") {
    for (const char* name : {"Z4xZ2", "D6", "Z30"}) {
        auto g = build_graph(parse_group_spec(name));
        for (std::int64_t v = 0; v < g.n; ++v) CHECK(brute_degree(g, v) == g.degrees[v]);
    }
    auto g = build_graph(parse_group_spec("Z2"));
    CHECK_THROWS_AS(brute_degree(g, 2), std::out_of_range);
    CHECK_THROWS_AS(brute_degree(g, -1), std::out_of_range);
}

TEST_CASE("graph build respects the order cap") {
    CHECK_THROWS_AS(build_graph(parse_group_spec("Z5000"), 400), std::domain_error);
    CHECK_NOTHROW(build_graph(parse_group_spec("Z400"), 400));
}

TEST_CASE("Laplacian of the two-element group") {
    auto g = build_graph(parse_group_spec("Z2"));
    ExactMatrix L = laplacian(g);
    REQUIRE(L.rows() == 2);
    CHECK(L(0, 0) == BigInt(1));
    CHECK(L(0, 1) == BigInt(-1));
    CHECK(L(1, 0) == BigInt(-1));
    CHECK(L(1, 1) == BigInt(1));
}

TEST_CASE("Laplacian trace and row sums") {
    auto g = build_graph(parse_group_spec("Z4xZ2"));
    ExactMatrix L = laplacian(g);
    CHECK(L.trace() == BigInt(44));
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        BigInt row_sum(0);
        for (Eigen::Index j = 0; j < L.cols(); ++j) row_sum += L(i, j);
        CHECK(row_sum.is_zero());
    }
    ExactMatrix Lt = L.transpose();
    for (Eigen::Index i = 0; i < L.rows(); ++i)
        for (Eigen::Index j = 0; j < L.cols(); ++j) CHECK(Lt(i, j) == L(i, j));
}

TEST_CASE("Laplacian is available over plain machine integers") {
    auto g = build_graph(parse_group_spec("Z2xZ3"));
    DenseMatrix<std::int64_t> L = laplacian<std::int64_t>(g);
    CHECK(L.trace() == 28);
    CHECK(L(0, 0) == 5);
}

TEST_CASE("CSV export lists header and one edge per line") {
    auto k2 = build_graph(parse_group_spec("Z2"));
    CHECK(export_graph(k2, ExportFormat::csv) == "source,target\n0,1\n");

    auto g = build_graph(parse_group_spec("Z4xZ2"));
    std::string csv = export_graph(g, ExportFormat::csv);
    CHECK(count_occurrences(csv, "\n") == 23);
    CHECK(csv.rfind("source,target\n", 0) == 0);
}

TEST_CASE("DOT export carries labels and edges") {
    auto g = build_graph(parse_group_spec("D3"));
    std::string dot = export_graph(g, ExportFormat::dot);
    CHECK(dot.rfind("graph \"D3\"", 0) == 0);
    CHECK(count_occurrences(dot, " -- ") == 15);
    CHECK(dot.find("label=\"e/1\"") != std::string::npos);
    CHECK(dot.find("label=\"r/3\"") != std::string::npos);
}

TEST_CASE("JSON export round-trips through a parser") {
    auto g = build_graph(parse_group_spec("Z2xZ2"));
    auto doc = nlohmann::json::parse(export_graph(g, ExportFormat::json));
    CHECK(doc["group"] == "Z2xZ2");
    CHECK(doc["order"] == 4);
    REQUIRE(doc["vertices"].size() == 4);
    CHECK(doc["vertices"][0]["element"] == "(0,0)");
    CHECK(doc["vertices"][0]["order"] == 1);
    CHECK(doc["vertices"][0]["degree"] == 3);
    CHECK(doc["edges"].size() == 6);
    CHECK(!doc.contains("spectrum"));
}

TEST_CASE("JSON export embeds a spectrum annotation when given") {
    auto g = build_graph(parse_group_spec("Z2xZ2"));
    SpectrumAnnotation note{make_spectrum({{4, 3}, {0, 1}}), true};
    auto doc = nlohmann::json::parse(export_graph(g, ExportFormat::json, note));
    REQUIRE(doc.contains("spectrum"));
    CHECK(doc["spectrum"]["certified"] == true);
    CHECK(doc["spectrum"]["closed_form"].size() == 2);
    CHECK(doc["spectrum"]["closed_form"][0][0] == 4);
    CHECK(doc["spectrum"]["closed_form"][0][1] == 3);
}

TEST_CASE("exports are deterministic") {
    auto g = build_graph(parse_group_spec("D6"));
    CHECK(export_graph(g, ExportFormat::dot) == export_graph(g, ExportFormat::dot));
    CHECK(export_graph(g, ExportFormat::json) == export_graph(g, ExportFormat::json));
}
