#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "parthodge/hodge.hpp"
#include "parthodge/json_io.hpp"
#include "parthodge/partitions.hpp"
#include "parthodge/qseries.hpp"
#include "support/oracles.hpp"

using namespace parthodge;

TEST_CASE("report for weight 4 ordinary: the worked example")
{
    const auto report = build_report(4, Kind::ordinary);
    CHECK(report.n == 4);
    CHECK(report.kind == Kind::ordinary);
    CHECK(report.euler_characteristic == 1);
    CHECK(report.counts == std::vector<std::int64_t>{0, 1, 2, 1, 1});
    CHECK(report.cohomology == std::vector<std::int64_t>{0, 0, 1, 0, 0});

    REQUIRE(report.max_length() == 4);
    CHECK(report.harmonic[2] == std::vector<std::string>{"2^2"});
    CHECK(report.harmonic[1].empty());
    CHECK(report.harmonic[3].empty());
    CHECK(report.harmonic[4].empty());

    REQUIRE(report.pairs.size() == 2);
    CHECK(report.pairs[0] == std::pair<std::string, std::string>("4", "3,1"));
    CHECK(report.pairs[1] == std::pair<std::string, std::string>("2,1^2", "1^4"));
}

TEST_CASE("report for weight 2 ordinary: no harmonic element")
{
    const auto report = build_report(2, Kind::ordinary);
    CHECK(report.euler_characteristic == 0);
    for (const auto& slice : report.harmonic) CHECK(slice.empty());
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0] == std::pair<std::string, std::string>("2", "1^2"));
}

TEST_CASE("report for weight 5 distinct: the pentagonal witness")
{
    const auto report = build_report(5, Kind::distinct);
    CHECK(report.euler_characteristic == 1);
    CHECK(report.harmonic[2] == std::vector<std::string>{"3,2"});
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0] == std::pair<std::string, std::string>("5", "4,1"));
}

TEST_CASE("report for weight 3 distinct: zero characteristic, no harmonic")
{
    const auto report = build_report(3, Kind::distinct);
    CHECK(report.euler_characteristic == 0);
    for (const auto& slice : report.harmonic) CHECK(slice.empty());
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0] == std::pair<std::string, std::string>("3", "2,1"));
}

TEST_CASE("build_report rejects nonpositive weights")
{
    CHECK_THROWS_AS(build_report(0, Kind::ordinary), std::invalid_argument);
    CHECK_THROWS_AS(build_report(-2, Kind::distinct), std::invalid_argument);
}

TEST_CASE("matching decomposition partitions the basis")
{
    for (const Kind kind : {Kind::distinct, Kind::ordinary}) {
        const int max_n = (kind == Kind::distinct) ? 24 : 18;
        for (int n = 1; n <= max_n; ++n) {
            const auto report = build_report(n, kind);

            std::int64_t total_count = 0;
            std::int64_t harmonic_count = 0;
            for (int l = 1; l <= report.max_length(); ++l) {
                total_count += report.counts[l];
                harmonic_count += static_cast<std::int64_t>(report.harmonic[l].size());
                CHECK(static_cast<std::int64_t>(report.harmonic[l].size()) ==
                      report.cohomology[l]);
            }
            CHECK(harmonic_count + 2 * static_cast<std::int64_t>(report.pairs.size()) ==
                  total_count);

            // every element shows up exactly once across harmonic/sources/targets
            std::set<std::string> seen;
            std::int64_t listed = 0;
            for (const auto& slice : report.harmonic)
                for (const auto& text : slice) {
                    seen.insert(text);
                    ++listed;
                }
            for (const auto& [source, target] : report.pairs) {
                seen.insert(source);
                seen.insert(target);
                listed += 2;
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == listed);
            CHECK(listed == total_count);

            // pairs join adjacent lengths and preserve weight
            for (const auto& [source, target] : report.pairs) {
                if (kind == Kind::distinct) {
                    const auto s = parse_distinct(source);
                    const auto t = parse_distinct(target);
                    CHECK(s.weight() == n);
                    CHECK(t.weight() == n);
                    CHECK(t.length() == s.length() + 1);
                } else {
                    const auto s = parse_ordinary(source);
                    const auto t = parse_ordinary(target);
                    CHECK(s.weight() == n);
                    CHECK(t.weight() == n);
                    CHECK(t.length() == s.length() + 1);
                }
            }

            // chi from counts equals chi from harmonic survivors
            std::int64_t chi_counts = 0;
            std::int64_t chi_harmonic = 0;
            for (int l = 1; l <= report.max_length(); ++l) {
                const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
                chi_counts += sign * report.counts[l];
                chi_harmonic += sign * static_cast<std::int64_t>(report.harmonic[l].size());
            }
            CHECK(report.euler_characteristic == chi_counts);
            CHECK(report.euler_characteristic == chi_harmonic);
        }
    }
}

TEST_CASE("report counts match the counting recurrences")
{
    const auto distinct = oracles::distinct_table(24);
    const auto ordinary = oracles::ordinary_table(18);
    for (int n = 1; n <= 24; ++n) {
        const auto report = build_report(n, Kind::distinct);
        for (int l = 1; l <= report.max_length(); ++l)
            CHECK(report.counts[l] == distinct[n][l]);
    }
    for (int n = 1; n <= 18; ++n) {
        const auto report = build_report(n, Kind::ordinary);
        for (int l = 1; l <= report.max_length(); ++l)
            CHECK(report.counts[l] == ordinary[n][l]);
    }
}

TEST_CASE("laplacian oracle: worked cases")
{
    const auto check4 = laplacian_oracle(4, Kind::ordinary);
    CHECK(check4.kernel_dims == std::vector<std::int64_t>{0, 0, 1, 0, 0});

    CHECK(laplacian_oracle(1, Kind::ordinary).kernel_dims ==
          std::vector<std::int64_t>{0, 1});
    CHECK(laplacian_oracle(1, Kind::distinct).kernel_dims ==
          std::vector<std::int64_t>{0, 1});
}

TEST_CASE("laplacian kernel dimensions equal harmonic counts")
{
    for (const Kind kind : {Kind::distinct, Kind::ordinary}) {
        for (int n = 1; n <= 14; ++n) {
            const auto report = build_report(n, kind);
            const auto check = laplacian_oracle(n, kind);
            REQUIRE(check.kernel_dims.size() == report.cohomology.size());
            for (int l = 1; l <= report.max_length(); ++l)
                CHECK(check.kernel_dims[l] == report.cohomology[l]);
        }
    }
}

TEST_CASE("euler characteristic series: worked cases")
{
    const auto distinct7 = euler_characteristic_series(Kind::distinct, 7);
    CHECK(distinct7.order() == 7);
    CHECK(distinct7.coeffs() ==
          std::vector<BigInt>{1, -1, -1, 0, 0, 1, 0, 1});

    const auto ordinary4 = euler_characteristic_series(Kind::ordinary, 4);
    CHECK(ordinary4.coeffs() == std::vector<BigInt>{1, -1, 0, -1, 1});

    CHECK(euler_characteristic_series(Kind::distinct, 1).coeffs() ==
          std::vector<BigInt>{1, -1});
    CHECK(euler_characteristic_series(Kind::ordinary, 1).coeffs() ==
          std::vector<BigInt>{1, -1});
}

TEST_CASE("euler characteristic series match the closed-form series")
{
    const int N = 30;
    CHECK(euler_characteristic_series(Kind::distinct, N) == gf_pentagonal_rhs(N));
    CHECK(euler_characteristic_series(Kind::ordinary, N) == gf_bosonic_rhs(N));
    CHECK(euler_characteristic_series(Kind::distinct, N) == gf_product_one_minus(N));
    CHECK(euler_characteristic_series(Kind::ordinary, N) == gf_inv_product_one_plus(N));
}

TEST_CASE("hodge report JSON shape")
{
    const nlohmann::json j = build_report(4, Kind::ordinary);
    CHECK(j["n"] == 4);
    CHECK(j["kind"] == "ordinary");
    CHECK(j["chi"] == 1);
    CHECK(j["harmonic"] == nlohmann::json({{"2", {"2^2"}}}));
    CHECK(j["pairs"] ==
          nlohmann::json::array({{"4", "3,1"}, {"2,1^2", "1^4"}}));
    CHECK(j["counts"] ==
          nlohmann::json({{"1", 1}, {"2", 2}, {"3", 1}, {"4", 1}}));
}
