#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parthodge/distinct_complex.hpp"
#include "parthodge/hodge.hpp"
#include "parthodge/json_io.hpp"
#include "parthodge/ordinary_complex.hpp"
#include "parthodge/partitions.hpp"
#include "parthodge/qseries.hpp"

namespace {

using namespace parthodge;

template <typename P>
std::vector<P> canonical_listing(const GradedBasis<P>& basis, int ell)
{
    std::vector<P> out;
    if (ell > 0) {
        if (ell <= basis.max_length()) out = basis.slices[ell];
        return out;
    }
    for (int l = 1; l <= basis.max_length(); ++l)
        out.insert(out.end(), basis.slices[l].begin(), basis.slices[l].end());
    std::sort(out.begin(), out.end(),
              [](const P& a, const P& b) { return canonical_before(a, b); });
    return out;
}

template <typename P>
std::vector<std::string> harmonic_listing(const GradedBasis<P>& basis)
{
    std::vector<P> found;
    for (int l = 1; l <= basis.max_length(); ++l)
        for (const auto& sigma : basis.slices[l])
            if (is_harmonic(sigma)) found.push_back(sigma);
    std::sort(found.begin(), found.end(),
              [](const P& a, const P& b) { return canonical_before(a, b); });
    std::vector<std::string> out;
    out.reserve(found.size());
    for (const auto& sigma : found) out.push_back(format_partition(sigma));
    return out;
}

std::vector<std::string> harmonics_of(Kind kind, int n)
{
    return kind == Kind::distinct ? harmonic_listing(enumerate_distinct(n))
                                  : harmonic_listing(enumerate_ordinary(n));
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

template <typename P>
int emit_listing(const std::vector<P>& items, bool json_mode)
{
    if (json_mode) {
        auto arr = nlohmann::json::array();
        for (const auto& p : items) arr.push_back(p);
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& p : items) std::cout << format_partition(p) << '\n';
    }
    return 0;
}

int run_enumerate(Kind kind, int n, int ell, bool json_mode)
{
    if (kind == Kind::distinct)
        return emit_listing(canonical_listing(enumerate_distinct(n), ell), json_mode);
    return emit_listing(canonical_listing(enumerate_ordinary(n), ell), json_mode);
}

int run_apply(const std::string& op, Kind kind, const std::string& text, bool json_mode)
{
    const bool star = op == "delta-star";
    nlohmann::json j;
    std::string line;
    if (kind == Kind::distinct) {
        const auto sigma = parse_distinct(text);
        const auto image = star ? delta_star(sigma) : delta(sigma);
        line = image ? format_partition(*image) : "0";
        if (json_mode)
            j = {{"op", op},
                 {"kind", to_string(kind)},
                 {"input", sigma},
                 {"result", image ? nlohmann::json(*image) : nlohmann::json(nullptr)}};
    } else {
        const auto sigma = parse_ordinary(text);
        const auto image = star ? delta_star(sigma) : delta(sigma);
        line = image ? format_partition(*image) : "0";
        if (json_mode)
            j = {{"op", op},
                 {"kind", to_string(kind)},
                 {"input", sigma},
                 {"result", image ? nlohmann::json(*image) : nlohmann::json(nullptr)}};
    }
    if (json_mode)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << line << '\n';
    return 0;
}

int run_harmonics_single(Kind kind, int n, bool json_mode)
{
    const auto listing = harmonics_of(kind, n);
    if (json_mode) {
        std::cout << nlohmann::json(listing).dump(2) << '\n';
    } else {
        for (const auto& s : listing) std::cout << s << '\n';
    }
    return 0;
}

int run_harmonics_sweep(Kind kind, int max_n, bool json_mode)
{
    auto table = nlohmann::json::object();
    for (int n = 1; n <= max_n; ++n) {
        const auto listing = harmonics_of(kind, n);
        if (json_mode)
            table[std::to_string(n)] = listing;
        else
            std::cout << "n=" << n << ":" << (listing.empty() ? "" : " " + join(listing, " / "))
                      << '\n';
    }
    if (json_mode) std::cout << table.dump(2) << '\n';
    return 0;
}

int run_hodge(Kind kind, int n, bool oracle, bool json_mode)
{
    const auto report = build_report(n, kind);
    std::optional<LaplacianCheck> lap;
    std::vector<std::string> diffs;
    if (oracle) {
        lap = laplacian_oracle(n, kind);
        if (lap->kernel_dims.size() != report.harmonic.size()) {
            diffs.push_back("length ranges differ");
        } else {
            for (int l = 1; l <= report.max_length(); ++l) {
                const auto harmonic_count = static_cast<std::int64_t>(report.harmonic[l].size());
                if (lap->kernel_dims[l] != harmonic_count)
                    diffs.push_back("length " + std::to_string(l) + ": kernel dimension " +
                                    std::to_string(lap->kernel_dims[l]) + " vs harmonic count " +
                                    std::to_string(harmonic_count));
            }
        }
    }
    const bool oracle_match = diffs.empty();

    if (json_mode) {
        nlohmann::json j = report;
        if (lap) {
            auto dims = nlohmann::json::object();
            for (int l = 1; l < static_cast<int>(lap->kernel_dims.size()); ++l)
                dims[std::to_string(l)] = lap->kernel_dims[l];
            j["oracle"] = {{"kernel_dims", std::move(dims)}, {"match", oracle_match}};
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "weight: " << report.n << '\n';
        std::cout << "kind: " << to_string(report.kind) << '\n';
        std::cout << "chi: " << report.euler_characteristic << '\n';
        std::cout << "counts:";
        for (int l = 1; l <= report.max_length(); ++l) std::cout << ' ' << report.counts[l];
        std::cout << '\n';
        std::cout << "cohomology:";
        for (int l = 1; l <= report.max_length(); ++l) std::cout << ' ' << report.cohomology[l];
        std::cout << '\n';
        for (int l = 1; l <= report.max_length(); ++l)
            if (!report.harmonic[l].empty())
                std::cout << "harmonic length " << l << ": " << join(report.harmonic[l], " / ")
                          << '\n';
        for (const auto& [sigma, image] : report.pairs)
            std::cout << "pair: " << sigma << " -> " << image << '\n';
        if (lap) {
            std::cout << "oracle kernel dims:";
            for (int l = 1; l < static_cast<int>(lap->kernel_dims.size()); ++l)
                std::cout << ' ' << lap->kernel_dims[l];
            std::cout << '\n';
            if (oracle_match) std::cout << "oracle: kernel dimensions match harmonic counts\n";
        }
    }
    if (!oracle_match) {
        for (const auto& d : diffs) std::cerr << "oracle mismatch: " << d << '\n';
        return 1;
    }
    return 0;
}

int run_verify(const std::string& name, int order, bool json_mode)
{
    const auto result = verify_identity(identity_from_string(name), order);
    if (json_mode) {
        const nlohmann::json j = {
            {"identity", to_string(result.identity)},
            {"order", result.order},
            {"verified", result.verified},
            {"mismatch_degree",
             result.mismatch_degree ? nlohmann::json(*result.mismatch_degree)
                                    : nlohmann::json(nullptr)}};
        std::cout << j.dump(2) << '\n';
    } else if (result.verified) {
        std::cout << to_string(result.identity) << ": equal up to q^" << result.order << '\n';
    } else {
        std::cout << to_string(result.identity) << ": first mismatch at q^"
                  << *result.mismatch_degree << '\n';
    }
    return result.verified ? 0 : 1;
}

int run_euler_char(Kind kind, int max_n, bool json_mode)
{
    const int comfortable = kind == Kind::ordinary ? 40 : 60;
    if (max_n > comfortable)
        std::cerr << "warning: exhaustive enumeration of " << to_string(kind)
                  << " partitions above n = " << comfortable << " may take a while\n";

    const auto series =
        kind == Kind::distinct ? gf_product_one_minus(max_n) : gf_inv_product_one_plus(max_n);
    bool all_agree = true;
    auto rows = nlohmann::json::array();
    std::ostringstream table;
    table << std::setw(4) << "n" << std::setw(10) << "signed" << std::setw(10) << "harmonic"
          << std::setw(12) << "series" << "  agree\n";
    for (int n = 1; n <= max_n; ++n) {
        const auto report = build_report(n, kind);
        std::int64_t harmonic_signed = 0;
        for (int l = 1; l <= report.max_length(); ++l)
            harmonic_signed +=
                (l % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(report.harmonic[l].size());
        const auto& coeff = series.coeff(n);
        const bool agree =
            report.euler_characteristic == harmonic_signed && coeff == report.euler_characteristic;
        all_agree = all_agree && agree;
        if (json_mode)
            rows.push_back({{"n", n},
                            {"signed", report.euler_characteristic},
                            {"harmonic", harmonic_signed},
                            {"series", coeff.str()},
                            {"agree", agree}});
        else
            table << std::setw(4) << n << std::setw(10) << report.euler_characteristic
                  << std::setw(10) << harmonic_signed << std::setw(12) << coeff.str()
                  << (agree ? "    yes" : "     no") << '\n';
    }
    if (json_mode)
        std::cout << rows.dump(2) << '\n';
    else
        std::cout << table.str();
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coboundary operators on integer partitions, harmonic elements, and exact "
                 "q-series identity checks"};
    app.require_subcommand(1);

    std::string format = "text";
    int order = 500;
    int max_n = 30;
    std::uint64_t seed = 20260819ull;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--order", order, "Series truncation order (env PARTHODGE_ORDER)")
        ->envname("PARTHODGE_ORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n", max_n, "Largest weight in sweep subcommands")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Randomization seed (reserved for future extensions)");

    std::string kind_text = "distinct";
    int n = 1;
    int ell = 0;
    std::string op_name;
    std::string partition_text;
    std::string identity_name;
    bool oracle = false;

    const auto kind_member = CLI::IsMember({"distinct", "ordinary"});

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "List partitions of one weight in canonical order");
    cmd_enumerate->add_option("--kind", kind_text, "distinct|ordinary")
        ->required()
        ->check(kind_member);
    cmd_enumerate->add_option("--n", n, "Weight")->required()->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--ell", ell, "Restrict to one length")->check(CLI::PositiveNumber);

    auto* cmd_apply = app.add_subcommand("apply", "Apply delta or delta-star to one partition");
    cmd_apply->add_option("operator", op_name, "delta|delta-star")
        ->required()
        ->check(CLI::IsMember({"delta", "delta-star"}));
    cmd_apply->add_option("--kind", kind_text, "distinct|ordinary")->required()->check(kind_member);
    cmd_apply->add_option("partition", partition_text, "Partition text, e.g. 4,2 or 3^2,1")
        ->required();

    auto* cmd_harmonics =
        app.add_subcommand("harmonics", "List harmonic partitions for one weight or a sweep");
    cmd_harmonics->add_option("--kind", kind_text, "distinct|ordinary")
        ->required()
        ->check(kind_member);
    auto* harmonics_n =
        cmd_harmonics->add_option("--n", n, "Single weight (omit to sweep 1..max-n)")
            ->check(CLI::PositiveNumber);

    auto* cmd_hodge = app.add_subcommand("hodge", "Decomposition report for one weight");
    cmd_hodge->add_option("--kind", kind_text, "distinct|ordinary")->required()->check(kind_member);
    cmd_hodge->add_option("--n", n, "Weight")->required()->check(CLI::PositiveNumber);
    cmd_hodge->add_flag("--oracle", oracle,
                        "Cross-check against the exact Laplacian kernel (n <= 20)");

    auto* cmd_verify =
        app.add_subcommand("verify", "Check a series identity up to the truncation order");
    cmd_verify->add_option("identity", identity_name,
                           "pentagonal|bosonic|euler-odd|odd-reciprocal")
        ->required();

    auto* cmd_euler =
        app.add_subcommand("euler-char", "Per-weight Euler characteristic, computed three ways");
    cmd_euler->add_option("--kind", kind_text, "distinct|ordinary")->required()->check(kind_member);

    for (auto* sub :
         {cmd_enumerate, cmd_apply, cmd_harmonics, cmd_hodge, cmd_verify, cmd_euler})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    static_cast<void>(seed);  // accepted for interface stability; no randomized paths yet

    try {
        const Kind kind = kind_from_string(kind_text);
        const bool json_mode = format == "json";
        if (cmd_enumerate->parsed()) return run_enumerate(kind, n, ell, json_mode);
        if (cmd_apply->parsed()) return run_apply(op_name, kind, partition_text, json_mode);
        if (cmd_harmonics->parsed()) {
            if (harmonics_n->count() > 0) return run_harmonics_single(kind, n, json_mode);
            return run_harmonics_sweep(kind, max_n, json_mode);
        }
        if (cmd_hodge->parsed()) {
            if (oracle && n > 20) {
                std::cerr << "error: --oracle is limited to n <= 20\n";
                return 2;
            }
            return run_hodge(kind, n, oracle, json_mode);
        }
        if (cmd_verify->parsed()) return run_verify(identity_name, order, json_mode);
        if (cmd_euler->parsed()) return run_euler_char(kind, max_n, json_mode);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
