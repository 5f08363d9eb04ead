#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "parthodge/distinct_complex.hpp"
#include "parthodge/hodge.hpp"
#include "parthodge/json_io.hpp"
#include "parthodge/ordinary_complex.hpp"
#include "parthodge/partitions.hpp"
#include "parthodge/qseries.hpp"

namespace py = pybind11;
using namespace parthodge;

namespace {

py::int_ big(const BigInt& v)
{
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list series_to_list(const TruncatedSeries& s)
{
    py::list out;
    for (const auto& c : s.coeffs()) out.append(big(c));
    return out;
}

py::object json_to_py(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

template <typename P, typename F>
auto with_parsed(const std::string& text, F&& f)
{
    if constexpr (std::is_same_v<P, DistinctPartition>)
        return f(parse_distinct(text));
    else
        return f(parse_ordinary(text));
}

template <typename F>
auto dispatch(const std::string& kind_text, F&& f)
{
    const Kind kind = kind_from_string(kind_text);
    if (kind == Kind::distinct)
        return f.template operator()<DistinctPartition>(kind);
    else
        return f.template operator()<BlockPartition>(kind);
}

std::optional<std::string> apply_op(const std::string& kind_text, const std::string& text,
                                    bool star)
{
    return dispatch(kind_text, [&]<typename P>(Kind) -> std::optional<std::string> {
        return with_parsed<P>(text, [&](const P& sigma) -> std::optional<std::string> {
            const auto image = star ? delta_star(sigma) : delta(sigma);
            if (!image) return std::nullopt;
            return format_partition(*image);
        });
    });
}

template <typename P>
GradedBasis<P> basis_of(int n)
{
    if constexpr (std::is_same_v<P, DistinctPartition>)
        return enumerate_distinct(n);
    else
        return enumerate_ordinary(n);
}

TruncatedSeries named_series(const std::string& name, int order)
{
    if (name == "product-one-minus") return gf_product_one_minus(order);
    if (name == "product-one-plus") return gf_product_one_plus(order);
    if (name == "inv-product-one-plus") return gf_inv_product_one_plus(order);
    if (name == "inv-product-one-minus") return gf_inv_product_one_minus(order);
    if (name == "pentagonal-rhs") return gf_pentagonal_rhs(order);
    if (name == "bosonic-rhs") return gf_bosonic_rhs(order);
    if (name == "euler-odd-product") return gf_euler_odd_product(order);
    if (name == "euler-odd-rhs") return gf_euler_odd_rhs(order);
    if (name == "odd-reciprocal") return gf_odd_reciprocal(order);
    throw std::invalid_argument("unknown series name: " + name);
}

}  // namespace

PYBIND11_MODULE(_parthodge, m)
{
    m.doc() = "Coboundary operators on integer partitions, harmonic elements, and exact "
              "truncated q-series. Partitions travel as text (\"4,2\", \"3^2,1\"); series "
              "coefficients come back as exact Python ints.";

    m.def(
        "enumerate_partitions",
        [](const std::string& kind, int n, int ell) {
            return dispatch(kind, [&]<typename P>(Kind) {
                const auto basis = basis_of<P>(n);
                std::vector<P> items;
                if (ell > 0) {
                    if (ell <= basis.max_length()) items = basis.slices[ell];
                } else {
                    for (int l = 1; l <= basis.max_length(); ++l)
                        items.insert(items.end(), basis.slices[l].begin(),
                                     basis.slices[l].end());
                    std::sort(items.begin(), items.end(),
                              [](const P& a, const P& b) { return canonical_before(a, b); });
                }
                std::vector<std::string> out;
                out.reserve(items.size());
                for (const auto& p : items) out.push_back(format_partition(p));
                return out;
            });
        },
        py::arg("kind"), py::arg("n"), py::arg("ell") = 0,
        "All partitions of weight n in canonical order; ell > 0 restricts to one length.");

    m.def(
        "apply_delta",
        [](const std::string& kind, const std::string& partition) {
            return apply_op(kind, partition, false);
        },
        py::arg("kind"), py::arg("partition"),
        "Image under the degree-raising operator, or None when it vanishes.");

    m.def(
        "apply_delta_star",
        [](const std::string& kind, const std::string& partition) {
            return apply_op(kind, partition, true);
        },
        py::arg("kind"), py::arg("partition"),
        "Image under the degree-lowering adjoint, or None when it vanishes.");

    m.def(
        "is_harmonic",
        [](const std::string& kind, const std::string& partition) {
            return dispatch(kind, [&]<typename P>(Kind) {
                return with_parsed<P>(partition,
                                      [](const P& sigma) { return is_harmonic(sigma); });
            });
        },
        py::arg("kind"), py::arg("partition"),
        "True when both operators vanish on the partition.");

    m.def(
        "run_stat",
        [](const std::string& partition) { return run_stat(parse_distinct(partition)); },
        py::arg("partition"),
        "Length of the maximal initial consecutive run of a distinct partition.");

    m.def(
        "harmonics",
        [](const std::string& kind, int n) {
            return dispatch(kind, [&]<typename P>(Kind) {
                const auto basis = basis_of<P>(n);
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
            });
        },
        py::arg("kind"), py::arg("n"),
        "Harmonic partitions of weight n in canonical order.");

    m.def(
        "hodge_report",
        [](const std::string& kind, int n) {
            const nlohmann::json j = build_report(n, kind_from_string(kind));
            return json_to_py(j);
        },
        py::arg("kind"), py::arg("n"),
        "Decomposition report as a dict: counts, harmonic elements, matched pairs, chi.");

    m.def(
        "laplacian_kernel_dims",
        [](const std::string& kind, int n) {
            const auto check = laplacian_oracle(n, kind_from_string(kind));
            return check.kernel_dims;
        },
        py::arg("kind"), py::arg("n"),
        "Exact Laplacian kernel dimension per length (index 0 unused); keep n <= 20.");

    m.def(
        "verify_identity",
        [](const std::string& identity, int order) {
            const auto result = parthodge::verify_identity(identity_from_string(identity), order);
            py::dict out;
            out["identity"] = to_string(result.identity);
            out["order"] = result.order;
            out["verified"] = result.verified;
            out["mismatch_degree"] = result.mismatch_degree
                                         ? py::object(py::int_(*result.mismatch_degree))
                                         : py::object(py::none());
            return out;
        },
        py::arg("identity"), py::arg("order") = 500,
        "Compare both sides of a named identity coefficient by coefficient.");

    m.def(
        "series_coefficients",
        [](const std::string& name, int order) {
            return series_to_list(named_series(name, order));
        },
        py::arg("name"), py::arg("order"),
        "Coefficients c_0..c_order of one of the built-in generating functions.");

    m.def(
        "euler_characteristic_coefficients",
        [](const std::string& kind, int max_n) {
            return series_to_list(euler_characteristic_series(kind_from_string(kind), max_n));
        },
        py::arg("kind"), py::arg("max_n"),
        "Alternating length-count sums per weight, as series coefficients c_0..c_max_n.");

    m.attr("__version__") = "1.0.0";
    m.attr("IDENTITIES") =
        py::make_tuple("pentagonal", "bosonic", "euler-odd", "odd-reciprocal");
    m.attr("SERIES_NAMES") = py::make_tuple(
        "product-one-minus", "product-one-plus", "inv-product-one-plus",
        "inv-product-one-minus", "pentagonal-rhs", "bosonic-rhs", "euler-odd-product",
        "euler-odd-rhs", "odd-reciprocal");
}
