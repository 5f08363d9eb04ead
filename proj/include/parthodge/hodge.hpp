#ifndef PARTHODGE_HODGE_HPP
#define PARTHODGE_HODGE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parthodge/partitions.hpp"
#include "parthodge/qseries.hpp"

namespace parthodge {

/* Matching decomposition of the weight-n complex: every basis element is
 * harmonic, the source of exactly one matched pair, or the target of exactly
 * one matched pair. Cohomology is read off combinatorially — pairs cancel,
 * harmonics survive. Indices run over lengths 1..max length; index 0 unused. */
struct HodgeReport {
    int n = 0;
    Kind kind = Kind::distinct;
    std::vector<std::int64_t> counts;                     // counts[l] = |basis at length l|
    std::vector<std::vector<std::string>> harmonic;       // harmonic[l], canonical order
    std::vector<std::pair<std::string, std::string>> pairs;  // (sigma, delta sigma)
    std::vector<std::int64_t> cohomology;                 // cohomology[l] = dim H^l
    std::int64_t euler_characteristic = 0;                // sum_l (-1)^l counts[l]

    int max_length() const noexcept { return static_cast<int>(counts.size()) - 1; }
};

HodgeReport build_report(int n, Kind kind);  // throws for n < 1

/* Delta restricted to one (n, l) slice, as an explicit 0/1 matrix: at most one
 * nonzero entry per column since delta sends each basis element to at most one
 * basis element. */
struct SparseOperatorMatrix {
    int rows = 0;  // |basis at length l+1|
    int cols = 0;  // |basis at length l|
    std::vector<std::pair<int, int>> entries;  // (row, col) of each 1
};

/* Raised when the exact linear algebra contradicts the combinatorics — a
 * dimension mismatch, a failed transpose check, or a nonvanishing square.
 * Any throw here signals an operator bug, not bad input. */
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LaplacianCheck {
    int n = 0;
    Kind kind = Kind::distinct;
    std::vector<std::int64_t> kernel_dims;  // kernel_dims[l] = dim ker L on length l
};

/* Independent cross-check of the matching: builds the delta matrices slice by
 * slice, verifies delta^2 = 0, that the adjoint matrix is the transpose, and
 * that L = delta delta* + delta* delta is a 0/1-diagonal projection; returns
 * exact kernel dimensions per length. Intended for n <= 20. */
LaplacianCheck laplacian_oracle(int n, Kind kind);

/* Coefficient of q^n is sum_l (-1)^l |basis(n, l)| for 1 <= n <= max_n,
 * constant term 1 — the Euler characteristic generating function. */
TruncatedSeries euler_characteristic_series(Kind kind, int max_n);

}  // namespace parthodge

#endif
