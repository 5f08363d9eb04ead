#include "parthodge/hodge.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "parthodge/distinct_complex.hpp"
#include "parthodge/ordinary_complex.hpp"

namespace parthodge {

namespace {

using Rational = boost::multiprecision::cpp_rational;

template <typename P>
GradedBasis<P> enumerate_basis(int n)
{
    if constexpr (std::is_same_v<P, DistinctPartition>)
        return enumerate_distinct(n);
    else
        return enumerate_ordinary(n);
}

template <typename P>
HodgeReport build_report_impl(int n, Kind kind)
{
    const auto basis = enumerate_basis<P>(n);
    const int max_l = basis.max_length();

    HodgeReport report;
    report.n = n;
    report.kind = kind;
    report.counts.assign(max_l + 1, 0);
    report.harmonic.assign(max_l + 1, {});
    report.cohomology.assign(max_l + 1, 0);

    for (int l = 1; l <= max_l; ++l) {
        report.counts[l] = static_cast<std::int64_t>(basis.slices[l].size());
        for (const auto& sigma : basis.slices[l]) {
            const auto image = delta(sigma);
            const bool killed_up = !image.has_value();
            const bool killed_down = !delta_star(sigma).has_value();
            if (killed_up && killed_down) {
                if (!is_harmonic(sigma))
                    throw ConsistencyError("element killed by both operators is not harmonic: " +
                                           format_partition(sigma));
                report.harmonic[l].push_back(format_partition(sigma));
                ++report.cohomology[l];
            } else if (!killed_up && !killed_down) {
                throw ConsistencyError("element is both a source and a target: " +
                                       format_partition(sigma));
            } else if (!killed_up) {
                report.pairs.emplace_back(format_partition(sigma), format_partition(*image));
            }
            // the remaining case is a pair target, accounted for by its source
        }
        report.euler_characteristic += (l % 2 == 0 ? 1 : -1) * report.counts[l];
    }
    return report;
}

/* Dense exact-integer matrix with explicit dimensions, so products with a
 * zero-dimensional factor still come out shaped correctly. */
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;  // row-major

    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    bool operator==(const Matrix&) const = default;
};

Matrix to_dense(const SparseOperatorMatrix& m)
{
    Matrix a(m.rows, m.cols);
    for (const auto& [r, c] : m.entries) a.at(r, c) = 1;
    return a;
}

Matrix transpose(const Matrix& a)
{
    Matrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b)
{
    if (a.cols != b.rows) throw ConsistencyError("matrix dimension mismatch in composition");
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw ConsistencyError("matrix dimension mismatch in sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

bool is_zero(const Matrix& a)
{
    for (const auto v : a.data)
        if (v != 0) return false;
    return true;
}

/* Rank over exact rationals by generic Gaussian elimination. Deliberately
 * ignorant of the projection structure it is used to double-check. */
int rational_rank(const Matrix& a)
{
    std::vector<std::vector<Rational>> m(a.rows, std::vector<Rational>(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m[i][j] = a.at(i, j);

    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rational lead = m[rank][col];
        for (int r = rank + 1; r < a.rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / lead;
            for (int j = col; j < a.cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <typename P>
LaplacianCheck laplacian_oracle_impl(int n, Kind kind)
{
    const auto basis = enumerate_basis<P>(n);
    const int max_l = basis.max_length();

    std::vector<std::map<std::string, int>> index(max_l + 1);
    for (int l = 1; l <= max_l; ++l)
        for (int i = 0; i < static_cast<int>(basis.slices[l].size()); ++i)
            index[l].emplace(format_partition(basis.slices[l][i]), i);

    const auto slice_size = [&](int l) {
        return (l >= 1 && l <= max_l) ? static_cast<int>(basis.slices[l].size()) : 0;
    };
    const auto locate = [&](const P& image, int expected_l, const char* op) {
        if (image.length() != expected_l)
            throw ConsistencyError(std::string(op) + " image has wrong grading");
        if (expected_l < 1 || expected_l > max_l)
            throw ConsistencyError(std::string(op) + " image escapes the graded basis");
        const auto it = index[expected_l].find(format_partition(image));
        if (it == index[expected_l].end())
            throw ConsistencyError(std::string(op) + " image escapes the graded basis");
        return it->second;
    };

    // 0/1 matrices of delta: slice l -> slice l+1, and delta*: slice l -> l-1
    std::vector<SparseOperatorMatrix> up(max_l + 1), down(max_l + 1);
    for (int l = 1; l <= max_l; ++l) {
        up[l].rows = slice_size(l + 1);
        up[l].cols = slice_size(l);
        down[l].rows = slice_size(l - 1);
        down[l].cols = slice_size(l);
        for (int c = 0; c < up[l].cols; ++c) {
            const auto& sigma = basis.slices[l][c];
            if (const auto image = delta(sigma))
                up[l].entries.emplace_back(locate(*image, l + 1, "delta"), c);
            if (const auto image = delta_star(sigma))
                down[l].entries.emplace_back(locate(*image, l - 1, "delta*"), c);
        }
    }

    LaplacianCheck check;
    check.n = n;
    check.kind = kind;
    check.kernel_dims.assign(max_l + 1, 0);

    std::vector<Matrix> dense_up, dense_down;
    dense_up.reserve(max_l + 1);
    dense_down.reserve(max_l + 1);
    for (int l = 0; l <= max_l; ++l) {
        dense_up.push_back(l >= 1 ? to_dense(up[l]) : Matrix(0, 0));
        dense_down.push_back(l >= 1 ? to_dense(down[l]) : Matrix(0, 0));
    }

    // matrix-level nilpotency on every composable pair
    for (int l = 1; l + 1 <= max_l; ++l)
        if (!is_zero(matmul(dense_up[l + 1], dense_up[l])))
            throw ConsistencyError("delta . delta has a nonzero matrix entry");
    for (int l = 2; l <= max_l; ++l)
        if (!is_zero(matmul(dense_down[l - 1], dense_down[l])))
            throw ConsistencyError("delta* . delta* has a nonzero matrix entry");

    // adjointness: the delta* matrix out of slice l+1 is delta's transpose
    for (int l = 1; l < max_l; ++l)
        if (dense_down[l + 1] != transpose(dense_up[l]))
            throw ConsistencyError("delta* matrix is not the transpose of delta");

    for (int l = 1; l <= max_l; ++l) {
        const int dim = slice_size(l);
        // L = delta* delta + delta delta*, written with the verified adjoints
        const Matrix lap = add(matmul(transpose(dense_up[l]), dense_up[l]),
                               matmul(transpose(dense_down[l]), dense_down[l]));

        // the matching forces a 0/1-diagonal projection in the canonical basis
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (i != j && lap.at(i, j) != 0)
                    throw ConsistencyError("Laplacian has an off-diagonal entry");
                if (i == j && lap.at(i, j) != 0 && lap.at(i, j) != 1)
                    throw ConsistencyError("Laplacian diagonal entry outside {0,1}");
            }
        if (matmul(lap, lap) != lap) throw ConsistencyError("Laplacian is not idempotent");

        check.kernel_dims[l] = dim - rational_rank(lap);
    }
    return check;
}

}  // namespace

HodgeReport build_report(int n, Kind kind)
{
    if (n < 1) throw std::invalid_argument("Hodge report requires weight n >= 1");
    return kind == Kind::distinct ? build_report_impl<DistinctPartition>(n, kind)
                                  : build_report_impl<BlockPartition>(n, kind);
}

LaplacianCheck laplacian_oracle(int n, Kind kind)
{
    if (n < 1) throw std::invalid_argument("Laplacian oracle requires weight n >= 1");
    return kind == Kind::distinct ? laplacian_oracle_impl<DistinctPartition>(n, kind)
                                  : laplacian_oracle_impl<BlockPartition>(n, kind);
}

TruncatedSeries euler_characteristic_series(Kind kind, int max_n)
{
    if (max_n < 1) throw std::invalid_argument("series requires max_n >= 1");
    TruncatedSeries s = TruncatedSeries::one(max_n);
    for (int n = 1; n <= max_n; ++n) {
        std::int64_t chi = 0;
        const auto add_signed = [&chi](int l, std::size_t count) {
            chi += (l % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count);
        };
        if (kind == Kind::distinct) {
            const auto basis = enumerate_distinct(n);
            for (int l = 1; l <= basis.max_length(); ++l) add_signed(l, basis.slices[l].size());
        } else {
            const auto basis = enumerate_ordinary(n);
            for (int l = 1; l <= basis.max_length(); ++l) add_signed(l, basis.slices[l].size());
        }
        s.set_coeff(n, chi);
    }
    return s;
}

}  // namespace parthodge
