#include "parthodge/qseries.hpp"

#include <stdexcept>
#include <utility>

namespace parthodge {

TruncatedSeries::TruncatedSeries(int order)
{
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coefficient count must be order + 1");
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

const BigInt& TruncatedSeries::coeff(int n) const
{
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, BigInt value)
{
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("truncation order must lie within the current order");
    return TruncatedSeries(new_order,
                           std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

namespace {

void require_equal_orders(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("series orders differ; truncate explicitly first");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const
{
    require_equal_orders(*this, rhs);
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const
{
    require_equal_orders(*this, rhs);
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const
{
    require_equal_orders(*this, rhs);
    const int N = order();
    TruncatedSeries out(N);
    // iterate over nonzero coefficients of the sparser operand outermost
    const TruncatedSeries* a = this;
    const TruncatedSeries* b = &rhs;
    int nz_a = 0;
    int nz_b = 0;
    for (int n = 0; n <= N; ++n) {
        if (coeffs_[n] != 0) ++nz_a;
        if (rhs.coeffs_[n] != 0) ++nz_b;
    }
    if (nz_b < nz_a) std::swap(a, b);
    for (int i = 0; i <= N; ++i) {
        const BigInt& ai = a->coeffs_[i];
        if (ai == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            const BigInt& bj = b->coeffs_[j];
            if (bj == 0) continue;
            out.coeffs_[i + j] += ai * bj;
        }
    }
    return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& a)
{
    const int N = a.order();
    const BigInt& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("series inverse requires constant term +1 or -1");

    /* b_n solves sum_{k=0..n} a_k b_{n-k} = [n==0]; with a_0 = ±1 = 1/a_0. */
    TruncatedSeries b(N);
    b.set_coeff(0, a0);
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) {
            const BigInt& ak = a.coeff(k);
            if (ak == 0) continue;
            acc += ak * b.coeff(n - k);
        }
        b.set_coeff(n, -a0 * acc);
    }
    return b;
}

TruncatedSeries substitute_neg_q(const TruncatedSeries& a)
{
    TruncatedSeries out = a;
    for (int n = 1; n <= a.order(); n += 2) out.set_coeff(n, -a.coeff(n));
    return out;
}

std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_equal_orders(a, b);
    for (int n = 0; n <= a.order(); ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return std::nullopt;
}

namespace {

/* In-place application of binomial factors and their inverses; each is O(N)
 * exact integer work, so full products over m <= N cost O(N^2) total.
 *
 * times (1 + c q^m):  descending, c[i] += c * c[i-m] reads untouched entries.
 * divide by (1 - c q^m): ascending recurrence b[i] = a[i] + c * b[i-m].      */
void apply_factor(std::vector<BigInt>& c, int m, int sign)
{
    const int N = static_cast<int>(c.size()) - 1;
    for (int i = N; i >= m; --i) {
        if (c[i - m] == 0) continue;
        if (sign > 0)
            c[i] += c[i - m];
        else
            c[i] -= c[i - m];
    }
}

void apply_inverse_factor(std::vector<BigInt>& c, int m, int sign)
{
    const int N = static_cast<int>(c.size()) - 1;
    // dividing by (1 + q^m) subtracts; dividing by (1 - q^m) adds
    for (int i = m; i <= N; ++i) {
        if (c[i - m] == 0) continue;
        if (sign > 0)
            c[i] -= c[i - m];
        else
            c[i] += c[i - m];
    }
}

TruncatedSeries product_over(int order, int step, int offset, int sign, bool inverse)
{
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
    c[0] = 1;
    for (int m = offset; m <= order; m += step) {
        if (inverse)
            apply_inverse_factor(c, m, sign);
        else
            apply_factor(c, m, sign);
    }
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

TruncatedSeries gf_product_one_minus(int order) { return product_over(order, 1, 1, -1, false); }

TruncatedSeries gf_product_one_plus(int order) { return product_over(order, 1, 1, +1, false); }

TruncatedSeries gf_inv_product_one_plus(int order) { return product_over(order, 1, 1, +1, true); }

TruncatedSeries gf_inv_product_one_minus(int order) { return product_over(order, 1, 1, -1, true); }

TruncatedSeries gf_euler_odd_product(int order) { return product_over(order, 2, 1, +1, false); }

TruncatedSeries gf_odd_reciprocal(int order) { return product_over(order, 2, 1, -1, true); }

TruncatedSeries gf_pentagonal_rhs(int order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int l = 1;; ++l) {
        const long long first = 1ll * l * (3 * l - 1) / 2;
        const long long second = 1ll * l * (3 * l + 1) / 2;
        if (first > order) break;
        const BigInt sign = (l % 2 == 0) ? 1 : -1;
        s.set_coeff(static_cast<int>(first), sign);
        if (second <= order) s.set_coeff(static_cast<int>(second), sign);
    }
    return s;
}

namespace {

/* Shared tail of the two series sides: 1 + sum_l s^l q^{l^2} / prod_{j<=l} (1 - q^{2j})
 * with s = -1 (bosonic) or s = +1 (odd-product form). Terms advance by
 * term_l = term_{l-1} * s q^{2l-1} / (1 - q^{2l}), each step O(N). */
TruncatedSeries square_over_even_pochhammer(int order, int sign)
{
    TruncatedSeries acc = TruncatedSeries::one(order);
    std::vector<BigInt> term(static_cast<std::size_t>(order) + 1, BigInt(0));
    term[0] = 1;
    for (int l = 1; 1ll * l * l <= order; ++l) {
        // multiply by s * q^{2l-1}
        const int shift = 2 * l - 1;
        for (int i = order; i >= shift; --i) {
            term[i] = term[i - shift];
            if (sign < 0) term[i] = -term[i];
        }
        for (int i = 0; i < shift; ++i) term[i] = 0;
        // divide by (1 - q^{2l})
        apply_inverse_factor(term, 2 * l, -1);
        for (int i = l * l; i <= order; ++i)
            if (term[i] != 0) acc.set_coeff(i, acc.coeff(i) + term[i]);
    }
    return acc;
}

}  // namespace

TruncatedSeries gf_bosonic_rhs(int order) { return square_over_even_pochhammer(order, -1); }

TruncatedSeries gf_euler_odd_rhs(int order) { return square_over_even_pochhammer(order, +1); }

std::string to_string(Identity id)
{
    switch (id) {
        case Identity::pentagonal: return "pentagonal";
        case Identity::bosonic: return "bosonic";
        case Identity::euler_odd: return "euler-odd";
        case Identity::odd_reciprocal: return "odd-reciprocal";
    }
    throw std::invalid_argument("unknown identity");
}

Identity identity_from_string(std::string_view text)
{
    if (text == "pentagonal") return Identity::pentagonal;
    if (text == "bosonic") return Identity::bosonic;
    if (text == "euler-odd") return Identity::euler_odd;
    if (text == "odd-reciprocal") return Identity::odd_reciprocal;
    throw std::invalid_argument("unknown identity \"" + std::string(text) + "\"");
}

VerifyResult verify_identity(Identity id, int order)
{
    if (order < 1) throw std::invalid_argument("verification order must be >= 1");
    TruncatedSeries lhs(0), rhs(0);
    switch (id) {
        case Identity::pentagonal:
            lhs = gf_product_one_minus(order);
            rhs = gf_pentagonal_rhs(order);
            break;
        case Identity::bosonic:
            lhs = gf_inv_product_one_plus(order);
            rhs = gf_bosonic_rhs(order);
            break;
        case Identity::euler_odd:
            lhs = gf_euler_odd_product(order);
            rhs = gf_euler_odd_rhs(order);
            break;
        case Identity::odd_reciprocal:
            lhs = gf_odd_reciprocal(order);
            rhs = gf_product_one_plus(order);
            break;
    }
    VerifyResult result;
    result.identity = id;
    result.order = order;
    result.mismatch_degree = first_mismatch(lhs, rhs);
    result.verified = !result.mismatch_degree.has_value();
    return result;
}

}  // namespace parthodge
