#ifndef PARTHODGE_QSERIES_HPP
#define PARTHODGE_QSERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parthodge {

using BigInt = boost::multiprecision::cpp_int;

/* Formal power series in q truncated at q^order: coefficients c_0..c_order
 * are exact big integers, everything beyond q^order is discarded. Binary
 * operations require equal orders; use truncate() to align first. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // zero series; throws for order < 0
    TruncatedSeries(int order, std::vector<BigInt> coeffs);

    static TruncatedSeries one(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int n) const;       // throws std::out_of_range
    void set_coeff(int n, BigInt value);    // throws std::out_of_range
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    TruncatedSeries truncate(int new_order) const;  // new_order <= order()

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;  // coeffs_[n] multiplies q^n
};

/* Multiplicative inverse mod q^{order+1}; the constant term must be a unit
 * (+1 or -1), which covers every generating function in this library. */
TruncatedSeries series_inverse(const TruncatedSeries& a);

/* q -> -q: negates coefficients in odd degrees. */
TruncatedSeries substitute_neg_q(const TruncatedSeries& a);

/* Smallest degree where the two series disagree, if any. */
std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/* Product / sum builders, all exact mod q^{order+1}. */
TruncatedSeries gf_product_one_minus(int order);      // prod_{m>=1} (1 - q^m)
TruncatedSeries gf_product_one_plus(int order);       // prod_{m>=1} (1 + q^m)
TruncatedSeries gf_inv_product_one_plus(int order);   // prod_{m>=1} 1/(1 + q^m)
TruncatedSeries gf_inv_product_one_minus(int order);  // prod_{m>=1} 1/(1 - q^m)
TruncatedSeries gf_pentagonal_rhs(int order);  // 1 + sum_l (-1)^l (q^{l(3l-1)/2} + q^{l(3l+1)/2})
TruncatedSeries gf_bosonic_rhs(int order);     // 1 + sum_l (-1)^l q^{l^2} / prod_{j<=l} (1 - q^{2j})
TruncatedSeries gf_euler_odd_product(int order);  // prod_{m>=1} (1 + q^{2m-1})
TruncatedSeries gf_euler_odd_rhs(int order);      // 1 + sum_l q^{l^2} / prod_{j<=l} (1 - q^{2j})
TruncatedSeries gf_odd_reciprocal(int order);     // prod_{m>=1} 1/(1 - q^{2m-1})

enum class Identity { pentagonal, bosonic, euler_odd, odd_reciprocal };

std::string to_string(Identity id);
Identity identity_from_string(std::string_view text);  // throws std::invalid_argument

struct VerifyResult {
    Identity identity;
    int order = 0;
    bool verified = false;
    std::optional<int> mismatch_degree;  // set when verified is false
};

/* Builds both sides of the identity at the given order and compares them
 * coefficient by coefficient. */
VerifyResult verify_identity(Identity id, int order);

}  // namespace parthodge

#endif
