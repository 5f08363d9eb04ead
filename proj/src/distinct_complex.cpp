#include "parthodge/distinct_complex.hpp"

#include <cassert>

namespace parthodge {

int run_stat(const DistinctPartition& sigma)
{
    const auto& parts = sigma.parts();
    int m = 1;
    while (m < sigma.length() && parts[m] == parts[m - 1] - 1) ++m;
    return m;
}

std::optional<DistinctPartition> delta(const DistinctPartition& sigma)
{
    const auto& parts = sigma.parts();
    const int l = sigma.length();
    const int m = run_stat(sigma);
    const int smallest = parts.back();

    /* The run (n_1, ..., n_m) loses 1 from each part and resurfaces as a new
     * smallest part m. The move is admissible only when m stays strictly
     * below the current smallest part (strictly below smallest - 1 when the
     * whole partition is one run, since the run then touches the tail). */
    if (m < l) {
        if (m >= smallest) return std::nullopt;
    } else {
        if (m >= smallest - 1) return std::nullopt;
    }

    std::vector<int> out(parts);
    for (int i = 0; i < m; ++i) --out[i];
    out.push_back(m);
    const DistinctPartition image(std::move(out));
    assert(image.weight() == sigma.weight());
    return image;
}

std::optional<DistinctPartition> delta_star(const DistinctPartition& sigma)
{
    const auto& parts = sigma.parts();
    const int l = sigma.length();
    const int m = run_stat(sigma);
    const int smallest = parts.back();

    /* Inverse move: spread the smallest part over the top n_l parts. It is
     * admissible only when the initial run is long enough to absorb it. */
    if (m < l) {
        if (m < smallest) return std::nullopt;
    } else {
        if (m <= smallest) return std::nullopt;
    }

    std::vector<int> out(parts.begin(), parts.end() - 1);
    for (int i = 0; i < smallest; ++i) ++out[i];
    const DistinctPartition image(std::move(out));
    assert(image.weight() == sigma.weight());
    return image;
}

bool is_harmonic(const DistinctPartition& sigma)
{
    const int l = sigma.length();
    if (run_stat(sigma) != l) return false;
    const int smallest = sigma.parts().back();
    return smallest == l || smallest == l + 1;
}

}  // namespace parthodge
