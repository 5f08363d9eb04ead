#ifndef PARTHODGE_DISTINCT_COMPLEX_HPP
#define PARTHODGE_DISTINCT_COMPLEX_HPP

#include <optional>

#include "parthodge/partitions.hpp"

namespace parthodge {

/* Run statistic m(sigma): the largest m such that the first m parts form a
 * run of consecutive integers n_1, n_1 - 1, ..., n_1 - m + 1. */
int run_stat(const DistinctPartition& sigma);

/* Coboundary S_l(n) -> S_{l+1}(n): decrement the first m(sigma) parts and
 * append a new smallest part m(sigma). Empty optional encodes the zero map. */
std::optional<DistinctPartition> delta(const DistinctPartition& sigma);

/* Adjoint S_l(n) -> S_{l-1}(n): increment the first n_l parts and drop the
 * smallest part. Empty optional encodes the zero map. */
std::optional<DistinctPartition> delta_star(const DistinctPartition& sigma);

/* Harmonic iff both delta and delta_star vanish; equivalently the partition
 * is (2l-1, ..., l) or (2l, ..., l+1), pinning n to a pentagonal number. */
bool is_harmonic(const DistinctPartition& sigma);

}  // namespace parthodge

#endif
