#ifndef PARTHODGE_ORDINARY_COMPLEX_HPP
#define PARTHODGE_ORDINARY_COMPLEX_HPP

#include <optional>

#include "parthodge/partitions.hpp"

namespace parthodge {

/* Largest 1-based block index t whose multiplicity m_t is odd; empty when
 * every multiplicity is even. Drives the case split in delta_star. */
std::optional<int> odd_tail(const BlockPartition& sigma);

/* Coboundary P_l(n) -> P_{l+1}(n): trade the top block (n_1)^{m_1} for
 * (n_1 - 1)^{m_1} plus one new part m_1, subject to parity constraints on the
 * multiplicities below the insertion point. Empty optional = zero map. */
std::optional<BlockPartition> delta(const BlockPartition& sigma);

/* Adjoint P_l(n) -> P_{l-1}(n): absorb the deepest odd-multiplicity part into
 * the top block, raising n_t of the largest parts by one. Empty optional =
 * zero map. */
std::optional<BlockPartition> delta_star(const BlockPartition& sigma);

/* Harmonic iff m_1 = n_1 + 2e for some e >= 0 and every other multiplicity is
 * even. Exactly one harmonic partition lives in each nonempty P_l(n) slice
 * that supports one; its length satisfies l == n_1 (mod 2). */
bool is_harmonic(const BlockPartition& sigma);

}  // namespace parthodge

#endif
