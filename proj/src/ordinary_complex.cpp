#include "parthodge/ordinary_complex.hpp"

#include <cassert>

namespace parthodge {

namespace {

/* Drop zero-multiplicity blocks and merge adjacent equal parts; the operator
 * case analyses below may produce both artifacts on the same output. */
BlockPartition normalize(std::vector<Block> raw)
{
    std::vector<Block> blocks;
    for (const auto& b : raw) {
        if (b.multiplicity == 0) continue;
        if (!blocks.empty() && blocks.back().part == b.part)
            blocks.back().multiplicity += b.multiplicity;
        else
            blocks.push_back(b);
    }
    return BlockPartition(std::move(blocks));
}

bool all_even_from(const std::vector<Block>& blocks, std::size_t first)
{
    for (std::size_t j = first; j < blocks.size(); ++j)
        if (blocks[j].multiplicity % 2 != 0) return false;
    return true;
}

}  // namespace

std::optional<int> odd_tail(const BlockPartition& sigma)
{
    const auto& blocks = sigma.blocks();
    for (int j = static_cast<int>(blocks.size()); j >= 1; --j)
        if (blocks[j - 1].multiplicity % 2 != 0) return j;
    return std::nullopt;
}

std::optional<BlockPartition> delta(const BlockPartition& sigma)
{
    const auto& blocks = sigma.blocks();
    const std::size_t k = blocks.size();
    const int n1 = blocks[0].part;
    const int m1 = blocks[0].multiplicity;

    // (i) the top block cannot shed a column taller than its new part
    if (m1 > n1 - 1) return std::nullopt;

    // (ii) the new part m_1 collides with an existing part n_j
    for (std::size_t j = 1; j < k; ++j) {
        if (blocks[j].part != m1) continue;
        if (!all_even_from(blocks, j)) return std::nullopt;
        std::vector<Block> out(blocks);
        out[0] = {n1 - 1, m1};
        ++out[j].multiplicity;
        return normalize(std::move(out));
    }

    // (iii) the new part m_1 slots strictly between n_i and n_{i+1}
    std::size_t i = k;  // insertion position: after block i (1-based), n_i > m_1
    for (std::size_t j = 1; j < k; ++j) {
        if (blocks[j].part < m1) {
            i = j;
            break;
        }
    }
    if (i < k && !all_even_from(blocks, i)) return std::nullopt;

    std::vector<Block> out;
    out.reserve(k + 1);
    out.push_back({n1 - 1, m1});
    for (std::size_t j = 1; j < i; ++j) out.push_back(blocks[j]);
    out.push_back({m1, 1});
    for (std::size_t j = i; j < k; ++j) out.push_back(blocks[j]);
    const auto image = normalize(std::move(out));
    assert(image.weight() == sigma.weight());
    return image;
}

std::optional<BlockPartition> delta_star(const BlockPartition& sigma)
{
    const auto& blocks = sigma.blocks();
    const std::size_t k = blocks.size();
    const int n1 = blocks[0].part;
    const int m1 = blocks[0].multiplicity;
    const auto t = odd_tail(sigma);

    if (!t.has_value() || *t == 1) {
        /* (i) only the top multiplicity may be odd: peel one column of height
         * n_1 off the top block and stack it along the top row. Possible only
         * when the excess m_1 - n_1 is odd and nonnegative. */
        if (m1 < n1 || (m1 - n1) % 2 == 0) return std::nullopt;
        const int residual = m1 - n1 - 1;
        std::vector<Block> out;
        out.reserve(k + 1);
        out.push_back({n1 + 1, n1});
        out.push_back({n1, residual});
        for (std::size_t j = 1; j < k; ++j) out.push_back(blocks[j]);
        const auto image = normalize(std::move(out));
        assert(image.weight() == sigma.weight());
        return image;
    }

    /* (ii) the deepest odd multiplicity sits at block t >= 2: peel one column
     * of height n_t off block t and lay it across the top m_1 row. */
    const std::size_t ti = static_cast<std::size_t>(*t) - 1;
    const int nt = blocks[ti].part;
    if (nt > m1) return std::nullopt;

    std::vector<Block> out;
    out.reserve(k + 1);
    out.push_back({n1 + 1, nt});
    out.push_back({n1, m1 - nt});
    for (std::size_t j = 1; j < ti; ++j) out.push_back(blocks[j]);
    out.push_back({nt, blocks[ti].multiplicity - 1});
    for (std::size_t j = ti + 1; j < k; ++j) out.push_back(blocks[j]);
    const auto image = normalize(std::move(out));
    assert(image.weight() == sigma.weight());
    return image;
}

bool is_harmonic(const BlockPartition& sigma)
{
    const auto& blocks = sigma.blocks();
    const int excess = blocks[0].multiplicity - blocks[0].part;
    if (excess < 0 || excess % 2 != 0) return false;
    return all_even_from(blocks, 1);
}

}  // namespace parthodge
