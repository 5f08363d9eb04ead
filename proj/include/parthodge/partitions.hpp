#ifndef PARTHODGE_PARTITIONS_HPP
#define PARTHODGE_PARTITIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parthodge {

enum class Kind { distinct, ordinary };

std::string to_string(Kind kind);
Kind kind_from_string(std::string_view text);  // throws std::invalid_argument

/* Partition of n into strictly decreasing positive parts (n_1 > ... > n_l > 0).
 * The empty partition (n = 0, l = 0) is not representable here; it is the
 * distinguished constant term handled by the series layer. */
class DistinctPartition {
public:
    explicit DistinctPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;

    bool operator==(const DistinctPartition&) const = default;

private:
    std::vector<int> parts_;
};

/* One run of equal parts in an ordinary partition: part^multiplicity. */
struct Block {
    int part = 0;
    int multiplicity = 0;
    bool operator==(const Block&) const = default;
};

/* Ordinary partition in block form: parts strictly decreasing across blocks,
 * every multiplicity >= 1. Length counts parts with multiplicity. */
class BlockPartition {
public:
    explicit BlockPartition(std::vector<Block> blocks);

    // Groups a weakly decreasing part sequence into blocks.
    static BlockPartition from_flat(const std::vector<int>& parts);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    int length() const noexcept;
    int weight() const noexcept;
    std::vector<int> flat() const;

    bool operator==(const BlockPartition&) const = default;

private:
    std::vector<Block> blocks_;
};

// Canonical slice order: lexicographically descending part sequences.
bool canonical_before(const DistinctPartition& a, const DistinctPartition& b);
bool canonical_before(const BlockPartition& a, const BlockPartition& b);

/* All partitions of a fixed weight, sliced by length. slices[l] is S_l(n)
 * resp. P_l(n) in canonical order; slices[0] stays empty for n >= 1. */
template <typename P>
struct GradedBasis {
    int weight = 0;
    std::vector<std::vector<P>> slices;

    int max_length() const noexcept { return static_cast<int>(slices.size()) - 1; }
    std::int64_t total() const noexcept
    {
        std::int64_t t = 0;
        for (const auto& s : slices) t += static_cast<std::int64_t>(s.size());
        return t;
    }
};

GradedBasis<DistinctPartition> enumerate_distinct(int n);  // throws for n < 1
GradedBasis<BlockPartition> enumerate_ordinary(int n);     // throws for n < 1

/* Raised on malformed partition text; the message names the offending token. */
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Exchange grammar. Distinct: "n1,n2,...". Ordinary: comma-separated
 * "part^mult" atoms, "^1" optional; adjacent atoms with equal parts merge. */
DistinctPartition parse_distinct(std::string_view text);
BlockPartition parse_ordinary(std::string_view text);

std::string format_partition(const DistinctPartition& p);
std::string format_partition(const BlockPartition& p);

}  // namespace parthodge

#endif
