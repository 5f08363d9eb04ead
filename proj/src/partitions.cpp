#include "parthodge/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace parthodge {

std::string to_string(Kind kind)
{
    return kind == Kind::distinct ? "distinct" : "ordinary";
}

Kind kind_from_string(std::string_view text)
{
    if (text == "distinct") return Kind::distinct;
    if (text == "ordinary") return Kind::ordinary;
    throw std::invalid_argument("unknown partition kind \"" + std::string(text) + "\"");
}

DistinctPartition::DistinctPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) throw std::invalid_argument("distinct partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("distinct partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("distinct partition parts must strictly decrease");
    }
}

int DistinctPartition::weight() const noexcept
{
    int w = 0;
    for (const int p : parts_) w += p;
    return w;
}

BlockPartition::BlockPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) throw std::invalid_argument("block partition must have at least one block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].part <= 0)
            throw std::invalid_argument("block parts must be positive");
        if (blocks_[i].multiplicity <= 0)
            throw std::invalid_argument("block multiplicities must be positive");
        if (i > 0 && blocks_[i].part >= blocks_[i - 1].part)
            throw std::invalid_argument("block parts must strictly decrease");
    }
}

BlockPartition BlockPartition::from_flat(const std::vector<int>& parts)
{
    if (parts.empty()) throw std::invalid_argument("block partition must have at least one part");
    std::vector<Block> blocks;
    for (const int p : parts) {
        if (!blocks.empty() && p == blocks.back().part)
            ++blocks.back().multiplicity;
        else
            blocks.push_back({p, 1});
    }
    return BlockPartition(std::move(blocks));  // validates decrease/positivity
}

int BlockPartition::length() const noexcept
{
    int l = 0;
    for (const auto& b : blocks_) l += b.multiplicity;
    return l;
}

int BlockPartition::weight() const noexcept
{
    int w = 0;
    for (const auto& b : blocks_) w += b.part * b.multiplicity;
    return w;
}

std::vector<int> BlockPartition::flat() const
{
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(length()));
    for (const auto& b : blocks_)
        for (int i = 0; i < b.multiplicity; ++i) parts.push_back(b.part);
    return parts;
}

bool canonical_before(const DistinctPartition& a, const DistinctPartition& b)
{
    return a.parts() > b.parts();
}

bool canonical_before(const BlockPartition& a, const BlockPartition& b)
{
    return a.flat() > b.flat();
}

namespace {

/* Recursive descent over admissible largest parts, in decreasing order, so
 * the overall emission order is lexicographically descending; slicing by
 * length preserves that order inside every slice. */
void descend_distinct(int remaining, int max_part, std::vector<int>& prefix,
                      GradedBasis<DistinctPartition>& out)
{
    if (remaining == 0) {
        const int l = static_cast<int>(prefix.size());
        if (l >= static_cast<int>(out.slices.size())) out.slices.resize(l + 1);
        out.slices[l].push_back(DistinctPartition(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // the tail below p can carry at most p(p-1)/2 with distinct parts
        if (remaining - p > p * (p - 1) / 2) break;
        prefix.push_back(p);
        descend_distinct(remaining - p, p - 1, prefix, out);
        prefix.pop_back();
    }
}

void descend_ordinary(int remaining, int max_part, std::vector<int>& prefix,
                      GradedBasis<BlockPartition>& out)
{
    if (remaining == 0) {
        const int l = static_cast<int>(prefix.size());
        if (l >= static_cast<int>(out.slices.size())) out.slices.resize(l + 1);
        out.slices[l].push_back(BlockPartition::from_flat(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        descend_ordinary(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

GradedBasis<DistinctPartition> enumerate_distinct(int n)
{
    if (n < 1) throw std::invalid_argument("enumeration requires weight n >= 1");
    GradedBasis<DistinctPartition> basis;
    basis.weight = n;
    basis.slices.resize(2);
    std::vector<int> prefix;
    descend_distinct(n, n, prefix, basis);
    return basis;
}

GradedBasis<BlockPartition> enumerate_ordinary(int n)
{
    if (n < 1) throw std::invalid_argument("enumeration requires weight n >= 1");
    GradedBasis<BlockPartition> basis;
    basis.weight = n;
    basis.slices.resize(2);
    std::vector<int> prefix;
    descend_ordinary(n, n, prefix, basis);
    return basis;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            tokens.push_back(trim(text.substr(start)));
            break;
        }
        tokens.push_back(trim(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return tokens;
}

int parse_positive_int(std::string_view token, std::string_view whole_token)
{
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || value <= 0)
        throw ParseError("invalid partition token \"" + std::string(whole_token) + "\"");
    return value;
}

}  // namespace

DistinctPartition parse_distinct(std::string_view text)
{
    const auto tokens = split_commas(text);
    std::vector<int> parts;
    for (const auto token : tokens) parts.push_back(parse_positive_int(token, token));
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] >= parts[i - 1])
            throw ParseError("parts must strictly decrease at token \"" +
                             std::string(tokens[i]) + "\"");
    return DistinctPartition(std::move(parts));
}

BlockPartition parse_ordinary(std::string_view text)
{
    const auto tokens = split_commas(text);
    std::vector<Block> blocks;
    for (const auto token : tokens) {
        const std::size_t caret = token.find('^');
        int part = 0;
        int mult = 1;
        if (caret == std::string_view::npos) {
            part = parse_positive_int(token, token);
        } else {
            part = parse_positive_int(trim(token.substr(0, caret)), token);
            mult = parse_positive_int(trim(token.substr(caret + 1)), token);
        }
        if (!blocks.empty() && part == blocks.back().part)
            blocks.back().multiplicity += mult;  // adjacent equal parts merge
        else if (!blocks.empty() && part > blocks.back().part)
            throw ParseError("parts must decrease at token \"" + std::string(token) + "\"");
        else
            blocks.push_back({part, mult});
    }
    return BlockPartition(std::move(blocks));
}

std::string format_partition(const DistinctPartition& p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) out << ',';
        out << p.parts()[i];
    }
    return out.str();
}

std::string format_partition(const BlockPartition& p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        const auto& b = p.blocks()[i];
        if (i > 0) out << ',';
        out << b.part;
        if (b.multiplicity != 1) out << '^' << b.multiplicity;
    }
    return out.str();
}

}  // namespace parthodge
