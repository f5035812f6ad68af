#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace errlens {

/// a[a_pos, a_pos + size) == b[b_pos, b_pos + size)
struct MatchBlock {
    std::size_t a_pos = 0;
    std::size_t b_pos = 0;
    std::size_t size = 0;
    friend bool operator==(const MatchBlock&, const MatchBlock&) = default;
};

/// Longest common substring of the two ranges. Among equally long matches the
/// one starting earliest in `a` wins, then earliest in `b`.
MatchBlock longest_match(std::string_view a, std::string_view b);

/// Ratcliff/Obershelp decomposition: take the longest match, then recurse on
/// the unmatched flanks to its left and right. Blocks come back in order.
std::vector<MatchBlock> matching_blocks(std::string_view a, std::string_view b);

/// 2*M / (|a| + |b|) kept as an exact fraction.
struct SimilarityRatio {
    std::size_t numerator = 0;    // 2 * matched characters
    std::size_t denominator = 0;  // |a| + |b|

    double value() const noexcept {
        return denominator == 0 ? 1.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
    }
};

SimilarityRatio gestalt_ratio(std::string_view a, std::string_view b);

}  // namespace errlens
