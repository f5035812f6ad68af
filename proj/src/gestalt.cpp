#include "errlens/gestalt.hpp"

#include <algorithm>
#include <utility>

namespace errlens {

MatchBlock longest_match(std::string_view a, std::string_view b) {
    MatchBlock best;
    // run[j + 1] = length of the common suffix of a[..i] and b[..j]
    std::vector<std::size_t> run(b.size() + 1, 0);
    std::vector<std::size_t> next(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a[i] == b[j]) {
                const std::size_t k = run[j] + 1;
                next[j + 1] = k;
                if (k > best.size) {
                    best = MatchBlock{i + 1 - k, j + 1 - k, k};
                }
            } else {
                next[j + 1] = 0;
            }
        }
        std::swap(run, next);
    }
    return best;
}

std::vector<MatchBlock> matching_blocks(std::string_view a, std::string_view b) {
    std::vector<MatchBlock> blocks;
    // explicit stack of (a_lo, a_hi, b_lo, b_hi) ranges, left flank first
    struct Range {
        std::size_t a_lo, a_hi, b_lo, b_hi;
    };
    std::vector<Range> pending{{0, a.size(), 0, b.size()}};
    while (!pending.empty()) {
        const Range r = pending.back();
        pending.pop_back();
        if (r.a_lo >= r.a_hi || r.b_lo >= r.b_hi) {
            continue;
        }
        MatchBlock m = longest_match(a.substr(r.a_lo, r.a_hi - r.a_lo), b.substr(r.b_lo, r.b_hi - r.b_lo));
        if (m.size == 0) {
            continue;
        }
        m.a_pos += r.a_lo;
        m.b_pos += r.b_lo;
        blocks.push_back(m);
        pending.push_back({m.a_pos + m.size, r.a_hi, m.b_pos + m.size, r.b_hi});
        pending.push_back({r.a_lo, m.a_pos, r.b_lo, m.b_pos});
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const MatchBlock& x, const MatchBlock& y) { return x.a_pos < y.a_pos; });
    return blocks;
}

SimilarityRatio gestalt_ratio(std::string_view a, std::string_view b) {
    std::size_t matched = 0;
    for (const MatchBlock& block : matching_blocks(a, b)) {
        matched += block.size;
    }
    return SimilarityRatio{2 * matched, a.size() + b.size()};
}

}  // namespace errlens
