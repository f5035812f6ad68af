#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "errlens/answer.hpp"

namespace errlens::testing {

/// Straight from the rule: collect every answer, pick the earliest accepted
/// one, else the best positive score by (score desc, rank, id).
inline std::optional<std::pair<std::int64_t, SelectionReason>> selection_oracle(
    const std::vector<ThreadSummary>& threads, const AnswerIndex& answers) {
    struct Flat {
        int rank;
        std::size_t position;
        AnswerRecord record;
    };
    std::vector<Flat> all;
    for (const ThreadSummary& t : threads) {
        const auto it = answers.find(t.question_id);
        if (it == answers.end()) continue;
        for (std::size_t p = 0; p < it->second.size(); ++p) all.push_back({t.relevance_rank, p, it->second[p]});
    }
    std::optional<Flat> accepted;
    for (const Flat& f : all) {
        if (f.record.accepted && (!accepted || std::tie(f.rank, f.position) < std::tie(accepted->rank, accepted->position))) {
            accepted = f;
        }
    }
    if (accepted) return std::pair(accepted->record.answer_id, SelectionReason::Accepted);
    std::optional<Flat> best;
    for (const Flat& f : all) {
        if (f.record.score <= 0) continue;
        const auto key = [](const Flat& x) { return std::tuple(-x.record.score, x.rank, x.record.answer_id); };
        if (!best || key(f) < key(*best)) best = f;
    }
    if (best) return std::pair(best->record.answer_id, SelectionReason::TopScore);
    return std::nullopt;
}

struct SweepReport {
    long cases = 0;
    long divergences = 0;
    long gated = 0;  // cases where every answer scored <= 0 and none was accepted
};

/// Every shape of up to 4 threads x 3 answers. Shapes with at most 4
/// answers get every (accepted, score) assignment; larger shapes get every
/// accepted pattern with several seeded score draws. Answer ids are shuffled
/// so id order disagrees with listing order.
inline SweepReport run_selection_sweep(unsigned seed = 20260101) {
    constexpr int kScores[] = {-1, 0, 3};
    std::mt19937 rng(seed);
    SweepReport report;

    const auto check = [&](const std::vector<int>& shape, const std::vector<int>& accepted, const std::vector<int>& score,
                           const std::vector<std::int64_t>& ids) {
        std::vector<ThreadSummary> threads;
        AnswerIndex answers;
        std::size_t k = 0;
        for (std::size_t t = 0; t < shape.size(); ++t) {
            ThreadSummary thread;
            thread.question_id = 1000 + static_cast<std::int64_t>(t);
            thread.relevance_rank = static_cast<int>(t) + 1;
            auto& list = answers[thread.question_id];
            for (int a = 0; a < shape[t]; ++a, ++k) {
                list.push_back(AnswerRecord{ids[k], thread.question_id, score[k], accepted[k] != 0, "<p>x</p>"});
                thread.answer_ids.push_back(ids[k]);
            }
            threads.push_back(thread);
        }
        const auto got = select_answer(threads, answers);
        const auto want = selection_oracle(threads, answers);
        ++report.cases;
        if (!want) ++report.gated;
        const bool same = got.has_value() == want.has_value() &&
                          (!got || (got->record.answer_id == want->first && got->selection_reason == want->second &&
                                    (got->selection_reason != SelectionReason::TopScore || got->record.score > 0)));
        if (!same) ++report.divergences;
    };

    for (int threads = 0; threads <= 4; ++threads) {
        int shapes = 1;
        for (int t = 0; t < threads; ++t) shapes *= 4;
        for (int code = 0; code < shapes; ++code) {
            std::vector<int> shape;
            for (int t = 0, c = code; t < threads; ++t, c /= 4) shape.push_back(c % 4);
            const int n = std::accumulate(shape.begin(), shape.end(), 0);
            std::vector<std::int64_t> ids(static_cast<std::size_t>(n));
            std::iota(ids.begin(), ids.end(), 1);
            std::shuffle(ids.begin(), ids.end(), rng);

            std::vector<int> accepted(static_cast<std::size_t>(n)), score(static_cast<std::size_t>(n));
            if (n <= 4) {
                int total = 1;
                for (int i = 0; i < n; ++i) total *= 6;
                for (int c = 0; c < total; ++c) {
                    for (int i = 0, x = c; i < n; ++i, x /= 6) {
                        accepted[i] = (x % 6) / 3;
                        score[i] = kScores[(x % 6) % 3];
                    }
                    check(shape, accepted, score, ids);
                }
            } else {
                std::uniform_int_distribution<int> pick(0, 2);
                for (int mask = 0; mask < (1 << n); ++mask) {
                    for (int i = 0; i < n; ++i) accepted[i] = (mask >> i) & 1;
                    for (int draw = 0; draw < 3; ++draw) {
                        for (int i = 0; i < n; ++i) score[i] = kScores[pick(rng)];
                        check(shape, accepted, score, ids);
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace errlens::testing
