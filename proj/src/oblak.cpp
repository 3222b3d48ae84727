#include "nilorbit/oblak.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilorbit {

std::vector<OblakCandidate> candidates(const Partition& b) {
    if (b.empty())
        throw std::invalid_argument("candidates: empty partition");
    const RunEncoding enc = runs(b);
    std::vector<OblakCandidate> out;
    for (int i = 1; i <= enc.u; ++i) {
        const int base = 2 * enc.q(i - 1) + enc.value(i) * enc.multiplicity(i);
        out.push_back({i, 0, base});
        if (i < enc.u && enc.value(i) - enc.value(i + 1) == 1)
            out.push_back({i, 1, base + enc.value(i + 1) * enc.multiplicity(i + 1)});
    }
    return out;
}

int omega1(const Partition& b) {
    int best = 0;
    for (const OblakCandidate& c : candidates(b)) best = std::max(best, c.value);
    return best;
}

Partition hat_of(const Partition& b, const OblakCandidate& c) {
    const RunEncoding enc = runs(b);
    if (c.i < 1 || c.i > enc.u || (c.eps != 0 && c.eps != 1))
        throw std::invalid_argument("hat_of: candidate does not belong to the partition");
    if (c.eps == 1 && (c.i == enc.u || enc.value(c.i) - enc.value(c.i + 1) != 1))
        throw std::invalid_argument("hat_of: candidate does not belong to the partition");
    std::vector<int> parts;
    for (int i = 1; i <= enc.u; ++i) {
        if (i == c.i || (c.eps == 1 && i == c.i + 1)) continue;
        int v = enc.value(i);
        if (i < c.i) v -= 2;
        if (v > 0) parts.insert(parts.end(), static_cast<size_t>(enc.multiplicity(i)), v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace {
std::vector<OblakCandidate> maximizers(const Partition& b) {
    std::vector<OblakCandidate> cands = candidates(b);
    const int best = omega1(b);
    std::erase_if(cands, [best](const OblakCandidate& c) { return c.value != best; });
    return cands;
}
}  // namespace

OblakStep select_step(const Partition& b, TieBreakPolicy policy) {
    std::vector<OblakCandidate> maxes = maximizers(b);
    const bool prefer_merge = policy == TieBreakPolicy::SmallestIndexPreferMerge;
    std::sort(maxes.begin(), maxes.end(),
              [prefer_merge](const OblakCandidate& a, const OblakCandidate& c) {
                  if (a.i != c.i) return a.i < c.i;
                  return prefer_merge ? a.eps > c.eps : a.eps < c.eps;
              });
    const OblakCandidate& chosen = maxes.front();
    return {chosen.value, chosen.i, chosen.eps, hat_of(b, chosen)};
}

Partition q_of(const Partition& b, TieBreakPolicy policy) {
    std::vector<int> parts;
    Partition cur = b;
    while (!cur.empty()) {
        OblakStep step = select_step(cur, policy);
        parts.push_back(step.omega1);
        cur = std::move(step.b_hat);
    }
    return Partition(std::move(parts));
}

namespace {
const std::set<Partition>& q_branches(const Partition& b,
                                      std::map<Partition, std::set<Partition>>& memo) {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    std::set<Partition> results;
    if (b.empty()) {
        results.insert(Partition{});
    } else {
        for (const OblakCandidate& c : maximizers(b)) {
            for (const Partition& tail : q_branches(hat_of(b, c), memo)) {
                std::vector<int> parts{c.value};
                parts.insert(parts.end(), tail.begin(), tail.end());
                results.insert(Partition(std::move(parts)));
            }
        }
    }
    return memo.emplace(b, std::move(results)).first->second;
}
}  // namespace

std::set<Partition> q_all_choices(const Partition& b) {
    std::map<Partition, std::set<Partition>> memo;
    return q_branches(b, memo);
}

std::vector<QTraceLevel> q_trace(const Partition& b, TieBreakPolicy policy) {
    std::vector<QTraceLevel> levels;
    Partition cur = b;
    while (!cur.empty()) {
        OblakStep step = select_step(cur, policy);
        levels.push_back({cur, candidates(cur), step.i_tilde, step.eps_tilde, step.omega1,
                          step.b_hat});
        cur = std::move(step.b_hat);
    }
    return levels;
}

}  // namespace nilorbit
