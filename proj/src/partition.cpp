#include "nilorbit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nilorbit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw std::invalid_argument("partition part must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    size_t i = 0;
    const size_t len = text.size();
    auto skip_ws = [&] { while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& what, size_t pos) {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    };
    auto read_int = [&]() -> long {
        skip_ws();
        const size_t start = i;
        long v = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000L) fail("value too large", start);
            ++i;
        }
        if (i == start) fail("expected integer", i);
        return v;
    };

    skip_ws();
    if (i == len) fail("empty partition text", 0);
    while (true) {
        const size_t value_pos = i;
        const long value = read_int();
        if (value < 1) fail("non-positive value", value_pos);
        long count = 1;
        skip_ws();
        if (i < len && text[i] == '^') {
            ++i;
            const size_t exp_pos = i;
            count = read_int();
            if (count < 1) fail("non-positive value", exp_pos);
            if (count > 100000) fail("value too large", exp_pos);
        }
        if (!parts.empty() && parts.back() < value)
            fail("increasing sequence", value_pos);
        parts.insert(parts.end(), static_cast<size_t>(count), static_cast<int>(value));
        skip_ws();
        if (i == len) break;
        if (text[i] != ',') fail("expected ','", i);
        ++i;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& b, bool exponent_form) {
    std::string out;
    const auto& parts = b.parts();
    size_t k = 0;
    while (k < parts.size()) {
        size_t run_end = k;
        while (run_end < parts.size() && parts[run_end] == parts[k]) ++run_end;
        if (!out.empty()) out += ',';
        if (exponent_form && run_end - k >= 2)
            out += std::to_string(parts[k]) + "^" + std::to_string(run_end - k);
        else
            for (size_t r = k; r < run_end; ++r) {
                if (r > k) out += ',';
                out += std::to_string(parts[k]);
            }
        k = run_end;
    }
    return out;
}

RunEncoding runs(const Partition& b) {
    RunEncoding enc;
    const auto& parts = b.parts();
    size_t k = 0;
    while (k < parts.size()) {
        size_t run_end = k;
        while (run_end < parts.size() && parts[run_end] == parts[k]) ++run_end;
        enc.values.push_back(parts[k]);
        enc.cumulative.push_back(static_cast<int>(run_end));
        k = run_end;
    }
    enc.u = static_cast<int>(enc.values.size());
    return enc;
}

Partition from_runs(const RunEncoding& enc) {
    std::vector<int> parts;
    for (int i = 1; i <= enc.u; ++i)
        parts.insert(parts.end(), static_cast<size_t>(enc.multiplicity(i)), enc.value(i));
    return Partition(std::move(parts));
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("dominance_compare requires partitions of the same n");
    const int t = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    bool a_le_b = true, b_le_a = true;
    for (int l = 0; l < t; ++l) {
        sa += l < a.size() ? a[l] : 0;
        sb += l < b.size() ? b[l] : 0;
        if (sa > sb) a_le_b = false;
        if (sb > sa) b_le_a = false;
    }
    if (a_le_b && b_le_a) return Dominance::Equal;
    if (a_le_b) return Dominance::Less;
    if (b_le_a) return Dominance::Greater;
    return Dominance::Incomparable;
}

bool dominated_by(const Partition& a, const Partition& b) {
    const Dominance d = dominance_compare(a, b);
    return d == Dominance::Less || d == Dominance::Equal;
}

Partition conjugate(const Partition& b) {
    std::vector<int> parts;
    if (!b.empty()) {
        parts.resize(static_cast<size_t>(b[0]));
        for (int m = 0; m < b[0]; ++m) {
            int count = 0;
            for (int part : b)
                if (part > m) ++count;
            parts[static_cast<size_t>(m)] = count;
        }
    }
    return Partition(std::move(parts));
}

bool is_almost_rectangular(const Partition& b) {
    if (b.empty())
        throw std::invalid_argument("is_almost_rectangular: empty partition");
    return b[0] - b[b.size() - 1] <= 1;
}

RIndexResult r_index(const Partition& b) {
    if (b.empty())
        throw std::invalid_argument("r_index: empty partition");
    RIndexResult res;
    int begin = 0;
    const int t = b.size();
    while (begin < t) {
        int end = begin + 1;
        while (end < t && b[begin] - b[end] <= 1) ++end;
        res.decomposition.segments.emplace_back(begin, end);
        begin = end;
    }
    res.r = static_cast<int>(res.decomposition.segments.size());
    return res;
}

int s_index(const Partition& b) {
    if (b.empty())
        throw std::invalid_argument("s_index: empty partition");
    int best = 0;
    for (int v : runs(b).values) {
        int count = 0;
        for (int part : b)
            if (part == v || part == v + 1) ++count;
        best = std::max(best, count);
    }
    return best;
}

Partition tilde_of(const Partition& b, const ArDecomposition& d) {
    int expected_begin = 0;
    std::vector<int> sums;
    for (auto [begin, end] : d.segments) {
        if (begin != expected_begin || end <= begin || end > b.size())
            throw std::invalid_argument("tilde_of: segments do not tile the partition");
        if (b[begin] - b[end - 1] > 1)
            throw std::invalid_argument("tilde_of: segment is not almost rectangular");
        int sum = 0;
        for (int k = begin; k < end; ++k) sum += b[k];
        sums.push_back(sum);
        expected_begin = end;
    }
    if (expected_begin != b.size())
        throw std::invalid_argument("tilde_of: segments do not cover all parts");
    std::sort(sums.begin(), sums.end(), std::greater<>());
    return Partition(std::move(sums));
}

Partition jordan_power_type(int n, int s) {
    if (n < 1 || s < 1)
        throw std::invalid_argument("jordan_power_type requires n >= 1, s >= 1");
    const int q = n / s, r = n % s;
    std::vector<int> parts;
    if (q + 1 > 0) parts.insert(parts.end(), static_cast<size_t>(r), q + 1);
    if (q > 0) parts.insert(parts.end(), static_cast<size_t>(s - r), q);
    return Partition(std::move(parts));
}

std::vector<int> rank_profile_of_partition(const Partition& b) {
    const int mu1 = b.empty() ? 0 : b[0];
    std::vector<int> ranks;
    for (int m = 0; m <= mu1; ++m) {
        int r = 0;
        for (int part : b) r += std::max(part - m, 0);
        ranks.push_back(r);
    }
    if (ranks.empty()) ranks.push_back(0);
    return ranks;
}

Partition type_from_rank_profile(const std::vector<int>& ranks) {
    if (ranks.empty() || ranks.back() != 0)
        throw std::invalid_argument("rank profile must end at 0");
    std::vector<int> diffs;
    for (size_t m = 1; m < ranks.size(); ++m) {
        const int d = ranks[m - 1] - ranks[m];
        if (d < 0)
            throw std::invalid_argument("rank profile must be non-increasing");
        if (d == 0 && ranks[m] != 0)
            throw std::invalid_argument("rank profile stalls before reaching 0");
        if (!diffs.empty() && d > diffs.back())
            throw std::invalid_argument("rank profile differences must be weakly decreasing");
        if (d > 0) diffs.push_back(d);
    }
    return conjugate(Partition(std::move(diffs)));
}

namespace {
void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        emit_partitions(remaining - part, part, stack, out);
        stack.pop_back();
    }
}
}  // namespace

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> stack;
    if (n >= 0) emit_partitions(n, std::max(n, 1), stack, out);
    return out;
}

}  // namespace nilorbit
