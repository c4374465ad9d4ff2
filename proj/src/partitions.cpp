#include "fockcr/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fockcr {

Partition make_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " is not positive: " + std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts increase at position " +
                                        std::to_string(i + 1) + ": " + std::to_string(parts[i - 1]) +
                                        " < " + std::to_string(parts[i]));
    }
    Partition p;
    p.parts_ = std::move(parts);
    p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
    return p;
}

Partition transpose(const Partition& p) {
    std::vector<int> out;
    if (!p.empty()) {
        out.resize(static_cast<size_t>(p.part(1)), 0);
        for (int row = 1; row <= p.length(); ++row)
            for (int col = 1; col <= p.part(row); ++col) out[static_cast<size_t>(col - 1)]++;
    }
    return make_partition(std::move(out));
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return make_partition(std::move(out));
}

Partition delta(int t) {
    if (t < 0) throw std::invalid_argument("staircase index must be nonnegative");
    std::vector<int> out;
    for (int v = t; v >= 1; --v) out.push_back(v);
    return make_partition(std::move(out));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance order requires equal sizes: " +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int k = 1; k <= len; ++k) {
        sa += a.part(k);
        sb += b.part(k);
        if (sa > sb) return false;
    }
    return true;
}

bool lex_less(const Partition& a, const Partition& b) { return a.parts() < b.parts(); }

BetaSet beta_set(const Partition& p, int charge) {
    BetaSet b;
    b.charge = charge;
    b.beads = beta_window(p, charge, p.length() + 1);
    return canonical_beta(std::move(b));
}

std::vector<int> beta_window(const Partition& p, int charge, int length) {
    if (length < 1) throw std::invalid_argument("beta window length must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(length));
    for (int k = 1; k <= length; ++k) out.push_back(p.part(k) + charge - k + 1);
    return out;
}

BetaSet canonical_beta(BetaSet b) {
    while (b.beads.size() >= 2 && b.beads[b.beads.size() - 2] == b.beads.back() + 1)
        b.beads.pop_back();
    return b;
}

BetaSet make_beta_set(int charge, std::vector<int> window) {
    if (window.empty()) throw std::invalid_argument("beta window must not be empty");
    for (size_t i = 1; i < window.size(); ++i)
        if (window[i] >= window[i - 1])
            throw std::invalid_argument("beta window is not strictly decreasing at position " +
                                        std::to_string(i + 1));
    int expected = charge - static_cast<int>(window.size()) + 1;
    if (window.back() != expected)
        throw std::invalid_argument(
            "beta window inconsistent with charge: last entry " + std::to_string(window.back()) +
            ", expected " + std::to_string(expected) + " for charge " + std::to_string(charge) +
            " and window length " + std::to_string(window.size()));
    BetaSet b;
    b.charge = charge;
    b.beads = std::move(window);
    return canonical_beta(std::move(b));
}

bool beta_contains(const BetaSet& b, int col) {
    if (b.beads.empty()) throw std::invalid_argument("beta set has an empty window");
    if (col < b.beads.back()) return true;
    return std::binary_search(b.beads.rbegin(), b.beads.rend(), col);
}

Partition partition_from_beta(const BetaSet& b) {
    if (b.beads.empty()) throw std::invalid_argument("beta set has an empty window");
    int L = static_cast<int>(b.beads.size());
    if (b.beads.back() != b.charge - L + 1)
        throw std::invalid_argument("beta set window inconsistent with charge");
    std::vector<int> parts;
    for (int k = 1; k <= L; ++k) {
        int part = b.beads[static_cast<size_t>(k - 1)] - b.charge + k - 1;
        if (part < 0) throw std::invalid_argument("beta set does not describe a partition");
        parts.push_back(part);
    }
    return make_partition(std::move(parts));
}

ShiftedReading partition_of_bead_window(std::vector<int> window) {
    if (window.empty()) throw std::invalid_argument("bead window must not be empty");
    int charge = window.back() + static_cast<int>(window.size()) - 1;
    BetaSet b = make_beta_set(charge, std::move(window));
    return ShiftedReading{partition_from_beta(b), charge};
}

TwoQuotient two_core_quotient(const Partition& p) {
    std::vector<int> window = beta_window(p, 0, p.length() + 2);
    std::vector<int> evens, odds;
    for (int z : window) {
        if (((z % 2) + 2) % 2 == 0)
            evens.push_back(z / 2);
        else
            odds.push_back((z + 1) / 2);
    }
    // The two lowest window entries are consecutive integers, so each parity
    // class reaches the top of its own full tail and can be read directly.
    TwoQuotient q;
    if (evens.empty() || odds.empty())
        throw std::logic_error("parity split lost a runner");
    q.q2 = partition_of_bead_window(std::move(evens)).partition;
    q.q1 = partition_of_bead_window(std::move(odds)).partition;
    int rest = p.size() - 2 * (q.q1.size() + q.q2.size());
    int t = static_cast<int>((std::sqrt(8.0 * rest + 1.0) - 1.0) / 2.0 + 0.5);
    if (rest < 0 || t * (t + 1) / 2 != rest)
        throw std::logic_error("2-quotient sizes inconsistent with a staircase 2-core");
    q.t = t;
    return q;
}

Partition e_core(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e-core requires e >= 2");
    int n = p.length() + 1;
    int N = ((n + e - 1) / e) * e;  // multiple of e, >= length+1
    std::vector<int> hooks;         // first-column hook lengths, all >= 0
    for (int k = 1; k <= N; ++k) hooks.push_back(p.part(k) + N - k);
    std::vector<int> runner_count(static_cast<size_t>(e), 0);
    for (int h : hooks) runner_count[static_cast<size_t>(h % e)]++;
    std::vector<int> compacted;
    for (int r = 0; r < e; ++r)
        for (int i = 0; i < runner_count[static_cast<size_t>(r)]; ++i) compacted.push_back(r + i * e);
    std::sort(compacted.begin(), compacted.end(), std::greater<int>());
    std::vector<int> parts;
    for (int k = 1; k <= N; ++k) parts.push_back(compacted[static_cast<size_t>(k - 1)] - (N - k));
    return make_partition(std::move(parts));
}

std::map<int, long long> content_residues(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("content residues require e >= 2");
    std::map<int, long long> out;
    for (int row = 1; row <= p.length(); ++row)
        for (int col = 1; col <= p.part(row); ++col) out[(((col - row) % e) + e) % e]++;
    return out;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(make_partition(acc));
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        partitions_rec(n - first, first, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

}  // namespace fockcr
