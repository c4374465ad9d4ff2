#include "fockcr/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fockcr {

std::pair<int, int> charge_for_core(int t, int e) {
    if (e < 3 || e % 2 == 0)
        throw std::invalid_argument("charge requires odd e >= 3, got e = " + std::to_string(e));
    if (t < 0) throw std::invalid_argument("2-core index must be nonnegative");
    if (t % 2 == 0) return {-(t + 1 + e) / 2, t / 2};
    return {-(t + 1) / 2, (t + e) / 2};
}

TauResult tau(const Partition& p, int e) {
    if (e < 3 || e % 2 == 0)
        throw std::invalid_argument("tau requires odd e >= 3, got e = " + std::to_string(e));
    TwoQuotient q = two_core_quotient(p);
    auto [s1, s2] = charge_for_core(q.t, e);
    TauResult r;
    r.t = q.t;
    if (q.t % 2 == 0)
        r.cb = ChargedBipartition{q.q1, q.q2, s1, s2};
    else
        r.cb = ChargedBipartition{q.q2, q.q1, s1, s2};
    if (2 * r.cb.size() + q.t * (q.t + 1) / 2 != p.size())
        throw std::logic_error("tau size bookkeeping failed");
    return r;
}

Partition tau_inverse(const ChargedBipartition& cb, int e, int t) {
    auto [s1, s2] = charge_for_core(t, e);
    if (cb.s1 != s1 || cb.s2 != s2)
        throw std::invalid_argument("charge (" + std::to_string(cb.s1) + "," + std::to_string(cb.s2) +
                                    ") does not match the charge for t = " + std::to_string(t) +
                                    ", e = " + std::to_string(e));
    // Merge the two runners into a single bead line: component 1 contributes
    // the even positions 2j, component 2 the odd positions 2j - e.
    BetaSet b1 = beta_set(cb.c1, cb.s1);
    BetaSet b2 = beta_set(cb.c2, cb.s2);
    int floor1 = std::min(b1.beads.back(), b2.beads.back()) - e - 2;
    int floor2 = floor1 + (e + 1) / 2;  // then 2*floor2 - e == 2*floor1 + 1
    std::vector<int> merged;
    for (int x = b1.beads.front(); x >= floor1; --x)
        if (beta_contains(b1, x)) merged.push_back(2 * x);
    for (int y = b2.beads.front(); y >= floor2; --y)
        if (beta_contains(b2, y)) merged.push_back(2 * y - e);
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    Partition out = partition_of_bead_window(std::move(merged)).partition;
    if (out.size() != 2 * cb.size() + t * (t + 1) / 2)
        throw std::logic_error("merged abacus size bookkeeping failed");
    return out;
}

Abacus abacus_of(const ChargedBipartition& cb) {
    return Abacus{beta_set(cb.c1, cb.s1), beta_set(cb.c2, cb.s2)};
}

ChargedBipartition bipartition_of(const Abacus& a) {
    return ChargedBipartition{partition_from_beta(a.row1), partition_from_beta(a.row2),
                              a.row1.charge, a.row2.charge};
}

bool abacus_contains(const Abacus& a, int row, int col) {
    if (row == 1) return beta_contains(a.row1, col);
    if (row == 2) return beta_contains(a.row2, col);
    throw std::invalid_argument("abacus row must be 1 or 2");
}

std::vector<BoxRef> boxes(const ChargedBipartition& cb) {
    std::vector<BoxRef> out;
    for (int comp = 1; comp <= 2; ++comp) {
        const Partition& p = comp == 1 ? cb.c1 : cb.c2;
        for (int row = 1; row <= p.length(); ++row)
            for (int col = 1; col <= p.part(row); ++col) out.push_back(BoxRef{row, col, comp});
    }
    return out;
}

int content(const BoxRef& b, const ChargedBipartition& cb) {
    int s = b.comp == 1 ? cb.s1 : cb.s2;
    return b.col - b.row + s;
}

int residue(const BoxRef& b, const ChargedBipartition& cb, int e) {
    if (e < 2) throw std::invalid_argument("residue requires e >= 2");
    return ((content(b, cb) % e) + e) % e;
}

std::map<int, long long> residue_multiset(const ChargedBipartition& cb, int e) {
    std::map<int, long long> out;
    for (const BoxRef& b : boxes(cb)) out[residue(b, cb, e)]++;
    return out;
}

std::vector<ChargedBipartition> bipartitions_of(int size, int s1, int s2) {
    std::vector<ChargedBipartition> out;
    if (size < 0) return out;
    for (int a = 0; a <= size; ++a) {
        auto firsts = partitions_of(a);
        auto seconds = partitions_of(size - a);
        for (const auto& c1 : firsts)
            for (const auto& c2 : seconds) out.push_back(ChargedBipartition{c1, c2, s1, s2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fockcr
