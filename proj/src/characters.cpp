#include "fockcr/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fockcr {

namespace {

void require_odd_e(int e) {
    if (e < 3 || e % 2 == 0)
        throw std::invalid_argument("characters require e odd and at least 3");
}

}  // namespace

std::vector<Partition> horizontal_strips(const Partition& p, int r) {
    if (r < 0) throw std::invalid_argument("strip size must be nonnegative");
    std::vector<Partition> out;
    int len = p.length();
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i > len + 1) {
            if (rem == 0) out.push_back(make_partition(cur));
            return;
        }
        int base = p.part(i);
        int hi = base + rem;
        if (i >= 2) hi = std::min(hi, p.part(i - 1));
        for (int x = base; x <= hi; ++x) {
            cur.push_back(x);
            rec(i + 1, rem - (x - base));
            cur.pop_back();
        }
    };
    rec(1, r);
    return out;
}

std::vector<Partition> vertical_strips(const Partition& p, int r) {
    std::vector<Partition> out;
    for (const Partition& q : horizontal_strips(transpose(p), r)) out.push_back(transpose(q));
    return out;
}

namespace {

std::vector<Bipartition> pieri(const Bipartition& b, int r,
                               std::vector<Partition> (*strips)(const Partition&, int)) {
    std::vector<Bipartition> out;
    for (int r1 = 0; r1 <= r; ++r1) {
        std::vector<Partition> first = strips(b.first, r1);
        std::vector<Partition> second = strips(b.second, r - r1);
        for (const Partition& u : first)
            for (const Partition& v : second) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

std::vector<Bipartition> pieri_vertical(const Bipartition& b, int r) {
    return pieri(b, r, &vertical_strips);
}

std::vector<Bipartition> pieri_horizontal(const Bipartition& b, int r) {
    return pieri(b, r, &horizontal_strips);
}

CharacterCombo induce_column(const CharacterCombo& c, int r, int e) {
    require_odd_e(e);
    if (r < 0) throw std::invalid_argument("column length must be nonnegative");
    CharacterCombo out;
    out.n = c.n + 2 * r;
    out.t = c.t;
    for (const auto& [lambda, coeff] : c.coeffs) {
        TauResult tr = tau(lambda, e);
        if (tr.t != c.t) throw std::logic_error("combo member has the wrong 2-core");
        for (const Bipartition& bp : pieri_vertical({tr.cb.c1, tr.cb.c2}, r)) {
            ChargedBipartition nb{bp.first, bp.second, tr.cb.s1, tr.cb.s2};
            out.coeffs[tau_inverse(nb, e, tr.t)] += coeff;
        }
    }
    return out;
}

CharacterCombo block_cut(const CharacterCombo& c, int e, const Partition& core) {
    CharacterCombo out;
    out.n = c.n;
    out.t = c.t;
    for (const auto& [lambda, coeff] : c.coeffs) {
        if (e_core(lambda, e) == core) out.coeffs[lambda] = coeff;
    }
    return out;
}

MaxResult dominance_max(const CharacterCombo& c) {
    if (c.coeffs.empty()) throw std::invalid_argument("empty character combination");
    for (const auto& [cand, coeff] : c.coeffs) {
        bool greatest = true;
        for (const auto& [other, oc] : c.coeffs) {
            if (!dominance_leq(other, cand)) {
                greatest = false;
                break;
            }
        }
        if (greatest) return {cand, true};
    }
    return {lex_max(c), false};
}

Partition lex_max(const CharacterCombo& c) {
    if (c.coeffs.empty()) throw std::invalid_argument("empty character combination");
    const Partition* best = nullptr;
    for (const auto& [cand, coeff] : c.coeffs) {
        if (!best || lex_less(*best, cand)) best = &cand;
    }
    return *best;
}

Partition b_tilde(const Partition& mu, int e, int k) {
    require_odd_e(e);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k == 0) return mu;
    int add = 2 * e * k;
    Partition core = e_core(mu, e);
    std::vector<Partition> candidates;
    int len = mu.length();
    int row_cap = len + add + 2;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int i, int prev, int rem) {
        if (rem == 0) {
            std::vector<int> parts = cur;
            for (int j = i; j <= len; ++j) parts.push_back(mu.part(j));
            Partition cand = make_partition(std::move(parts));
            if (e_core(cand, e) == core) candidates.push_back(std::move(cand));
            return;
        }
        if (i > row_cap) return;
        int base = mu.part(i);
        int hi = std::min(base + 2, prev);
        for (int x = base; x <= hi; ++x) {
            if (x == 0) continue;  // a zero row ends the diagram with rem > 0
            cur.push_back(x);
            rec(i + 1, x, rem - (x - base));
            cur.pop_back();
        }
    };
    rec(1, mu.part(1) + 2, add);
    if (candidates.empty()) throw std::invalid_argument("no e-core-preserving addition exists");
    for (const Partition& cand : candidates) {
        bool greatest = true;
        for (const Partition& other : candidates) {
            if (!dominance_leq(other, cand)) {
                greatest = false;
                break;
            }
        }
        if (greatest) return cand;
    }
    throw std::invalid_argument("no dominance-greatest addition exists");
}

CharacterCombo steinberg_principal_part(int e, int k, int iota) {
    require_odd_e(e);
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (iota != 0 && iota != 1) throw std::invalid_argument("iota must be 0 or 1");
    CharacterCombo start;
    start.n = iota;
    start.t = iota;
    start.coeffs[iota == 0 ? Partition{} : make_partition({1})] = 1;
    CharacterCombo induced = induce_column(start, e * k, e);
    Partition core = iota == 0 ? Partition{} : make_partition({1});
    return block_cut(induced, e, core);
}

}  // namespace fockcr
