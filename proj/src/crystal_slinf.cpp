#include "fockcr/crystal_slinf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fockcr/crystal_sle.hpp"

namespace fockcr {

namespace {

/// Mutable two-row abacus. Columns below `floor_` are beads in both rows;
/// the sets list every bead at or above `floor_`.
struct Rows {
    std::set<int> beads[2];
    int floor_ = 0;

    static Rows of(const Abacus& a) {
        Rows w;
        w.floor_ = std::min(a.row1.beads.back(), a.row2.beads.back());
        const BetaSet* rows[2] = {&a.row1, &a.row2};
        for (int j = 0; j < 2; ++j) {
            for (int col : rows[j]->beads) w.beads[j].insert(col);
            for (int col = rows[j]->beads.back() - 1; col >= w.floor_; --col)
                w.beads[j].insert(col);
        }
        return w;
    }

    void extend_to(int col) {
        while (floor_ > col) {
            --floor_;
            beads[0].insert(floor_);
            beads[1].insert(floor_);
        }
    }

    bool contains(int row, int col) const {
        if (col < floor_) return true;
        return beads[row - 1].count(col) > 0;
    }

    void erase(int row, int col) {
        extend_to(col - 1);
        beads[row - 1].erase(col);
    }

    void insert(int row, int col) {
        extend_to(col);
        beads[row - 1].insert(col);
    }

    int max_col() {
        while (beads[0].empty() && beads[1].empty()) extend_to(floor_ - 1);
        int m = floor_ - 1;
        for (int j = 0; j < 2; ++j)
            if (!beads[j].empty()) m = std::max(m, *beads[j].rbegin());
        return m;
    }

    /// True when each row is exactly a run of beads ending at its own frontier
    /// with nothing above, i.e. the abacus of the empty bipartition.
    bool full_left() const {
        for (int j = 0; j < 2; ++j) {
            int expect = floor_;
            for (int col : beads[j]) {
                if (col != expect) return false;
                ++expect;
            }
        }
        return true;
    }
};

/// Extracts the next greedy period from `w`, removing its beads.
std::optional<EPeriod> take_period(Rows& w, int e) {
    int x = w.max_col();
    w.extend_to(x - e);
    EPeriod p;
    bool committed = false;
    for (int i = 0; i < e; ++i) {
        int col = x - i;
        int row;
        if (committed) {
            if (!w.contains(1, col)) return std::nullopt;
            row = 1;
        } else if (w.contains(1, col)) {
            row = 1;
            committed = true;
        } else if (w.contains(2, col)) {
            row = 2;
        } else {
            return std::nullopt;
        }
        p.beads.emplace_back(col, row);
    }
    for (auto [col, row] : p.beads) w.erase(row, col);
    return p;
}

BetaSet beta_of_set(const std::set<int>& cols, int charge, int floor) {
    std::vector<int> window(cols.rbegin(), cols.rend());
    if (window.empty() || window.back() != floor)
        throw std::logic_error("abacus row lost its full tail");
    (void)charge;
    return canonical_beta(make_beta_set(charge, window));
}

/// Moves the listed beads of `a` by `delta` columns. The caller guarantees
/// the targets are free.
Abacus move_beads(const Abacus& a, const std::vector<std::pair<int, int>>& moved, int delta) {
    Rows w = Rows::of(a);
    int lo = w.floor_;
    for (auto [col, row] : moved) lo = std::min(lo, std::min(col, col + delta) - 2);
    w.extend_to(lo);
    for (auto [col, row] : moved) {
        if (!w.contains(row, col)) throw std::logic_error("moving a bead that is not there");
        w.erase(row, col);
    }
    for (auto [col, row] : moved) {
        if (w.contains(row, col + delta)) throw std::logic_error("bead collision while moving");
        w.insert(row, col + delta);
    }
    return Abacus{beta_of_set(w.beads[0], a.row1.charge, w.floor_),
                  beta_of_set(w.beads[1], a.row2.charge, w.floor_)};
}

EPeriod shifted_period(const EPeriod& p, int delta) {
    EPeriod s;
    s.beads.reserve(p.beads.size());
    for (auto [col, row] : p.beads) s.beads.emplace_back(col + delta, row);
    return s;
}

}  // namespace

std::optional<std::vector<EPeriod>> try_first_periods(const Abacus& a, int e, int count) {
    Rows w = Rows::of(a);
    std::vector<EPeriod> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        auto p = take_period(w, e);
        if (!p) return std::nullopt;
        out.push_back(std::move(*p));
    }
    return out;
}

std::optional<EPeriod> first_period(const Abacus& a, int e) {
    auto ps = try_first_periods(a, e, 1);
    if (!ps) return std::nullopt;
    return (*ps)[0];
}

PeriodDecomposition period_decomposition(const Abacus& a, int e) {
    Rows w = Rows::of(a);
    PeriodDecomposition d;
    int guard = static_cast<int>(a.row1.beads.size() + a.row2.beads.size()) + 2 * e + 8;
    while (true) {
        if (w.full_left()) {
            d.totally_periodic = true;
            return d;
        }
        auto p = take_period(w, e);
        if (!p) return d;
        d.periods.push_back(std::move(*p));
        if (static_cast<int>(d.periods.size()) > guard)
            throw std::logic_error("period decomposition failed to terminate");
    }
}

bool is_totally_periodic(const Abacus& a, int e) {
    return period_decomposition(a, e).totally_periodic;
}

std::optional<Abacus> shift_period_right(const Abacus& a, int e, int k) {
    if (k < 1) throw std::invalid_argument("period index must be positive");
    auto ps = try_first_periods(a, e, k);
    if (!ps) return std::nullopt;
    const EPeriod& p = (*ps)[k - 1];
    for (auto [col, row] : p.beads) {
        if (!p.has(row, col + 1) && abacus_contains(a, row, col + 1)) return std::nullopt;
    }
    Abacus res = move_beads(a, p.beads, +1);
    auto rps = try_first_periods(res, e, k);
    if (!rps) return std::nullopt;
    if ((*rps)[k - 1] != shifted_period(p, +1)) return std::nullopt;
    return res;
}

std::vector<std::pair<int, ChargedBipartition>> slinf_edges_out(const ChargedBipartition& cb,
                                                                int e) {
    Abacus a = abacus_of(cb);
    PeriodDecomposition dec = period_decomposition(a, e);
    std::vector<std::pair<int, ChargedBipartition>> out;
    if (!dec.totally_periodic) return out;
    int kmax = static_cast<int>(dec.periods.size()) + 2;
    for (int k = 1; k <= kmax; ++k) {
        if (auto r = shift_period_right(a, e, k)) out.emplace_back(k, bipartition_of(*r));
    }
    return out;
}

namespace {

Abacus a_tilde_column(const Abacus& a, int e, int c, int column_index) {
    auto fail = [&](int period, const char* what) {
        std::ostringstream os;
        os << "column " << column_index + 1 << " (height " << c << "): period " << period << " "
           << what;
        throw std::invalid_argument(os.str());
    };
    auto ps = try_first_periods(a, e, c);
    if (!ps) fail(c, "is absent");
    std::vector<std::pair<int, int>> moved;
    for (const EPeriod& p : *ps)
        moved.insert(moved.end(), p.beads.begin(), p.beads.end());
    auto in_moved = [&](int row, int col) {
        for (auto [c2, r2] : moved)
            if (c2 == col && r2 == row) return true;
        return false;
    };
    for (int k = 0; k < c; ++k) {
        for (auto [col, row] : (*ps)[k].beads) {
            if (!in_moved(row, col + 1) && abacus_contains(a, row, col + 1))
                fail(k + 1, "collides when sliding right");
        }
    }
    Abacus res = move_beads(a, moved, +1);
    auto rps = try_first_periods(res, e, c);
    if (!rps) fail(c, "is absent after the slide");
    for (int k = 0; k < c; ++k) {
        if ((*rps)[k] != shifted_period((*ps)[k], +1))
            fail(k + 1, "does not reappear shifted after the slide");
    }
    return res;
}

}  // namespace

ChargedBipartition a_tilde(const ChargedBipartition& cb, int e, const Partition& sigma) {
    Abacus a = abacus_of(cb);
    Partition cols = transpose(sigma);
    int idx = 0;
    for (int c : cols.parts()) {
        a = a_tilde_column(a, e, c, idx);
        ++idx;
    }
    return bipartition_of(a);
}

std::optional<ChargedBipartition> try_a_tilde(const ChargedBipartition& cb, int e,
                                              const Partition& sigma) {
    try {
        return a_tilde(cb, e, sigma);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

EPeriod first_fore_period(const Abacus& a, int e) {
    auto contains = [&](int row, int col) { return abacus_contains(a, row, col); };
    int top = std::max(a.row1.beads.front(), a.row2.beads.front());
    int bottom = std::min(a.row1.beads.back(), a.row2.beads.back()) - 1;
    for (int x = top; x >= bottom - e; --x) {
        for (int u = 0; u <= e; ++u) {
            EPeriod p;
            bool ok = true;
            for (int i = 1; i <= e; ++i) {
                int col = x - i + 1;
                int row = (i <= u) ? 2 : 1;
                if (!contains(row, col)) {
                    ok = false;
                    break;
                }
                p.beads.emplace_back(col, row);
            }
            if (ok) return p;
        }
    }
    throw std::logic_error("no fore period found");
}

bool is_slinf_source(const ChargedBipartition& cb, int e) {
    Abacus a = abacus_of(cb);
    auto contains = [&](int row, int col) { return abacus_contains(a, row, col); };
    int bound = first_fore_period(a, e).lead_col();
    int lo = std::min(a.row1.beads.back(), a.row2.beads.back()) - 1;
    for (int y = lo; y <= bound; ++y) {
        if (!contains(1, y) && !contains(2, y)) return false;  // empty column
    }
    for (int w = 2; w <= e + 1; ++w) {
        for (int y = lo; y + w - 1 <= bound; ++y) {
            if (!contains(2, y) || contains(1, y)) continue;
            if (contains(2, y + w - 1) || !contains(1, y + w - 1)) continue;
            bool mid = true;
            for (int m = y + 1; m <= y + w - 2; ++m) {
                if (!contains(1, m) || !contains(2, m)) {
                    mid = false;
                    break;
                }
            }
            if (mid) return false;
        }
    }
    return true;
}

namespace {

/// One step up the crystal: finds k with a left-shift of P_k landing on a
/// totally periodic abacus whose k-th right-shift returns `a`.
std::optional<Abacus> predecessor(const Abacus& a, int e) {
    int scan_limit = static_cast<int>(period_decomposition(a, e).periods.size()) + 2;
    for (int k = 1; k <= scan_limit; ++k) {
        auto ps = try_first_periods(a, e, k);
        if (!ps) return std::nullopt;  // deeper periods will not exist either
        const EPeriod& p = (*ps)[k - 1];
        bool free = true;
        for (auto [col, row] : p.beads) {
            if (!p.has(row, col - 1) && abacus_contains(a, row, col - 1)) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        Abacus cand = move_beads(a, p.beads, -1);
        if (!is_totally_periodic(cand, e)) continue;
        auto back = shift_period_right(cand, e, k);
        if (back && *back == a) return cand;
    }
    return std::nullopt;
}

}  // namespace

SlinfPosition slinf_position(const ChargedBipartition& cb, int e) {
    Abacus a = abacus_of(cb);
    PeriodDecomposition dec = period_decomposition(a, e);
    if (!dec.totally_periodic) {
        SleDepthPath path = sle_depth_path(cb, e);
        if (!is_totally_periodic(abacus_of(path.source), e))
            throw std::logic_error("stripped vertex is not totally periodic");
        SlinfPosition inner = slinf_position(path.source, e);
        ChargedBipartition src = inner.source;
        for (auto it = path.word.rbegin(); it != path.word.rend(); ++it) {
            auto next = f_tilde(src, e, *it);
            if (!next) throw std::logic_error("good box word does not lift to the source");
            src = *next;
        }
        return SlinfPosition{inner.k, inner.sigma, src};
    }

    Abacus cur = a;
    int k = 0;
    while (!is_slinf_source(bipartition_of(cur), e)) {
        auto pred = predecessor(cur, e);
        if (!pred) throw std::logic_error("vertex below a source has no predecessor");
        cur = *pred;
        ++k;
    }
    ChargedBipartition source = bipartition_of(cur);
    Partition sigma;
    bool found = false;
    for (const Partition& s : partitions_of(k)) {
        auto img = try_a_tilde(source, e, s);
        if (img && *img == cb) {
            if (found) throw std::logic_error("position is reached by two different partitions");
            sigma = s;
            found = true;
        }
    }
    if (!found) throw std::logic_error("position is not reachable from its source");
    return SlinfPosition{k, sigma, source};
}

}  // namespace fockcr
