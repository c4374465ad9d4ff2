#include "fockcr/crystal_sle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fockcr {

namespace {

std::vector<BoxRef> addable_of_component(const Partition& p, int comp) {
    std::vector<BoxRef> out;
    for (int row = 1; row <= p.length() + 1; ++row)
        if (p.part(row - 1) > p.part(row) || row == 1) out.push_back(BoxRef{row, p.part(row) + 1, comp});
    return out;
}

std::vector<BoxRef> removable_of_component(const Partition& p, int comp) {
    std::vector<BoxRef> out;
    for (int row = 1; row <= p.length(); ++row)
        if (p.part(row) > p.part(row + 1)) out.push_back(BoxRef{row, p.part(row), comp});
    return out;
}

struct Entry {
    BoxRef box;
    int ct = 0;
    bool addable = false;
};

/// Residue-i addable and removable boxes, sorted increasingly: smaller
/// content first; at equal content, component 2 precedes component 1.
std::vector<Entry> residue_word(const ChargedBipartition& cb, int e, int i) {
    std::vector<Entry> word;
    for (const BoxRef& b : addable_boxes(cb))
        if (residue(b, cb, e) == i) word.push_back(Entry{b, content(b, cb), true});
    for (const BoxRef& b : removable_boxes(cb))
        if (residue(b, cb, e) == i) word.push_back(Entry{b, content(b, cb), false});
    std::sort(word.begin(), word.end(), [](const Entry& a, const Entry& b) {
        if (a.ct != b.ct) return a.ct < b.ct;
        if (a.box.comp != b.box.comp) return a.box.comp > b.box.comp;  // component 2 first
        return a.box < b.box;  // unreachable for distinct boxes of one bipartition
    });
    return word;
}

/// Cancels adjacent pairs until the word is reduced. The standard
/// orientation deletes "removable immediately followed by addable"; the
/// flipped orientation deletes the opposite adjacency.
std::vector<Entry> reduce_word(std::vector<Entry> word, CancelOrientation o) {
    std::vector<Entry> stack;
    for (const Entry& entry : word) {
        bool cancels = !stack.empty() &&
                       (o == CancelOrientation::standard
                            ? (!stack.back().addable && entry.addable)
                            : (stack.back().addable && !entry.addable));
        if (cancels)
            stack.pop_back();
        else
            stack.push_back(entry);
    }
    return stack;
}

Partition with_box(const Partition& p, int row, int delta) {
    std::vector<int> parts = p.parts();
    if (row == p.length() + 1 && delta > 0)
        parts.push_back(delta);
    else
        parts[static_cast<size_t>(row - 1)] += delta;
    return make_partition(std::move(parts));
}

}  // namespace

std::vector<BoxRef> addable_boxes(const ChargedBipartition& cb) {
    std::vector<BoxRef> out = addable_of_component(cb.c1, 1);
    std::vector<BoxRef> second = addable_of_component(cb.c2, 2);
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

std::vector<BoxRef> removable_boxes(const ChargedBipartition& cb) {
    std::vector<BoxRef> out = removable_of_component(cb.c1, 1);
    std::vector<BoxRef> second = removable_of_component(cb.c2, 2);
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

std::optional<BoxRef> good_addable(const ChargedBipartition& cb, int e, int i, CancelOrientation o) {
    std::vector<Entry> reduced = reduce_word(residue_word(cb, e, i), o);
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
        if (it->addable) return it->box;
    return std::nullopt;
}

std::optional<BoxRef> good_removable(const ChargedBipartition& cb, int e, int i, CancelOrientation o) {
    std::vector<Entry> reduced = reduce_word(residue_word(cb, e, i), o);
    for (const Entry& entry : reduced)
        if (!entry.addable) return entry.box;
    return std::nullopt;
}

std::optional<ChargedBipartition> f_tilde(const ChargedBipartition& cb, int e, int i,
                                          CancelOrientation o) {
    std::optional<BoxRef> box = good_addable(cb, e, i, o);
    if (!box) return std::nullopt;
    ChargedBipartition out = cb;
    (box->comp == 1 ? out.c1 : out.c2) = with_box(box->comp == 1 ? cb.c1 : cb.c2, box->row, +1);
    return out;
}

std::optional<ChargedBipartition> e_tilde(const ChargedBipartition& cb, int e, int i,
                                          CancelOrientation o) {
    std::optional<BoxRef> box = good_removable(cb, e, i, o);
    if (!box) return std::nullopt;
    ChargedBipartition out = cb;
    (box->comp == 1 ? out.c1 : out.c2) = with_box(box->comp == 1 ? cb.c1 : cb.c2, box->row, -1);
    return out;
}

std::set<int> good_addable_residues(const ChargedBipartition& cb, int e) {
    std::set<int> out;
    for (int i = 0; i < e; ++i)
        if (good_addable(cb, e, i)) out.insert(i);
    return out;
}

bool is_sle_source(const ChargedBipartition& cb, int e, CancelOrientation o) {
    for (int i = 0; i < e; ++i)
        if (good_removable(cb, e, i, o)) return false;
    return true;
}

SleDepthPath sle_depth_path(const ChargedBipartition& cb, int e) {
    std::vector<int> order;
    for (int i = 0; i < e; ++i) order.push_back(i);
    return sle_depth_path(cb, e, order);
}

SleDepthPath sle_depth_path(const ChargedBipartition& cb, int e, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != e)
        throw std::invalid_argument("residue order must list each residue exactly once");
    SleDepthPath path;
    path.source = cb;
    for (;;) {
        bool removed = false;
        for (int i : order) {
            if (std::optional<ChargedBipartition> next = e_tilde(path.source, e, i)) {
                path.source = *next;
                path.word.push_back(i);
                path.r++;
                removed = true;
                break;
            }
        }
        if (!removed) return path;
    }
}

}  // namespace fockcr
