#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fockcr/fock.hpp"

namespace fockcr {

/// Orientation of the signature cancellation. Only `standard` is meaningful;
/// `flipped` cancels the opposite adjacency and exists solely so the
/// verification suites can prove that the standard orientation is forced.
enum class CancelOrientation { standard, flipped };

/// Boxes that can be added to / removed from either component, in a fixed
/// deterministic order.
std::vector<BoxRef> addable_boxes(const ChargedBipartition& cb);
std::vector<BoxRef> removable_boxes(const ChargedBipartition& cb);

/// Good addable / removable box of residue i after signature cancellation:
/// residue-i boxes are sorted increasingly (by content, then component 2
/// before component 1 at equal content); adjacent "removable then addable"
/// pairs cancel recursively; the largest surviving addable box and the
/// smallest surviving removable box are good.
std::optional<BoxRef> good_addable(const ChargedBipartition& cb, int e, int i,
                                   CancelOrientation o = CancelOrientation::standard);
std::optional<BoxRef> good_removable(const ChargedBipartition& cb, int e, int i,
                                     CancelOrientation o = CancelOrientation::standard);

/// Crystal operators: add / remove the good box of residue i.
std::optional<ChargedBipartition> f_tilde(const ChargedBipartition& cb, int e, int i,
                                          CancelOrientation o = CancelOrientation::standard);
std::optional<ChargedBipartition> e_tilde(const ChargedBipartition& cb, int e, int i,
                                          CancelOrientation o = CancelOrientation::standard);

/// Residues i with a good addable i-box.
std::set<int> good_addable_residues(const ChargedBipartition& cb, int e);

/// No residue has a good removable box.
bool is_sle_source(const ChargedBipartition& cb, int e,
                   CancelOrientation o = CancelOrientation::standard);

/// Strips good boxes until none is removable. `word` lists the removed
/// residues in removal order, so cb = f_word[0](f_word[1](...(source))).
struct SleDepthPath {
    int r = 0;
    std::vector<int> word;
    ChargedBipartition source;
};

/// Residues are tried in the fixed order 0, 1, ..., e-1 at every step.
SleDepthPath sle_depth_path(const ChargedBipartition& cb, int e);

/// Same, but trying residues in the given order (property-test hook; the
/// resulting (r, source) must not depend on the order).
SleDepthPath sle_depth_path(const ChargedBipartition& cb, int e, const std::vector<int>& order);

}  // namespace fockcr
