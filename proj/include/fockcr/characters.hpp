#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fockcr/fock.hpp"

namespace fockcr {

/// Nonnegative integer combination of unipotent labels, all of the same size
/// n and the same 2-core index t.
struct CharacterCombo {
    int n = 0;
    int t = 0;
    std::map<Partition, long long> coeffs;
};

using Bipartition = std::pair<Partition, Partition>;

/// All partitions obtained from p by adding r boxes, at most one per column
/// (horizontal) resp. at most one per row (vertical).
std::vector<Partition> horizontal_strips(const Partition& p, int r);
std::vector<Partition> vertical_strips(const Partition& p, int r);

/// Strip additions of total size r split arbitrarily between the two
/// components; multiplicity-free.
std::vector<Bipartition> pieri_vertical(const Bipartition& b, int r);
std::vector<Bipartition> pieri_horizontal(const Bipartition& b, int r);

/// Pushes every support label through tau, adds a vertical r-strip to the
/// bipartition in all ways, and pulls back. Result size is n + 2r, same t.
CharacterCombo induce_column(const CharacterCombo& c, int r, int e);

/// Restricts the support to labels with the given e-core.
CharacterCombo block_cut(const CharacterCombo& c, int e, const Partition& core);

struct MaxResult {
    Partition arg;
    bool unique = true;  // false: no single label dominates all; arg is lex-max
};
MaxResult dominance_max(const CharacterCombo& c);
Partition lex_max(const CharacterCombo& c);

/// Dominance-greatest partition obtained from mu by adding 2ek boxes with at
/// most two per row while preserving the e-core.
Partition b_tilde(const Partition& mu, int e, int k);

/// Principal-block part of inducing the column 1^{ek} from the rank-iota
/// unitary group (iota = 0: from the empty label at t=0, cut to e-core empty;
/// iota = 1: from the label (1) at t=1, cut to e-core (1)).
CharacterCombo steinberg_principal_part(int e, int k, int iota);

}  // namespace fockcr
