#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fockcr {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The default-constructed value is the empty partition.
class Partition {
public:
    Partition() = default;

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length are 0.
    int part(int k) const {
        return (k >= 1 && k <= length()) ? parts_[static_cast<size_t>(k - 1)] : 0;
    }

    bool operator==(const Partition&) const = default;
    /// Lexicographic order on part sequences (shorter prefixes first).
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    friend Partition make_partition(std::vector<int> parts);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Validates that `parts` is weakly decreasing with positive entries
/// (trailing zeros are permitted and stripped). Throws std::invalid_argument
/// naming the offending position otherwise.
Partition make_partition(std::vector<int> parts);

/// Conjugate (transpose) partition.
Partition transpose(const Partition& p);

/// Multiset union of parts, re-sorted decreasingly.
Partition concat(const Partition& a, const Partition& b);

/// Staircase (t, t-1, ..., 1); t = 0 gives the empty partition.
Partition delta(int t);

/// a <= b in dominance order. Requires |a| == |b| (throws otherwise).
bool dominance_leq(const Partition& a, const Partition& b);

/// Strict lexicographic comparison of part sequences.
bool lex_less(const Partition& a, const Partition& b);

/// First-column beta-numbers of a charged partition row.
///
/// The full bead set is { p.part(k) + charge - k + 1 : k >= 1 }; `beads`
/// stores the window of the largest entries, strictly decreasing, and every
/// integer below beads.back() is implicitly a bead. Consistency of the window
/// with the charge forces beads.back() == charge - beads.size() + 1.
struct BetaSet {
    int charge = 0;
    std::vector<int> beads;

    bool operator==(const BetaSet&) const = default;
};

/// Beta set of `p` at `charge`, in canonical (minimal-window) form.
BetaSet beta_set(const Partition& p, int charge);

/// Wraps a raw (charge, window) pair, validating strict decrease and the
/// charge/window consistency identity; canonicalizes. Throws on bad input.
BetaSet make_beta_set(int charge, std::vector<int> window);

/// Trims the window to minimal length (invariants assumed to already hold).
BetaSet canonical_beta(BetaSet b);

/// Bead membership test (column may lie inside or below the window).
bool beta_contains(const BetaSet& b, int col);

/// Inverse of beta_set. Throws if the stored window is inconsistent.
Partition partition_from_beta(const BetaSet& b);

/// The first `length` beta-numbers of `p` at `charge` (length >= 1).
std::vector<int> beta_window(const Partition& p, int charge, int length);

/// Reads a partition from a bead window "up to global shift": the window is a
/// strictly decreasing list and every integer below its last entry is a bead.
/// The charge is recovered from the window itself.
struct ShiftedReading {
    Partition partition;
    int natural_charge = 0;
};
ShiftedReading partition_of_bead_window(std::vector<int> window);

/// 2-core index and 2-quotient. q1 comes from the odd beta-numbers at charge
/// 0 (z -> (z+1)/2), q2 from the even ones (z -> z/2); t is the staircase
/// index of the 2-core, so |p| = 2(|q1|+|q2|) + t(t+1)/2.
struct TwoQuotient {
    int t = 0;
    Partition q1, q2;
};
TwoQuotient two_core_quotient(const Partition& p);

/// e-core via runner compaction (any e >= 2).
Partition e_core(const Partition& p, int e);

/// Multiset of box contents (col - row) mod e, for a single partition.
std::map<int, long long> content_residues(const Partition& p, int e);

/// All partitions of n, in decreasing lexicographic order (deterministic).
std::vector<Partition> partitions_of(int n);

}  // namespace fockcr
