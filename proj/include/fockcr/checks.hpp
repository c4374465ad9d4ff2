#pragma once

#include <string>
#include <vector>

namespace fockcr {

/// Outcome of one verification property. `detail` carries the first
/// counterexample when the property fails, or timing info when it passes.
struct CheckResult {
    std::string name;
    bool passed = false;
    long long cases = 0;
    std::string detail;
};

/// Every desk-checked series row (n in {12, 13, 15, 16, 18, 19}) is
/// reproduced exactly, including the table sizes.
CheckResult check_golden_tables();

/// The recorded depth-1 rows across small ranks (e = 3 and e = 5).
CheckResult check_small_rank_rows();

/// Having no good removable box is equivalent to total e-periodicity
/// (all bipartitions of size <= 8, t <= 4, e in {3, 5}).
CheckResult check_calibration();

/// Flipping the signature-cancellation orientation breaks the equivalence
/// above on some bipartition of size <= 6 (so the suite pins the orientation).
CheckResult check_calibration_flip();

/// The pattern-avoidance source test agrees with brute-force absence of
/// incoming edges (totally periodic vertices of size <= 7, e = 3).
CheckResult check_source_patterns();

/// Box operators and period shifts commute wherever both composites are
/// defined (size <= 6, t <= 3, e = 3).
CheckResult check_crystal_commute();

/// Composite period moves preserve the e-core of the underlying label
/// (|lambda| <= 14, |sigma| <= 2, e in {3, 5}).
CheckResult check_core_invariance();

/// The closed-form staircase-plus-column criterion matches the crystal
/// cuspidality test (t <= 6, column length <= 40, e in {3, 5, 7}).
CheckResult check_cusp_column();

/// Dominance-greatest border growth agrees with the composite period move
/// carried through the label correspondence (|mu| <= 13, e = 3, k <= 2).
CheckResult check_border_growth();

/// Column-induction images of the trivial and rank-1 starting labels:
/// vacuum moves, full supports, and their maxima (e in {3, 5, 7}).
CheckResult check_steinberg();

/// Every weakly cuspidal label of size <= 18 at e = 3 has a cuspidal
/// label in its block.
CheckResult check_block_witnesses();

/// The recorded rank-12 and rank-13 principal-block sums are reproduced
/// term for term, including coefficients.
CheckResult check_principal_series_sums();

/// parse(render(x)) == x for partitions, bipartitions, supports, and table
/// documents; table output is byte-stable across runs and thread counts.
CheckResult check_roundtrip();

std::vector<std::string> suite_names();

/// Runs one named suite ("all" runs everything). Throws std::invalid_argument
/// for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace fockcr
