#pragma once

#include <vector>

#include "fockcr/fock.hpp"

namespace fockcr {

/// One independently recorded row of the desk-checked series data: the label,
/// its 2-core index and twisted 2-quotient, both crystal depths, and the
/// support tuple they determine.
struct ReferenceRow {
    int n = 0;
    int e = 0;
    Partition lambda;
    int t = 0;
    ChargedBipartition tau;
    int k = 0;
    int r = 0;
    int n_prime = 0;
    Partition lambda0;
};

/// Depth-1 rows across ranks up to 10 (e = 3 and one e = 5 row).
std::vector<ReferenceRow> reference_small_rank();

/// All weakly cuspidal labels for n in {12, 13, 15, 16} at e = 3.
std::vector<ReferenceRow> reference_weak_table(int n);

/// All cuspidal labels for n in {18, 19} at e = 3.
std::vector<ReferenceRow> reference_cuspidal_table(int n);

/// The weakly cuspidal labels of positive depth for n in {18, 19} at e = 3.
std::vector<ReferenceRow> reference_depth_table(int n);

}  // namespace fockcr
