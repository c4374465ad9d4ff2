#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockcr/crystal_slinf.hpp"
#include "fockcr/fock.hpp"

namespace fockcr {

/// Full answer for one unipotent label: the factor counts (k copies of
/// GL_e(q^2), r copies of GL_1(q^2)), the remaining unitary rank n' with its
/// cuspidal label lambda0, plus the crystal data that produced them.
struct CuspidalSupport {
    int n = 0;
    int e = 0;
    int t = 0;
    int k = 0;
    int r = 0;
    int n_prime = 0;
    Partition lambda0;
    Partition sigma;        // position of the depth-r vertex in its component
    std::vector<int> word;  // residues stripped on the way to that vertex
};

CuspidalSupport cuspidal_support(const Partition& lambda, int e);

bool is_weakly_cuspidal(const Partition& lambda, int e);
bool is_cuspidal(const Partition& lambda, int e);

/// "GU_{n'} x GL_{e}^{k} x GL_1^{r}" with zero-count factors omitted,
/// exponents only when >= 2, and the unitary factor omitted at n' = 0 unless
/// it is the whole group.
std::string levi_string(const CuspidalSupport& s);

enum class Parity { even, odd };

/// Closed form for labels of shape staircase + column: nu = Delta_t + (1^{2m})
/// (even) or Delta_t + (1^{2m+1}) (odd, needs t >= 2).
bool cusp_column_oracle(int t, int m, Parity parity, int e);

/// Lexicographically least cuspidal mu of the same size, 2-core, and e-core
/// as lambda. Requires lambda weakly cuspidal.
std::optional<Partition> block_cuspidal_witness(const Partition& lambda, int e);

enum class SeriesFilter { all, weak, cuspidal };

struct SeriesRow {
    Partition lambda;
    ChargedBipartition tau_cb;
    CuspidalSupport support;
};

/// One row per partition of n passing the filter, sorted by
/// (k, t, lambda lex).
std::vector<SeriesRow> series_table(int n, int e, SeriesFilter filter);

}  // namespace fockcr
