#include "fockcr/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockcr/crystal_sle.hpp"
#include "fockcr/parallel.hpp"

namespace fockcr {

namespace {

void require_branching_e(int e) {
    if (e < 3 || e % 2 == 0)
        throw std::invalid_argument("branching requires e odd and at least 3");
}

}  // namespace

CuspidalSupport cuspidal_support(const Partition& lambda, int e) {
    require_branching_e(e);
    TauResult tr = tau(lambda, e);
    SleDepthPath path = sle_depth_path(tr.cb, e);
    SlinfPosition pos = slinf_position(path.source, e);
    CuspidalSupport s;
    s.n = lambda.size();
    s.e = e;
    s.t = tr.t;
    s.r = path.r;
    s.k = pos.k;
    s.word = path.word;
    s.sigma = pos.sigma;
    s.n_prime = s.n - 2 * (e * s.k + s.r);
    s.lambda0 = tau_inverse(pos.source, e, tr.t);
    if (s.n_prime < 0 || s.lambda0.size() != s.n_prime)
        throw std::logic_error("support sizes do not add up");
    return s;
}

bool is_weakly_cuspidal(const Partition& lambda, int e) {
    require_branching_e(e);
    return is_sle_source(tau(lambda, e).cb, e);
}

bool is_cuspidal(const Partition& lambda, int e) {
    require_branching_e(e);
    ChargedBipartition cb = tau(lambda, e).cb;
    return is_sle_source(cb, e) && is_slinf_source(cb, e);
}

std::string levi_string(const CuspidalSupport& s) {
    std::vector<std::string> factors;
    if (s.n_prime > 0 || (s.k == 0 && s.r == 0))
        factors.push_back("GU_" + std::to_string(s.n_prime));
    if (s.k > 0) {
        std::string f = "GL_" + std::to_string(s.e);
        if (s.k >= 2) f += "^" + std::to_string(s.k);
        factors.push_back(f);
    }
    if (s.r > 0) {
        std::string f = "GL_1";
        if (s.r >= 2) f += "^" + std::to_string(s.r);
        factors.push_back(f);
    }
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i];
    }
    return out;
}

bool cusp_column_oracle(int t, int m, Parity parity, int e) {
    require_branching_e(e);
    if (t < 0 || m < 0) throw std::invalid_argument("t and m must be nonnegative");
    if (parity == Parity::even) return m % e == 0 || (2 * (t + m) - 1) % e == 0;
    if (t < 2) throw std::domain_error("odd column length requires t >= 2");
    return (2 * m + 1) % e == 0 || ((m + t) % e == 0 && 2 * m + 1 >= e);
}

std::optional<Partition> block_cuspidal_witness(const Partition& lambda, int e) {
    require_branching_e(e);
    if (!is_weakly_cuspidal(lambda, e))
        throw std::invalid_argument("label is not weakly cuspidal");
    int t = two_core_quotient(lambda).t;
    Partition core = e_core(lambda, e);
    std::optional<Partition> best;
    for (const Partition& mu : partitions_of(lambda.size())) {
        if (two_core_quotient(mu).t != t) continue;
        if (!(e_core(mu, e) == core)) continue;
        if (!is_cuspidal(mu, e)) continue;
        if (!best || lex_less(mu, *best)) best = mu;
    }
    return best;
}

std::vector<SeriesRow> series_table(int n, int e, SeriesFilter filter) {
    require_branching_e(e);
    std::vector<Partition> all = partitions_of(n);
    std::vector<SeriesRow> rows =
        parallel_map<SeriesRow>(static_cast<int>(all.size()), [&](int i) {
            SeriesRow row;
            row.lambda = all[i];
            row.tau_cb = tau(all[i], e).cb;
            row.support = cuspidal_support(all[i], e);
            return row;
        });
    std::vector<SeriesRow> out;
    for (auto& row : rows) {
        bool weak = row.support.r == 0;
        bool cusp = weak && row.support.k == 0;
        if (filter == SeriesFilter::weak && !weak) continue;
        if (filter == SeriesFilter::cuspidal && !cusp) continue;
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const SeriesRow& a, const SeriesRow& b) {
        if (a.support.k != b.support.k) return a.support.k < b.support.k;
        if (a.support.t != b.support.t) return a.support.t < b.support.t;
        return lex_less(a.lambda, b.lambda);
    });
    return out;
}

}  // namespace fockcr
