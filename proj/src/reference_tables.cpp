#include "fockcr/reference_tables.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace fockcr {

namespace {

// Rows are written in a compact exponent notation ("3^2 1^4" etc., "-" for the
// empty partition) to keep the transcription readable and easy to audit.
Partition expand(const char* compact) {
    std::vector<int> parts;
    std::istringstream in(compact);
    std::string tok;
    while (in >> tok) {
        if (tok == "-") continue;
        int value = 0;
        int mult = 1;
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            value = std::stoi(tok);
        } else {
            value = std::stoi(tok.substr(0, caret));
            mult = std::stoi(tok.substr(caret + 1));
        }
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    return make_partition(parts);
}

struct RawRow {
    int n;
    int e;
    const char* lambda;
    int t;
    const char* tau1;
    const char* tau2;
    int k;
    int r;
    int n_prime;
    const char* lambda0;
};

ReferenceRow cook(const RawRow& raw) {
    ReferenceRow row;
    row.n = raw.n;
    row.e = raw.e;
    row.lambda = expand(raw.lambda);
    row.t = raw.t;
    auto charge = charge_for_core(raw.t, raw.e);
    row.tau = ChargedBipartition{expand(raw.tau1), expand(raw.tau2),
                                 charge.first, charge.second};
    row.k = raw.k;
    row.r = raw.r;
    row.n_prime = raw.n_prime;
    row.lambda0 = expand(raw.lambda0);
    return row;
}

std::vector<ReferenceRow> cook_all(const std::vector<RawRow>& raws) {
    std::vector<ReferenceRow> rows;
    rows.reserve(raws.size());
    for (const auto& raw : raws) rows.push_back(cook(raw));
    return rows;
}

const std::vector<RawRow> kSmallRank = {
    {6, 3, "2^3", 0, "1", "1^2", 1, 0, 0, "-"},
    {7, 3, "3 2 1^2", 1, "-", "1^3", 1, 0, 1, "1"},
    {8, 3, "2^4", 0, "1^2", "1^2", 1, 1, 0, "-"},
    {8, 3, "2^3 1^2", 0, "1", "1^3", 1, 1, 0, "-"},
    {9, 3, "4 3 2", 2, "-", "1^3", 1, 0, 3, "2 1"},
    {9, 3, "3^3", 1, "2", "1^2", 1, 0, 3, "1^3"},
    {9, 3, "3 2^3", 1, "1", "1^3", 1, 1, 1, "1"},
    {10, 3, "3^3 1", 0, "2^2", "1", 1, 0, 4, "1^4"},
    {10, 5, "2^5", 0, "1^2", "1^3", 1, 0, 0, "-"},
};

const std::vector<RawRow> kWeak12 = {
    {12, 3, "1^12", 0, "1^6", "-", 0, 0, 12, "1^12"},
    {12, 3, "2 1^10", 0, "-", "1^6", 0, 0, 12, "2 1^10"},
    {12, 3, "2^3 1^6", 0, "1", "1^5", 0, 0, 12, "2^3 1^6"},
    {12, 3, "2^4 1^4", 0, "1^4", "1^2", 0, 0, 12, "2^4 1^4"},
    {12, 3, "3 2^4 1", 0, "2^3", "-", 0, 0, 12, "3 2^4 1"},
    {12, 3, "3 2 1^7", 3, "1^3", "-", 0, 0, 12, "3 2 1^7"},
    {12, 3, "3^3 2 1", 3, "3", "-", 0, 0, 12, "3^3 2 1"},
    {12, 3, "4 3 2 1^3", 4, "1", "-", 0, 0, 12, "4 3 2 1^3"},
    {12, 3, "3^3 1^3", 0, "2^2 1", "1", 1, 0, 6, "1^6"},
    {12, 3, "4 3 2^2 1", 0, "-", "2^3", 1, 0, 6, "2 1^4"},
    {12, 3, "5 4 3", 3, "-", "1^3", 1, 0, 6, "3 2 1"},
    {12, 3, "2^6", 0, "1^3", "1^3", 2, 0, 0, "-"},
    {12, 3, "4^3", 0, "2", "2^2", 2, 0, 0, "-"},
};

const std::vector<RawRow> kWeak13 = {
    {13, 3, "1^13", 1, "1^6", "-", 0, 0, 13, "1^13"},
    {13, 3, "2^6 1", 1, "2^3", "-", 0, 0, 13, "2^6 1"},
    {13, 3, "3 2 1^8", 1, "-", "1^6", 0, 0, 13, "3 2 1^8"},
    {13, 3, "2^3 1^7", 2, "2 1^3", "-", 0, 0, 13, "2^3 1^7"},
    {13, 3, "4 3 2 1^4", 2, "-", "1^5", 0, 0, 13, "4 3 2 1^4"},
    {13, 3, "3^3 1^4", 1, "2 1^2", "1^2", 1, 0, 7, "1^7"},
    {13, 3, "4^3 1", 2, "3", "1^2", 1, 0, 7, "2^3 1"},
    {13, 3, "3 2^4 1^2", 1, "1^3", "1^3", 2, 0, 1, "1"},
    {13, 3, "5 4 3 1", 1, "-", "2^3", 2, 0, 1, "1"},
};

const std::vector<RawRow> kWeak15 = {
    {15, 3, "1^15", 1, "1^7", "-", 0, 0, 15, "1^15"},
    {15, 3, "2^4 1^7", 1, "2^2 1^3", "-", 0, 0, 15, "2^4 1^7"},
    {15, 3, "2^6 1^3", 1, "2^3 1", "-", 0, 0, 15, "2^6 1^3"},
    {15, 3, "3 2 1^10", 1, "-", "1^7", 0, 0, 15, "3 2 1^10"},
    {15, 3, "3^3 2 1^4", 1, "2", "1^5", 0, 0, 15, "3^3 2 1^4"},
    {15, 3, "3 2^4 1^4", 1, "1^4", "1^3", 0, 0, 15, "3 2^4 1^4"},
    {15, 3, "2 1^13", 2, "1^6", "-", 0, 0, 15, "2 1^13"},
    {15, 3, "2^3 1^9", 2, "2 1^4", "-", 0, 0, 15, "2^3 1^9"},
    {15, 3, "2^7 1", 2, "2^3", "-", 0, 0, 15, "2^7 1"},
    {15, 3, "3^4 2 1", 2, "3^2", "-", 0, 0, 15, "3^4 2 1"},
    {15, 3, "4 3 2 1^6", 2, "-", "1^6", 0, 0, 15, "4 3 2 1^6"},
    {15, 3, "5 4 3 2 1", 5, "-", "-", 0, 0, 15, "5 4 3 2 1"},
    {15, 3, "3^3 1^6", 1, "2 1^3", "1^2", 1, 0, 9, "1^9"},
    {15, 3, "4^3 2 1", 1, "3^2", "1", 1, 0, 9, "2^4 1"},
    {15, 3, "5 4 3 1^3", 1, "-", "2^3 1", 1, 0, 9, "3 2 1^4"},
    {15, 3, "4 3 2^2 1^4", 2, "1^3", "1^3", 1, 0, 9, "2 1^7"},
    {15, 3, "4^3 1^3", 2, "3 1", "1^2", 1, 0, 9, "2^3 1^3"},
    {15, 3, "3^3 2^3", 1, "2 1", "1^4", 2, 0, 3, "1^3"},
    {15, 3, "5^3", 1, "3", "2^2", 2, 0, 3, "1^3"},
    {15, 3, "4 3 2^4", 2, "1^2", "1^4", 2, 0, 3, "2 1"},
    {15, 3, "6 5 4", 2, "-", "2^3", 2, 0, 3, "2 1"},
};

const std::vector<RawRow> kWeak16 = {
    {16, 3, "1^16", 0, "1^8", "-", 0, 0, 16, "1^16"},
    {16, 3, "2^3 1^10", 0, "1", "1^7", 0, 0, 16, "2^3 1^10"},
    {16, 3, "2^6 1^4", 0, "1^5", "1^3", 0, 0, 16, "2^6 1^4"},
    {16, 3, "3 2^4 1^5", 0, "2^3 1^2", "-", 0, 0, 16, "3 2^4 1^5"},
    {16, 3, "4 3 2^4 1", 0, "-", "2^4", 0, 0, 16, "4 3 2^4 1"},
    {16, 3, "3 2 1^11", 3, "1^5", "-", 0, 0, 16, "3 2 1^11"},
    {16, 3, "3^3 2^3 1", 3, "3 2", "-", 0, 0, 16, "3^3 2^3 1"},
    {16, 3, "4 3 2 1^7", 4, "1^3", "-", 0, 0, 16, "4 3 2 1^7"},
    {16, 3, "3^3 1^7", 0, "2^2 1^3", "1", 1, 0, 10, "1^10"},
    {16, 3, "4^3 1^4", 0, "2", "2^2 1^2", 1, 0, 10, "2^3 1^4"},
    {16, 3, "5 4 3 1^4", 3, "1^2", "1^3", 1, 0, 10, "3 2 1^5"},
    {16, 3, "6 5 4 1", 4, "-", "1^3", 1, 0, 10, "4 3 2 1"},
    {16, 3, "3^4 2 1^2", 0, "2^2", "1^4", 2, 0, 4, "1^4"},
    {16, 3, "5^3 1", 0, "3^2", "2", 2, 0, 4, "1^4"},
};

const std::vector<RawRow> kCusp18 = {
    {18, 3, "1^18", 0, "1^9", "-", 0, 0, 18, "1^18"},
    {18, 3, "2 1^16", 0, "-", "1^9", 0, 0, 18, "2 1^16"},
    {18, 3, "2^3 1^12", 0, "1", "1^8", 0, 0, 18, "2^3 1^12"},
    {18, 3, "2^4 1^10", 0, "1^7", "1^2", 0, 0, 18, "2^4 1^10"},
    {18, 3, "2^6 1^6", 0, "1^6", "1^3", 0, 0, 18, "2^6 1^6"},
    {18, 3, "2^7 1^4", 0, "1^3", "1^6", 0, 0, 18, "2^7 1^4"},
    {18, 3, "3 2^4 1^7", 0, "2^3 1^3", "-", 0, 0, 18, "3 2^4 1^7"},
    {18, 3, "3^3 2^4 1", 0, "2^4", "1", 0, 0, 18, "3^3 2^4 1"},
    {18, 3, "3^4 2 1^4", 0, "2^2", "1^5", 0, 0, 18, "3^4 2 1^4"},
    {18, 3, "4 3 2^4 1^3", 0, "-", "2^4 1", 0, 0, 18, "4 3 2^4 1^3"},
    {18, 3, "3 2 1^13", 3, "1^6", "-", 0, 0, 18, "3 2 1^13"},
    {18, 3, "3 2^7 1", 3, "2^3", "-", 0, 0, 18, "3 2^7 1"},
    {18, 3, "3^3 2^3 1^3", 3, "3 2 1", "-", 0, 0, 18, "3^3 2^3 1^3"},
    {18, 3, "3^3 2 1^7", 3, "3 1^3", "-", 0, 0, 18, "3^3 2 1^7"},
    {18, 3, "5 4 3 2 1^4", 3, "-", "1^6", 0, 0, 18, "5 4 3 2 1^4"},
    {18, 3, "4 3 2 1^9", 4, "1^4", "-", 0, 0, 18, "4 3 2 1^9"},
    {18, 3, "4^3 3 2 1", 4, "4", "-", 0, 0, 18, "4^3 3 2 1"},
    {18, 3, "4 3 2^5 1", 4, "2^2", "-", 0, 0, 18, "4 3 2^5 1"},
};

const std::vector<RawRow> kDepth18 = {
    {18, 3, "3^3 1^9", 0, "2^2 1^4", "1", 1, 0, 12, "1^12"},
    {18, 3, "4 3 2^2 1^7", 0, "-", "2^3 1^3", 1, 0, 12, "2 1^10"},
    {18, 3, "4^3 1^6", 0, "2", "2^2 1^3", 1, 0, 12, "2^3 1^6"},
    {18, 3, "4^3 2 1^4", 0, "2 1^3", "2^2", 1, 0, 12, "2^4 1^4"},
    {18, 3, "5 4 3^2 2 1", 0, "3^3", "-", 1, 0, 12, "3 2^4 1"},
    {18, 3, "5 4 3 1^6", 3, "1^3", "1^3", 1, 0, 12, "3 2 1^7"},
    {18, 3, "5^3 2 1", 3, "4", "1^2", 1, 0, 12, "3^3 2 1"},
    {18, 3, "6 5 4 1^3", 4, "1", "1^3", 1, 0, 12, "4 3 2 1^3"},
    {18, 3, "3^6", 0, "2^3", "1^3", 2, 0, 6, "1^6"},
    {18, 3, "5^3 1^3", 0, "3^2 1", "2", 2, 0, 6, "1^6"},
    {18, 3, "4 3^4 2", 0, "1^3", "2^3", 2, 0, 6, "2 1^4"},
    {18, 3, "6 5 4 2 1", 0, "-", "3^3", 2, 0, 6, "2 1^4"},
    {18, 3, "5 4 3 2^3", 3, "1", "1^5", 2, 0, 6, "3 2 1"},
    {18, 3, "7 6 5", 3, "-", "2^3", 2, 0, 6, "3 2 1"},
    {18, 3, "2^9", 0, "1^4", "1^5", 3, 0, 0, "-"},
    {18, 3, "4^3 2^3", 0, "2 1^2", "2^2 1", 3, 0, 0, "-"},
    {18, 3, "6^3", 0, "3", "3^2", 3, 0, 0, "-"},
};

const std::vector<RawRow> kCusp19 = {
    {19, 3, "1^19", 1, "1^9", "-", 0, 0, 19, "1^19"},
    {19, 3, "2^6 1^7", 1, "2^3 1^3", "-", 0, 0, 19, "2^6 1^7"},
    {19, 3, "3 2 1^14", 1, "-", "1^9", 0, 0, 19, "3 2 1^14"},
    {19, 3, "3 2^4 1^8", 1, "1^6", "1^3", 0, 0, 19, "3 2^4 1^8"},
    {19, 3, "3^3 2^3 1^4", 1, "2 1", "1^6", 0, 0, 19, "3^3 2^3 1^4"},
    {19, 3, "4 3^4 2 1", 1, "3^3", "-", 0, 0, 19, "4 3^4 2 1"},
    {19, 3, "2^3 1^13", 2, "2 1^6", "-", 0, 0, 19, "2^3 1^13"},
    {19, 3, "2^9 1", 2, "2^4", "-", 0, 0, 19, "2^9 1"},
    {19, 3, "3^4 2 1^5", 2, "3^2 1^2", "-", 0, 0, 19, "3^4 2 1^5"},
    {19, 3, "4 3 2 1^10", 2, "-", "1^8", 0, 0, 19, "4 3 2 1^10"},
    {19, 3, "4 3 2^4 1^4", 2, "1^4", "1^4", 0, 0, 19, "4 3 2^4 1^4"},
    {19, 3, "5 4 3 2^3 1", 5, "2", "-", 0, 0, 19, "5 4 3 2^3 1"},
};

const std::vector<RawRow> kDepth19 = {
    {19, 3, "3^3 1^10", 1, "2 1^5", "1^2", 1, 0, 13, "1^13"},
    {19, 3, "4^3 2^3 1", 1, "3^2 2", "1", 1, 0, 13, "2^6 1"},
    {19, 3, "5 4 3 1^7", 1, "-", "2^3 1^3", 1, 0, 13, "3 2 1^8"},
    {19, 3, "4^3 1^7", 2, "3 1^3", "1^2", 1, 0, 13, "2^3 1^7"},
    {19, 3, "6 5 4 1^4", 2, "-", "2^3 1^2", 1, 0, 13, "4 3 2 1^4"},
    {19, 3, "3^6 1", 1, "2^3", "1^3", 2, 0, 7, "1^7"},
    {19, 3, "5^3 1^4", 1, "3 1^2", "2^2", 2, 0, 7, "1^7"},
    {19, 3, "4^3 3 2 1^2", 2, "3", "1^5", 2, 0, 7, "2^3 1"},
    {19, 3, "6^3 1", 2, "4", "2^2", 2, 0, 7, "2^3 1"},
    {19, 3, "3 2^7 1^2", 1, "1^3", "1^6", 3, 0, 1, "1"},
    {19, 3, "5 4 3^2 2 1^2", 1, "1^3", "2^3", 3, 0, 1, "1"},
    {19, 3, "7 6 5 1", 1, "-", "3^3", 3, 0, 1, "1"},
};

}  // namespace

std::vector<ReferenceRow> reference_small_rank() { return cook_all(kSmallRank); }

std::vector<ReferenceRow> reference_weak_table(int n) {
    switch (n) {
        case 12: return cook_all(kWeak12);
        case 13: return cook_all(kWeak13);
        case 15: return cook_all(kWeak15);
        case 16: return cook_all(kWeak16);
        default: throw std::invalid_argument("no recorded weak table for n=" + std::to_string(n));
    }
}

std::vector<ReferenceRow> reference_cuspidal_table(int n) {
    switch (n) {
        case 18: return cook_all(kCusp18);
        case 19: return cook_all(kCusp19);
        default: throw std::invalid_argument("no recorded cuspidal table for n=" + std::to_string(n));
    }
}

std::vector<ReferenceRow> reference_depth_table(int n) {
    switch (n) {
        case 18: return cook_all(kDepth18);
        case 19: return cook_all(kDepth19);
        default: throw std::invalid_argument("no recorded depth table for n=" + std::to_string(n));
    }
}

}  // namespace fockcr
