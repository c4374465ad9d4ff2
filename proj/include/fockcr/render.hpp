#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fockcr/branching.hpp"
#include "fockcr/fock.hpp"

namespace fockcr {

/// "3,2,1" with "-" for the empty partition.
std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& text);

/// "l1|l2@s1,s2", e.g. "2,2,1|1@-2,0".
std::string bipartition_str(const ChargedBipartition& cb);
ChargedBipartition parse_bipartition(const std::string& text);

/// Two bead rows (row 2 on top) with a column ruler; beads 'o', spaces '.'.
std::string abacus_art(const Abacus& a);

nlohmann::json partition_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json bipartition_json(const ChargedBipartition& cb);
ChargedBipartition bipartition_from_json(const nlohmann::json& j);

/// The serialized face of a support: exactly the fields the structured
/// format carries.
struct SupportFields {
    int n_prime = 0;
    int k = 0;
    int r = 0;
    Partition lambda0;
    int t = 0;
    std::string levi;
    bool operator==(const SupportFields&) const = default;
};
SupportFields support_fields(const CuspidalSupport& s);
nlohmann::json support_json(const CuspidalSupport& s);
SupportFields support_from_json(const nlohmann::json& j);

/// Aligned text table with header: lambda, t, tau, k, r, lambda0, support.
std::string table_text(const std::vector<SeriesRow>& rows);
nlohmann::json table_json(int n, int e, const std::string& filter,
                          const std::vector<SeriesRow>& rows);

}  // namespace fockcr
