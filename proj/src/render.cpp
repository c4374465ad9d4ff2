#include "fockcr/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockcr {

namespace {

int parse_int(const std::string& token, const std::string& what, std::size_t position) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot read " + what + " at position " +
                                    std::to_string(position) + ": '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument("trailing characters in " + what + " at position " +
                                    std::to_string(position) + ": '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string partition_str(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty partition string (use '-' for empty)");
    if (text == "-") return {};
    std::vector<int> parts;
    std::size_t position = 1;
    for (const std::string& token : split(text, ',')) {
        parts.push_back(parse_int(token, "part", position));
        ++position;
    }
    return make_partition(std::move(parts));
}

std::string bipartition_str(const ChargedBipartition& cb) {
    return partition_str(cb.c1) + "|" + partition_str(cb.c2) + "@" + std::to_string(cb.s1) + "," +
           std::to_string(cb.s2);
}

ChargedBipartition parse_bipartition(const std::string& text) {
    std::size_t bar = text.find('|');
    std::size_t at = text.find('@');
    if (bar == std::string::npos || at == std::string::npos || at < bar)
        throw std::invalid_argument("expected 'l1|l2@s1,s2', got '" + text + "'");
    ChargedBipartition cb;
    cb.c1 = parse_partition(text.substr(0, bar));
    cb.c2 = parse_partition(text.substr(bar + 1, at - bar - 1));
    std::vector<std::string> charge = split(text.substr(at + 1), ',');
    if (charge.size() != 2)
        throw std::invalid_argument("expected two charge entries in '" + text + "'");
    cb.s1 = parse_int(charge[0], "charge", 1);
    cb.s2 = parse_int(charge[1], "charge", 2);
    return cb;
}

std::string abacus_art(const Abacus& a) {
    int lo = std::min(a.row1.beads.back(), a.row2.beads.back()) - 2;
    int hi = std::max(a.row1.beads.front(), a.row2.beads.front()) + 2;
    std::size_t width = 1;
    for (int col = lo; col <= hi; ++col)
        width = std::max(width, std::to_string(col).size());
    auto cell = [&](const std::string& s) {
        std::string out(width - s.size(), ' ');
        return out + s;
    };
    std::string line2 = "2 |";
    std::string line1 = "1 |";
    std::string ruler = "   ";
    for (int col = lo; col <= hi; ++col) {
        line2 += " " + cell(abacus_contains(a, 2, col) ? "o" : ".");
        line1 += " " + cell(abacus_contains(a, 1, col) ? "o" : ".");
        ruler += " " + cell(std::to_string(col));
    }
    return line2 + "\n" + line1 + "\n" + ruler + "\n";
}

nlohmann::json partition_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition document must be an array");
    return make_partition(j.get<std::vector<int>>());
}

nlohmann::json bipartition_json(const ChargedBipartition& cb) {
    nlohmann::json j;
    j["components"] = {cb.c1.parts(), cb.c2.parts()};
    j["charge"] = {cb.s1, cb.s2};
    return j;
}

ChargedBipartition bipartition_from_json(const nlohmann::json& j) {
    if (!j.contains("components") || !j.contains("charge"))
        throw std::invalid_argument("bipartition document needs 'components' and 'charge'");
    const auto& comps = j.at("components");
    const auto& charge = j.at("charge");
    if (!comps.is_array() || comps.size() != 2 || !charge.is_array() || charge.size() != 2)
        throw std::invalid_argument("bipartition document has the wrong shape");
    ChargedBipartition cb;
    cb.c1 = partition_from_json(comps[0]);
    cb.c2 = partition_from_json(comps[1]);
    cb.s1 = charge[0].get<int>();
    cb.s2 = charge[1].get<int>();
    return cb;
}

SupportFields support_fields(const CuspidalSupport& s) {
    SupportFields f;
    f.n_prime = s.n_prime;
    f.k = s.k;
    f.r = s.r;
    f.lambda0 = s.lambda0;
    f.t = s.t;
    f.levi = levi_string(s);
    return f;
}

nlohmann::json support_json(const CuspidalSupport& s) {
    SupportFields f = support_fields(s);
    nlohmann::json j;
    j["n_prime"] = f.n_prime;
    j["k"] = f.k;
    j["r"] = f.r;
    j["lambda0"] = partition_json(f.lambda0);
    j["t"] = f.t;
    j["levi"] = f.levi;
    return j;
}

SupportFields support_from_json(const nlohmann::json& j) {
    SupportFields f;
    f.n_prime = j.at("n_prime").get<int>();
    f.k = j.at("k").get<int>();
    f.r = j.at("r").get<int>();
    f.lambda0 = partition_from_json(j.at("lambda0"));
    f.t = j.at("t").get<int>();
    f.levi = j.at("levi").get<std::string>();
    return f;
}

std::string table_text(const std::vector<SeriesRow>& rows) {
    constexpr std::size_t kCols = 7;
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"lambda", "t", "tau", "k", "r", "lambda0", "support"});
    for (const SeriesRow& row : rows) {
        cells.push_back({partition_str(row.lambda), std::to_string(row.support.t),
                         bipartition_str(row.tau_cb), std::to_string(row.support.k),
                         std::to_string(row.support.r), partition_str(row.support.lambda0),
                         levi_string(row.support)});
    }
    std::vector<std::size_t> width(kCols, 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < kCols; ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < kCols; ++c) {
            if (c) os << "  ";
            os << line[c];
            if (c + 1 < kCols) os << std::string(width[c] - line[c].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json table_json(int n, int e, const std::string& filter,
                          const std::vector<SeriesRow>& rows) {
    nlohmann::json j;
    j["format-version"] = "1";
    j["e"] = e;
    j["n"] = n;
    j["filter"] = filter;
    j["rows"] = nlohmann::json::array();
    for (const SeriesRow& row : rows) {
        nlohmann::json r;
        r["lambda"] = partition_json(row.lambda);
        r["t"] = row.support.t;
        r["tau"] = bipartition_json(row.tau_cb);
        r["k"] = row.support.k;
        r["r"] = row.support.r;
        r["support"] = support_json(row.support);
        j["rows"].push_back(r);
    }
    return j;
}

}  // namespace fockcr
