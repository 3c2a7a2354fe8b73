#pragma once

#include "colorings.hpp"
#include "complex.hpp"
#include "poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace vhx {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay numbers; larger ones become strings.
inline json big_json(const BigInt& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

template <class Tag>
json poly_json(const BasicPoly<Tag>& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms()) terms.push_back(json::array({e, big_json(c)}));
    return json{{"var", BasicPoly<Tag>::var()}, {"terms", terms}};
}

inline json rank_table_json(int n, const RankTable& t) {
    json ranks = json::array();
    for (auto& [ij, r] : t) ranks.push_back(json::array({ij.first, ij.second, r}));
    return json{{"n", n}, {"ranks", ranks}};
}

inline json filtered_json(const FilteredRanks& f) {
    json ranks = json::array();
    for (auto& r : f.ranks) ranks.push_back(big_json(r));
    return json{{"n", f.n}, {"ranks", ranks}, {"euler", big_json(f.euler())}, {"tm", big_json(f.total())}};
}

/// Grid with j down the rows (largest first) and i across, blank for zero.
inline std::string rank_table_text(const RankTable& t) {
    if (t.empty()) return "(zero)\n";
    int imin = t.begin()->first.first, imax = imin, jmin = t.begin()->first.second, jmax = jmin;
    for (auto& [ij, r] : t) {
        imin = std::min(imin, ij.first);
        imax = std::max(imax, ij.first);
        jmin = std::min(jmin, ij.second);
        jmax = std::max(jmax, ij.second);
    }
    std::ostringstream os;
    const int w = 5;
    os << std::setw(w) << "j\\i";
    for (int i = imin; i <= imax; ++i) os << std::setw(w) << i;
    os << "\n";
    for (int j = jmax; j >= jmin; --j) {
        os << std::setw(w) << j;
        for (int i = imin; i <= imax; ++i) {
            auto it = t.find({i, j});
            if (it == t.end()) os << std::setw(w) << ".";
            else os << std::setw(w) << it->second;
        }
        os << "\n";
    }
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace vhx
