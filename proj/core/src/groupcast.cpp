#include "indexcoding/groupcast.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indexcoding {

GroupcastInstance::GroupcastInstance(int m, std::vector<Receiver> receivers) : m_(m) {
    if (m < 0) throw std::invalid_argument("negative message count");
    std::map<std::pair<int, std::vector<int>>, int> dedup;
    for (auto& r : receivers) {
        if (r.demand < 1 || r.demand > m) throw std::invalid_argument("demand out of range");
        std::sort(r.side.begin(), r.side.end());
        r.side.erase(std::unique(r.side.begin(), r.side.end()), r.side.end());
        for (int a : r.side) {
            if (a < 1 || a > m) throw std::invalid_argument("side-information index out of range");
            if (a == r.demand) throw std::invalid_argument("receiver holds its own demand");
        }
        if (r.multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
        dedup[{r.demand, r.side}] += r.multiplicity;
    }
    for (const auto& [key, mult] : dedup) receivers_.push_back({key.first, key.second, mult});
}

DiGraph underlying_digraph(const GroupcastInstance& h) {
    std::vector<Edge> es;
    for (const auto& r : h.receivers())
        for (int a : r.side) es.push_back({r.demand, a});
    return DiGraph(h.message_count(), std::move(es));
}

GroupcastInstance unicast_instance(const DiGraph& g) {
    std::vector<Receiver> rs;
    for (int v = 1; v <= g.vertex_count(); ++v) rs.push_back({v, g.out_neighbors(v), 1});
    return GroupcastInstance(g.vertex_count(), std::move(rs));
}

GroupcastPruneResult prune_groupcast(const GroupcastInstance& h) {
    DiGraph g = underlying_digraph(h);
    SccPartition p = strongly_connected_components(g);
    // one pass suffices: intra-SCC edges keep their cycles once the cross
    // edges disappear, so the result is already USCS
    std::vector<Receiver> pruned;
    std::vector<std::pair<int, int>> removed;
    const auto& rs = h.receivers();
    for (size_t idx = 0; idx < rs.size(); ++idx) {
        Receiver r = rs[idx];
        std::vector<int> keep;
        for (int a : r.side) {
            if (p.component_of[r.demand] == p.component_of[a])
                keep.push_back(a);
            else
                removed.push_back({(int)idx, a});
        }
        r.side = std::move(keep);
        pruned.push_back(std::move(r));
    }
    return {GroupcastInstance(h.message_count(), std::move(pruned)), std::move(removed)};
}

// --- serialization -------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

GroupcastInstance parse_groupcast_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int m = -1;
    std::vector<Receiver> rs;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        if (m < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;
            long long count;
            if (tag != "m" || !(ls >> count) || count < 0)
                throw ParseError("expected header \"m <count>\"", lineno);
            m = (int)count;
            continue;
        }
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "demand") throw ParseError("expected \"demand <d> side ...\"", lineno);
        Receiver r;
        if (!(ls >> r.demand)) throw ParseError("missing demand index", lineno);
        std::string side_tag;
        if (ls >> side_tag) {
            if (side_tag != "side") throw ParseError("expected \"side\"", lineno);
            int a;
            while (ls >> a) r.side.push_back(a);
            if (!ls.eof()) throw ParseError("bad side-information index", lineno);
        }
        if (r.demand < 1 || r.demand > m) throw ParseError("demand out of range", lineno);
        for (int a : r.side) {
            if (a < 1 || a > m) throw ParseError("side index out of range", lineno);
            if (a == r.demand) throw ParseError("receiver holds its own demand", lineno);
        }
        rs.push_back(std::move(r));
    }
    if (m < 0) throw ParseError("missing header \"m <count>\"", lineno ? lineno : 1);
    return GroupcastInstance(m, std::move(rs));
}

GroupcastInstance load_groupcast(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    return parse_groupcast_text(in);
}

std::string groupcast_to_text(const GroupcastInstance& h) {
    std::ostringstream os;
    os << "m " << h.message_count() << "\n";
    for (const auto& r : h.receivers()) {
        for (int c = 0; c < r.multiplicity; ++c) {
            os << "demand " << r.demand << " side";
            for (int a : r.side) os << " " << a;
            os << "\n";
        }
    }
    return os.str();
}

std::string groupcast_to_json(const GroupcastInstance& h) {
    nlohmann::ordered_json j;
    j["m"] = h.message_count();
    auto& rs = j["receivers"] = nlohmann::json::array();
    for (const auto& r : h.receivers()) {
        nlohmann::ordered_json jr;
        jr["demand"] = r.demand;
        jr["side"] = r.side;
        jr["multiplicity"] = r.multiplicity;
        rs.push_back(std::move(jr));
    }
    return j.dump();
}

}  // namespace indexcoding
