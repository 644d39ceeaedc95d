#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "indexcoding/digraph.hpp"

namespace indexcoding {

struct Receiver {
    int demand;
    std::vector<int> side;  // sorted, excludes the demand
    int multiplicity = 1;

    friend bool operator==(const Receiver& a, const Receiver& b) {
        return a.demand == b.demand && a.side == b.side && a.multiplicity == b.multiplicity;
    }
};

/// Directed hypergraph: one hyperedge per receiver, from its demanded message
/// to its side-information set. Identical (demand, side) pairs deduplicate
/// into a multiplicity count.
class GroupcastInstance {
public:
    GroupcastInstance() : m_(0) {}
    GroupcastInstance(int m, std::vector<Receiver> receivers);

    int message_count() const { return m_; }
    const std::vector<Receiver>& receivers() const { return receivers_; }

    friend bool operator==(const GroupcastInstance& a, const GroupcastInstance& b) {
        return a.m_ == b.m_ && a.receivers_ == b.receivers_;
    }

private:
    int m_;
    std::vector<Receiver> receivers_;
};

/// Edge (u,v) whenever some receiver demands u and holds v.
DiGraph underlying_digraph(const GroupcastInstance& h);

/// One receiver per message, side info = the graph's out-neighbors.
GroupcastInstance unicast_instance(const DiGraph& g);

struct GroupcastPruneResult {
    GroupcastInstance pruned;
    /// (receiver index in the input instance, removed side-information message)
    std::vector<std::pair<int, int>> removed;
    /// The one-shot non-linear setting is not covered by this reduction.
    static constexpr const char* preserved_settings =
        "one-shot linear, asymptotic linear, asymptotic non-linear";
};

/// Drops side-information entries whose underlying edge lies on no directed
/// cycle; the underlying digraph of the result is USCS.
GroupcastPruneResult prune_groupcast(const GroupcastInstance& h);

// --- serialization -----------------------------------------------------------

/// Text format: "m <count>" then "demand <d> side <a1> <a2> ..." per receiver.
GroupcastInstance parse_groupcast_text(std::istream& in);
GroupcastInstance load_groupcast(const std::string& path);
std::string groupcast_to_text(const GroupcastInstance& h);
std::string groupcast_to_json(const GroupcastInstance& h);

}  // namespace indexcoding
