#ifndef SUNFIND_SUN_HPP
#define SUNFIND_SUN_HPP

#include <sunfind/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sunfind {

/// A claimed induced t-sun: ears[i] sees exactly hub[i] and hub[(i + 1) % t].
struct SunWitness {
    std::vector<Vertex> hub;
    std::vector<Vertex> ears;

    int order() const { return static_cast<int>(hub.size()); }
    bool operator==(const SunWitness &) const = default;
};

inline constexpr std::uint64_t default_max_nodes = 10'000'000;

struct SearchBudget {
    std::uint64_t max_nodes = default_max_nodes;
};

enum class SearchStatus { found, absent, indeterminate };

struct SunSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<SunWitness> witness;
    std::uint64_t nodes_used = 0;
};

struct SunEnumeration {
    std::vector<SunWitness> witnesses;
    /// False if the budget ran out before every sun was visited. Stopping at `limit`
    /// still counts as complete for the witnesses returned.
    bool completed = true;
    std::uint64_t nodes_used = 0;
};

/// The t-sun on 2t vertices: hub 0..t-1, ear t+i attached to hub i and hub (i+1) % t.
Graph make_sun(int t);
SunWitness natural_sun_witness(int t);

/// True iff the witness vertices induce exactly a t-sun in g with the given labelling.
/// Malformed witnesses (t < 3, size mismatch, repeated vertices) are simply false.
/// Throws std::out_of_range for a vertex outside g.
bool verify_sun_witness(const Graph & g, const SunWitness & w);

/// Rotates so hub[0] is the least hub vertex, and reflects if needed so hub[1] is the
/// smaller of hub[0]'s two cycle neighbours.
SunWitness canonicalize(const SunWitness & w);

/// Exact search for an induced t-sun. Throws std::invalid_argument if t < 3.
SunSearchResult find_k_sun(const Graph & g, int t, SearchBudget budget = {});

/// find_k_sun for t = 3 .. n/2 under one shared budget.
SunSearchResult find_any_sun(const Graph & g, SearchBudget budget = {});

/// Every canonical induced sun of every order, up to `limit` witnesses.
SunEnumeration enumerate_suns(const Graph & g, std::size_t limit, SearchBudget budget = {});

/// "t\nhub...\nears...\n", "ABSENT\n" or "INDETERMINATE <nodes>\n".
std::string format_search_result(const SunSearchResult & r);
std::string format_witness(const SunWitness & w);

} // namespace sunfind

#endif
