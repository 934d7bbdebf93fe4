#ifndef SUNFIND_ORACLES_HPP
#define SUNFIND_ORACLES_HPP

#include <sunfind/graph.hpp>

#include <cstdint>

// Reference solvers that the equivalence checks are measured against. They share no
// search code with sun.cpp on purpose; keep them plain.

namespace sunfind {

struct OracleResult {
    VertexSet best;
    std::size_t size = 0;
    std::uint64_t nodes_explored = 0;
};

/// Exact maximum stable set by branch and bound (branch on a highest-degree vertex,
/// bound by the number of vertices left).
OracleResult max_stable_set(const Graph & g);
OracleResult max_clique(const Graph & g);

bool has_stable_set(const Graph & g, std::size_t k);
bool has_clique(const Graph & g, std::size_t k);

/// Does any 2t-subset of g induce a t-sun? Tries every subset; for t >= 4 the ears are
/// forced to be the induced degree-two vertices, for t = 3 every split is tried.
/// Throws std::invalid_argument unless t >= 3 and 2t <= n.
bool brute_force_sun_check(const Graph & g, int t);

} // namespace sunfind

#endif
