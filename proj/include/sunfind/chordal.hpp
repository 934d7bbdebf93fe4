#ifndef SUNFIND_CHORDAL_HPP
#define SUNFIND_CHORDAL_HPP

#include <sunfind/graph.hpp>

#include <optional>
#include <vector>

namespace sunfind {

enum class EliminationKind { simplicial, simple };

/// order[i] is eliminated i-th; it satisfies the kind's predicate in the graph induced
/// by order[i..].
struct EliminationOrdering {
    std::vector<Vertex> order;
    EliminationKind kind;
};

enum class CycleKind { hole, antihole };

/// For a hole, `cycle` is an induced cycle of g. For an antihole it is an induced cycle
/// of complement(g).
struct HoleCertificate {
    std::vector<Vertex> cycle;
    CycleKind kind;
};

bool is_simplicial(const Graph & g, Vertex v);

/// The closed neighbourhoods of v's neighbours form an inclusion chain.
bool is_simple_vertex(const Graph & g, Vertex v);

/// Greedy elimination, least qualifying vertex first. Both classes are hereditary and
/// always have a qualifying vertex, so a stuck residual graph certifies non-membership.
std::optional<EliminationOrdering> find_elimination_ordering(const Graph & g, EliminationKind kind);

bool is_chordal(const Graph & g);
bool is_strongly_chordal(const Graph & g);

bool verify_elimination_ordering(const Graph & g, const EliminationOrdering & ordering);

/// Some induced cycle of length >= 4, found by extending induced paths from each
/// start vertex.
std::optional<HoleCertificate> find_hole(const Graph & g);

/// An induced cycle of length >= min_length in complement(g), reported as an
/// antihole of g. Throws std::invalid_argument if min_length < 5.
std::optional<HoleCertificate> find_antihole_geq(const Graph & g, int min_length);

bool verify_hole_certificate(const Graph & g, const HoleCertificate & cert);

} // namespace sunfind

#endif
