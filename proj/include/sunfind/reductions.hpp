#ifndef SUNFIND_REDUCTIONS_HPP
#define SUNFIND_REDUCTIONS_HPP

#include <sunfind/graph.hpp>
#include <sunfind/sun.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sunfind {

/// Raised when a witness handed to a translator is not a valid sun of the product.
class InvalidWitness : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a proved property of a gadget fails on a concrete instance.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// build_f was handed a graph with a triangle.
class TriangleError : public std::invalid_argument {
public:
    explicit TriangleError(VertexSet triangle);
    const VertexSet & triangle() const { return triangle_; }

private:
    VertexSet triangle_;
};

enum class RoleKind { sub, u, w, x, orig, ear_edge };

/// Role of a product vertex. Gadget subscripts (sub, u, w, x) are 1-based; orig and
/// ear_edge name 0-based source vertices.
///   sub:      a = i, b = j   (copy j of source vertex i)
///   u, w, x:  a = i
///   orig:     a = v
///   ear_edge: a < b, the source edge ab
struct Role {
    RoleKind kind;
    int a = 0;
    int b = 0;

    auto operator<=>(const Role &) const = default;
};

/// Bijection between product vertices and roles.
class LabelMap {
public:
    LabelMap() = default;
    /// roles[v] is the role of vertex v. Throws std::invalid_argument on a repeated role.
    explicit LabelMap(std::vector<Role> roles);

    std::size_t size() const { return roles_.size(); }
    const Role & role(Vertex v) const { return roles_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> vertex(const Role & r) const;
    const std::vector<Role> & roles() const { return roles_; }

    bool operator==(const LabelMap & other) const { return roles_ == other.roles_; }

private:
    std::vector<Role> roles_;
    std::map<Role, Vertex> index_;
};

enum class ReductionKind { f, h };

struct ReductionInstance {
    Graph source;
    /// The stable-set size for f; unused (0) for h.
    int k = 0;
    Graph product;
    LabelMap labels;
    ReductionKind kind;
};

/// Stable-set gadget: substitutes a k-clique V_i for each source vertex, adds the clique
/// W = {u_1, w_1, ..., u_k, w_k} and the stable set X = {x_1, ..., x_k}, with x_i seeing
/// w_i and u_{i mod k + 1}, and v_i^j seeing u_j and w_j.
/// Vertices: sub(i, j) -> (i-1)k + (j-1), then u_1, w_1, ..., u_k, w_k, then x_1..x_k.
/// Throws TriangleError if g has a triangle and std::invalid_argument if k < 4.
ReductionInstance build_f(const Graph & g, int k);

/// The 2k-sun on W whose ears alternate between X and one copy from each V_i of a
/// stable set. Throws std::invalid_argument unless s is a stable k-set of the source.
SunWitness witness_from_stable_set(const ReductionInstance & inst, const VertexSet & s);

/// Source vertices whose cliques hold the ears of w. Throws InvalidWitness if w is not
/// a sun of the product and TheoremViolation if its shape or the extracted set is wrong.
VertexSet stable_set_from_witness(const ReductionInstance & inst, const SunWitness & w);

/// Checks the structure every sun of f(G, k) must have: order 2k, k ears in the V_i and
/// k in X alternating around the hub, and the hub inside W. Returns a description of
/// the first violation. Does not check that w is a sun.
std::optional<std::string> f_sun_shape_violation(const ReductionInstance & inst, const SunWitness & w);

/// Clique gadget: keeps the source and adds a degree-two vertex on each edge.
/// Vertices: originals, then one ear vertex per edge in ascending (a, b) order.
ReductionInstance build_h(const Graph & g);

/// Throws std::invalid_argument unless c is a clique of the source with |c| >= 3.
SunWitness sun_from_clique(const ReductionInstance & inst, const VertexSet & c);

/// Throws InvalidWitness if w is not a sun of the product and TheoremViolation if its
/// hub is not a clique of original vertices.
VertexSet clique_from_sun(const ReductionInstance & inst, const SunWitness & w);

/// Triangle of the product with its vertices in three distinct V_i, if any.
std::optional<VertexSet> observation1_violation(const ReductionInstance & inst);

/// Pair x in V_i, y in V_j, i != j, with a common neighbour in W but different
/// neighbourhoods in W, if any.
std::optional<std::pair<Vertex, Vertex>> observation2_violation(const ReductionInstance & inst);

/// One line per vertex: "<index> SUB <i> <j>", "<index> U <i>", "<index> W <i>",
/// "<index> X <i>", "<index> ORIG <v>" or "<index> EAR <a> <b>".
std::string emit_labels(const LabelMap & labels);
/// Throws ParseError on malformed lines, out-of-order indices or repeated roles.
LabelMap parse_labels(std::string_view text);

} // namespace sunfind

#endif
