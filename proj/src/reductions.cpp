#include <sunfind/reductions.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace sunfind {

TriangleError::TriangleError(VertexSet triangle) :
    std::invalid_argument("source graph has a triangle " + std::to_string(triangle[0]) + " " +
                          std::to_string(triangle[1]) + " " + std::to_string(triangle[2])),
    triangle_(std::move(triangle))
{
}

LabelMap::LabelMap(std::vector<Role> roles) : roles_(std::move(roles))
{
    for (std::size_t v = 0; v < roles_.size(); ++v)
        if (! index_.emplace(roles_[v], static_cast<Vertex>(v)).second)
            throw std::invalid_argument("role assigned to two vertices");
}

std::optional<Vertex> LabelMap::vertex(const Role & r) const
{
    auto it = index_.find(r);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

namespace {
    std::string describe(const Role & r)
    {
        switch (r.kind) {
        case RoleKind::sub: return "SUB " + std::to_string(r.a) + " " + std::to_string(r.b);
        case RoleKind::u: return "U " + std::to_string(r.a);
        case RoleKind::w: return "W " + std::to_string(r.a);
        case RoleKind::x: return "X " + std::to_string(r.a);
        case RoleKind::orig: return "ORIG " + std::to_string(r.a);
        case RoleKind::ear_edge: return "EAR " + std::to_string(r.a) + " " + std::to_string(r.b);
        }
        return {};
    }

    bool in_w(const Role & r) { return r.kind == RoleKind::u || r.kind == RoleKind::w; }

    void require_kind(const ReductionInstance & inst, ReductionKind kind)
    {
        if (inst.kind != kind)
            throw std::invalid_argument(kind == ReductionKind::f ? "expected an f(G, k) instance" : "expected an h(G) instance");
    }

    void require_sun(const ReductionInstance & inst, const SunWitness & w)
    {
        bool ok = false;
        try {
            ok = verify_sun_witness(inst.product, w);
        }
        catch (const std::out_of_range & e) {
            throw InvalidWitness(e.what());
        }
        if (! ok)
            throw InvalidWitness("witness does not induce a sun in the product");
    }
}

ReductionInstance build_f(const Graph & g, int k)
{
    if (k < 4)
        throw std::invalid_argument("f(G, k) requires k >= 4");
    if (auto tri = find_triangle(g))
        throw TriangleError(*tri);

    int n = g.order();
    int block = n * k;
    auto sub = [&](int i, int j) { return (i - 1) * k + (j - 1); };
    auto u = [&](int i) { return block + 2 * (i - 1); };
    auto w = [&](int i) { return block + 2 * (i - 1) + 1; };
    auto x = [&](int i) { return block + 2 * k + (i - 1); };

    std::vector<Role> roles;
    roles.reserve(static_cast<std::size_t>(block + 3 * k));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            roles.push_back({RoleKind::sub, i, j});
    for (int i = 1; i <= k; ++i) {
        roles.push_back({RoleKind::u, i, 0});
        roles.push_back({RoleKind::w, i, 0});
    }
    for (int i = 1; i <= k; ++i)
        roles.push_back({RoleKind::x, i, 0});

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                edges.push_back({sub(i, a), sub(i, b)});
    for (auto [p, q] : g.edges())
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                edges.push_back({sub(p + 1, a), sub(q + 1, b)});
    for (Vertex a = block; a < block + 2 * k; ++a)
        for (Vertex b = a + 1; b < block + 2 * k; ++b)
            edges.push_back({a, b});
    for (int i = 1; i <= k; ++i) {
        edges.push_back({x(i), w(i)});
        edges.push_back({x(i), u(i % k + 1)});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            edges.push_back({sub(i, j), u(j)});
            edges.push_back({sub(i, j), w(j)});
        }

    return {g, k, Graph(block + 3 * k, edges), LabelMap(std::move(roles)), ReductionKind::f};
}

SunWitness witness_from_stable_set(const ReductionInstance & inst, const VertexSet & s)
{
    require_kind(inst, ReductionKind::f);
    if (static_cast<int>(s.size()) != inst.k)
        throw std::invalid_argument("stable set must have exactly k = " + std::to_string(inst.k) + " vertices");
    for (Vertex v : s)
        if (! inst.source.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in source graph");
    if (! is_stable(inst.source, s))
        throw std::invalid_argument("vertex set is not stable in the source graph");

    auto at = [&](Role r) { return *inst.labels.vertex(r); };
    SunWitness w;
    for (int i = 1; i <= inst.k; ++i) {
        w.hub.push_back(at({RoleKind::u, i, 0}));
        w.hub.push_back(at({RoleKind::w, i, 0}));
        w.ears.push_back(at({RoleKind::sub, s[static_cast<std::size_t>(i - 1)] + 1, i}));
        w.ears.push_back(at({RoleKind::x, i, 0}));
    }
    return w;
}

std::optional<std::string> f_sun_shape_violation(const ReductionInstance & inst, const SunWitness & w)
{
    auto t = w.hub.size();
    if (static_cast<int>(t) != 2 * inst.k || w.ears.size() != t)
        return "sun has order " + std::to_string(t) + ", expected 2k = " + std::to_string(2 * inst.k);

    std::size_t sub_ears = 0, x_ears = 0;
    for (std::size_t i = 0; i < t; ++i) {
        const auto & r = inst.labels.role(w.ears[i]);
        if (r.kind == RoleKind::sub)
            ++sub_ears;
        else if (r.kind == RoleKind::x)
            ++x_ears;
        else
            return "ear " + std::to_string(w.ears[i]) + " has role " + describe(r) + ", outside the V_i and X";
    }
    if (sub_ears != static_cast<std::size_t>(inst.k) || x_ears != static_cast<std::size_t>(inst.k))
        return std::to_string(sub_ears) + " ears in the V_i and " + std::to_string(x_ears) + " in X, expected k each";
    for (std::size_t i = 0; i < t; ++i)
        if (inst.labels.role(w.ears[i]).kind == inst.labels.role(w.ears[(i + 1) % t]).kind)
            return "ears " + std::to_string(w.ears[i]) + " and " + std::to_string(w.ears[(i + 1) % t]) +
                   " are consecutive but of the same kind";
    for (Vertex c : w.hub)
        if (! in_w(inst.labels.role(c)))
            return "hub vertex " + std::to_string(c) + " has role " + describe(inst.labels.role(c)) + ", outside W";
    return std::nullopt;
}

VertexSet stable_set_from_witness(const ReductionInstance & inst, const SunWitness & w)
{
    require_kind(inst, ReductionKind::f);
    require_sun(inst, w);
    if (auto violation = f_sun_shape_violation(inst, w))
        throw TheoremViolation(*violation);

    std::vector<Vertex> picked;
    for (Vertex e : w.ears) {
        const auto & r = inst.labels.role(e);
        if (r.kind == RoleKind::sub)
            picked.push_back(r.a - 1);
    }
    std::sort(picked.begin(), picked.end());
    if (std::adjacent_find(picked.begin(), picked.end()) != picked.end())
        throw TheoremViolation("two ears lie in the same clique V_i");
    VertexSet result(std::move(picked));
    if (! is_stable(inst.source, result))
        throw TheoremViolation("ear cliques do not correspond to a stable set of the source");
    return result;
}

ReductionInstance build_h(const Graph & g)
{
    int n = g.order();
    auto source_edges = g.edges();
    std::vector<Role> roles;
    for (int v = 0; v < n; ++v)
        roles.push_back({RoleKind::orig, v, 0});
    std::vector<Edge> edges = source_edges;
    for (std::size_t i = 0; i < source_edges.size(); ++i) {
        auto [a, b] = source_edges[i];
        auto ear = n + static_cast<Vertex>(i);
        roles.push_back({RoleKind::ear_edge, a, b});
        edges.push_back({a, ear});
        edges.push_back({b, ear});
    }
    auto total = n + static_cast<int>(source_edges.size());
    return {g, 0, Graph(total, edges), LabelMap(std::move(roles)), ReductionKind::h};
}

SunWitness sun_from_clique(const ReductionInstance & inst, const VertexSet & c)
{
    require_kind(inst, ReductionKind::h);
    if (c.size() < 3)
        throw std::invalid_argument("a sun needs a clique of at least 3 vertices");
    for (Vertex v : c)
        if (! inst.source.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in source graph");
    if (! is_clique(inst.source, c))
        throw std::invalid_argument("vertex set is not a clique of the source graph");

    SunWitness w;
    auto t = c.size();
    for (std::size_t i = 0; i < t; ++i) {
        auto a = c[i], b = c[(i + 1) % t];
        w.hub.push_back(*inst.labels.vertex({RoleKind::orig, a, 0}));
        w.ears.push_back(*inst.labels.vertex({RoleKind::ear_edge, std::min(a, b), std::max(a, b)}));
    }
    return w;
}

VertexSet clique_from_sun(const ReductionInstance & inst, const SunWitness & w)
{
    require_kind(inst, ReductionKind::h);
    require_sun(inst, w);
    std::vector<Vertex> hub;
    for (Vertex c : w.hub) {
        const auto & r = inst.labels.role(c);
        if (r.kind != RoleKind::orig)
            throw TheoremViolation("hub vertex " + std::to_string(c) + " is the edge vertex " + describe(r));
        hub.push_back(r.a);
    }
    VertexSet result(std::move(hub));
    if (! is_clique(inst.source, result))
        throw TheoremViolation("sun hub is not a clique of the source graph");
    return result;
}

std::optional<VertexSet> observation1_violation(const ReductionInstance & inst)
{
    require_kind(inst, ReductionKind::f);
    const auto & g = inst.product;
    int subs = inst.source.order() * inst.k;
    auto block_of = [&](Vertex v) { return inst.labels.role(v).a; };
    for (Vertex a = 0; a < subs; ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a || b >= subs || block_of(a) == block_of(b))
                continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= b || c >= subs || ! g.adjacent(a, c))
                    continue;
                if (block_of(c) != block_of(a) && block_of(c) != block_of(b))
                    return VertexSet{a, b, c};
            }
        }
    return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> observation2_violation(const ReductionInstance & inst)
{
    require_kind(inst, ReductionKind::f);
    const auto & g = inst.product;
    auto n = static_cast<std::size_t>(g.order());
    Bitset w_bits(n);
    for (Vertex v = 0; v < g.order(); ++v)
        if (in_w(inst.labels.role(v)))
            w_bits.set(static_cast<std::size_t>(v));
    int subs = inst.source.order() * inst.k;
    for (Vertex x = 0; x < subs; ++x)
        for (Vertex y = x + 1; y < subs; ++y) {
            if (inst.labels.role(x).a == inst.labels.role(y).a)
                continue;
            auto wx = g.neighbor_bits(x) & w_bits;
            auto wy = g.neighbor_bits(y) & w_bits;
            if (wx.intersects(wy) && wx != wy)
                return std::pair{x, y};
        }
    return std::nullopt;
}

std::string emit_labels(const LabelMap & labels)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < labels.size(); ++v)
        out << v << ' ' << describe(labels.roles()[v]) << '\n';
    return out.str();
}

LabelMap parse_labels(std::string_view text)
{
    std::vector<Role> roles;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.starts_with('#'))
            continue;
        std::istringstream fields(line);
        long long index = -1;
        std::string tag;
        if (! (fields >> index >> tag))
            throw ParseError(line_no, "expected \"<index> <ROLE> ...\"");
        if (index != static_cast<long long>(roles.size()))
            throw ParseError(line_no, "vertex index " + std::to_string(index) + " out of sequence");

        Role r{RoleKind::sub};
        int arity = 1;
        if (tag == "SUB") { r.kind = RoleKind::sub; arity = 2; }
        else if (tag == "U") r.kind = RoleKind::u;
        else if (tag == "W") r.kind = RoleKind::w;
        else if (tag == "X") r.kind = RoleKind::x;
        else if (tag == "ORIG") r.kind = RoleKind::orig;
        else if (tag == "EAR") { r.kind = RoleKind::ear_edge; arity = 2; }
        else
            throw ParseError(line_no, "unknown role " + tag);

        if (! (fields >> r.a) || (arity == 2 && ! (fields >> r.b)))
            throw ParseError(line_no, "missing role argument");
        std::string extra;
        if (fields >> extra)
            throw ParseError(line_no, "trailing text after role");
        roles.push_back(r);
    }
    try {
        return LabelMap(std::move(roles));
    }
    catch (const std::invalid_argument & e) {
        throw ParseError(line_no, e.what());
    }
}

} // namespace sunfind
