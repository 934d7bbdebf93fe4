#include <sunfind/graph.hpp>

#include "random.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sunfind {

ParseError::ParseError(std::size_t line, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ": " + what),
    line_(line)
{
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("vertex set has a repeated member");
    if (! members_.empty() && members_.front() < 0)
        throw std::invalid_argument("vertex set has a negative member");
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    auto un = static_cast<std::size_t>(n);
    adj_.resize(un);
    rows_.assign(un, Bitset(un));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " has an endpoint outside [0, n)");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto & row = rows_[static_cast<std::size_t>(u)];
        if (row.test(static_cast<std::size_t>(v)))
            continue;
        row.set(static_cast<std::size_t>(v));
        rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++m_;
    }
    for (std::size_t v = 0; v < un; ++v) {
        adj_[v].reserve(rows_[v].count());
        rows_[v].for_each([&](std::size_t w) { adj_[v].push_back(static_cast<Vertex>(w)); });
    }
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                result.push_back({u, v});
    return result;
}

namespace {
    bool is_blank(std::string_view s)
    {
        return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
    }

    // Parses exactly two non-negative integers separated by whitespace.
    std::optional<std::pair<long long, long long>> parse_pair(std::string_view s)
    {
        long long vals[2];
        std::size_t pos = 0;
        for (auto & val : vals) {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
                ++pos;
            auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), val);
            if (ec != std::errc{} || val < 0)
                return std::nullopt;
            pos = static_cast<std::size_t>(ptr - s.data());
        }
        if (! is_blank(s.substr(pos)))
            return std::nullopt;
        return std::pair{vals[0], vals[1]};
    }
}

Graph parse_graph(std::string_view text)
{
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (line.starts_with('#') || is_blank(line))
            continue;
        auto nums = parse_pair(line);
        if (! nums)
            throw ParseError(line_no, "expected two non-negative integers");
        if (! header) {
            if (nums->first > 100'000'000)
                throw ParseError(line_no, "vertex count too large");
            header = nums;
            continue;
        }
        if (static_cast<long long>(edges.size()) == header->second)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(header->second));
        auto [u, v] = *nums;
        if (u >= header->first || v >= header->first)
            throw ParseError(line_no, "endpoint out of range for n = " + std::to_string(header->first));
        if (u == v)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (! header)
        throw ParseError(std::max<std::size_t>(line_no, 1), "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != header->second)
        throw ParseError(line_no, "declared " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(header->first), edges);
}

std::string emit_graph(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s)
{
    for (Vertex v : s)
        if (! g.contains(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return {Graph(static_cast<int>(s.size()), edges), s.members()};
}

Graph complement(const Graph & g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                edges.push_back({u, v});
    return Graph(g.order(), edges);
}

bool is_clique(const Graph & g, const VertexSet & s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (! g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_stable(const Graph & g, const VertexSet & s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

std::optional<VertexSet> find_triangle(const Graph & g)
{
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a)
                continue;
            auto common = g.neighbor_bits(a) & g.neighbor_bits(b);
            auto c = common.next(static_cast<std::size_t>(b) + 1);
            if (c < common.capacity())
                return VertexSet{a, b, static_cast<Vertex>(c)};
        }
    return std::nullopt;
}

std::size_t pair_count(int n)
{
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

namespace {
    Edge pair_at(int n, std::size_t index)
    {
        for (Vertex u = 0; u < n; ++u) {
            auto row = static_cast<std::size_t>(n - 1 - u);
            if (index < row)
                return {u, u + 1 + static_cast<Vertex>(index)};
            index -= row;
        }
        throw std::out_of_range("pair index");
    }
}

Graph random_triangle_free(int n, std::size_t target_edges, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_triangle_free needs n >= 1");
    detail::Rng rng(seed);
    auto pairs = pair_count(n);
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    std::vector<Edge> edges;
    if (pairs == 0)
        return Graph(n, edges);

    for (std::size_t attempt = 0; attempt < 50 * target_edges && edges.size() < target_edges; ++attempt) {
        auto [u, v] = pair_at(n, detail::draw_below(rng, pairs));
        auto & ru = rows[static_cast<std::size_t>(u)];
        auto & rv = rows[static_cast<std::size_t>(v)];
        if (ru.test(static_cast<std::size_t>(v)) || ru.intersects(rv))
            continue;
        ru.set(static_cast<std::size_t>(v));
        rv.set(static_cast<std::size_t>(u));
        edges.push_back({u, v});
    }
    return Graph(n, edges);
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (detail::draw_unit(rng) < edge_probability)
                edges.push_back({u, v});
    return Graph(n, edges);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    if (pair_count(n) > 64)
        throw std::invalid_argument("edge mask supports at most 64 vertex pairs");
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U)
                edges.push_back({u, v});
    return Graph(n, edges);
}

namespace graphs {
    Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }

    Graph complete(int n)
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, edges);
    }

    Graph path(int n)
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return Graph(n, edges);
    }

    Graph cycle(int n)
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            edges.push_back({v, (v + 1) % n});
        return Graph(n, edges);
    }

    Graph petersen()
    {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({i + 5, (i + 2) % 5 + 5});
        }
        return Graph(10, edges);
    }

    Graph domino()
    {
        // rows 0-1-2 and 3-4-5 joined by rungs 0-3, 1-4, 2-5
        return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    }
}

} // namespace sunfind
