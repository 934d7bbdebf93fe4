#include <sunfind/chordal.hpp>

#include <algorithm>
#include <stdexcept>

namespace sunfind {

namespace {
    std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    bool simplicial_in(const Graph & g, const Bitset & alive, Vertex v)
    {
        auto nbrs = g.neighbor_bits(v) & alive;
        bool ok = true;
        nbrs.for_each([&](std::size_t y) {
            if (! ok)
                return;
            auto others = nbrs;
            others.reset(y);
            if (! others.is_subset_of(g.neighbor_bits(static_cast<Vertex>(y))))
                ok = false;
        });
        return ok;
    }

    bool simple_in(const Graph & g, const Bitset & alive, Vertex v)
    {
        std::vector<std::pair<std::size_t, Bitset>> closed;
        (g.neighbor_bits(v) & alive).for_each([&](std::size_t y) {
            auto nb = g.neighbor_bits(static_cast<Vertex>(y)) & alive;
            nb.set(y);
            closed.emplace_back(y, std::move(nb));
        });
        std::stable_sort(closed.begin(), closed.end(), [](const auto & a, const auto & b) {
            return a.second.count() < b.second.count();
        });
        for (std::size_t i = 0; i + 1 < closed.size(); ++i)
            if (! closed[i].second.is_subset_of(closed[i + 1].second))
                return false;
        return true;
    }

    bool qualifies(const Graph & g, const Bitset & alive, Vertex v, EliminationKind kind)
    {
        return kind == EliminationKind::simplicial ? simplicial_in(g, alive, v) : simple_in(g, alive, v);
    }

    class InducedCycleFinder {
    public:
        InducedCycleFinder(const Graph & g, int min_length) : g_(g), min_length_(static_cast<std::size_t>(min_length)) {}

        std::optional<std::vector<Vertex>> run()
        {
            auto n = idx(g_.order());
            for (Vertex s = 0; s < g_.order(); ++s) {
                allowed_ = Bitset(n);
                for (auto v = idx(s) + 1; v < n; ++v)
                    allowed_.set(v);
                path_.assign(1, s);
                for (Vertex p : g_.neighbors(s)) {
                    if (p < s)
                        continue;
                    path_.push_back(p);
                    Bitset blocked(n);
                    blocked.set(idx(s));
                    blocked.set(idx(p));
                    if (extend(blocked))
                        return path_;
                    path_.pop_back();
                }
            }
            return std::nullopt;
        }

    private:
        // `blocked` covers the path and the closed neighbourhoods of its interior.
        bool extend(const Bitset & blocked)
        {
            Vertex start = path_.front();
            Vertex last = path_.back();
            auto next_blocked = blocked | g_.neighbor_bits(last);
            next_blocked.set(idx(last));

            auto options = g_.neighbor_bits(last) & allowed_;
            options.subtract(blocked);
            for (auto x = options.first(); x < options.capacity(); x = options.next(x + 1)) {
                auto xv = static_cast<Vertex>(x);
                path_.push_back(xv);
                if (g_.adjacent(xv, start)) {
                    if (path_.size() >= min_length_)
                        return true;
                }
                else if (extend(next_blocked)) {
                    return true;
                }
                path_.pop_back();
            }
            return false;
        }

        const Graph & g_;
        std::size_t min_length_;
        Bitset allowed_;
        std::vector<Vertex> path_;
    };
}

bool is_simplicial(const Graph & g, Vertex v)
{
    Bitset all(idx(g.order()));
    all.set_all();
    return simplicial_in(g, all, v);
}

bool is_simple_vertex(const Graph & g, Vertex v)
{
    Bitset all(idx(g.order()));
    all.set_all();
    return simple_in(g, all, v);
}

std::optional<EliminationOrdering> find_elimination_ordering(const Graph & g, EliminationKind kind)
{
    Bitset alive(idx(g.order()));
    alive.set_all();
    EliminationOrdering result{{}, kind};
    result.order.reserve(idx(g.order()));
    while (alive.any()) {
        std::size_t pick = alive.capacity();
        for (auto v = alive.first(); v < alive.capacity(); v = alive.next(v + 1))
            if (qualifies(g, alive, static_cast<Vertex>(v), kind)) {
                pick = v;
                break;
            }
        if (pick == alive.capacity())
            return std::nullopt;
        result.order.push_back(static_cast<Vertex>(pick));
        alive.reset(pick);
    }
    return result;
}

bool is_chordal(const Graph & g)
{
    return find_elimination_ordering(g, EliminationKind::simplicial).has_value();
}

bool is_strongly_chordal(const Graph & g)
{
    return find_elimination_ordering(g, EliminationKind::simple).has_value();
}

bool verify_elimination_ordering(const Graph & g, const EliminationOrdering & ordering)
{
    auto n = idx(g.order());
    if (ordering.order.size() != n)
        return false;
    Bitset alive(n);
    alive.set_all();
    for (Vertex v : ordering.order) {
        if (! g.contains(v) || ! alive.test(idx(v)))
            return false;
        if (! qualifies(g, alive, v, ordering.kind))
            return false;
        alive.reset(idx(v));
    }
    return true;
}

std::optional<HoleCertificate> find_hole(const Graph & g)
{
    if (auto cycle = InducedCycleFinder(g, 4).run())
        return HoleCertificate{std::move(*cycle), CycleKind::hole};
    return std::nullopt;
}

std::optional<HoleCertificate> find_antihole_geq(const Graph & g, int min_length)
{
    if (min_length < 5)
        throw std::invalid_argument("antihole length floor must be at least 5");
    if (auto cycle = InducedCycleFinder(complement(g), min_length).run())
        return HoleCertificate{std::move(*cycle), CycleKind::antihole};
    return std::nullopt;
}

bool verify_hole_certificate(const Graph & g, const HoleCertificate & cert)
{
    const auto & c = cert.cycle;
    auto len = c.size();
    if (len < (cert.kind == CycleKind::hole ? 4U : 5U))
        return false;
    for (Vertex v : c)
        if (! g.contains(v))
            return false;
    std::vector<Vertex> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;

    bool want_edge_on_cycle = cert.kind == CycleKind::hole;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            bool edge = g.adjacent(c[i], c[j]);
            if (edge != (consecutive == want_edge_on_cycle))
                return false;
        }
    return true;
}

} // namespace sunfind
