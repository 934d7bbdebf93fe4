#include <sunfind/oracles.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sunfind {

namespace {
    class StableSetSearch {
    public:
        StableSetSearch(const Graph & g, std::size_t target) : g_(g), target_(target) {}

        OracleResult run()
        {
            Bitset all(static_cast<std::size_t>(g_.order()));
            all.set_all();
            std::vector<Vertex> current;
            branch(current, all);
            return {VertexSet(best_), best_.size(), nodes_};
        }

    private:
        bool done() const { return best_.size() >= target_; }

        void branch(std::vector<Vertex> & current, const Bitset & remaining)
        {
            ++nodes_;
            if (done() || current.size() + remaining.count() <= best_.size())
                return;

            std::size_t pick = remaining.capacity();
            std::size_t pick_degree = 0;
            remaining.for_each([&](std::size_t v) {
                auto d = g_.neighbor_bits(static_cast<Vertex>(v)).intersection_count(remaining);
                if (pick == remaining.capacity() || d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            });

            if (pick == remaining.capacity() || pick_degree == 0) {
                // what is left is already stable
                std::vector<Vertex> candidate = current;
                remaining.for_each([&](std::size_t v) { candidate.push_back(static_cast<Vertex>(v)); });
                if (candidate.size() > best_.size())
                    best_ = std::move(candidate);
                return;
            }

            auto v = static_cast<Vertex>(pick);
            auto without_closed = remaining;
            without_closed.subtract(g_.neighbor_bits(v));
            without_closed.reset(pick);
            current.push_back(v);
            branch(current, without_closed);
            current.pop_back();
            if (done())
                return;

            auto without_v = remaining;
            without_v.reset(pick);
            branch(current, without_v);
        }

        const Graph & g_;
        std::size_t target_;
        std::vector<Vertex> best_;
        std::uint64_t nodes_ = 0;
    };

    bool next_combination(std::vector<int> & comb, int n)
    {
        auto k = static_cast<int>(comb.size());
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    }

    // hub and ears index into `vs`. Checks the induced t-sun conditions directly.
    bool forms_sun(const Graph & g, const std::vector<Vertex> & vs, const std::vector<int> & hub, const std::vector<int> & ears)
    {
        auto t = hub.size();
        auto at = [&](int i) { return vs[static_cast<std::size_t>(i)]; };
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j) {
                if (! g.adjacent(at(hub[i]), at(hub[j])))
                    return false;
                if (g.adjacent(at(ears[i]), at(ears[j])))
                    return false;
            }

        // each ear names a pair of hub positions; together the pairs must form one t-cycle
        std::vector<std::vector<std::size_t>> cycle_nbrs(t);
        for (int e : ears) {
            std::vector<std::size_t> seen;
            for (std::size_t h = 0; h < t; ++h)
                if (g.adjacent(at(e), at(hub[h])))
                    seen.push_back(h);
            if (seen.size() != 2)
                return false;
            cycle_nbrs[seen[0]].push_back(seen[1]);
            cycle_nbrs[seen[1]].push_back(seen[0]);
        }
        for (const auto & nb : cycle_nbrs)
            if (nb.size() != 2 || nb[0] == nb[1])
                return false;
        std::size_t prev = 0, cur = 0, steps = 0;
        do {
            auto nxt = cycle_nbrs[cur][0] == prev && steps > 0 ? cycle_nbrs[cur][1] : cycle_nbrs[cur][0];
            prev = cur;
            cur = nxt;
            ++steps;
        } while (cur != 0 && steps <= t);
        return steps == t;
    }
}

OracleResult max_stable_set(const Graph & g)
{
    return StableSetSearch(g, std::numeric_limits<std::size_t>::max()).run();
}

OracleResult max_clique(const Graph & g)
{
    return max_stable_set(complement(g));
}

bool has_stable_set(const Graph & g, std::size_t k)
{
    if (k == 0)
        return true;
    return StableSetSearch(g, k).run().size >= k;
}

bool has_clique(const Graph & g, std::size_t k)
{
    return has_stable_set(complement(g), k);
}

bool brute_force_sun_check(const Graph & g, int t)
{
    if (t < 3 || 2 * t > g.order())
        throw std::invalid_argument("brute_force_sun_check needs t >= 3 and 2t <= n");
    auto size = 2 * t;
    std::vector<int> comb(static_cast<std::size_t>(size));
    std::iota(comb.begin(), comb.end(), 0);
    std::vector<Vertex> vs(comb.size());
    do {
        std::copy(comb.begin(), comb.end(), vs.begin());
        std::vector<int> degree(vs.size(), 0);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j])) {
                    ++degree[i];
                    ++degree[j];
                }

        if (t >= 4) {
            // hub vertices have induced degree t + 1 > 2, so the ears are forced
            std::vector<int> hub, ears;
            for (int i = 0; i < size; ++i)
                (degree[static_cast<std::size_t>(i)] == 2 ? ears : hub).push_back(i);
            if (static_cast<int>(ears.size()) == t && forms_sun(g, vs, hub, ears))
                return true;
            continue;
        }

        for (int mask = 0; mask < (1 << size); ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) != t)
                continue;
            std::vector<int> hub, ears;
            for (int i = 0; i < size; ++i)
                ((mask >> i) & 1 ? hub : ears).push_back(i);
            if (forms_sun(g, vs, hub, ears))
                return true;
        }
    } while (next_combination(comb, g.order()));
    return false;
}

} // namespace sunfind
