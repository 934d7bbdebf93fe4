#include <sunfind/sun.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sunfind {

Graph make_sun(int t)
{
    if (t < 3)
        throw std::invalid_argument("a sun needs t >= 3");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < t; ++a)
        for (Vertex b = a + 1; b < t; ++b)
            edges.push_back({a, b});
    for (Vertex i = 0; i < t; ++i) {
        edges.push_back({i, t + i});
        edges.push_back({(i + 1) % t, t + i});
    }
    return Graph(2 * t, edges);
}

SunWitness natural_sun_witness(int t)
{
    SunWitness w;
    for (Vertex i = 0; i < t; ++i) {
        w.hub.push_back(i);
        w.ears.push_back(t + i);
    }
    return w;
}

bool verify_sun_witness(const Graph & g, const SunWitness & w)
{
    for (const auto * part : {&w.hub, &w.ears})
        for (Vertex v : *part)
            if (! g.contains(v))
                throw std::out_of_range("witness vertex " + std::to_string(v) + " not in graph");

    auto t = w.hub.size();
    if (t < 3 || w.ears.size() != t)
        return false;
    std::vector<Vertex> all(w.hub);
    all.insert(all.end(), w.ears.begin(), w.ears.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;

    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            if (! g.adjacent(w.hub[i], w.hub[j]))
                return false;
            if (g.adjacent(w.ears[i], w.ears[j]))
                return false;
        }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            bool should_see = j == i || j == (i + 1) % t;
            if (g.adjacent(w.ears[i], w.hub[j]) != should_see)
                return false;
        }
    return true;
}

SunWitness canonicalize(const SunWitness & w)
{
    auto t = w.hub.size();
    if (t < 3 || w.ears.size() != t)
        throw std::invalid_argument("malformed sun witness");
    auto p = static_cast<std::size_t>(std::min_element(w.hub.begin(), w.hub.end()) - w.hub.begin());
    auto next = w.hub[(p + 1) % t];
    auto prev = w.hub[(p + t - 1) % t];

    SunWitness out;
    out.hub.reserve(t);
    out.ears.reserve(t);
    if (next < prev) {
        for (std::size_t i = 0; i < t; ++i) {
            out.hub.push_back(w.hub[(p + i) % t]);
            out.ears.push_back(w.ears[(p + i) % t]);
        }
    }
    else {
        // walking backwards, the ear between hub[q] and hub[q - 1] is ears[q - 1]
        for (std::size_t i = 0; i < t; ++i) {
            out.hub.push_back(w.hub[(p + t - i) % t]);
            out.ears.push_back(w.ears[(p + t - i - 1) % t]);
        }
    }
    return out;
}

namespace {
    class SunSearcher {
    public:
        // Returning true from the callback stops the search.
        using Visitor = std::function<bool(const SunWitness &)>;

        SunSearcher(const Graph & g, SearchBudget budget, Visitor visit) :
            g_(g), max_nodes_(budget.max_nodes), visit_(std::move(visit))
        {
        }

        // True if the visitor asked to stop or the budget ran out.
        bool search(int t)
        {
            if (2 * t > g_.order())
                return false;
            t_ = t;
            Bitset eligible(static_cast<std::size_t>(g_.order()));
            for (Vertex v = 0; v < g_.order(); ++v)
                if (g_.degree(v) >= t + 1)
                    eligible.set(static_cast<std::size_t>(v));
            std::vector<Vertex> hub;
            return extend_hub(hub, eligible);
        }

        bool exhausted() const { return exhausted_; }
        std::uint64_t nodes() const { return nodes_; }

    private:
        bool tick()
        {
            if (nodes_ >= max_nodes_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            return true;
        }

        bool extend_hub(std::vector<Vertex> & hub, Bitset candidates)
        {
            if (! tick())
                return true;
            if (static_cast<int>(hub.size()) == t_)
                return try_hub(hub);
            while (true) {
                auto v = candidates.first();
                if (v == candidates.capacity())
                    break;
                if (hub.size() + candidates.count() < static_cast<std::size_t>(t_))
                    break;
                candidates.reset(v);
                hub.push_back(static_cast<Vertex>(v));
                if (extend_hub(hub, candidates & g_.neighbor_bits(static_cast<Vertex>(v))))
                    return true;
                hub.pop_back();
            }
            return false;
        }

        bool try_hub(const std::vector<Vertex> & hub)
        {
            auto t = hub.size();
            auto n = static_cast<std::size_t>(g_.order());
            Bitset hub_bits(n);
            for (Vertex c : hub)
                hub_bits.set(static_cast<std::size_t>(c));

            // ear_options_[a * t + b], a < b: vertices whose hub neighbours are exactly {hub[a], hub[b]}
            ear_options_.assign(t * t, {});
            for (Vertex x = 0; x < g_.order(); ++x) {
                if (hub_bits.test(static_cast<std::size_t>(x)))
                    continue;
                const auto & row = g_.neighbor_bits(x);
                if (row.intersection_count(hub_bits) != 2)
                    continue;
                std::size_t a = t, b = t;
                for (std::size_t i = 0; i < t; ++i)
                    if (row.test(static_cast<std::size_t>(hub[i])))
                        (a == t ? a : b) = i;
                ear_options_[a * t + b].push_back(x);
            }
            for (std::size_t a = 0; a < t; ++a) {
                std::size_t partners = 0;
                for (std::size_t b = 0; b < t; ++b)
                    if (a != b && ! options(a, b).empty())
                        ++partners;
                if (partners < 2)
                    return false;
            }

            hub_ = &hub;
            order_.assign(1, 0);
            ears_.clear();
            used_.assign(t, 0);
            used_[0] = 1;
            return place_ear(Bitset(n));
        }

        const std::vector<Vertex> & options(std::size_t a, std::size_t b) const
        {
            return a < b ? ear_options_[a * hub_size() + b] : ear_options_[b * hub_size() + a];
        }
        std::size_t hub_size() const { return static_cast<std::size_t>(t_); }

        // Walks the hub cycle from its least vertex, placing the ear for each step.
        // `blocked` holds every placed ear and all of their neighbours.
        bool place_ear(const Bitset & blocked)
        {
            if (! tick())
                return true;
            auto t = hub_size();
            auto cur = order_.back();

            if (order_.size() == t) {
                // close the cycle; hub[1] < hub[t-1] keeps only the canonical orientation
                if (order_[1] > cur)
                    return false;
                for (Vertex e : options(cur, 0))
                    if (! blocked.test(static_cast<std::size_t>(e))) {
                        ears_.push_back(e);
                        bool stop = report();
                        ears_.pop_back();
                        if (stop)
                            return true;
                    }
                return false;
            }

            for (std::size_t nxt = 1; nxt < t; ++nxt) {
                if (used_[nxt])
                    continue;
                if (order_.size() == t - 1 && nxt < order_[1])
                    continue;
                for (Vertex e : options(cur, nxt)) {
                    if (blocked.test(static_cast<std::size_t>(e)))
                        continue;
                    auto next_blocked = blocked | g_.neighbor_bits(e);
                    next_blocked.set(static_cast<std::size_t>(e));
                    order_.push_back(nxt);
                    used_[nxt] = 1;
                    ears_.push_back(e);
                    bool stop = place_ear(next_blocked);
                    ears_.pop_back();
                    used_[nxt] = 0;
                    order_.pop_back();
                    if (stop)
                        return true;
                }
            }
            return false;
        }

        bool report()
        {
            SunWitness w;
            for (auto i : order_)
                w.hub.push_back((*hub_)[i]);
            w.ears = ears_;
            return visit_(w);
        }

        const Graph & g_;
        std::uint64_t max_nodes_;
        Visitor visit_;
        std::uint64_t nodes_ = 0;
        bool exhausted_ = false;
        int t_ = 0;

        const std::vector<Vertex> * hub_ = nullptr;
        std::vector<std::vector<Vertex>> ear_options_;
        std::vector<std::size_t> order_;
        std::vector<Vertex> ears_;
        std::vector<char> used_;
    };

    SunSearchResult run_orders(const Graph & g, int t_first, int t_last, SearchBudget budget)
    {
        if (budget.max_nodes < 1)
            throw std::invalid_argument("search budget needs max_nodes >= 1");
        SunSearchResult result;
        SunSearcher searcher(g, budget, [&](const SunWitness & w) {
            result.witness = w;
            return true;
        });
        for (int t = t_first; t <= t_last; ++t)
            if (searcher.search(t))
                break;
        result.nodes_used = searcher.nodes();
        if (result.witness)
            result.status = SearchStatus::found;
        else if (searcher.exhausted())
            result.status = SearchStatus::indeterminate;
        else
            result.status = SearchStatus::absent;
        return result;
    }
}

SunSearchResult find_k_sun(const Graph & g, int t, SearchBudget budget)
{
    if (t < 3)
        throw std::invalid_argument("sun order must be at least 3");
    return run_orders(g, t, t, budget);
}

SunSearchResult find_any_sun(const Graph & g, SearchBudget budget)
{
    return run_orders(g, 3, g.order() / 2, budget);
}

SunEnumeration enumerate_suns(const Graph & g, std::size_t limit, SearchBudget budget)
{
    if (limit < 1)
        throw std::invalid_argument("enumeration limit must be at least 1");
    SunEnumeration result;
    SunSearcher searcher(g, budget, [&](const SunWitness & w) {
        result.witnesses.push_back(w);
        return result.witnesses.size() >= limit;
    });
    for (int t = 3; t <= g.order() / 2; ++t)
        if (searcher.search(t))
            break;
    result.completed = ! searcher.exhausted();
    result.nodes_used = searcher.nodes();
    return result;
}

std::string format_witness(const SunWitness & w)
{
    std::ostringstream out;
    out << w.order() << '\n';
    for (const auto * part : {&w.hub, &w.ears}) {
        for (std::size_t i = 0; i < part->size(); ++i)
            out << (i ? " " : "") << (*part)[i];
        out << '\n';
    }
    return out.str();
}

std::string format_search_result(const SunSearchResult & r)
{
    switch (r.status) {
    case SearchStatus::found:
        return format_witness(*r.witness);
    case SearchStatus::absent:
        return "ABSENT\n";
    case SearchStatus::indeterminate:
        return "INDETERMINATE " + std::to_string(r.nodes_used) + "\n";
    }
    return {};
}

} // namespace sunfind
