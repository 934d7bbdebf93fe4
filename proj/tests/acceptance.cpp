// Acceptance run: machine-checks the sun reductions and the strong-chordality
// characterisation over exhaustive and seeded corpora. Prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.

#include <sunfind/chordal.hpp>
#include <sunfind/graph.hpp>
#include <sunfind/oracles.hpp>
#include <sunfind/reductions.hpp>
#include <sunfind/sun.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sunfind;

namespace {

constexpr std::uint64_t gadget_budget = 100'000'000;
constexpr std::uint64_t search_budget = 100'000'000;
constexpr int gadget_k = 4;
constexpr std::size_t shape_instances = 25;
constexpr std::size_t stable_gadget_random_samples = 200;
constexpr std::size_t clique_gadget_random_samples = 500;
constexpr std::size_t characterisation_random_samples = 500;
constexpr std::size_t oracle_random_samples = 1000;
constexpr double stable_gadget_minutes = 30.0;
constexpr double antihole_minutes = 20.0;

struct Verdict {
    bool pass = true;
    std::size_t checked = 0;
    std::string note;

    void fail(const std::string & why)
    {
        if (pass)
            note = why;
        pass = false;
    }
};

struct TriangleFreeInstance {
    Graph g;
    bool exhaustive_part;
    ReductionInstance f;
};

std::string describe(const Graph & g)
{
    std::string s = "n=" + std::to_string(g.order()) + " edges:";
    for (auto [u, v] : g.edges())
        s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

// All labeled triangle-free graphs with n <= 6, then seeded random ones with n in {7, 8}.
std::vector<TriangleFreeInstance> triangle_free_corpus()
{
    std::vector<TriangleFreeInstance> corpus;
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            auto g = graph_from_edge_mask(n, mask);
            if (! find_triangle(g))
                corpus.push_back({g, true, build_f(g, gadget_k)});
        }
    std::mt19937_64 rng(20240601);
    for (std::size_t i = 0; i < stable_gadget_random_samples; ++i) {
        int n = 7 + static_cast<int>(i % 2);
        auto target = rng() % (static_cast<std::uint64_t>(n * n / 4) + 1);
        auto g = random_triangle_free(n, target, rng());
        corpus.push_back({g, false, build_f(g, gadget_k)});
    }
    return corpus;
}

std::vector<Graph> all_labeled_graphs(int max_n)
{
    std::vector<Graph> out;
    for (int n = 0; n <= max_n; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask)
            out.push_back(graph_from_edge_mask(n, mask));
    return out;
}

Verdict stable_gadget_equivalence(const std::vector<TriangleFreeInstance> & corpus, std::vector<std::size_t> & with_sun)
{
    Verdict v;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto & inst = corpus[i];
        bool stable = has_stable_set(inst.g, gadget_k);
        auto sun = find_any_sun(inst.f.product, SearchBudget{gadget_budget});
        ++v.checked;
        if (sun.status == SearchStatus::indeterminate) {
            v.fail("indeterminate search on " + describe(inst.g));
            continue;
        }
        bool found = sun.status == SearchStatus::found;
        if (found != stable)
            v.fail("stable set " + std::string(stable ? "yes" : "no") + " but sun " + (found ? "yes" : "no") + " on " + describe(inst.g));
        if (found) {
            with_sun.push_back(i);
            try {
                auto s = stable_set_from_witness(inst.f, *sun.witness);
                if (! is_stable(inst.g, s) || s.size() != gadget_k)
                    v.fail("extracted set is not a stable 4-set on " + describe(inst.g));
            }
            catch (const std::exception & e) {
                v.fail(std::string("witness translation failed: ") + e.what());
            }
        }
    }
    v.note = v.pass ? std::to_string(with_sun.size()) + " instances with a sun" : v.note;
    return v;
}

Verdict gadget_sun_shape(const std::vector<TriangleFreeInstance> & corpus, const std::vector<std::size_t> & with_sun)
{
    Verdict v;
    if (with_sun.size() < shape_instances) {
        v.fail("only " + std::to_string(with_sun.size()) + " instances with a sun");
        return v;
    }
    std::size_t witnesses = 0;
    for (std::size_t pick = 0; pick < shape_instances; ++pick) {
        // spread the picks over the whole list
        const auto & inst = corpus[with_sun[pick * (with_sun.size() - 1) / (shape_instances - 1)]];
        auto all = enumerate_suns(inst.f.product, 10'000'000, SearchBudget{search_budget});
        ++v.checked;
        if (! all.completed)
            v.fail("enumeration did not complete on " + describe(inst.g));
        if (all.witnesses.empty())
            v.fail("no sun enumerated on " + describe(inst.g));
        for (const auto & w : all.witnesses) {
            ++witnesses;
            if (! verify_sun_witness(inst.f.product, w))
                v.fail("enumerated witness is not a sun");
            if (auto why = f_sun_shape_violation(inst.f, w))
                v.fail(*why + " on " + describe(inst.g));
        }
    }
    if (v.pass)
        v.note = std::to_string(witnesses) + " witnesses, all 8-suns with alternating subdivision/X ears";
    return v;
}

Verdict antihole_free(const std::vector<TriangleFreeInstance> & corpus)
{
    Verdict v;
    for (const auto & inst : corpus) {
        if (! inst.exhaustive_part)
            continue;
        ++v.checked;
        if (auto anti = find_antihole_geq(inst.f.product, 7)) {
            std::ostringstream s;
            s << "antihole of length " << anti->cycle.size() << " on " << describe(inst.g);
            v.fail(s.str());
        }
    }
    return v;
}

Verdict clique_gadget_equivalence()
{
    Verdict v;
    auto check = [&](const Graph & g) {
        auto h = build_h(g);
        auto sun = find_k_sun(h.product, gadget_k, SearchBudget{search_budget});
        ++v.checked;
        if (sun.status == SearchStatus::indeterminate) {
            v.fail("indeterminate search on " + describe(g));
            return;
        }
        bool found = sun.status == SearchStatus::found;
        if (found != has_clique(g, gadget_k))
            v.fail("clique/sun mismatch on " + describe(g));
        if (found) {
            try {
                auto c = clique_from_sun(h, *sun.witness);
                if (c.size() != gadget_k || ! is_clique(g, c))
                    v.fail("hub is not a 4-clique on " + describe(g));
            }
            catch (const std::exception & e) {
                v.fail(std::string("witness translation failed: ") + e.what());
            }
        }
    };
    for (const auto & g : all_labeled_graphs(6))
        check(g);
    std::mt19937_64 rng(777);
    for (std::size_t i = 0; i < clique_gadget_random_samples; ++i) {
        double p = 0.3 + 0.5 * static_cast<double>(i % 11) / 10.0;
        check(random_graph(7, p, rng()));
    }
    return v;
}

Verdict characterisations_agree()
{
    Verdict v;
    auto check = [&](const Graph & g) {
        ++v.checked;
        auto simple = find_elimination_ordering(g, EliminationKind::simple);
        if (simple && ! verify_elimination_ordering(g, *simple))
            v.fail("invalid simple elimination ordering on " + describe(g));
        auto sun = find_any_sun(g, SearchBudget{search_budget});
        if (sun.status == SearchStatus::indeterminate) {
            v.fail("indeterminate search on " + describe(g));
            return;
        }
        bool chordal_sun_free = is_chordal(g) && sun.status == SearchStatus::absent;
        if (is_strongly_chordal(g) != chordal_sun_free || simple.has_value() != chordal_sun_free)
            v.fail("characterisations disagree on " + describe(g));
    };
    for (const auto & g : all_labeled_graphs(6))
        check(g);
    std::mt19937_64 rng(4242);
    for (std::size_t i = 0; i < characterisation_random_samples; ++i) {
        int n = 7 + static_cast<int>(i % 3);
        double p = 0.3 + 0.6 * static_cast<double>(i % 13) / 12.0;
        check(random_graph(n, p, rng()));
    }
    return v;
}

Verdict oracle_agreement()
{
    Verdict v;
    std::mt19937_64 rng(99);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < oracle_random_samples; ++i) {
        int n = 6 + static_cast<int>(i % 5);
        double p = 0.3 + 0.6 * static_cast<double>(i % 7) / 6.0;
        auto g = random_graph(n, p, rng());
        ++v.checked;
        for (int t = 3; 2 * t <= n; ++t) {
            ++pairs;
            auto r = find_k_sun(g, t, SearchBudget{search_budget});
            if (r.status == SearchStatus::indeterminate) {
                v.fail("indeterminate search on " + describe(g));
                continue;
            }
            if ((r.status == SearchStatus::found) != brute_force_sun_check(g, t))
                v.fail("t=" + std::to_string(t) + " disagreement on " + describe(g));
            if (r.witness && ! verify_sun_witness(g, *r.witness))
                v.fail("unsound witness on " + describe(g));
        }
    }
    if (v.pass)
        v.note = std::to_string(pairs) + " (graph, t) pairs";
    return v;
}

Verdict fixtures()
{
    Verdict v;
    auto expect = [&](bool ok, const std::string & what) {
        ++v.checked;
        if (! ok)
            v.fail(what);
    };

    std::vector<Edge> edges;
    for (Vertex i = 0; i < 10; ++i)
        edges.push_back({i, (i + 1) % 10});
    for (Vertex a = 0; a < 10; a += 2)
        for (Vertex b = a + 2; b < 10; b += 2)
            edges.push_back({a, b});
    Graph fig1(10, edges);
    expect(is_chordal(fig1), "5-sun should be chordal");
    expect(! is_strongly_chordal(fig1), "5-sun should not be strongly chordal");
    auto sun = find_any_sun(fig1);
    expect(sun.status == SearchStatus::found && sun.witness->order() == 5, "5-sun should contain a 5-sun");

    auto f = build_f(graphs::path(3), 4);
    expect(f.product.order() == 24, "f(P3,4) should have 24 vertices");
    expect(f.product.size() == 110, "f(P3,4) should have 110 edges");
    expect(find_any_sun(f.product).status == SearchStatus::absent, "f(P3,4) should be sun-free");

    auto h = build_h(graphs::complete(4));
    expect(h.product.order() == 10, "h(K4) should have 10 vertices");
    expect(h.product.size() == 18, "h(K4) should have 18 edges");
    auto four = find_k_sun(h.product, 4);
    expect(four.status == SearchStatus::found && verify_sun_witness(h.product, *four.witness), "h(K4) should contain a 4-sun");
    return v;
}

Verdict gadget_invariants(const std::vector<TriangleFreeInstance> & corpus)
{
    Verdict v;
    for (const auto & inst : corpus) {
        ++v.checked;
        if (observation1_violation(inst.f))
            v.fail("triangle across three blocks in " + describe(inst.g));
        if (observation2_violation(inst.f))
            v.fail("unequal W-neighbourhoods across blocks in " + describe(inst.g));
    }
    return v;
}

double minutes_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::ratio<60>>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main()
{
    bool all_pass = true;
    auto report = [&](int id, const std::string & title, Verdict v, double minutes) {
        all_pass = all_pass && v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << v.checked << " checked, "
                  << std::fixed;
        std::cout.precision(2);
        std::cout << minutes * 60.0 << " s]";
        if (! v.note.empty())
            std::cout << " - " << v.note;
        std::cout << std::endl;
    };

    auto start = std::chrono::steady_clock::now();
    auto corpus = triangle_free_corpus();
    std::vector<std::size_t> with_sun;
    auto c1 = stable_gadget_equivalence(corpus, with_sun);
    auto c1_minutes = minutes_since(start);
    if (c1_minutes > stable_gadget_minutes)
        c1.fail("took " + std::to_string(c1_minutes) + " minutes, limit 30");
    report(1, "stable 4-set in G <=> sun in f(G,4)", c1, c1_minutes);

    start = std::chrono::steady_clock::now();
    {
        auto v = gadget_sun_shape(corpus, with_sun);
        report(2, "every sun of f(G,4) is an 8-sun with alternating ears", v, minutes_since(start));
    }

    start = std::chrono::steady_clock::now();
    auto c3 = antihole_free(corpus);
    auto c3_minutes = minutes_since(start);
    if (c3_minutes > antihole_minutes)
        c3.fail("took " + std::to_string(c3_minutes) + " minutes, limit 20");
    report(3, "f(G,4) has no antihole of length >= 7", c3, c3_minutes);

    start = std::chrono::steady_clock::now();
    {
        auto v = clique_gadget_equivalence();
        report(4, "4-clique in G <=> 4-sun in h(G)", v, minutes_since(start));
    }

    start = std::chrono::steady_clock::now();
    {
        auto v = characterisations_agree();
        report(5, "strongly chordal <=> chordal and sun-free <=> simple elimination ordering", v, minutes_since(start));
    }

    start = std::chrono::steady_clock::now();
    {
        auto v = oracle_agreement();
        report(6, "find_k_sun agrees with the subset oracle", v, minutes_since(start));
    }

    start = std::chrono::steady_clock::now();
    {
        auto v = fixtures();
        report(7, "fixtures: 5-sun, f(P3,4), h(K4)", v, minutes_since(start));
    }

    start = std::chrono::steady_clock::now();
    {
        auto v = gadget_invariants(corpus);
        report(8, "structural invariants of every f(G,4)", v, minutes_since(start));
    }

    std::cout << (all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return all_pass ? 0 : 1;
}
