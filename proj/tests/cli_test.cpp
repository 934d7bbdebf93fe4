#include <sunfind/cli.hpp>
#include <sunfind/graph.hpp>
#include <sunfind/reductions.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sunfind;
namespace fs = std::filesystem;

namespace {
    struct Outcome {
        int code;
        std::string out;
        std::string err;
    };

    Outcome run_cli(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string fixture(const std::string & name) { return std::string(SUNFIND_FIXTURE_DIR) + "/" + name; }

    std::string slurp(const fs::path & p)
    {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path scratch_dir()
    {
        auto dir = fs::temp_directory_path() / ("sunfind_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        return dir;
    }
}

TEST_CASE("recognize")
{
    auto fig1 = run_cli({"recognize", fixture("fig1_5sun.el")});
    CHECK(fig1.code == cli::success);
    CHECK(fig1.out.find("CHORDAL yes\n") == 0);
    CHECK(fig1.out.find("STRONGLY_CHORDAL no\n") != std::string::npos);
    CHECK(fig1.out.find("SUN_ORDER 5\nSUN_HUB 0 2 4 6 8\nSUN_EARS 1 3 5 7 9\n") != std::string::npos);

    auto c6 = run_cli({"recognize", fixture("c6.el")});
    CHECK(c6.code == cli::success);
    CHECK(c6.out == "CHORDAL no\nHOLE 0 1 2 3 4 5\nSTRONGLY_CHORDAL no\n");

    auto p3 = run_cli({"recognize", fixture("p3.el")});
    CHECK(p3.out == "CHORDAL yes\nSIMPLICIAL_ORDERING 0 1 2\nSTRONGLY_CHORDAL yes\nSIMPLE_ORDERING 0 1 2\n");
}

TEST_CASE("detect-sun")
{
    auto c6 = run_cli({"detect-sun", fixture("c6.el"), "--order", "3"});
    CHECK(c6.code == cli::success);
    CHECK(c6.out == "ABSENT\n");

    auto fig1 = run_cli({"detect-sun", fixture("fig1_5sun.el")});
    CHECK(fig1.code == cli::success);
    CHECK(fig1.out == "5\n0 2 4 6 8\n1 3 5 7 9\n");

    auto starved = run_cli({"detect-sun", fixture("fig1_5sun.el"), "--budget", "3"});
    CHECK(starved.code == cli::budget_exhausted);
    CHECK(starved.out == "INDETERMINATE 3\n");

    CHECK(run_cli({"detect-sun", fixture("c6.el"), "--order", "2"}).code == cli::usage_error);
    CHECK(run_cli({"detect-sun", fixture("c6.el"), "--budget", "0"}).code == cli::usage_error);
}

TEST_CASE("reduce-f and reduce-h write re-parsable files")
{
    auto dir = scratch_dir();
    auto prefix = (dir / "p3f").string();
    auto f = run_cli({"reduce-f", fixture("p3.el"), "-k", "4", "-o", prefix});
    CHECK(f.code == cli::success);
    CHECK(f.out.find("VERTICES 24\nEDGES 110\n") == 0);
    auto g = parse_graph(slurp(prefix + ".el"));
    CHECK(g.order() == 24);
    CHECK(g.size() == 110);
    auto labels = parse_labels(slurp(prefix + ".labels"));
    CHECK(labels == build_f(graphs::path(3), 4).labels);

    auto summary = run_cli({"reduce-f", fixture("p3.el"), "-k", "4"});
    CHECK(summary.out == "VERTICES 24\nEDGES 110\n");

    auto hprefix = (dir / "k4h").string();
    auto h = run_cli({"reduce-h", fixture("k4.el"), "-o", hprefix});
    CHECK(h.code == cli::success);
    CHECK(h.out.find("VERTICES 10\nEDGES 18\n") == 0);
    CHECK(parse_graph(slurp(hprefix + ".el")).size() == 18);
    CHECK(parse_labels(slurp(hprefix + ".labels")).size() == 10);

    auto sun = run_cli({"detect-sun", hprefix + ".el", "--order", "4"});
    CHECK(sun.code == cli::success);
    CHECK(sun.out.starts_with("4\n"));

    fs::remove_all(dir);
}

TEST_CASE("input and usage errors exit with 2")
{
    auto tri = run_cli({"reduce-f", fixture("k4.el"), "-k", "4"});
    CHECK(tri.code == cli::usage_error);
    CHECK(tri.err.find("triangle 0 1 2") != std::string::npos);

    CHECK(run_cli({"reduce-f", fixture("p3.el"), "-k", "3"}).code == cli::usage_error);
    CHECK(run_cli({"reduce-f", fixture("p3.el")}).code == cli::usage_error);
    CHECK(run_cli({"recognize", fixture("missing.el")}).code == cli::usage_error);
    CHECK(run_cli({}).code == cli::usage_error);
    CHECK(run_cli({"frobnicate"}).code == cli::usage_error);
    CHECK(run_cli({"oracle", "matching", fixture("p3.el")}).code == cli::usage_error);

    auto dir = scratch_dir();
    auto bad = dir / "bad.el";
    std::ofstream(bad) << "3 1\n0 7\n";
    auto parse = run_cli({"recognize", bad.string()});
    CHECK(parse.code == cli::usage_error);
    CHECK(parse.err.find("line 2") != std::string::npos);
    fs::remove_all(dir);

    CHECK(run_cli({"--help"}).code == cli::success);
}

TEST_CASE("verify-claim1 is reproducible")
{
    std::vector<std::string> args{"verify-claim1", "--n", "6", "--samples", "8", "--seed", "11"};
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.code == cli::success);
    CHECK(first.out == second.out);
    CHECK(first.out.find("SUMMARY pass 8 fail 0 indeterminate 0\n") != std::string::npos);

    auto starved = run_cli({"verify-claim1", "--n", "6", "--samples", "2", "--seed", "11", "--budget", "5"});
    CHECK(starved.code == cli::budget_exhausted);
}

TEST_CASE("verify-antihole")
{
    auto gadget = run_cli({"verify-antihole", fixture("c8.el"), "-k", "4"});
    CHECK(gadget.code == cli::success);
    CHECK(gadget.out == "ANTIHOLE_GEQ_7 absent\n");

    auto dir = scratch_dir();
    auto anti = dir / "anti7.el";
    std::ofstream(anti) << emit_graph(complement(graphs::cycle(7)));
    auto plain = run_cli({"verify-antihole", anti.string()});
    CHECK(plain.code == cli::success);
    CHECK(plain.out.starts_with("ANTIHOLE_GEQ_7 found\nANTIHOLE 7\n"));
    fs::remove_all(dir);
}

TEST_CASE("gen-trifree and oracle")
{
    auto gen = run_cli({"gen-trifree", "--n", "9", "--edges", "12", "--seed", "4"});
    CHECK(gen.code == cli::success);
    auto g = parse_graph(gen.out);
    CHECK(g == random_triangle_free(9, 12, 4));
    CHECK_FALSE(find_triangle(g));
    CHECK(run_cli({"gen-trifree", "--n", "9", "--edges", "12", "--seed", "4"}).out == gen.out);

    auto stable = run_cli({"oracle", "stable-set", fixture("c8.el"), "-k", "4"});
    CHECK(stable.code == cli::success);
    CHECK(stable.out.find("SIZE 4\n") == 0);
    CHECK(stable.out.find("HAS_STABLE_SET_4 yes\n") != std::string::npos);

    auto clique = run_cli({"oracle", "clique", fixture("k4.el")});
    CHECK(clique.out.find("SIZE 4\nSET 0 1 2 3\n") == 0);
    CHECK(clique.out.find("HAS_") == std::string::npos);
}

TEST_CASE("the installed binary returns the same exit codes")
{
    std::string bin = SUNFIND_CLI_PATH;
    auto status = [&](const std::string & args) {
        int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("detect-sun " + fixture("c6.el") + " --order 3") == 0);
    CHECK(status("detect-sun " + fixture("fig1_5sun.el") + " --budget 2") == 3);
    CHECK(status("reduce-f " + fixture("k4.el") + " -k 4") == 2);
}
