#include "doctest.h"
#include "support.hpp"
#include "tropfan/io.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace testsupport;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string tmp(const std::string& name) { return std::string(CLI_PATH) + "." + name; }

}  // namespace

TEST_CASE("cli validate") {
    Run ok = run("validate " + fx("fig.json"));
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok\n");
    Run bad = run("validate " + fx("fig_bad_red.json"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("(0,1)") != std::string::npos);
    CHECK(run("validate " + fx("malformed.json")).code == 2);
    CHECK(run("validate " + fx("two_arc.json")).code == 0);
    CHECK(run("validate " + fx("one_arc.json")).code == 1);
    CHECK(run("validate " + fx("theta.json")).code == 0);
    CHECK(run("validate " + fx("tate_base.json")).code == 0);
}

TEST_CASE("cli minimal is idempotent") {
    Run m = run("minimal " + fx("fig.json"));
    CHECK(m.code == 0);
    CHECK(m.out == read_file(fx("fig_coloring.json")));
    Run again = run("minimal " + fx("fig_coloring.json"));
    CHECK(again.out == m.out);
    CHECK(run("minimal " + fx("p2.json")).out == read_file(fx("trivial.json")));
    Run av = run("minimal " + fx("three_arc.json") + " --out " + tmp("av.json"));
    CHECK(av.code == 0);
    CHECK(run("minimal " + tmp("av.json")).out == read_file(tmp("av.json")));
    CHECK(run("equiv " + tmp("av.json") + " " + fx("three_arc.json")).code == 0);
    std::remove(tmp("av.json").c_str());
    CHECK(run("minimal " + fx("fig_bad_red.json")).code == 1);
}

TEST_CASE("cli equiv") {
    CHECK(run("equiv " + fx("p2.json") + " " + fx("hirzebruch1.json")).out == "equivalent\n");
    CHECK(run("equiv " + fx("fig.json") + " " + fx("fig.json")).code == 0);
    Run fig = run("equiv " + fx("fig.json") + " " + fx("trivial.json"));
    CHECK(fig.code == 1);
    CHECK(fig.out == "inequivalent\nwitness (-1,0)\n");
    Run direct = run("equiv " + fx("fig.json") + " " + fx("quadrants.json"));
    CHECK(direct.code == 1);
    CHECK(direct.out.find("witness") != std::string::npos);
    CHECK(run("equiv " + fx("fig_coloring.json") + " " + fx("fig.json")).code == 0);
    CHECK(run("equiv " + fx("two_arc.json") + " " + fx("three_arc.json")).code == 0);
    CHECK(run("equiv " + fx("two_arc.json") + " " + fx("two_arc_index2.json")).code == 1);
    CHECK(run("equiv " + fx("fig.json") + " " + fx("orthant3.json")).code == 3);
    CHECK(run("equiv " + fx("fig.json") + " " + fx("two_arc.json")).code == 3);
}

TEST_CASE("cli decision commands agree with the library") {
    CHECK(run("subdivision " + fx("split_quadrant.json") + " " + fx("quadrant.json")).out == "true\n");
    CHECK(run("subdivision " + fx("quadrant.json") + " " + fx("quadrants.json")).code == 1);
    CHECK(run("proper " + fx("split_quadrant.json") + " " + fx("quadrant.json")).code == 0);
    CHECK(run("representable " + fx("split_quadrant.json") + " " + fx("quadrant.json")).code == 0);
    CHECK(run("representable " + fx("fig.json") + " " + fx("quadrants.json")).code == 3);
    CHECK(run("proper " + fx("quadrant.json") + " " + fx("quadrants.json")).code == (is_proper({quadrant_fan(), quadrants_fan()}) ? 0 : 1));
    CHECK(run("complete " + fx("p2.json")).code == 0);
    CHECK(run("complete " + fx("quadrant.json")).code == 1);
    CHECK(run("complete " + fx("two_arc.json")).out == "true\n");
    CHECK(run("complete " + fx("single_arc.json")).code == 1);
    CHECK(run("complete " + fx("trivial.json")).code == 0);
}

TEST_CASE("cli documents") {
    Run q = run("quotient " + fx("two_arc.json"));
    REQUIRE(q.code == 0);
    CHECK(std::get<QuotientComplex>(parse_document(q.out).payload).cells.size() == 5);
    Run j = run("jacobian " + fx("theta.json"));
    REQUIRE(j.code == 0);
    PolarizedBase b = std::get<PolarizedBase>(parse_document(j.out).payload);
    CHECK(b.g == 2);
    CHECK(validate_form(b).ok());
    CHECK(run("jacobian " + fx("tree.json")).code == 0);
    Run r = run("refine " + fx("quadrant.json") + " " + fx("split_quadrant.json"));
    CHECK(r.code == 0);
    CHECK(std::get<StackyFan>(parse_document(r.out).payload) == split_quadrant_fan());
    CHECK(run("refine " + fx("quadrant.json") + " " + fx("quadrants.json")).code == 3);
}

TEST_CASE("cli render") {
    Run a = run("render " + fx("fig.json"));
    CHECK(a.code == 0);
    CHECK(a.out == read_file(fx("fig.svg")));
    CHECK(run("render " + fx("fig.json")).out == a.out);
    CHECK(run("render " + fx("orthant3.json")).code == 4);
    CHECK(run("render " + fx("fig.json") + " --radius 2").out != a.out);
}

TEST_CASE("cli oracles") {
    Run t = run("oracle translations-bruteforce " + fx("two_arc.json") + " --bound 10");
    REQUIRE(t.code == 0);
    CHECK(t.out.find("\"count\": \"2\"") != std::string::npos);
    Run c = run("oracle cover-sample " + fx("quadrants.json") + " --count 100 --seed 4");
    CHECK(c.out == "covered 100/100\n");
    CHECK(run("oracle cover-sample " + fx("quadrant.json") + " --seed 4").code == 1);
    CHECK(run("oracle cover-sample " + fx("two_arc.json") + " --count 60 --seed 9").code == 0);
    Run s1 = run("oracle s-enumerate " + fx("fig.json") + " --radius 3");
    Run s2 = run("oracle s-enumerate " + fx("fig_coloring.json") + " --radius 3");
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
    CHECK(run("oracle s-enumerate " + fx("fig.json") + " --radius 3").out == s1.out);
}
