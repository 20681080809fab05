#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli() {
    const char* p = std::getenv("CDT_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen produces the documented counts and is byte stable") {
    std::string dir = "cli_tmp";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());

    CHECK(run("gen hertz --p 4 --q 3 --out " + dir + "/h.txt") == 0);
    std::string h = slurp(dir + "/h.txt");
    CHECK(h.find("n 18\n") != std::string::npos);

    CHECK(run("gen s-graph --a 1 --b 1 --c 1 --out " + dir + "/s.txt") == 0);
    CHECK(slurp(dir + "/s.txt").find("n 10\n") != std::string::npos);

    CHECK(run("gen erd --n 2 --r 1,1,1,1,1,1,1 --out " + dir + "/e.txt") == 0);
    CHECK(slurp(dir + "/e.txt").find("n 15\n") != std::string::npos);

    // identical manifest (same output path) reproduces the bytes
    std::string labels = slurp(dir + "/h.txt.labels.json");
    CHECK(run("gen hertz --p 4 --q 3 --out " + dir + "/h.txt") == 0);
    CHECK(slurp(dir + "/h.txt") == h);
    CHECK(slurp(dir + "/h.txt.labels.json") == labels);

    CHECK(run("gen hertz --p 1 --q 3 --out " + dir + "/bad.txt") == 2);
}

TEST_CASE("color, verify and exact round trip") {
    std::string dir = "cli_tmp2";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());

    REQUIRE(run("gen s-graph --a 2 --b 2 --c 2 --out " + dir + "/s222.txt") == 0);
    CHECK(run("color --in " + dir + "/s222.txt --method auto --out " + dir + "/c.json") == 0);
    std::string c = slurp(dir + "/c.json");
    CHECK(c.find("\"method\":\"s-formula\"") != std::string::npos);
    CHECK(c.find("\"total\":0") != std::string::npos);

    CHECK(run("verify --graph " + dir + "/s222.txt --coloring " + dir + "/c.json --out " + dir +
              "/v.json") == 0);
    CHECK(slurp(dir + "/v.json").find("\"proper\":true") != std::string::npos);

    // determinism of the coloring output under the identical manifest
    CHECK(run("color --in " + dir + "/s222.txt --method auto --out " + dir + "/c.json") == 0);
    CHECK(slurp(dir + "/c.json") == c);

    REQUIRE(run("gen cycle --n 5 --out " + dir + "/c5.txt") == 0);
    CHECK(run("exact --in " + dir + "/c5.txt --out " + dir + "/x.json") == 0);
    std::string x = slurp(dir + "/x.json");
    CHECK(x.find("\"best_total\":0") != std::string::npos);
    CHECK(x.find("\"status\":\"colorable\"") != std::string::npos);

    CHECK(run("exact --in " + dir + "/c5.txt --budget 3 --out " + dir + "/xb.json") == 3);

    CHECK(run("bounds --in " + dir + "/c5.txt --out " + dir + "/b.json") == 0);
    CHECK(slurp(dir + "/b.json").find("trivial_upper") != std::string::npos);
}

TEST_CASE("auto method dispatch picks the first applicable colorer") {
    std::string dir = "cli_tmp3";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());

    REQUIRE(run("gen m-graph --a 2 --b 1 --c 2 --out " + dir + "/m.txt") == 0);
    CHECK(run("color --in " + dir + "/m.txt --out " + dir + "/cm.json") == 0);
    CHECK(slurp(dir + "/cm.json").find("\"method\":\"m-formula\"") != std::string::npos);

    REQUIRE(run("gen complete-bipartite --m 4 --n 4 --out " + dir + "/kb.txt") == 0);
    CHECK(run("color --in " + dir + "/kb.txt --out " + dir + "/ckb.json") == 0);
    CHECK(slurp(dir + "/ckb.json").find("\"method\":\"bipartite\"") != std::string::npos);

    REQUIRE(run("gen complete --n 6 --out " + dir + "/k6.txt") == 0);
    CHECK(run("color --in " + dir + "/k6.txt --out " + dir + "/ck6.json") == 0);
    CHECK(slurp(dir + "/ck6.json").find("\"method\":\"smalldiff\"") != std::string::npos);
}

TEST_CASE("small survey is exact and repeatable") {
    std::string dir = "cli_tmp4";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    CHECK(run("survey --max-n 4 --out " + dir + "/s.json") == 0);
    std::string s = slurp(dir + "/s.json");
    CHECK(s.find("\"all_zero\":true") != std::string::npos);
    CHECK(run("survey --max-n 4 --out " + dir + "/s.json") == 0);
    CHECK(slurp(dir + "/s.json") == s);
}
