#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cameron/io.hpp"
#include "cameron/operator.hpp"

#ifndef CAMERON_CLI
#error "CAMERON_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CAMERON_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp(const std::string& name, const std::string& text = "") {
    const std::string path = std::string(P_tmpdir) + "/cameron_cli_" + name;
    if (!text.empty()) std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("compute transform") {
    const auto r = run("compute transform --restricted 2 --seed 1,1 --n 1..10 --method all");
    CHECK(r.status == 0);
    CHECK(r.out == "[\"1\",\"2\",\"3\",\"5\",\"8\",\"13\",\"21\",\"34\",\"55\",\"89\"]\n");

    const auto csv = run("compute transform --associated 2 --ones --n 0..7 --method all --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out == "n,value\n0,1\n1,0\n2,1\n3,1\n4,2\n5,3\n6,5\n7,8\n");

    const auto g = run("compute transform --associated 3 --geometric -2,3 --n 0..25 --method all --format bfile");
    CHECK(g.status == 0);
}

TEST_CASE("compute hyper") {
    const auto r = run("compute hyper --family bernoulli --N 1 --associated 1 --n 0..12 --method all");
    CHECK(r.status == 0);
    CHECK(r.out == "[\"1\",\"-1/2\",\"1/6\",\"0\",\"-1/30\",\"0\",\"1/42\",\"0\",\"-1/30\",\"0\",\"5/66\",\"0\",\"-691/2730\"]\n");
    const auto e = run("compute hyper --family euler --N 0 --associated 1 --n 2 --method all");
    CHECK(e.out == "[\"-1\"]\n");
    for (const char* family : {"cauchy", "euler-second"}) {
        for (const char* mode : {"--restricted 3", "--associated 2"}) {
            const auto all = run(std::string("compute hyper --family ") + family + " --N 2 " + mode + " --n 0..12 --method all");
            CHECK(all.status == 0);
        }
    }
    const auto uni = run("compute hyper --family euler-second --N 1 --restricted 2 --n 0..8 --method all --euler-second-limit uniform");
    CHECK(uni.status == 0);
    CHECK(run("compute hyper --family bernoulli --N 1 --associated 1 --n 0..3 --format bfile").status == 2);
    CHECK(run("compute hyper --family bernoulli --N 0 --associated 1 --n 0..3").status == 2);
}

TEST_CASE("compute closed-form") {
    const auto r = run("compute closed-form --geometric 1,1 --m 2 --n 7");
    CHECK(r.status == 0);
    CHECK(r.out == "[\"8\"]\n");
    CHECK(run("compute closed-form --ones --m 1 --n 1..20 --method all").status == 0);
    CHECK(run("compute closed-form --arithmetic 1,2 --m 1 --n 1..4").out == "[\"2\",\"7\",\"24\",\"82\"]\n");
    CHECK(run("compute closed-form --geometric 2,3 --m 3 --n 1..5").status == 2);
}

TEST_CASE("transform round trips") {
    const std::string seed = temp("fib.json", R"(["1","1"])");
    const std::string z = temp("fib_z.b");
    CHECK(run("transform --seed-file " + seed + " --n-max 22 --format bfile --out " + z).status == 0);
    const auto back = run("transform --seed-file " + z + " --direction invert --method all");
    CHECK(back.status == 0);
    CHECK(back.out == "[\"1\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]\n");

    // The written b-file parses back to the in-memory sequence.
    std::ifstream in(z);
    const auto rows = cameron::parse_bfile(in);
    const auto ref = cameron::restricted_transform(cameron::CoefficientSequence::seed({1, 1}), 22);
    REQUIRE(rows.size() == 23);
    for (std::size_t n = 0; n <= 22; ++n) CHECK(rows[n].value == ref.at(n));

    const std::string trib = temp("trib.json", R"(["1","1","2","4","7","13"])");
    CHECK(run("transform --seed-file " + trib + " --direction invert --method all").out == "[\"1\",\"1\",\"1\",\"0\",\"0\"]\n");

    const std::string empty = temp("empty.json", R"({"m": 2, "values": []})");
    CHECK(run("transform --seed-file " + empty + " --n-max 4").out == "[\"1\",\"0\",\"0\",\"0\",\"0\"]\n");

    const std::string assoc = temp("assoc.json", R"({"m": 2, "values": ["3","-1/2","0","2"]})");
    const std::string az = temp("assoc_z.json");
    CHECK(run("transform --seed-file " + assoc + " --n-max 22 --method all --out " + az).status == 0);
    CHECK(run("transform --seed-file " + az + " --direction invert --method all").out ==
          "[\"0\",\"3\",\"-1/2\",\"0\",\"2\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]\n");

    const std::string bad = temp("bad_z.json", R"(["2","1"])");
    CHECK(run("transform --seed-file " + bad + " --direction invert").status == 2);
}

TEST_CASE("errors and exit status") {
    CHECK(run("compute transform --restricted 2 --n 1..3").status == 2);
    CHECK(run("compute transform --restricted 2 --seed 1,x --n 1..3").status == 2);
    CHECK(run("compute transform --restricted 2 --seed 1,1 --n 1..3 --method magic").status == 2);
    CHECK(run("compute").status != 0);
    CHECK(run("no-such-command").status != 0);
}

TEST_CASE("verify is deterministic") {
    const std::string args = "verify --seed-count 4 --n-limit 10 --hyper-index-limit 8 --hyper-max-order 1 --rng-seed 42";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("identities hold") != std::string::npos);
    CHECK(run(args + " --serial").out == a.out);
}
