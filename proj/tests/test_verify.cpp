#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "cameron/verify.hpp"

using namespace cameron;

namespace {

VerifyOptions small(VerifyScope scope, Execution exec) {
    VerifyOptions o;
    o.scope = scope;
    o.seed_count = 6;
    o.n_limit = 12;
    o.closed_form_limit = 20;
    o.hyper_index_limit = 8;
    o.hyper_max_order = 2;
    o.hyper_max_m = 3;
    o.exec = exec;
    return o;
}

std::string render(const VerifyReport& r) {
    std::ostringstream out;
    print_report(out, r);
    return out.str();
}

}  // namespace

TEST_CASE("scope names") {
    CHECK(parse_scope("section-2") == VerifyScope::operators);
    CHECK(parse_scope("section-3") == VerifyScope::hypergeometric);
    CHECK(parse_scope("all") == VerifyScope::all);
    CHECK_THROWS_AS(parse_scope("section-4"), std::invalid_argument);
}

TEST_CASE("seed corpus") {
    const auto a = random_seed_corpus(50, 22, 5, 42);
    CHECK(a == random_seed_corpus(50, 22, 5, 42));
    CHECK(a != random_seed_corpus(50, 22, 5, 43));
    for (const auto& x : a) {
        CHECK(x.size() == 22);
        CHECK(x[0] != 0);
        bool tail = false;
        for (std::size_t i = 4; i < x.size(); ++i) tail = tail || x[i] != 0;
        CHECK(tail);
        for (long v : x) CHECK((v >= -5 && v <= 5));
    }
}

TEST_CASE("small suite passes and is deterministic") {
    const auto serial = run_verify(small(VerifyScope::all, Execution::serial));
    const auto parallel = run_verify(small(VerifyScope::all, Execution::parallel));
    CHECK(serial.passed());
    CHECK(render(serial) == render(parallel));
    for (const char* name : {"operator agreement", "inversion support", "geometric closed form", "arithmetic recurrence",
                             "hypergeometric agreement", "hypergeometric inversion", "classical limits"}) {
        const auto* r = serial.find(name);
        REQUIRE(r != nullptr);
        CHECK(r->cases > 0);
        CHECK(r->passed());
    }
    CHECK(serial.notes.size() == 4);
    CHECK(render(serial).find("counterexample") == std::string::npos);
}

TEST_CASE("scopes select identities") {
    const auto ops = run_verify(small(VerifyScope::operators, Execution::serial));
    CHECK(ops.find("operator agreement") != nullptr);
    CHECK(ops.find("hypergeometric agreement") == nullptr);
    const auto hyp = run_verify(small(VerifyScope::hypergeometric, Execution::serial));
    CHECK(hyp.find("operator agreement") == nullptr);
    CHECK(hyp.find("hypergeometric agreement") != nullptr);
}

TEST_CASE("report format") {
    VerifyReport r;
    IdentityResult bad{"demo", 3, 1, Counterexample{"x=[1]", 2, {{"a", 1}, {"b", 2}}}, {{"a", 0.5}}};
    r.identities.push_back(bad);
    r.notes.push_back("something");
    const std::string text = render(r);
    CHECK_FALSE(r.passed());
    CHECK(text.find("FAIL  demo  cases=3 failures=1") != std::string::npos);
    CHECK(text.find("counterexample: x=[1] at n=2") != std::string::npos);
    CHECK(text.find("b = 2") != std::string::npos);
    CHECK(text.find("NOTE  something") != std::string::npos);
    std::ostringstream t;
    print_timings(t, r);
    CHECK(t.str() == "time  demo  a  0.500s\n");
}
