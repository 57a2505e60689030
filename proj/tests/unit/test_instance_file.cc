#include "support.hh"

#include <bsknap/error.hh>
#include <bsknap/instance_file.hh>
#include <bsknap/oracle.hh>

#include <doctest.h>

using namespace bsknap;
using bsknap::testing::element;

namespace
{
    auto error_line(const std::string & text) -> std::size_t
    {
        try {
            (void)parse_instance(text);
        }
        catch (const ParseError & e) {
            return e.position();
        }
        return 999;
    }
}

TEST_CASE("instance files")
{
    auto i = parse_instance("# demo\nq: 2\n\ngen: t a t^-1   # a^2\ngen: mat(1, 1, 0)\ntarget: a a a\n");
    CHECK(i.q == 2);
    REQUIRE(i.generators.size() == 2);
    CHECK(i.generators[0] == element(0, 2, 0, 2));
    CHECK(i.generators[1] == element(1, 1, 0, 2));
    CHECK(i.target == element(0, 3, 0, 2));

    auto j = parse_instance("q: 3\ngen: mat(0, 3, 1)\ntarget: mat(-2, -5, 2)\n");
    CHECK(j.generators[0] == element(0, 1, 0, 3));
    CHECK(j.target == element(-2, -5, 2, 3));

    auto none = parse_instance("q: 5\ntarget: a\n");
    CHECK(none.generators.empty());
}

TEST_CASE("instance file errors carry line numbers")
{
    CHECK(error_line("gen: a\ntarget: a\n") == 0);
    CHECK(error_line("q: 2\ngen: a\n") == 0);
    CHECK(error_line("q: 2\nq: 3\ntarget: a\n") == 2);
    CHECK(error_line("q: 2\ntarget: a\ntarget: a\n") == 3);
    CHECK(error_line("q: 2\nfoo: a\ntarget: a\n") == 2);
    CHECK(error_line("q: 2\ngen: mat(1, 2)\ntarget: a\n") == 2);
    CHECK(error_line("q: 1\ntarget: a\n") == 1);
    CHECK(error_line("q: 2\ngen: a b\ntarget: a\n") == 2);
    CHECK(error_line("q: 2\nno colon here\ntarget: a\n") == 2);
    try {
        (void)parse_instance("gen: a\ntarget: a\n");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
}

TEST_CASE("formatting round trips")
{
    for (int q : {2, 3, 5})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto r = random_instance(q, 3, 4, seed);
            auto text = format_instance(r.instance);
            CHECK(parse_instance(text) == r.instance);
        }
    CHECK(format_triple(element(-1, -1, 1, 2)) == "mat(-1, -1, 1)");
}
