#include "support.hh"

#include <bsknap/oracle.hh>

#include <doctest.h>

using namespace bsknap;
using bsknap::testing::element;

TEST_CASE("brute force examples")
{
    KnapsackInstance three{2, {element(0, 1, 0, 2)}, element(0, 3, 0, 2)};
    auto found = brute_force(three, 5);
    REQUIRE(found.found);
    CHECK(*found.found == std::vector<std::uint64_t>{3});
    CHECK(found.searched_bound == 5);

    KnapsackInstance parity{2, {element(0, 2, 0, 2)}, element(0, 3, 0, 2)};
    CHECK_FALSE(brute_force(parity, 10).found);

    KnapsackInstance none{2, {}, GroupElement::identity()};
    auto trivial = brute_force(none, 0);
    REQUIRE(trivial.found);
    CHECK(trivial.found->empty());
}

TEST_CASE("brute force returns the lexicographically first hit")
{
    KnapsackInstance sum{2, {element(0, 1, 0, 2), element(0, 2, 0, 2)}, element(0, 7, 0, 2)};
    auto r = brute_force(sum, 12);
    REQUIRE(r.found);
    CHECK(*r.found == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("random instances are deterministic and planted ones are found")
{
    for (int q : {2, 3, 5})
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto a = random_instance(q, 3, 4, seed);
            auto b = random_instance(q, 3, 4, seed);
            CHECK(a.instance == b.instance);
            CHECK(a.constructed_sat == b.constructed_sat);
            CHECK(a.instance.generators.size() == 3);
            for (const auto & w : a.generator_words) {
                CHECK(w.size() >= 1);
                CHECK(w.size() <= 4);
            }
            if (a.constructed_sat) {
                REQUIRE(a.planted.size() == 3);
                for (auto x : a.planted)
                    CHECK(x <= 6);
                CHECK(verify_witness(a.instance, a.planted));
                auto hit = brute_force(a.instance, 6);
                REQUIRE(hit.found);
                CHECK(verify_witness(a.instance, *hit.found));
            }
        }
}
