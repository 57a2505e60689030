#include "support.hh"

#include <bsknap/error.hh>
#include <bsknap/group.hh>

#include <doctest.h>

using namespace bsknap;
using bsknap::testing::element;
using bsknap::testing::random_element;

TEST_CASE("fractions are kept canonical")
{
    auto f = QFraction::make(12, 3, 2);
    CHECK(f.numerator == 3);
    CHECK(f.exponent == 1);
    CHECK(f.is_canonical(2));
    CHECK(QFraction::make(0, 5, 3) == QFraction{});
    CHECK(QFraction::make(7, -2, 3) == QFraction::integer(63));
    CHECK_FALSE((QFraction{6, 1}).is_canonical(3));
    CHECK(add(QFraction::make(1, 1, 2), QFraction::make(1, 1, 2), 2) == QFraction::integer(1));
    CHECK(to_string(QFraction::make(-1, 1, 2), 2) == "-1/2^1");
}

TEST_CASE("words evaluate through the matrix representation")
{
    CHECK(eval_word(parse_word("a t"), 3) == element(1, 1, 0, 3));
    CHECK(eval_word(parse_word("t a t^-1"), 2) == element(0, 2, 0, 2));
    CHECK(eval_word(parse_word("T a t"), 2) == element(0, 1, 1, 2));
    CHECK(eval_word(parse_word(""), 5).is_identity());
    CHECK(format_word(parse_word("a A t T")) == "a a^-1 t t^-1");
}

TEST_CASE("word parse errors name the token")
{
    try {
        (void)parse_word("a t b");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS((void)eval_word({}, 1), InvalidArgument);
}

TEST_CASE("multiplication, inverse and powers on small cases")
{
    CHECK(multiply(element(1, 0, 0, 2), element(0, 1, 0, 2), 2) == element(1, 2, 0, 2));
    CHECK(multiply(element(1, 1, 0, 2), element(1, 1, 0, 2), 2) == element(2, 3, 0, 2));
    CHECK(inverse(element(1, 1, 0, 2), 2) == element(-1, -1, 1, 2));
    CHECK(power(element(1, 1, 0, 2), 3, 2) == element(3, 7, 0, 2));
    CHECK(power(element(0, 3, 1, 2), 4, 2) == element(0, 6, 0, 2));
    CHECK(power(element(-2, 1, 0, 3), 0, 3).is_identity());
}

TEST_CASE("integrality and the integral shift")
{
    CHECK(is_integral(element(2, 5, 0, 2)));
    CHECK_FALSE(is_integral(element(1, -1, 1, 2)));
    CHECK_FALSE(is_integral(element(-1, 0, 0, 2)));

    std::vector<GroupElement> one{element(-1, 0, 0, 2)};
    CHECK(integral_shift(one, 2) == 1);
    std::vector<GroupElement> two{element(0, 1, 0, 2), element(-2, 0, 0, 2)};
    CHECK(integral_shift(two, 2) == 2);
    CHECK(integral_shift(std::span<const GroupElement>{}, 2) == 0);
}

TEST_CASE("integral shift is the least k making every prefix integral")
{
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 5})
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<GroupElement> elems;
            for (int i = 0; i < 3; ++i)
                elems.push_back(random_element(rng, q));
            auto k = integral_shift(elems, q);
            auto all_integral = [&](std::uint64_t shift) {
                GroupElement prefix{static_cast<std::int64_t>(shift), {}};
                if (! is_integral(prefix))
                    return false;
                for (const auto & g : elems) {
                    prefix = multiply(prefix, g, q);
                    if (! is_integral(prefix))
                        return false;
                }
                return true;
            };
            CHECK(all_integral(k));
            if (k > 0)
                CHECK_FALSE(all_integral(k - 1));
        }
}

TEST_CASE("defining relation t a t^-1 = a^q")
{
    for (int q : {2, 3, 5, 7}) {
        auto lhs = eval_word(parse_word("t a t^-1"), q);
        CHECK(lhs == power(GroupElement::generator_a(), static_cast<std::uint64_t>(q), q));
    }
}

TEST_CASE("group axioms hold on random elements")
{
    std::mt19937_64 rng(5);
    for (int q : {2, 3, 5})
        for (int trial = 0; trial < 200; ++trial) {
            auto g = random_element(rng, q);
            auto h = random_element(rng, q);
            auto k = random_element(rng, q);
            CHECK(multiply(multiply(g, h, q), k, q) == multiply(g, multiply(h, k, q), q));
            CHECK(multiply(g, inverse(g, q), q).is_identity());
            CHECK(multiply(inverse(g, q), g, q).is_identity());
            CHECK(multiply(g, GroupElement::identity(), q) == g);
            CHECK(g.coefficient.is_canonical(q));
        }
}

TEST_CASE("closed-form power matches iterated multiplication")
{
    std::mt19937_64 rng(9);
    for (int q : {2, 3, 5})
        for (int trial = 0; trial < 40; ++trial) {
            auto g = random_element(rng, q);
            GroupElement iterated;
            for (std::uint64_t s = 0; s <= 20; ++s) {
                CHECK(power(g, s, q) == iterated);
                iterated = multiply(iterated, g, q);
            }
        }
}

TEST_CASE("power products")
{
    std::vector<GroupElement> gens{element(0, 1, 0, 2), element(0, 2, 0, 2)};
    std::vector<std::uint64_t> xs{1, 3};
    CHECK(power_product(gens, xs, 2) == element(0, 7, 0, 2));
    std::vector<std::uint64_t> wrong{1};
    CHECK_THROWS_AS((void)power_product(gens, wrong, 2), InvalidArgument);
}
