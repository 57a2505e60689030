#include <bsknap/atoms.hh>
#include <bsknap/error.hh>

#include <doctest.h>

using namespace bsknap;

namespace
{
    auto atom(std::map<std::string, BigInt> coefficients, BigInt constant,
        LinearAtom::Kind kind = LinearAtom::Kind::Equal) -> LinearAtom
    {
        return LinearAtom{std::move(coefficients), std::move(constant), kind};
    }

    auto holds2(const LinearAtom & a, long long x, long long y) -> bool
    {
        return holds(a, {{"x", x}, {"y", y}});
    }
}

TEST_CASE("linear atom grids")
{
    const std::vector<std::string> env{"x", "y"};
    const std::vector<LinearAtom> atoms{
        atom({{"x", 2}, {"y", 3}}, 7),
        atom({{"x", 1}, {"y", -1}}, 0, LinearAtom::Kind::GreaterEqual),
        atom({{"x", -5}, {"y", 2}}, -3, LinearAtom::Kind::GreaterEqual),
        atom({{"x", 4}}, 12),
        atom({{"y", 9}, {"x", -27}}, 0),
    };
    for (int q : {2, 3})
        for (const auto & a : atoms) {
            auto automaton = linear_automaton(a, env, q);
            CHECK(automaton.padding_closed());
            for (long long x = -20; x <= 20; ++x)
                for (long long y = -20; y <= 20; ++y)
                    CHECK(accepts_values(automaton, {x, y}) == holds2(a, x, y));
        }
}

TEST_CASE("x >= 0 over base two")
{
    auto automaton = linear_automaton(atom({{"x", 1}}, 0, LinearAtom::Kind::GreaterEqual), std::vector<std::string>{"x"}, 2);
    for (long long v = 0; v <= 50; ++v)
        CHECK(accepts_values(automaton, {v}));
    for (long long v = -50; v < 0; ++v)
        CHECK_FALSE(accepts_values(automaton, {v}));
}

TEST_CASE("power guards restrict tracks to powers of q")
{
    const std::vector<std::string> env{"x", "y", "z"};
    const std::vector<unsigned> guards{0, 2};
    for (int q : {2, 3}) {
        auto plain_power = power_automaton(1, q);
        for (const auto & a : {atom({{"y", 1}, {"x", -3}, {"z", 1}}, 0),
                 atom({{"x", 4}, {"y", -1}, {"z", -1}}, 2, LinearAtom::Kind::GreaterEqual)}) {
            auto guarded = linear_automaton(a, env, q, guards);
            auto plain = linear_automaton(a, env, q);
            std::vector<unsigned> id3{0, 1, 2}, px{0}, pz{2};
            auto expected = intersect_aligned(
                intersect_aligned(plain, id3, plain_power, px, 3), id3, plain_power, pz, 3);
            CHECK(language_equal(guarded, expected));
        }
    }
}

TEST_CASE("guarded atoms handle coefficients beyond machine words")
{
    // u' - u = a w with w a power of q and a near 2^100
    const BigInt a = ipow(BigInt(2), 100) + 3;
    const std::vector<std::string> env{"u", "v", "w"};
    const std::vector<unsigned> guard{2};
    auto automaton = linear_automaton(LinearAtom{{{"u", -1}, {"v", 1}, {"w", -a}}, 0, LinearAtom::Kind::Equal}, env,
        2, guard);
    for (unsigned r = 0; r < 6; ++r) {
        BigInt w = ipow(BigInt(2), r);
        std::vector<BigInt> good{5, 5 + a * w, w};
        std::vector<BigInt> bad{5, 6 + a * w, w};
        CHECK(accepts_values(automaton, good));
        CHECK_FALSE(accepts_values(automaton, bad));
    }
    std::vector<BigInt> not_power{0, 3 * a, 3};
    CHECK_FALSE(accepts_values(automaton, not_power));
    CHECK_THROWS_AS((void)linear_automaton(LinearAtom{{{"u", a}}, 0, LinearAtom::Kind::Equal},
                        std::vector<std::string>{"u"}, 2),
        ResourceLimit);
}

TEST_CASE("shift automaton examples and grid")
{
    auto two = shift_automaton(2, 2);
    CHECK(accepts_values(two, {2, 32}));
    CHECK_FALSE(accepts_values(two, {2, 16}));
    for (int q : {2, 3})
        for (std::int64_t step : {0, 1, 2, 3, -1, -2}) {
            auto automaton = shift_automaton(step, q);
            for (long long x = -50; x <= 50; ++x)
                for (long long y = -50; y <= 50; ++y)
                    CHECK(accepts_values(automaton, {x, y}) == holds_shift(step, x, y, q));
        }
}

TEST_CASE("power automaton examples and grid")
{
    auto four = power_automaton(2, 2);
    for (long long v : {1, 4, 16, 64})
        CHECK(accepts_values(four, {v}));
    for (long long v : {2, 8, 32})
        CHECK_FALSE(accepts_values(four, {v}));
    for (int q : {2, 3, 5})
        for (std::uint64_t step : {1, 2, 3}) {
            auto automaton = power_automaton(step, q);
            for (long long v = -200; v <= 200; ++v)
                CHECK(accepts_values(automaton, {v}) == holds_power(step, v, q));
        }
    CHECK_THROWS_AS((void)power_automaton(0, 2), InvalidArgument);
}

TEST_CASE("V_q automaton examples and grid")
{
    auto v2 = vq_automaton(2);
    CHECK(accepts_values(v2, {12, 4}));
    CHECK_FALSE(accepts_values(v2, {12, 2}));
    CHECK(accepts_values(v2, {-12, 4}));
    CHECK_FALSE(accepts_values(v2, {0, 1}));
    for (int q : {2, 3}) {
        auto automaton = vq_automaton(q);
        for (long long x = -50; x <= 50; ++x)
            for (long long y = -50; y <= 50; ++y)
                CHECK(accepts_values(automaton, {x, y}) == holds_vq(x, y, q));
    }
}

TEST_CASE("shift predicate through powers of q^step")
{
    for (int q : {2, 3})
        for (std::uint64_t step : {1, 2, 3}) {
            auto f = step_two_shift_formula(step, q);
            auto compiled = compile(f, Environment({"x", "y"}), q);
            CHECK(language_equal(compiled, shift_automaton(static_cast<std::int64_t>(step), q)));
        }
}

TEST_CASE("ground evaluators")
{
    CHECK(holds_shift(1, 2, 8, 2));
    CHECK_FALSE(holds_shift(1, 8, 2, 2));
    CHECK(holds_shift(-1, 8, 2, 2));
    CHECK_FALSE(holds_shift(2, 3, 27, 2));
    CHECK(holds_power(3, 27, 3));
    CHECK_FALSE(holds_power(2, 27, 3));
    CHECK_FALSE(holds_vq(0, 1, 2));
}
