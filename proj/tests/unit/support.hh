#pragma once

#include <bsknap/group.hh>

#include <random>
#include <vector>

namespace bsknap::testing
{
    inline auto element(std::int64_t k, long long num, std::int64_t den_exp, int q) -> GroupElement
    {
        return {k, QFraction::make(BigInt(num), den_exp, q)};
    }

    inline auto random_element(std::mt19937_64 & rng, int q) -> GroupElement
    {
        std::uniform_int_distribution<std::int64_t> k(-4, 4), e(0, 3);
        std::uniform_int_distribution<long long> num(-60, 60);
        return element(k(rng), num(rng), e(rng), q);
    }

    /// Value of a single-track digit string, straight from the sign-digit rule.
    inline auto digit_value(const std::vector<unsigned> & digits, int q) -> BigInt
    {
        BigInt value = 0, place = 1;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            BigInt d = digits[i];
            if (i + 1 == digits.size() && digits[i] == static_cast<unsigned>(q - 1))
                d = -1;
            value += d * place;
            place *= q;
        }
        return value;
    }
}
