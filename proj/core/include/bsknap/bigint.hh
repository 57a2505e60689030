#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bsknap
{
    using BigInt = boost::multiprecision::cpp_int;

    [[nodiscard]] auto ipow(const BigInt & base, std::uint64_t exponent) -> BigInt;

    /// Largest e with q^e | n, for n != 0.
    [[nodiscard]] auto valuation(const BigInt & n, int q) -> std::uint64_t;

    /// Exponent r with n == q^r, or -1 if n is not a nonnegative power of q.
    [[nodiscard]] auto exact_log(const BigInt & n, int q) -> std::int64_t;

    [[nodiscard]] auto to_string(const BigInt & n) -> std::string;
}
