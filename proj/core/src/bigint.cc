#include <bsknap/bigint.hh>

namespace bsknap
{
    auto ipow(const BigInt & base, std::uint64_t exponent) -> BigInt
    {
        BigInt result = 1;
        BigInt b = base;
        while (exponent > 0) {
            if (exponent & 1u)
                result *= b;
            exponent >>= 1;
            if (exponent > 0)
                b *= b;
        }
        return result;
    }

    auto valuation(const BigInt & n, int q) -> std::uint64_t
    {
        std::uint64_t e = 0;
        BigInt rest = n;
        while (rest != 0 && rest % q == 0) {
            rest /= q;
            ++e;
        }
        return e;
    }

    auto exact_log(const BigInt & n, int q) -> std::int64_t
    {
        if (n <= 0)
            return -1;
        std::int64_t r = 0;
        BigInt rest = n;
        while (rest % q == 0) {
            rest /= q;
            ++r;
        }
        return rest == 1 ? r : -1;
    }

    auto to_string(const BigInt & n) -> std::string
    {
        return n.str();
    }
}
