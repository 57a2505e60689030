#pragma once

#include <bsknap/bigint.hh>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Arithmetic in BS(1,q) = <a, t | t a t^-1 = a^q> through its faithful
/// representation as the matrices (q^k, u; 0, 1) with u in Z[1/q].
namespace bsknap
{
    /// Throws InvalidArgument unless q >= 2.
    void check_base(int q);

    /// The value numerator / q^exponent. The base is supplied by context.
    /// Canonical: exponent > 0 implies q does not divide numerator, and zero
    /// is always (0, 0).
    struct QFraction
    {
        BigInt numerator{0};
        std::uint32_t exponent = 0;

        [[nodiscard]] static auto integer(BigInt value) -> QFraction;
        [[nodiscard]] static auto make(BigInt numerator, std::int64_t exponent, int q) -> QFraction;

        [[nodiscard]] auto is_zero() const -> bool { return numerator == 0; }
        [[nodiscard]] auto is_integer() const -> bool { return exponent == 0; }
        [[nodiscard]] auto is_canonical(int q) const -> bool;

        auto operator==(const QFraction &) const -> bool = default;
    };

    [[nodiscard]] auto add(const QFraction & a, const QFraction & b, int q) -> QFraction;
    [[nodiscard]] auto negate(const QFraction & a) -> QFraction;
    [[nodiscard]] auto scale(const QFraction & a, const BigInt & factor, int q) -> QFraction;
    /// a * q^shift, shift of either sign.
    [[nodiscard]] auto shift(const QFraction & a, std::int64_t shift, int q) -> QFraction;
    [[nodiscard]] auto to_string(const QFraction & a, int q) -> std::string;

    /// The matrix (q^t_exponent, coefficient; 0, 1).
    struct GroupElement
    {
        std::int64_t t_exponent = 0;
        QFraction coefficient;

        [[nodiscard]] static auto identity() -> GroupElement { return {}; }
        [[nodiscard]] static auto generator_a() -> GroupElement { return {0, QFraction::integer(1)}; }
        [[nodiscard]] static auto generator_t() -> GroupElement { return {1, {}}; }

        [[nodiscard]] auto is_identity() const -> bool { return t_exponent == 0 && coefficient.is_zero(); }

        auto operator==(const GroupElement &) const -> bool = default;
    };

    [[nodiscard]] auto to_string(const GroupElement & g, int q) -> std::string;

    enum class Letter : std::uint8_t
    {
        A,
        AInverse,
        T,
        TInverse
    };

    using GroupWord = std::vector<Letter>;

    /// Tokens: a, t, a^-1, t^-1, and A, T as shorthand for the inverses.
    /// Throws ParseError carrying the 1-based index of the offending token.
    [[nodiscard]] auto parse_word(std::string_view text) -> GroupWord;
    [[nodiscard]] auto format_word(const GroupWord & word) -> std::string;

    [[nodiscard]] auto image(Letter letter, int q) -> GroupElement;
    [[nodiscard]] auto eval_word(const GroupWord & word, int q) -> GroupElement;

    /// (k, u)(l, v) = (k + l, u + v q^k).
    [[nodiscard]] auto multiply(const GroupElement & g, const GroupElement & h, int q) -> GroupElement;
    [[nodiscard]] auto inverse(const GroupElement & g, int q) -> GroupElement;
    /// Closed form: (l s, v (q^{ls} - 1) / (q^l - 1)) for l != 0, (0, s v) for l == 0.
    [[nodiscard]] auto power(const GroupElement & g, std::uint64_t s, int q) -> GroupElement;

    /// Membership in G_Z: both matrix entries are integers.
    [[nodiscard]] auto is_integral(const GroupElement & g) -> bool;

    /// Least k such that (k, 0) times every prefix product of `elements`
    /// (including the empty prefix) is integral.
    [[nodiscard]] auto integral_shift(std::span<const GroupElement> elements, int q) -> std::uint64_t;

    /// g_1^{x_1} ... g_n^{x_n}; sizes must agree.
    [[nodiscard]] auto power_product(std::span<const GroupElement> generators,
        std::span<const std::uint64_t> exponents, int q) -> GroupElement;
}
