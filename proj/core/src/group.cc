#include <bsknap/error.hh>
#include <bsknap/group.hh>

#include <algorithm>
#include <limits>
#include <sstream>

namespace bsknap
{
    ParseError::ParseError(const std::string & message, std::size_t position) :
        Error(message),
        _position(position)
    {
    }

    void check_base(int q)
    {
        if (q < 2)
            throw InvalidArgument("base q must be at least 2, got " + std::to_string(q));
    }

    auto QFraction::integer(BigInt value) -> QFraction
    {
        return QFraction{std::move(value), 0};
    }

    auto QFraction::make(BigInt numerator, std::int64_t exponent, int q) -> QFraction
    {
        if (numerator == 0)
            return {};
        if (exponent < 0) {
            numerator *= ipow(BigInt(q), static_cast<std::uint64_t>(-exponent));
            exponent = 0;
        }
        while (exponent > 0 && numerator % q == 0) {
            numerator /= q;
            --exponent;
        }
        if (exponent > std::numeric_limits<std::uint32_t>::max())
            throw ResourceLimit("denominator exponent out of range");
        return QFraction{std::move(numerator), static_cast<std::uint32_t>(exponent)};
    }

    auto QFraction::is_canonical(int q) const -> bool
    {
        if (numerator == 0)
            return exponent == 0;
        return exponent == 0 || numerator % q != 0;
    }

    auto add(const QFraction & a, const QFraction & b, int q) -> QFraction
    {
        auto e = std::max(a.exponent, b.exponent);
        BigInt n = a.numerator * ipow(BigInt(q), e - a.exponent) + b.numerator * ipow(BigInt(q), e - b.exponent);
        return QFraction::make(std::move(n), e, q);
    }

    auto negate(const QFraction & a) -> QFraction
    {
        return QFraction{-a.numerator, a.exponent};
    }

    auto scale(const QFraction & a, const BigInt & factor, int q) -> QFraction
    {
        return QFraction::make(a.numerator * factor, a.exponent, q);
    }

    auto shift(const QFraction & a, std::int64_t by, int q) -> QFraction
    {
        return QFraction::make(a.numerator, static_cast<std::int64_t>(a.exponent) - by, q);
    }

    auto to_string(const QFraction & a, int q) -> std::string
    {
        if (a.exponent == 0)
            return a.numerator.str();
        return a.numerator.str() + "/" + std::to_string(q) + "^" + std::to_string(a.exponent);
    }

    auto to_string(const GroupElement & g, int q) -> std::string
    {
        return "(" + std::to_string(g.t_exponent) + ", " + to_string(g.coefficient, q) + ")";
    }

    auto parse_word(std::string_view text) -> GroupWord
    {
        GroupWord word;
        std::istringstream in{std::string(text)};
        std::string token;
        std::size_t index = 0;
        while (in >> token) {
            ++index;
            if (token == "a")
                word.push_back(Letter::A);
            else if (token == "a^-1" || token == "A")
                word.push_back(Letter::AInverse);
            else if (token == "t")
                word.push_back(Letter::T);
            else if (token == "t^-1" || token == "T")
                word.push_back(Letter::TInverse);
            else
                throw ParseError("unexpected token '" + token + "' at token " + std::to_string(index), index);
        }
        return word;
    }

    auto format_word(const GroupWord & word) -> std::string
    {
        std::string out;
        for (auto letter : word) {
            if (! out.empty())
                out += ' ';
            switch (letter) {
            case Letter::A: out += "a"; break;
            case Letter::AInverse: out += "a^-1"; break;
            case Letter::T: out += "t"; break;
            case Letter::TInverse: out += "t^-1"; break;
            }
        }
        return out;
    }

    auto image(Letter letter, int q) -> GroupElement
    {
        check_base(q);
        switch (letter) {
        case Letter::A: return GroupElement::generator_a();
        case Letter::AInverse: return {0, QFraction::integer(-1)};
        case Letter::T: return GroupElement::generator_t();
        case Letter::TInverse: return {-1, {}};
        }
        return {};
    }

    auto eval_word(const GroupWord & word, int q) -> GroupElement
    {
        check_base(q);
        GroupElement result;
        for (auto letter : word)
            result = multiply(result, image(letter, q), q);
        return result;
    }

    auto multiply(const GroupElement & g, const GroupElement & h, int q) -> GroupElement
    {
        return {g.t_exponent + h.t_exponent, add(g.coefficient, shift(h.coefficient, g.t_exponent, q), q)};
    }

    auto inverse(const GroupElement & g, int q) -> GroupElement
    {
        return {-g.t_exponent, negate(shift(g.coefficient, -g.t_exponent, q))};
    }

    auto power(const GroupElement & g, std::uint64_t s, int q) -> GroupElement
    {
        if (s == 0)
            return GroupElement::identity();
        auto l = g.t_exponent;
        if (l == 0)
            return {0, scale(g.coefficient, BigInt(s), q)};

        if (s > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / (l < 0 ? -l : l)))
            throw ResourceLimit("power exponent out of range");
        auto total = l * static_cast<std::int64_t>(s);

        // v (q^{ls} - 1) / (q^l - 1); for l < 0 multiply numerator and
        // denominator through by q^{|l| s} to stay in integers.
        auto abs_l = static_cast<std::uint64_t>(l < 0 ? -l : l);
        BigInt qs = ipow(BigInt(q), abs_l * s);
        BigInt ql = ipow(BigInt(q), abs_l);
        BigInt geometric = (qs - 1) / (ql - 1);
        if (l > 0)
            return {total, scale(g.coefficient, geometric, q)};
        // sum_{j<s} q^{-|l| j} = geometric * q^{|l|} / q^{|l| s}
        auto scaled = scale(g.coefficient, geometric * ql, q);
        return {total, shift(scaled, -static_cast<std::int64_t>(abs_l * s), q)};
    }

    auto is_integral(const GroupElement & g) -> bool
    {
        return g.t_exponent >= 0 && g.coefficient.is_integer();
    }

    auto integral_shift(std::span<const GroupElement> elements, int q) -> std::uint64_t
    {
        std::int64_t k = 0;
        GroupElement prefix;
        auto account = [&](const GroupElement & p) {
            k = std::max<std::int64_t>(k, -p.t_exponent);
            k = std::max<std::int64_t>(k, p.coefficient.exponent);
        };
        account(prefix);
        for (const auto & g : elements) {
            prefix = multiply(prefix, g, q);
            account(prefix);
        }
        return static_cast<std::uint64_t>(k);
    }

    auto power_product(std::span<const GroupElement> generators, std::span<const std::uint64_t> exponents, int q)
        -> GroupElement
    {
        if (generators.size() != exponents.size())
            throw InvalidArgument("generator and exponent counts differ");
        GroupElement result;
        for (std::size_t i = 0; i < generators.size(); ++i)
            result = multiply(result, power(generators[i], exponents[i], q), q);
        return result;
    }
}
