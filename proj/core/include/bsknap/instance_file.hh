#pragma once

#include <bsknap/knapsack.hh>

#include <string>
#include <string_view>

// Line-oriented instance format:
//
//   # comment
//   q: 2
//   gen: t a t^-1
//   gen: mat(1, 1, 0)        # (t-exponent, numerator, denominator exponent)
//   target: a a a
//
// Exactly one q and one target line; any number of gen lines in order.
namespace bsknap
{
    /// Throws ParseError whose position() is the offending line number, or 0
    /// for a missing key.
    [[nodiscard]] auto parse_instance(std::string_view text) -> KnapsackInstance;

    /// Renders every element as a mat(...) triple; parse_instance inverts it.
    [[nodiscard]] auto format_instance(const KnapsackInstance & instance) -> std::string;

    [[nodiscard]] auto format_triple(const GroupElement & g) -> std::string;
}
