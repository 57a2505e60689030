#pragma once

#include <bsknap/knapsack.hh>

#include <cstdint>
#include <optional>
#include <vector>

/// Bounded brute force over exponent vectors, for cross-checking the solver.
/// Uses group arithmetic only; it can confirm solutions but never refute them.
namespace bsknap
{
    inline constexpr std::uint64_t default_oracle_bound = 12;

    struct OracleOutcome
    {
        std::optional<std::vector<std::uint64_t>> found;
        std::uint64_t searched_bound = 0;
    };

    /// First exponent vector of [0, bound]^n in lexicographic order that
    /// reproduces the target.
    [[nodiscard]] auto brute_force(const KnapsackInstance & instance, std::uint64_t bound) -> OracleOutcome;

    struct RandomInstance
    {
        KnapsackInstance instance;
        std::vector<GroupWord> generator_words;
        /// True when the target is a genuine product (exponents in `planted`);
        /// otherwise the target was perturbed and the instance may go either way.
        bool constructed_sat = false;
        std::vector<std::uint64_t> planted;
    };

    [[nodiscard]] auto random_instance(int q, std::size_t generators, std::size_t max_word_length, std::uint64_t seed,
        std::uint64_t max_exponent = 6) -> RandomInstance;
}
