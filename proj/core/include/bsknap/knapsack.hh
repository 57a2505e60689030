#pragma once

#include <bsknap/formula.hh>
#include <bsknap/group.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace bsknap
{
    /// Does g_1^{x_1} ... g_n^{x_n} = target have a solution with x_i >= 0?
    struct KnapsackInstance
    {
        int q = 2;
        std::vector<GroupElement> generators;
        GroupElement target;

        auto operator==(const KnapsackInstance &) const -> bool = default;
    };

    /// The integral matrix (diagonal, corner; 0, 1) as decoded from a model.
    struct HMatrix
    {
        BigInt corner;
        BigInt diagonal;

        auto operator==(const HMatrix &) const -> bool = default;
    };

    using HChain = std::vector<HMatrix>;

    /// Track names of h_i: "M<i>" for the diagonal, "U<i>" for the corner.
    struct HVariables
    {
        std::string corner;
        std::string diagonal;
    };

    [[nodiscard]] auto h_variables(std::size_t index) -> HVariables;

    enum class Decision
    {
        Sat,
        Unsat
    };

    struct StageSize
    {
        std::string stage;
        std::size_t states;
        std::size_t transitions;
        unsigned tracks;
    };

    struct KnapsackResult
    {
        Decision decision = Decision::Unsat;
        std::vector<std::uint64_t> exponents;
        HChain chain;
        bool verified = false;
        std::vector<StageSize> stages;
    };

    struct SolveOptions
    {
        unsigned max_tracks = default_max_tracks;
        /// Receives every pipeline automaton (see CompileOptions::observer).
        std::function<void(const std::string & stage, const Automaton &, const std::vector<std::string> & tracks)>
            observer;
    };

    /// `to` = `from` * g^s for some s >= 0, both matrices integral.
    [[nodiscard]] auto m_star_formula(const GroupElement & g, const HVariables & from, const HVariables & to, int q)
        -> Formula;

    /// h_n = h_0 g, for diagonals that are powers of q (the surrounding
    /// knapsack formula asserts this).
    [[nodiscard]] auto closing_formula(const GroupElement & g, const HVariables & first, const HVariables & last, int q)
        -> Formula;

    /// h_0 = h_n g^{-1}, the same relation stated through the inverse.
    [[nodiscard]] auto closing_formula_via_inverse(const GroupElement & g, const HVariables & first,
        const HVariables & last, int q) -> Formula;

    /// Power(1, M_i) for every i, the chain of M* constraints, and the closing
    /// constraint, with h_0 ... h_n left free.
    [[nodiscard]] auto knapsack_formula(const KnapsackInstance & instance) -> Formula;

    [[nodiscard]] auto solve(const KnapsackInstance & instance, const SolveOptions & options = {}) -> KnapsackResult;

    [[nodiscard]] auto recover_exponents(const HChain & chain, const KnapsackInstance & instance)
        -> std::vector<std::uint64_t>;

    [[nodiscard]] auto verify_witness(const KnapsackInstance & instance, std::span<const std::uint64_t> exponents)
        -> bool;

    /// The integral h-chain (k, 0) * g_1^{x_1} ... g_i^{x_i} with k the least
    /// integral shift of all prefixes.
    [[nodiscard]] auto canonical_chain(const KnapsackInstance & instance, std::span<const std::uint64_t> exponents)
        -> HChain;

    [[nodiscard]] auto chain_assignment(const HChain & chain) -> Assignment;
}
