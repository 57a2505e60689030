#pragma once

#include <bsknap/automaton.hh>
#include <bsknap/formula.hh>

#include <cstdint>
#include <span>
#include <string>

/// Relation automata for the atomic predicates. Every builder returns a
/// minimized, padding-closed automaton.
namespace bsknap
{
    /// Tracks follow `env`; variables of `env` absent from the atom are
    /// unconstrained. LSD-first carry automaton. Tracks listed in `powers`
    /// are additionally restricted to powers of q, which keeps the automaton
    /// small when those tracks carry large coefficients.
    [[nodiscard]] auto linear_automaton(const LinearAtom & atom, std::span<const std::string> env, int q,
        std::span<const unsigned> powers = {}) -> Automaton;

    /// Tracks (x, y): x = q^r, y = q^{r + step s} with r >= 0, s >= 0 and
    /// r + step s >= 0.
    [[nodiscard]] auto shift_automaton(std::int64_t step, int q) -> Automaton;

    /// One track: { q^{step s} : s >= 0 }.
    [[nodiscard]] auto power_automaton(std::uint64_t step, int q) -> Automaton;

    /// Tracks (x, y): x != 0 and y is the largest power of q dividing x.
    [[nodiscard]] auto vq_automaton(int q) -> Automaton;

    /// y >= x and OR_{i<step} (P_{q^step}(q^i x) and P_{q^step}(q^i y)),
    /// the route to the shift predicate through powers of q^step.
    [[nodiscard]] auto step_two_shift_formula(std::uint64_t step, int q, const std::string & x = "x",
        const std::string & y = "y") -> Formula;

    [[nodiscard]] auto holds(const LinearAtom & atom, const Assignment & values) -> bool;
    [[nodiscard]] auto holds_shift(std::int64_t step, const BigInt & x, const BigInt & y, int q) -> bool;
    [[nodiscard]] auto holds_power(std::uint64_t step, const BigInt & x, int q) -> bool;
    [[nodiscard]] auto holds_vq(const BigInt & x, const BigInt & y, int q) -> bool;
}
