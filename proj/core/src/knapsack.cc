#include <bsknap/atoms.hh>
#include <bsknap/error.hh>
#include <bsknap/knapsack.hh>

#include <limits>

namespace bsknap
{
    namespace
    {
        auto power_of_q(std::int64_t k, int q) -> BigInt
        {
            return ipow(BigInt(q), static_cast<std::uint64_t>(k < 0 ? -k : k));
        }

        // diagonal_to = q^k * diagonal_from, kept integral for negative k.
        auto diagonal_scaled(const std::string & to, const std::string & from, std::int64_t k, int q) -> Formula
        {
            if (k >= 0)
                return equals(Term::variable(to), Term::linear({{from, power_of_q(k, q)}}));
            return equals(Term::linear({{to, power_of_q(k, q)}}), Term::variable(from));
        }

        // corner_to = corner_from + u * diagonal, for a diagonal that is a power
        // of q. With u = a / q^e the diagonal is q^e w for a power w, and the
        // corner moves by a w; no track then carries the factor q^e.
        auto corner_moved(const std::string & to, const std::string & from, const QFraction & u,
            const std::string & diagonal, int q) -> Formula
        {
            if (u.exponent == 0) {
                Term rhs = Term::variable(from);
                rhs.add(diagonal, u, q);
                return equals(Term::variable(to), std::move(rhs));
            }
            Term rhs = Term::variable(from);
            rhs.add("w", QFraction::integer(u.numerator), q);
            return exists("w",
                conjunction({power_atom(1, Term::variable("w")),
                    equals(Term::variable(diagonal), Term::linear({{"w", power_of_q(u.exponent, q)}})),
                    equals(Term::variable(to), std::move(rhs))}));
        }

        auto to_exponent(const BigInt & v) -> std::uint64_t
        {
            if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
                throw ResourceLimit("recovered exponent " + v.str() + " out of range");
            return static_cast<std::uint64_t>(v);
        }
    }

    auto h_variables(std::size_t index) -> HVariables
    {
        auto n = std::to_string(index);
        return {"U" + n, "M" + n};
    }

    auto m_star_formula(const GroupElement & g, const HVariables & from, const HVariables & to, int q) -> Formula
    {
        check_base(q);
        const auto step = g.t_exponent;
        const auto & v = g.coefficient;

        Term moved = Term::variable(from.corner);
        moved.add("x", v, q);
        auto corner = equals(Term::variable(to.corner), std::move(moved));

        if (step != 0) {
            // x = M (q^{step s} - 1) / (q^step - 1) = (M' - M) / (q^step - 1),
            // multiplied through by q^{|step|} when step < 0.
            BigInt c, d;
            if (step > 0) {
                c = power_of_q(step, q) - 1;
                d = 1;
            }
            else {
                c = 1 - power_of_q(step, q);
                d = power_of_q(step, q);
            }
            auto geometric = equals(Term::linear({{"x", c}}), Term::linear({{to.diagonal, d}, {from.diagonal, -d}}));
            return exists("x",
                conjunction({shift_atom(step, Term::variable(from.diagonal), Term::variable(to.diagonal)),
                    std::move(corner), std::move(geometric)}));
        }

        // g^s = (0, s v), so the corner moves by v x with x = s M, i.e. x is a
        // nonnegative multiple of the power of q M: x = 0 or V_q(x) >= M.
        auto multiple = disjunction({equals(Term::variable("x"), Term::integer(0)),
            exists("y", conjunction({vq_atom(Term::variable("x"), Term::variable("y")),
                            geq(Term::variable("y"), Term::variable(from.diagonal))}))});
        return exists_natural("x",
            conjunction({std::move(multiple), std::move(corner),
                equals(Term::variable(to.diagonal), Term::variable(from.diagonal))}));
    }

    auto closing_formula(const GroupElement & g, const HVariables & first, const HVariables & last, int q) -> Formula
    {
        check_base(q);
        return conjunction({diagonal_scaled(last.diagonal, first.diagonal, g.t_exponent, q),
            corner_moved(last.corner, first.corner, g.coefficient, first.diagonal, q)});
    }

    auto closing_formula_via_inverse(const GroupElement & g, const HVariables & first, const HVariables & last, int q)
        -> Formula
    {
        check_base(q);
        auto gi = inverse(g, q);
        return conjunction({diagonal_scaled(first.diagonal, last.diagonal, gi.t_exponent, q),
            corner_moved(first.corner, last.corner, gi.coefficient, last.diagonal, q)});
    }

    auto knapsack_formula(const KnapsackInstance & instance) -> Formula
    {
        const auto q = instance.q;
        check_base(q);
        const auto n = instance.generators.size();
        std::vector<Formula> parts;
        parts.push_back(power_atom(1, Term::variable(h_variables(0).diagonal)));
        for (std::size_t i = 1; i <= n; ++i) {
            parts.push_back(m_star_formula(instance.generators[i - 1], h_variables(i - 1), h_variables(i), q));
            parts.push_back(power_atom(1, Term::variable(h_variables(i).diagonal)));
        }
        parts.push_back(closing_formula(instance.target, h_variables(0), h_variables(n), q));
        return conjunction(std::move(parts));
    }

    auto solve(const KnapsackInstance & instance, const SolveOptions & options) -> KnapsackResult
    {
        KnapsackResult result;
        CompileOptions compile_options;
        compile_options.max_tracks = options.max_tracks;
        compile_options.observer = [&](const std::string & stage, const Automaton & a,
                                       const std::vector<std::string> & tracks) {
            result.stages.push_back(
                {stage, a.state_count(), a.transition_count(), static_cast<unsigned>(tracks.size())});
            if (options.observer)
                options.observer(stage, a, tracks);
        };

        const auto formula = knapsack_formula(instance);
        std::vector<std::string> names;
        for (std::size_t i = 0; i <= instance.generators.size(); ++i) {
            auto h = h_variables(i);
            names.push_back(h.corner);
            names.push_back(h.diagonal);
        }
        Environment env(names);
        auto automaton = compile(formula, env, instance.q, compile_options);
        if (options.observer)
            options.observer("final", automaton, env.variables());
        result.stages.push_back({"final", automaton.state_count(), automaton.transition_count(),
            static_cast<unsigned>(env.size())});

        auto word = shortest_accepted(automaton);
        if (! word) {
            result.decision = Decision::Unsat;
            return result;
        }

        auto values = decode(*word, automaton.alphabet());
        for (std::size_t i = 0; i <= instance.generators.size(); ++i) {
            auto h = h_variables(i);
            result.chain.push_back(
                {values[*env.track_of(h.corner)], values[*env.track_of(h.diagonal)]});
        }
        result.decision = Decision::Sat;
        result.exponents = recover_exponents(result.chain, instance);
        result.verified = verify_witness(instance, result.exponents);
        if (! result.verified)
            throw InternalError("recovered exponents do not reproduce the target");
        return result;
    }

    auto recover_exponents(const HChain & chain, const KnapsackInstance & instance) -> std::vector<std::uint64_t>
    {
        const auto q = instance.q;
        if (chain.size() != instance.generators.size() + 1)
            throw InvalidArgument("h-chain length does not match the generator count");
        std::vector<std::uint64_t> exponents;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            const auto & g = instance.generators[i - 1];
            const auto & before = chain[i - 1];
            const auto & after = chain[i];
            if (g.is_identity()) {
                exponents.push_back(0);
                continue;
            }
            if (g.t_exponent != 0) {
                auto lb = exact_log(before.diagonal, q);
                auto la = exact_log(after.diagonal, q);
                if (lb < 0 || la < 0)
                    throw InternalError("h-chain diagonal is not a power of q");
                auto gap = la - lb;
                if (gap % g.t_exponent != 0 || gap / g.t_exponent < 0)
                    throw InternalError("h-chain diagonal gap is not a nonnegative multiple of the t-exponent");
                exponents.push_back(static_cast<std::uint64_t>(gap / g.t_exponent));
                continue;
            }
            // corner moves by s * v * M with v = a / q^e
            BigInt numerator = (after.corner - before.corner) * ipow(BigInt(q), g.coefficient.exponent);
            BigInt denominator = g.coefficient.numerator * before.diagonal;
            if (denominator == 0 || numerator % denominator != 0)
                throw InternalError("inexact exponent recovery for generator " + std::to_string(i));
            exponents.push_back(to_exponent(numerator / denominator));
        }
        return exponents;
    }

    auto verify_witness(const KnapsackInstance & instance, std::span<const std::uint64_t> exponents) -> bool
    {
        if (exponents.size() != instance.generators.size())
            return false;
        return power_product(instance.generators, exponents, instance.q) == instance.target;
    }

    auto canonical_chain(const KnapsackInstance & instance, std::span<const std::uint64_t> exponents) -> HChain
    {
        const auto q = instance.q;
        std::vector<GroupElement> powers;
        for (std::size_t i = 0; i < instance.generators.size(); ++i)
            powers.push_back(power(instance.generators[i], exponents[i], q));
        auto k = integral_shift(powers, q);

        HChain chain;
        GroupElement h{static_cast<std::int64_t>(k), {}};
        auto record = [&] {
            if (! is_integral(h))
                throw InternalError("shifted prefix is not integral");
            chain.push_back({h.coefficient.numerator, ipow(BigInt(q), static_cast<std::uint64_t>(h.t_exponent))});
        };
        record();
        for (const auto & p : powers) {
            h = multiply(h, p, q);
            record();
        }
        return chain;
    }

    auto chain_assignment(const HChain & chain) -> Assignment
    {
        Assignment a;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            auto h = h_variables(i);
            a[h.corner] = chain[i].corner;
            a[h.diagonal] = chain[i].diagonal;
        }
        return a;
    }
}
