#pragma once

#include <bsknap/automaton.hh>
#include <bsknap/bigint.hh>
#include <bsknap/group.hh>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bsknap
{
    /// sum_v coefficients[v] * v + constant, over Z[1/q].
    struct Term
    {
        std::map<std::string, QFraction> coefficients;
        QFraction constant;

        [[nodiscard]] static auto variable(const std::string & name) -> Term;
        [[nodiscard]] static auto integer(const BigInt & value) -> Term;
        /// Integer linear combination, e.g. Term::linear({{"x", 2}, {"y", -1}}, 3).
        [[nodiscard]] static auto linear(const std::vector<std::pair<std::string, BigInt>> & parts,
            const BigInt & constant = 0) -> Term;

        /// this += coefficient * name. Zero coefficients disappear.
        auto add(const std::string & name, const QFraction & coefficient, int q) -> Term &;
        auto add(const Term & other, int q) -> Term &;
        auto add_constant(const QFraction & value, int q) -> Term &;
        auto scale(const QFraction & factor, int q) -> Term &;

        /// The variable name if this term is exactly one variable.
        [[nodiscard]] auto as_variable() const -> std::optional<std::string>;

        auto operator==(const Term &) const -> bool = default;
    };

    class Formula;

    namespace node
    {
        struct True
        {
        };
        struct False
        {
        };
        struct Equals
        {
            Term lhs, rhs;
        };
        struct Geq
        {
            Term lhs, rhs;
        };
        /// x = q^r, y = q^{r + step s} for some s >= 0.
        struct Shift
        {
            std::int64_t step;
            Term x, y;
        };
        /// x is a power of q^step.
        struct Power
        {
            std::uint64_t step;
            Term x;
        };
        /// y is the largest power of q dividing x.
        struct Vq
        {
            Term x, y;
        };
        struct Not
        {
            std::shared_ptr<const Formula> body;
        };
        struct And
        {
            std::vector<Formula> parts;
        };
        struct Or
        {
            std::vector<Formula> parts;
        };
        struct Exists
        {
            std::string var;
            std::shared_ptr<const Formula> body;
        };
        struct Forall
        {
            std::string var;
            std::shared_ptr<const Formula> body;
        };
    }

    using FormulaNode = std::variant<node::True, node::False, node::Equals, node::Geq, node::Shift, node::Power,
        node::Vq, node::Not, node::And, node::Or, node::Exists, node::Forall>;

    /// First-order formula over (Z, +, >=, 0, V_q) extended with shift and
    /// power predicates. Immutable; copies share structure.
    class Formula
    {
    public:
        explicit Formula(FormulaNode node);

        [[nodiscard]] auto node() const -> const FormulaNode & { return *_node; }

    private:
        std::shared_ptr<const FormulaNode> _node;
    };

    [[nodiscard]] auto truth() -> Formula;
    [[nodiscard]] auto falsity() -> Formula;
    [[nodiscard]] auto equals(Term lhs, Term rhs) -> Formula;
    [[nodiscard]] auto geq(Term lhs, Term rhs) -> Formula;
    [[nodiscard]] auto leq(Term lhs, Term rhs) -> Formula;
    [[nodiscard]] auto shift_atom(std::int64_t step, Term x, Term y) -> Formula;
    [[nodiscard]] auto power_atom(std::uint64_t step, Term x) -> Formula;
    [[nodiscard]] auto vq_atom(Term x, Term y) -> Formula;
    [[nodiscard]] auto negation(Formula body) -> Formula;
    [[nodiscard]] auto conjunction(std::vector<Formula> parts) -> Formula;
    [[nodiscard]] auto disjunction(std::vector<Formula> parts) -> Formula;
    [[nodiscard]] auto exists(std::string var, Formula body) -> Formula;
    [[nodiscard]] auto forall(std::string var, Formula body) -> Formula;
    /// exists var (var >= 0 and body).
    [[nodiscard]] auto exists_natural(std::string var, Formula body) -> Formula;

    [[nodiscard]] auto free_variables(const Formula & f) -> std::vector<std::string>;
    [[nodiscard]] auto has_quantifiers(const Formula & f) -> bool;
    [[nodiscard]] auto to_sexpr(const Formula & f, int q) -> std::string;

    /// Renames bound variables apart, replaces predicates applied to
    /// non-variable terms by exists z (z = T and p(z)), and rewrites forall
    /// into not-exists-not.
    [[nodiscard]] auto normalize(const Formula & f) -> Formula;

    struct LinearAtom
    {
        enum class Kind
        {
            Equal,
            GreaterEqual
        };

        /// sum coefficients[v] * v (kind) constant
        std::map<std::string, BigInt> coefficients;
        BigInt constant;
        Kind kind = Kind::Equal;

        auto operator==(const LinearAtom &) const -> bool = default;
    };

    /// lhs (kind) rhs, multiplied through by q^E where E is the largest
    /// denominator exponent, with variables collected on the left.
    [[nodiscard]] auto clear_denominators(const Term & lhs, const Term & rhs, LinearAtom::Kind kind, int q)
        -> LinearAtom;

    using Assignment = std::map<std::string, BigInt>;

    /// Truth of `f` under `assignment`. Quantifiers range over
    /// [-quantifier_bound, quantifier_bound], so quantified formulas are only
    /// evaluated exactly when their witnesses lie in that window.
    [[nodiscard]] auto evaluate(const Formula & f, const Assignment & assignment, int q,
        std::int64_t quantifier_bound = 0) -> bool;

    /// Sorted, duplicate-free free-variable list; position i is track i.
    class Environment
    {
    public:
        Environment() = default;
        explicit Environment(std::vector<std::string> variables);

        [[nodiscard]] auto variables() const -> const std::vector<std::string> & { return _variables; }
        [[nodiscard]] auto size() const -> std::size_t { return _variables.size(); }
        [[nodiscard]] auto track_of(const std::string & name) const -> std::optional<unsigned>;

    private:
        std::vector<std::string> _variables;
    };

    struct CompileOptions
    {
        unsigned max_tracks = default_max_tracks;
        /// Called with every top-level conjunct and every join of the
        /// top-level conjunction, in pipeline order.
        std::function<void(const std::string & stage, const Automaton &, const std::vector<std::string> & tracks)>
            observer;
    };

    [[nodiscard]] auto compile(const Formula & f, const Environment & env, int q, const CompileOptions & options = {})
        -> Automaton;
    [[nodiscard]] auto is_satisfiable(const Formula & f, int q, const CompileOptions & options = {}) -> bool;
    /// Decoded shortest accepted word of the compiled free-variable
    /// automaton, or nothing when unsatisfiable.
    [[nodiscard]] auto model(const Formula & f, int q, const CompileOptions & options = {})
        -> std::optional<Assignment>;
}
