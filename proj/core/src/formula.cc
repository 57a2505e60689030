#include <bsknap/atoms.hh>
#include <bsknap/error.hh>
#include <bsknap/formula.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace bsknap
{
    auto Term::variable(const std::string & name) -> Term
    {
        Term t;
        t.coefficients.emplace(name, QFraction::integer(1));
        return t;
    }

    auto Term::integer(const BigInt & value) -> Term
    {
        Term t;
        t.constant = QFraction::integer(value);
        return t;
    }

    auto Term::linear(const std::vector<std::pair<std::string, BigInt>> & parts, const BigInt & constant) -> Term
    {
        Term t = integer(constant);
        for (const auto & [name, c] : parts) {
            auto & slot = t.coefficients[name];
            slot = QFraction::integer(slot.numerator + c);
            if (slot.is_zero())
                t.coefficients.erase(name);
        }
        return t;
    }

    auto Term::add(const std::string & name, const QFraction & coefficient, int q) -> Term &
    {
        auto sum = bsknap::add(coefficients[name], coefficient, q);
        if (sum.is_zero())
            coefficients.erase(name);
        else
            coefficients[name] = std::move(sum);
        return *this;
    }

    auto Term::add(const Term & other, int q) -> Term &
    {
        for (const auto & [name, c] : other.coefficients)
            add(name, c, q);
        return add_constant(other.constant, q);
    }

    auto Term::add_constant(const QFraction & value, int q) -> Term &
    {
        constant = bsknap::add(constant, value, q);
        return *this;
    }

    auto Term::scale(const QFraction & factor, int q) -> Term &
    {
        if (factor.is_zero()) {
            coefficients.clear();
            constant = {};
            return *this;
        }
        auto times = [&](const QFraction & a) {
            return QFraction::make(a.numerator * factor.numerator,
                static_cast<std::int64_t>(a.exponent) + factor.exponent, q);
        };
        for (auto & [name, c] : coefficients)
            c = times(c);
        constant = times(constant);
        return *this;
    }

    auto Term::as_variable() const -> std::optional<std::string>
    {
        if (coefficients.size() == 1 && constant.is_zero() && coefficients.begin()->second == QFraction::integer(1))
            return coefficients.begin()->first;
        return std::nullopt;
    }

    Formula::Formula(FormulaNode node) :
        _node(std::make_shared<const FormulaNode>(std::move(node)))
    {
    }

    auto truth() -> Formula { return Formula{node::True{}}; }
    auto falsity() -> Formula { return Formula{node::False{}}; }
    auto equals(Term lhs, Term rhs) -> Formula { return Formula{node::Equals{std::move(lhs), std::move(rhs)}}; }
    auto geq(Term lhs, Term rhs) -> Formula { return Formula{node::Geq{std::move(lhs), std::move(rhs)}}; }
    auto leq(Term lhs, Term rhs) -> Formula { return Formula{node::Geq{std::move(rhs), std::move(lhs)}}; }

    auto shift_atom(std::int64_t step, Term x, Term y) -> Formula
    {
        return Formula{node::Shift{step, std::move(x), std::move(y)}};
    }

    auto power_atom(std::uint64_t step, Term x) -> Formula
    {
        if (step == 0)
            throw InvalidArgument("power predicate needs step >= 1");
        return Formula{node::Power{step, std::move(x)}};
    }

    auto vq_atom(Term x, Term y) -> Formula { return Formula{node::Vq{std::move(x), std::move(y)}}; }

    auto negation(Formula body) -> Formula
    {
        return Formula{node::Not{std::make_shared<const Formula>(std::move(body))}};
    }

    auto conjunction(std::vector<Formula> parts) -> Formula
    {
        if (parts.empty())
            return truth();
        if (parts.size() == 1)
            return parts.front();
        return Formula{node::And{std::move(parts)}};
    }

    auto disjunction(std::vector<Formula> parts) -> Formula
    {
        if (parts.empty())
            return falsity();
        if (parts.size() == 1)
            return parts.front();
        return Formula{node::Or{std::move(parts)}};
    }

    auto exists(std::string var, Formula body) -> Formula
    {
        return Formula{node::Exists{std::move(var), std::make_shared<const Formula>(std::move(body))}};
    }

    auto forall(std::string var, Formula body) -> Formula
    {
        return Formula{node::Forall{std::move(var), std::make_shared<const Formula>(std::move(body))}};
    }

    auto exists_natural(std::string var, Formula body) -> Formula
    {
        auto nonnegative = geq(Term::variable(var), Term::integer(0));
        return exists(std::move(var), conjunction({std::move(nonnegative), std::move(body)}));
    }

    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        void term_variables(const Term & t, std::set<std::string> & out)
        {
            for (const auto & [name, c] : t.coefficients)
                out.insert(name);
        }

        void collect_free(const Formula & f, std::set<std::string> & bound, std::set<std::string> & out)
        {
            auto terms = [&](std::initializer_list<const Term *> ts) {
                std::set<std::string> vars;
                for (const auto * t : ts)
                    term_variables(*t, vars);
                for (const auto & v : vars)
                    if (! bound.contains(v))
                        out.insert(v);
            };
            auto quantified = [&](const std::string & var, const Formula & body) {
                bool was_bound = bound.contains(var);
                bound.insert(var);
                collect_free(body, bound, out);
                if (! was_bound)
                    bound.erase(var);
            };
            std::visit(overloaded{
                           [](const node::True &) {},
                           [](const node::False &) {},
                           [&](const node::Equals & n) { terms({&n.lhs, &n.rhs}); },
                           [&](const node::Geq & n) { terms({&n.lhs, &n.rhs}); },
                           [&](const node::Shift & n) { terms({&n.x, &n.y}); },
                           [&](const node::Power & n) { terms({&n.x}); },
                           [&](const node::Vq & n) { terms({&n.x, &n.y}); },
                           [&](const node::Not & n) { collect_free(*n.body, bound, out); },
                           [&](const node::And & n) {
                               for (const auto & p : n.parts)
                                   collect_free(p, bound, out);
                           },
                           [&](const node::Or & n) {
                               for (const auto & p : n.parts)
                                   collect_free(p, bound, out);
                           },
                           [&](const node::Exists & n) { quantified(n.var, *n.body); },
                           [&](const node::Forall & n) { quantified(n.var, *n.body); },
                       },
                f.node());
        }

        void collect_all_names(const Formula & f, std::set<std::string> & out)
        {
            std::visit(overloaded{
                           [](const node::True &) {},
                           [](const node::False &) {},
                           [&](const node::Equals & n) { term_variables(n.lhs, out), term_variables(n.rhs, out); },
                           [&](const node::Geq & n) { term_variables(n.lhs, out), term_variables(n.rhs, out); },
                           [&](const node::Shift & n) { term_variables(n.x, out), term_variables(n.y, out); },
                           [&](const node::Power & n) { term_variables(n.x, out); },
                           [&](const node::Vq & n) { term_variables(n.x, out), term_variables(n.y, out); },
                           [&](const node::Not & n) { collect_all_names(*n.body, out); },
                           [&](const node::And & n) {
                               for (const auto & p : n.parts)
                                   collect_all_names(p, out);
                           },
                           [&](const node::Or & n) {
                               for (const auto & p : n.parts)
                                   collect_all_names(p, out);
                           },
                           [&](const node::Exists & n) {
                               out.insert(n.var);
                               collect_all_names(*n.body, out);
                           },
                           [&](const node::Forall & n) {
                               out.insert(n.var);
                               collect_all_names(*n.body, out);
                           },
                       },
                f.node());
        }

        auto rename_term(const Term & t, const std::map<std::string, std::string> & renaming) -> Term
        {
            Term out;
            out.constant = t.constant;
            for (const auto & [name, c] : t.coefficients) {
                auto it = renaming.find(name);
                out.coefficients.emplace(it == renaming.end() ? name : it->second, c);
            }
            return out;
        }

        class Normalizer
        {
        public:
            explicit Normalizer(const Formula & f)
            {
                collect_all_names(f, _taken);
                std::set<std::string> bound;
                std::set<std::string> free;
                collect_free(f, bound, free);
                _claimed = free;
            }

            auto run(const Formula & f, const std::map<std::string, std::string> & renaming) -> Formula
            {
                return std::visit(overloaded{
                                      [&](const node::True &) { return f; },
                                      [&](const node::False &) { return f; },
                                      [&](const node::Equals & n) {
                                          return equals(rename_term(n.lhs, renaming), rename_term(n.rhs, renaming));
                                      },
                                      [&](const node::Geq & n) {
                                          return geq(rename_term(n.lhs, renaming), rename_term(n.rhs, renaming));
                                      },
                                      [&](const node::Shift & n) {
                                          return predicate({rename_term(n.x, renaming), rename_term(n.y, renaming)},
                                              [step = n.step](const std::vector<Term> & v) {
                                                  return shift_atom(step, v[0], v[1]);
                                              });
                                      },
                                      [&](const node::Power & n) {
                                          return predicate({rename_term(n.x, renaming)},
                                              [step = n.step](const std::vector<Term> & v) {
                                                  return power_atom(step, v[0]);
                                              });
                                      },
                                      [&](const node::Vq & n) {
                                          return predicate({rename_term(n.x, renaming), rename_term(n.y, renaming)},
                                              [](const std::vector<Term> & v) { return vq_atom(v[0], v[1]); });
                                      },
                                      [&](const node::Not & n) { return negation(run(*n.body, renaming)); },
                                      [&](const node::And & n) {
                                          std::vector<Formula> parts;
                                          for (const auto & p : n.parts)
                                              parts.push_back(run(p, renaming));
                                          return Formula{node::And{std::move(parts)}};
                                      },
                                      [&](const node::Or & n) {
                                          std::vector<Formula> parts;
                                          for (const auto & p : n.parts)
                                              parts.push_back(run(p, renaming));
                                          return Formula{node::Or{std::move(parts)}};
                                      },
                                      [&](const node::Exists & n) {
                                          auto inner = renaming;
                                          auto name = claim(n.var);
                                          inner[n.var] = name;
                                          return exists(name, run(*n.body, inner));
                                      },
                                      [&](const node::Forall & n) {
                                          auto inner = renaming;
                                          auto name = claim(n.var);
                                          inner[n.var] = name;
                                          return negation(exists(name, negation(run(*n.body, inner))));
                                      },
                                  },
                    f.node());
            }

        private:
            template <class Build>
            auto predicate(std::vector<Term> args, Build build) -> Formula
            {
                std::vector<std::pair<std::string, Term>> definitions;
                for (auto & a : args)
                    if (! a.as_variable()) {
                        auto z = fresh("z");
                        definitions.emplace_back(z, a);
                        a = Term::variable(z);
                    }
                auto result = build(args);
                for (auto it = definitions.rbegin(); it != definitions.rend(); ++it)
                    result = exists(it->first, conjunction({equals(Term::variable(it->first), it->second), result}));
                return result;
            }

            auto claim(const std::string & name) -> std::string
            {
                if (_claimed.insert(name).second)
                    return name;
                auto renamed = fresh(name);
                return renamed;
            }

            auto fresh(const std::string & base) -> std::string
            {
                for (;;) {
                    auto candidate = base + "#" + std::to_string(_counter++);
                    if (! _taken.contains(candidate) && ! _claimed.contains(candidate)) {
                        _claimed.insert(candidate);
                        return candidate;
                    }
                }
            }

            std::set<std::string> _taken;
            std::set<std::string> _claimed;
            std::size_t _counter = 0;
        };

        void term_sexpr(std::ostream & out, const Term & t, int q)
        {
            std::vector<std::string> parts;
            for (const auto & [name, c] : t.coefficients)
                parts.push_back(c == QFraction::integer(1) ? name : "(* " + to_string(c, q) + " " + name + ")");
            if (! t.constant.is_zero() || parts.empty())
                parts.push_back(to_string(t.constant, q));
            if (parts.size() == 1)
                out << parts.front();
            else {
                out << "(+";
                for (const auto & p : parts)
                    out << ' ' << p;
                out << ')';
            }
        }

        void sexpr(std::ostream & out, const Formula & f, int q)
        {
            auto binary = [&](const char * op, const Term & a, const Term & b) {
                out << '(' << op << ' ';
                term_sexpr(out, a, q);
                out << ' ';
                term_sexpr(out, b, q);
                out << ')';
            };
            auto list = [&](const char * op, const std::vector<Formula> & parts) {
                out << '(' << op;
                for (const auto & p : parts) {
                    out << ' ';
                    sexpr(out, p, q);
                }
                out << ')';
            };
            std::visit(overloaded{
                           [&](const node::True &) { out << "true"; },
                           [&](const node::False &) { out << "false"; },
                           [&](const node::Equals & n) { binary("=", n.lhs, n.rhs); },
                           [&](const node::Geq & n) { binary(">=", n.lhs, n.rhs); },
                           [&](const node::Shift & n) {
                               binary(("shift " + std::to_string(n.step)).c_str(), n.x, n.y);
                           },
                           [&](const node::Power & n) {
                               out << "(power " << n.step << ' ';
                               term_sexpr(out, n.x, q);
                               out << ')';
                           },
                           [&](const node::Vq & n) { binary("vq", n.x, n.y); },
                           [&](const node::Not & n) {
                               out << "(not ";
                               sexpr(out, *n.body, q);
                               out << ')';
                           },
                           [&](const node::And & n) { list("and", n.parts); },
                           [&](const node::Or & n) { list("or", n.parts); },
                           [&](const node::Exists & n) {
                               out << "(exists " << n.var << ' ';
                               sexpr(out, *n.body, q);
                               out << ')';
                           },
                           [&](const node::Forall & n) {
                               out << "(forall " << n.var << ' ';
                               sexpr(out, *n.body, q);
                               out << ')';
                           },
                       },
                f.node());
        }

        auto term_value(const Term & t, const Assignment & a, int q) -> QFraction
        {
            QFraction value = t.constant;
            for (const auto & [name, c] : t.coefficients) {
                auto it = a.find(name);
                if (it == a.end())
                    throw InvalidArgument("unbound variable '" + name + "'");
                value = add(value, scale(c, it->second, q), q);
            }
            return value;
        }
    }

    auto free_variables(const Formula & f) -> std::vector<std::string>
    {
        std::set<std::string> bound, out;
        collect_free(f, bound, out);
        return {out.begin(), out.end()};
    }

    auto has_quantifiers(const Formula & f) -> bool
    {
        return std::visit(overloaded{
                              [](const node::Exists &) { return true; },
                              [](const node::Forall &) { return true; },
                              [](const node::Not & n) { return has_quantifiers(*n.body); },
                              [](const node::And & n) {
                                  return std::any_of(n.parts.begin(), n.parts.end(),
                                      [](const Formula & p) { return has_quantifiers(p); });
                              },
                              [](const node::Or & n) {
                                  return std::any_of(n.parts.begin(), n.parts.end(),
                                      [](const Formula & p) { return has_quantifiers(p); });
                              },
                              [](const auto &) { return false; },
                          },
            f.node());
    }

    auto to_sexpr(const Formula & f, int q) -> std::string
    {
        std::ostringstream out;
        sexpr(out, f, q);
        return out.str();
    }

    auto normalize(const Formula & f) -> Formula
    {
        Normalizer n(f);
        return n.run(f, {});
    }

    auto clear_denominators(const Term & lhs, const Term & rhs, LinearAtom::Kind kind, int q) -> LinearAtom
    {
        check_base(q);
        std::uint32_t e = std::max(lhs.constant.exponent, rhs.constant.exponent);
        for (const auto * t : {&lhs, &rhs})
            for (const auto & [name, c] : t->coefficients)
                e = std::max(e, c.exponent);

        auto lift = [&](const QFraction & v) { return v.numerator * ipow(BigInt(q), e - v.exponent); };

        LinearAtom atom;
        atom.kind = kind;
        for (const auto & [name, c] : lhs.coefficients)
            atom.coefficients[name] += lift(c);
        for (const auto & [name, c] : rhs.coefficients)
            atom.coefficients[name] -= lift(c);
        std::erase_if(atom.coefficients, [](const auto & kv) { return kv.second == 0; });
        atom.constant = lift(rhs.constant) - lift(lhs.constant);
        return atom;
    }

    auto evaluate(const Formula & f, const Assignment & assignment, int q, std::int64_t quantifier_bound) -> bool
    {
        auto integer_value = [&](const Term & t) -> std::optional<BigInt> {
            auto v = term_value(t, assignment, q);
            if (! v.is_integer())
                return std::nullopt;
            return v.numerator;
        };
        auto quantify = [&](const std::string & var, const Formula & body, bool universal) {
            auto inner = assignment;
            for (std::int64_t v = -quantifier_bound; v <= quantifier_bound; ++v) {
                inner[var] = v;
                if (evaluate(body, inner, q, quantifier_bound) != universal)
                    return ! universal;
            }
            return universal;
        };
        return std::visit(overloaded{
                              [](const node::True &) { return true; },
                              [](const node::False &) { return false; },
                              [&](const node::Equals & n) {
                                  return term_value(n.lhs, assignment, q) == term_value(n.rhs, assignment, q);
                              },
                              [&](const node::Geq & n) {
                                  auto atom = clear_denominators(n.lhs, n.rhs, LinearAtom::Kind::GreaterEqual, q);
                                  return holds(atom, assignment);
                              },
                              [&](const node::Shift & n) {
                                  auto x = integer_value(n.x);
                                  auto y = integer_value(n.y);
                                  return x && y && holds_shift(n.step, *x, *y, q);
                              },
                              [&](const node::Power & n) {
                                  auto x = integer_value(n.x);
                                  return x && holds_power(n.step, *x, q);
                              },
                              [&](const node::Vq & n) {
                                  auto x = integer_value(n.x);
                                  auto y = integer_value(n.y);
                                  return x && y && holds_vq(*x, *y, q);
                              },
                              [&](const node::Not & n) { return ! evaluate(*n.body, assignment, q, quantifier_bound); },
                              [&](const node::And & n) {
                                  return std::all_of(n.parts.begin(), n.parts.end(), [&](const Formula & p) {
                                      return evaluate(p, assignment, q, quantifier_bound);
                                  });
                              },
                              [&](const node::Or & n) {
                                  return std::any_of(n.parts.begin(), n.parts.end(), [&](const Formula & p) {
                                      return evaluate(p, assignment, q, quantifier_bound);
                                  });
                              },
                              [&](const node::Exists & n) { return quantify(n.var, *n.body, false); },
                              [&](const node::Forall & n) { return quantify(n.var, *n.body, true); },
                          },
            f.node());
    }

    Environment::Environment(std::vector<std::string> variables) :
        _variables(std::move(variables))
    {
        std::sort(_variables.begin(), _variables.end());
        _variables.erase(std::unique(_variables.begin(), _variables.end()), _variables.end());
    }

    auto Environment::track_of(const std::string & name) const -> std::optional<unsigned>
    {
        auto it = std::lower_bound(_variables.begin(), _variables.end(), name);
        if (it == _variables.end() || *it != name)
            return std::nullopt;
        return static_cast<unsigned>(it - _variables.begin());
    }
}
