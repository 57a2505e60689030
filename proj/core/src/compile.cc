#include <bsknap/atoms.hh>
#include <bsknap/error.hh>
#include <bsknap/formula.hh>

#include <algorithm>
#include <set>

namespace bsknap
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        // An automaton together with the sorted variable names of its tracks.
        struct Compiled
        {
            Automaton automaton;
            std::vector<std::string> tracks;
        };

        auto positions_in(const std::vector<std::string> & sub, const std::vector<std::string> & full)
            -> std::vector<unsigned>
        {
            std::vector<unsigned> result;
            result.reserve(sub.size());
            for (const auto & name : sub)
                result.push_back(
                    static_cast<unsigned>(std::lower_bound(full.begin(), full.end(), name) - full.begin()));
            return result;
        }

        auto merged(const std::vector<std::string> & a, const std::vector<std::string> & b) -> std::vector<std::string>
        {
            std::vector<std::string> out;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return out;
        }

        class Compiler
        {
        public:
            Compiler(int q, const CompileOptions & options) :
                _q(q),
                _options(options)
            {
            }

            // `powers` names variables that an enclosing conjunction already
            // restricts to powers of q; linear atoms may assume it.
            auto run(const Formula & f, bool top_level, const std::set<std::string> & powers = {}) -> Compiled
            {
                return std::visit(overloaded{
                                      [&](const node::True &) { return constant(true); },
                                      [&](const node::False &) { return constant(false); },
                                      [&](const node::Equals & n) {
                                          return linear(
                                              clear_denominators(n.lhs, n.rhs, LinearAtom::Kind::Equal, _q), powers);
                                      },
                                      [&](const node::Geq & n) {
                                          return linear(
                                              clear_denominators(n.lhs, n.rhs, LinearAtom::Kind::GreaterEqual, _q),
                                              powers);
                                      },
                                      [&](const node::Shift & n) {
                                          return binary(shift_automaton(n.step, _q), variable(n.x), variable(n.y));
                                      },
                                      [&](const node::Power & n) {
                                          return Compiled{power_automaton(n.step, _q), {variable(n.x)}};
                                      },
                                      [&](const node::Vq & n) {
                                          return binary(vq_automaton(_q), variable(n.x), variable(n.y));
                                      },
                                      [&](const node::Not & n) {
                                          auto body = run(*n.body, false);
                                          return Compiled{complement(body.automaton), std::move(body.tracks)};
                                      },
                                      [&](const node::And & n) { return conjoin(n.parts, top_level, powers); },
                                      [&](const node::Or & n) { return disjoin(n.parts, powers); },
                                      [&](const node::Exists & n) { return project_out(n.var, *n.body, powers); },
                                      [&](const node::Forall & n) {
                                          return run(negation(exists(n.var, negation(*n.body))), false);
                                      },
                                  },
                    f.node());
            }

            auto align(Compiled c, const std::vector<std::string> & target) -> Automaton
            {
                check_tracks(target.size());
                for (unsigned j = 0; j < target.size(); ++j)
                    if (j >= c.tracks.size() || c.tracks[j] != target[j]) {
                        c.automaton = cylindrify(c.automaton, j);
                        c.tracks.insert(c.tracks.begin() + j, target[j]);
                    }
                return std::move(c.automaton);
            }

        private:
            void check_tracks(std::size_t n) const
            {
                if (n > _options.max_tracks)
                    throw ResourceLimit("formula needs " + std::to_string(n) + " tracks, limit is "
                        + std::to_string(_options.max_tracks));
            }

            auto variable(const Term & t) const -> std::string
            {
                auto v = t.as_variable();
                if (! v)
                    throw InvalidArgument("predicate argument is not a variable; normalize first");
                return *v;
            }

            auto constant(bool value) const -> Compiled
            {
                Alphabet nullary(_q, 0);
                return {value ? Automaton::universal(nullary) : Automaton::empty(nullary), {}};
            }

            auto linear(const LinearAtom & atom, const std::set<std::string> & powers) const -> Compiled
            {
                std::vector<std::string> tracks;
                std::vector<unsigned> guarded;
                for (const auto & [name, c] : atom.coefficients) {
                    if (powers.contains(name))
                        guarded.push_back(static_cast<unsigned>(tracks.size()));
                    tracks.push_back(name);
                }
                if (tracks.empty())
                    return constant(holds(atom, {}));
                check_tracks(tracks.size());
                return {linear_automaton(atom, tracks, _q, guarded), std::move(tracks)};
            }

            auto binary(Automaton a, const std::string & x, const std::string & y) const -> Compiled
            {
                if (x == y)
                    return {identify_tracks(a, 0, 1), {x}};
                if (y < x) {
                    const unsigned swap[2] = {1, 0};
                    return {reorder_tracks(a, swap), {y, x}};
                }
                return {std::move(a), {x, y}};
            }

            void observe(const std::string & stage, const Compiled & c) const
            {
                if (_options.observer)
                    _options.observer(stage, c.automaton, c.tracks);
            }

            auto conjoin(const std::vector<Formula> & parts, bool top_level, std::set<std::string> powers)
                -> Compiled
            {
                for (const auto & part : parts)
                    std::visit(overloaded{
                                   [&](const node::Power & n) { powers.insert(variable(n.x)); },
                                   [&](const node::Shift & n) {
                                       powers.insert(variable(n.x));
                                       powers.insert(variable(n.y));
                                   },
                                   [&](const node::Vq & n) { powers.insert(variable(n.y)); },
                                   [](const auto &) {},
                               },
                        part.node());
                auto label = [](const char * kind, std::size_t i) {
                    auto n = std::to_string(i);
                    return std::string(kind) + "-" + std::string(n.size() < 2 ? 2 - n.size() : 0, '0') + n;
                };
                auto acc = run(parts.front(), false, powers);
                if (top_level)
                    observe(label("conjunct", 0), acc);
                for (std::size_t i = 1; i < parts.size(); ++i) {
                    auto next = run(parts[i], false, powers);
                    if (top_level)
                        observe(label("conjunct", i), next);
                    auto tracks = merged(acc.tracks, next.tracks);
                    check_tracks(tracks.size());
                    auto a_map = positions_in(acc.tracks, tracks);
                    auto b_map = positions_in(next.tracks, tracks);
                    auto joined = intersect_aligned(acc.automaton, a_map, next.automaton, b_map,
                        static_cast<unsigned>(tracks.size()));
                    acc = Compiled{std::move(joined), std::move(tracks)};
                    if (top_level)
                        observe(label("join", i), acc);
                }
                return acc;
            }

            auto disjoin(const std::vector<Formula> & parts, const std::set<std::string> & powers) -> Compiled
            {
                auto acc = run(parts.front(), false, powers);
                for (std::size_t i = 1; i < parts.size(); ++i) {
                    auto next = run(parts[i], false, powers);
                    auto tracks = merged(acc.tracks, next.tracks);
                    auto a = align(std::move(acc), tracks);
                    auto b = align(std::move(next), tracks);
                    acc = Compiled{unite(a, b), std::move(tracks)};
                }
                return acc;
            }

            auto project_out(const std::string & var, const Formula & body, std::set<std::string> powers) -> Compiled
            {
                powers.erase(var);
                auto c = run(body, false, powers);
                auto it = std::lower_bound(c.tracks.begin(), c.tracks.end(), var);
                if (it == c.tracks.end() || *it != var)
                    return c;
                auto index = static_cast<unsigned>(it - c.tracks.begin());
                c.tracks.erase(it);
                return {project(c.automaton, index), std::move(c.tracks)};
            }

            int _q;
            const CompileOptions & _options;
        };
    }

    auto compile(const Formula & f, const Environment & env, int q, const CompileOptions & options) -> Automaton
    {
        check_base(q);
        auto normal = normalize(f);
        for (const auto & v : free_variables(normal))
            if (! env.track_of(v))
                throw InvalidArgument("unbound variable '" + v + "'");
        Compiler compiler(q, options);
        auto c = compiler.run(normal, true);
        return compiler.align(std::move(c), env.variables());
    }

    auto is_satisfiable(const Formula & f, int q, const CompileOptions & options) -> bool
    {
        Environment env(free_variables(f));
        return ! is_empty(compile(f, env, q, options));
    }

    auto model(const Formula & f, int q, const CompileOptions & options) -> std::optional<Assignment>
    {
        Environment env(free_variables(f));
        auto automaton = compile(f, env, q, options);
        auto word = shortest_accepted(automaton);
        if (! word)
            return std::nullopt;
        auto values = decode(*word, automaton.alphabet());
        Assignment result;
        for (std::size_t i = 0; i < env.size(); ++i)
            result[env.variables()[i]] = values[i];
        if (! has_quantifiers(f) && ! evaluate(f, result, q))
            throw InternalError("extracted model does not satisfy the formula");
        return result;
    }
}
