#include <bsknap/atoms.hh>
#include <bsknap/error.hh>

#include <algorithm>
#include <limits>
#include <map>

namespace bsknap
{
    namespace
    {
        constexpr std::uint64_t linear_letter_budget = std::uint64_t{1} << 22;
        constexpr std::int64_t carry_limit = std::int64_t{1} << 40;

        // Automata over nonnegative digit readers: `accept_edge` marks the
        // letters that may end a word, which must not carry a sign digit q-1
        // on tracks that are required to be positive.
        struct ReaderBuilder
        {
            Automaton automaton;
            State accept;

            explicit ReaderBuilder(Alphabet alphabet) :
                automaton(std::move(alphabet)),
                accept(automaton.add_state(true))
            {
            }

            auto finish() -> Automaton
            {
                automaton.finish();
                automaton.mark_padding_closed();
                auto result = minimize(automaton);
                result.mark_padding_closed();
                return result;
            }
        };

        auto letter2(const Alphabet & alphabet, unsigned x, unsigned y) -> LetterCode
        {
            const unsigned digits[2] = {x, y};
            return alphabet.letter(digits);
        }
    }

    namespace
    {
        template <class Carry>
        auto floor_div_t(const Carry & a, std::int64_t b) -> Carry
        {
            Carry d = a / b;
            if (a % b != 0 && a < 0)
                d -= 1;
            return d;
        }

        // Carry automaton over the letters allowed by the power guards. A
        // guarded track reads only digits 0 and 1 with exactly one 1, so its
        // value is a power of q; `seen` records which guarded 1s have passed.
        template <class Carry>
        auto carry_automaton(const LinearAtom & atom, const Alphabet & alphabet, std::span<const Carry> coefficient,
            const Carry & constant, std::span<const unsigned> powers) -> Automaton
        {
            const auto q = alphabet.base();
            const auto letters = alphabet.size();
            const unsigned full = (1u << powers.size()) - 1;

            struct LetterInfo
            {
                LetterCode code;
                Carry inner, last;
                unsigned ones;
                bool may_end;
            };
            std::vector<LetterInfo> allowed;
            for (LetterCode l = 0; l < letters; ++l) {
                LetterInfo info{l, 0, 0, 0, true};
                bool ok = true;
                for (std::size_t g = 0; g < powers.size() && ok; ++g) {
                    auto d = alphabet.digit(l, powers[g]);
                    if (d > 1)
                        ok = false;
                    else if (d == 1) {
                        info.ones |= 1u << g;
                        if (q == 2)
                            info.may_end = false;
                    }
                }
                if (! ok)
                    continue;
                for (unsigned t = 0; t < alphabet.arity(); ++t) {
                    auto d = static_cast<std::int64_t>(alphabet.digit(l, t));
                    info.inner += coefficient[t] * d;
                    info.last += coefficient[t] * (d == q - 1 ? -1 : d);
                }
                allowed.push_back(std::move(info));
            }

            Automaton nfa(alphabet);
            auto accept = nfa.add_state(true);
            std::map<std::pair<Carry, unsigned>, State> ids;
            std::vector<std::pair<Carry, unsigned>> queue;
            auto id = [&](Carry carry, unsigned seen) -> State {
                auto [it, inserted] = ids.try_emplace({carry, seen}, 0);
                if (inserted) {
                    it->second = nfa.add_state();
                    queue.emplace_back(std::move(carry), seen);
                }
                return it->second;
            };
            nfa.add_initial(id(-constant, 0));

            const bool equality = atom.kind == LinearAtom::Kind::Equal;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const auto [carry, seen] = queue[i];
                const auto from = ids.at(queue[i]);
                for (const auto & info : allowed) {
                    if ((info.ones & seen) != 0)
                        continue;
                    const auto next_seen = seen | info.ones;
                    const Carry s = carry + info.inner;
                    const Carry closing = carry + info.last;
                    const bool ends = info.may_end && next_seen == full;
                    if (equality) {
                        if (s % q == 0)
                            nfa.add_transition(from, info.code, id(s / q, next_seen));
                        if (ends && closing == 0)
                            nfa.add_transition(from, info.code, accept);
                    }
                    else {
                        nfa.add_transition(from, info.code, id(floor_div_t(s, q), next_seen));
                        if (ends && closing >= 0)
                            nfa.add_transition(from, info.code, accept);
                    }
                }
            }
            nfa.finish();
            nfa.mark_padding_closed();
            return minimize(nfa);
        }
    }

    auto linear_automaton(const LinearAtom & atom, std::span<const std::string> env, int q,
        std::span<const unsigned> powers) -> Automaton
    {
        check_base(q);
        Alphabet alphabet(q, static_cast<unsigned>(env.size()));
        if (alphabet.size() > linear_letter_budget)
            throw ResourceLimit("linear atom over " + std::to_string(env.size()) + " tracks exceeds the letter budget");
        if (powers.size() > 16)
            throw ResourceLimit("too many power-guarded tracks");
        for (auto t : powers)
            if (t >= env.size())
                throw InvalidArgument("power guard track out of range");

        std::vector<BigInt> coefficient(env.size(), 0);
        BigInt weight = abs(atom.constant);
        for (const auto & [name, c] : atom.coefficients) {
            auto it = std::find(env.begin(), env.end(), name);
            if (it == env.end())
                throw InvalidArgument("unknown variable '" + name + "' in linear atom");
            coefficient[static_cast<std::size_t>(it - env.begin())] = c;
            weight += abs(c) * q;
        }

        if (weight <= carry_limit) {
            std::vector<std::int64_t> small;
            for (const auto & c : coefficient)
                small.push_back(static_cast<std::int64_t>(c));
            return carry_automaton<std::int64_t>(atom, alphabet, small, static_cast<std::int64_t>(atom.constant),
                powers);
        }
        // Unguarded atoms with huge coefficients have huge minimal automata.
        if (powers.empty())
            throw ResourceLimit("linear atom coefficients too large for the carry automaton");
        return carry_automaton<BigInt>(atom, alphabet, coefficient, atom.constant, powers);
    }

    auto shift_automaton(std::int64_t step, int q) -> Automaton
    {
        check_base(q);
        if (step < 0) {
            const unsigned swap[2] = {1, 0};
            return reorder_tracks(shift_automaton(-step, q), swap);
        }

        ReaderBuilder b(Alphabet(q, 2));
        auto & a = b.automaton;
        const auto & alph = a.alphabet();
        const bool q_is_two = q == 2;
        // The single 1-digit of a power of two is the sign digit when last.
        auto may_end = [&](unsigned x, unsigned y) { return ! q_is_two || (x == 0 && y == 0); };

        auto before = a.add_state();
        auto done = a.add_state();
        a.add_initial(before);
        a.add_transition(before, letter2(alph, 0, 0), before);
        a.add_transition(done, letter2(alph, 0, 0), done);
        a.add_transition(done, letter2(alph, 0, 0), b.accept);

        a.add_transition(before, letter2(alph, 1, 1), done);
        if (may_end(1, 1))
            a.add_transition(before, letter2(alph, 1, 1), b.accept);

        if (step > 0) {
            // counting[i]: x's one-digit lies i positions back, modulo step.
            std::vector<State> counting(static_cast<std::size_t>(step));
            for (auto & s : counting)
                s = a.add_state();
            a.add_transition(before, letter2(alph, 1, 0), counting[1 % step]);
            for (std::int64_t i = 0; i < step; ++i) {
                a.add_transition(counting[i], letter2(alph, 0, 0), counting[(i + 1) % step]);
                if (i == 0) {
                    a.add_transition(counting[i], letter2(alph, 0, 1), done);
                    if (may_end(0, 1))
                        a.add_transition(counting[i], letter2(alph, 0, 1), b.accept);
                }
            }
        }
        return b.finish();
    }

    auto power_automaton(std::uint64_t step, int q) -> Automaton
    {
        check_base(q);
        if (step == 0)
            throw InvalidArgument("power predicate needs step >= 1");

        ReaderBuilder b(Alphabet(q, 1));
        auto & a = b.automaton;
        std::vector<State> position(step);
        for (auto & s : position)
            s = a.add_state();
        auto done = a.add_state();
        a.add_initial(position[0]);
        for (std::uint64_t i = 0; i < step; ++i)
            a.add_transition(position[i], 0, position[(i + 1) % step]);
        a.add_transition(position[0], 1, done);
        if (q != 2)
            a.add_transition(position[0], 1, b.accept);
        a.add_transition(done, 0, done);
        a.add_transition(done, 0, b.accept);
        return b.finish();
    }

    auto vq_automaton(int q) -> Automaton
    {
        check_base(q);
        ReaderBuilder b(Alphabet(q, 2));
        auto & a = b.automaton;
        const auto & alph = a.alphabet();
        auto zeros = a.add_state();
        auto tail = a.add_state();
        a.add_initial(zeros);
        a.add_transition(zeros, letter2(alph, 0, 0), zeros);
        for (unsigned x = 0; x < static_cast<unsigned>(q); ++x) {
            if (x != 0) {
                a.add_transition(zeros, letter2(alph, x, 1), tail);
                if (q != 2)
                    a.add_transition(zeros, letter2(alph, x, 1), b.accept);
            }
            a.add_transition(tail, letter2(alph, x, 0), tail);
            a.add_transition(tail, letter2(alph, x, 0), b.accept);
        }
        return b.finish();
    }

    auto step_two_shift_formula(std::uint64_t step, int q, const std::string & x, const std::string & y) -> Formula
    {
        if (step == 0)
            throw InvalidArgument("step must be at least 1");
        std::vector<Formula> cases;
        for (std::uint64_t i = 0; i < step; ++i) {
            auto factor = ipow(BigInt(q), i);
            cases.push_back(conjunction({power_atom(step, Term::linear({{x, factor}})),
                power_atom(step, Term::linear({{y, factor}}))}));
        }
        return conjunction({geq(Term::variable(y), Term::variable(x)), disjunction(std::move(cases))});
    }

    auto holds(const LinearAtom & atom, const Assignment & values) -> bool
    {
        BigInt sum = 0;
        for (const auto & [name, c] : atom.coefficients)
            sum += c * values.at(name);
        return atom.kind == LinearAtom::Kind::Equal ? sum == atom.constant : sum >= atom.constant;
    }

    auto holds_shift(std::int64_t step, const BigInt & x, const BigInt & y, int q) -> bool
    {
        auto rx = exact_log(x, q);
        auto ry = exact_log(y, q);
        if (rx < 0 || ry < 0)
            return false;
        if (step == 0)
            return rx == ry;
        auto gap = ry - rx;
        return gap % step == 0 && gap / step >= 0;
    }

    auto holds_power(std::uint64_t step, const BigInt & x, int q) -> bool
    {
        auto r = exact_log(x, q);
        return r >= 0 && static_cast<std::uint64_t>(r) % step == 0;
    }

    auto holds_vq(const BigInt & x, const BigInt & y, int q) -> bool
    {
        if (x == 0)
            return false;
        return y == ipow(BigInt(q), valuation(x, q));
    }
}
