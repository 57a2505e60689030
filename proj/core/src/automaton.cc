#include <bsknap/automaton.hh>
#include <bsknap/error.hh>

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace bsknap
{
    namespace
    {
        constexpr State no_state = std::numeric_limits<State>::max();

        // Complement materialises every letter at every state.
        constexpr std::uint64_t complement_letter_budget = std::uint64_t{1} << 24;

        struct SubsetHash
        {
            auto operator()(const std::vector<State> & v) const -> std::size_t
            {
                return boost::hash_range(v.begin(), v.end());
            }
        };

        auto pair_key(State a, State b) -> std::uint64_t
        {
            return (static_cast<std::uint64_t>(a) << 32) | b;
        }

        void check_same_alphabet(const Automaton & a, const Automaton & b)
        {
            if (! (a.alphabet() == b.alphabet()))
                throw AlphabetMismatch("automata over different alphabets: q=" + std::to_string(a.alphabet().base())
                    + "/" + std::to_string(a.alphabet().arity()) + " vs q=" + std::to_string(b.alphabet().base())
                    + "/" + std::to_string(b.alphabet().arity()));
        }
    }

    Alphabet::Alphabet(int q, unsigned arity) :
        _q(q),
        _arity(arity)
    {
        if (q < 2)
            throw InvalidArgument("base q must be at least 2, got " + std::to_string(q));
        _places.reserve(arity + 1);
        std::uint64_t p = 1;
        _places.push_back(p);
        for (unsigned t = 0; t < arity; ++t) {
            if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q) / 2)
                throw ResourceLimit("alphabet of " + std::to_string(arity) + " tracks over base " + std::to_string(q)
                    + " does not fit a 64-bit letter code");
            p *= static_cast<std::uint64_t>(q);
            _places.push_back(p);
        }
    }

    auto Alphabet::letter(std::span<const unsigned> digits) const -> LetterCode
    {
        if (digits.size() != _arity)
            throw AlphabetMismatch("letter has " + std::to_string(digits.size()) + " digits, alphabet arity is "
                + std::to_string(_arity));
        LetterCode code = 0;
        for (unsigned t = 0; t < _arity; ++t) {
            if (digits[t] >= static_cast<unsigned>(_q))
                throw InvalidArgument("digit out of range");
            code += digits[t] * _places[t];
        }
        return code;
    }

    auto Alphabet::digits(LetterCode letter) const -> std::vector<unsigned>
    {
        std::vector<unsigned> result(_arity);
        for (unsigned t = 0; t < _arity; ++t)
            result[t] = digit(letter, t);
        return result;
    }

    auto Alphabet::pad(LetterCode letter) const -> LetterCode
    {
        LetterCode code = 0;
        auto top = static_cast<unsigned>(_q - 1);
        for (unsigned t = 0; t < _arity; ++t)
            if (digit(letter, t) == top)
                code += top * _places[t];
        return code;
    }

    Automaton::Automaton(Alphabet alphabet) :
        _alphabet(std::move(alphabet))
    {
    }

    auto Automaton::empty(Alphabet alphabet) -> Automaton
    {
        Automaton a(std::move(alphabet));
        a.add_initial(a.add_state());
        a.finish();
        a.mark_padding_closed();
        return a;
    }

    auto Automaton::universal(Alphabet alphabet) -> Automaton
    {
        Automaton a(std::move(alphabet));
        auto start = a.add_state();
        auto accept = a.add_state(true);
        a.add_initial(start);
        for (LetterCode l = 0; l < a.alphabet().size(); ++l) {
            a.add_transition(start, l, accept);
            a.add_transition(accept, l, accept);
        }
        a.finish();
        a.mark_padding_closed();
        return a;
    }

    auto Automaton::transition_count() const -> std::size_t
    {
        std::size_t n = 0;
        for (const auto & r : _rows)
            n += r.size();
        return n;
    }

    auto Automaton::add_state(bool is_final) -> State
    {
        _rows.emplace_back();
        _final.push_back(is_final ? 1 : 0);
        return static_cast<State>(_rows.size() - 1);
    }

    void Automaton::set_final(State s, bool is_final)
    {
        _final.at(s) = is_final ? 1 : 0;
    }

    void Automaton::add_initial(State s)
    {
        _initial.push_back(s);
    }

    void Automaton::add_transition(State from, LetterCode letter, State to)
    {
        _rows[from].push_back(Transition{letter, to});
    }

    void Automaton::finish()
    {
        std::sort(_initial.begin(), _initial.end());
        _initial.erase(std::unique(_initial.begin(), _initial.end()), _initial.end());
        _deterministic = _initial.size() <= 1;
        for (auto & r : _rows) {
            std::sort(r.begin(), r.end());
            r.erase(std::unique(r.begin(), r.end()), r.end());
            for (std::size_t i = 1; _deterministic && i < r.size(); ++i)
                if (r[i].letter == r[i - 1].letter)
                    _deterministic = false;
        }
    }

    auto Automaton::operator==(const Automaton & other) const -> bool
    {
        return _alphabet == other._alphabet && _initial == other._initial && _final == other._final
            && _rows == other._rows;
    }

    auto encode(std::span<const BigInt> values, const Alphabet & alphabet) -> EncodedWord
    {
        if (values.size() != alphabet.arity())
            throw AlphabetMismatch("tuple of " + std::to_string(values.size()) + " values for an alphabet of arity "
                + std::to_string(alphabet.arity()));
        const BigInt q = alphabet.base();

        // n digits represent exactly [-q^{n-1}, (q-1) q^{n-1} - 1].
        std::size_t length = 1;
        for (const auto & v : values) {
            std::size_t n = 1;
            BigInt top = 1;
            while (! (v >= -top && v <= (q - 1) * top - 1)) {
                top *= q;
                ++n;
            }
            length = std::max(length, n);
        }

        EncodedWord word(length, 0);
        const BigInt modulus = ipow(q, length);
        for (unsigned t = 0; t < alphabet.arity(); ++t) {
            BigInt rest = values[t] < 0 ? values[t] + modulus : values[t];
            for (std::size_t i = 0; i < length; ++i) {
                auto d = static_cast<unsigned>(rest % q);
                rest /= q;
                word[i] += d * alphabet.place(t);
            }
        }
        return word;
    }

    auto encode(std::initializer_list<long long> values, const Alphabet & alphabet) -> EncodedWord
    {
        std::vector<BigInt> v(values.begin(), values.end());
        return encode(v, alphabet);
    }

    auto decode(const EncodedWord & word, const Alphabet & alphabet) -> std::vector<BigInt>
    {
        if (word.empty())
            throw InvalidArgument("cannot decode the empty word");
        std::vector<BigInt> values(alphabet.arity());
        const auto q = static_cast<unsigned>(alphabet.base());
        for (unsigned t = 0; t < alphabet.arity(); ++t) {
            BigInt value = 0;
            for (std::size_t i = word.size(); i-- > 0;) {
                auto d = alphabet.digit(word[i], t);
                if (i + 1 == word.size())
                    value = d == q - 1 ? BigInt(-1) : BigInt(d);
                else
                    value = value * q + d;
            }
            values[t] = std::move(value);
        }
        return values;
    }

    auto accepts(const Automaton & a, const EncodedWord & word) -> bool
    {
        if (word.empty())
            return false;
        std::vector<State> current = a.initial();
        std::vector<State> next;
        for (auto letter : word) {
            if (letter >= a.alphabet().size())
                throw AlphabetMismatch("letter code outside the automaton's alphabet");
            next.clear();
            for (auto s : current) {
                auto r = a.row(s);
                auto it = std::lower_bound(r.begin(), r.end(), Transition{letter, 0});
                for (; it != r.end() && it->letter == letter; ++it)
                    next.push_back(it->target);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            std::swap(current, next);
            if (current.empty())
                return false;
        }
        return std::any_of(current.begin(), current.end(), [&](State s) { return a.is_final(s); });
    }

    auto accepts_values(const Automaton & a, std::span<const BigInt> values) -> bool
    {
        return accepts(a, encode(values, a.alphabet()));
    }

    auto accepts_values(const Automaton & a, std::initializer_list<long long> values) -> bool
    {
        return accepts(a, encode(values, a.alphabet()));
    }

    auto determinize(const Automaton & a) -> Automaton
    {
        if (a.deterministic() && ! a.initial().empty())
            return a;

        Automaton result(a.alphabet());
        if (a.initial().empty()) {
            result = Automaton::empty(a.alphabet());
            result.mark_padding_closed(a.padding_closed());
            return result;
        }

        std::unordered_map<std::vector<State>, State, SubsetHash> index;
        std::vector<std::vector<State>> subsets;
        auto intern = [&](std::vector<State> subset) -> State {
            auto [it, inserted] = index.try_emplace(subset, static_cast<State>(subsets.size()));
            if (inserted) {
                bool fin = std::any_of(subset.begin(), subset.end(), [&](State s) { return a.is_final(s); });
                result.add_state(fin);
                subsets.push_back(std::move(subset));
            }
            return it->second;
        };

        result.add_initial(intern(a.initial()));
        std::vector<Transition> gathered;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            gathered.clear();
            for (auto s : subsets[i]) {
                auto r = a.row(s);
                gathered.insert(gathered.end(), r.begin(), r.end());
            }
            std::sort(gathered.begin(), gathered.end());
            for (std::size_t j = 0; j < gathered.size();) {
                auto letter = gathered[j].letter;
                std::vector<State> targets;
                for (; j < gathered.size() && gathered[j].letter == letter; ++j)
                    if (targets.empty() || targets.back() != gathered[j].target)
                        targets.push_back(gathered[j].target);
                auto target = intern(std::move(targets));
                result.add_transition(static_cast<State>(i), letter, target);
            }
        }
        result.finish();
        result.mark_padding_closed(a.padding_closed());
        return result;
    }

    auto complement(const Automaton & a) -> Automaton
    {
        auto d = minimize(a);
        const auto letters = d.alphabet().size();
        if (letters > complement_letter_budget || letters * (d.state_count() + 2) > complement_letter_budget)
            throw ResourceLimit("complement needs " + std::to_string(letters) + " letters per state over "
                + std::to_string(d.state_count()) + " states");

        Automaton c(d.alphabet());
        for (State s = 0; s < d.state_count(); ++s)
            c.add_state(! d.is_final(s));
        auto sink = c.add_state(true);
        // A fresh start state keeps the empty word rejected.
        auto start = c.add_state(false);
        c.add_initial(start);

        auto fill = [&](State from, State source) {
            auto r = d.row(source);
            auto it = r.begin();
            for (LetterCode l = 0; l < letters; ++l) {
                if (it != r.end() && it->letter == l) {
                    c.add_transition(from, l, it->target);
                    ++it;
                }
                else
                    c.add_transition(from, l, sink);
            }
        };
        for (State s = 0; s < d.state_count(); ++s)
            fill(s, s);
        fill(start, d.initial().front());
        for (LetterCode l = 0; l < letters; ++l)
            c.add_transition(sink, l, sink);
        c.finish();
        c.mark_padding_closed(a.padding_closed());
        return minimize(c);
    }

    auto intersect(const Automaton & a, const Automaton & b) -> Automaton
    {
        check_same_alphabet(a, b);
        std::vector<unsigned> tracks(a.alphabet().arity());
        std::iota(tracks.begin(), tracks.end(), 0u);
        return intersect_aligned(a, tracks, b, tracks, a.alphabet().arity());
    }

    namespace
    {
        struct KeyedTransition
        {
            std::uint64_t key;
            LetterCode contribution;
            State target;

            auto operator<(const KeyedTransition & o) const -> bool { return key < o.key; }
        };

        // Per-state transitions re-keyed by their digits on the shared
        // tracks, computed on first use.
        class KeyedRows
        {
        public:
            KeyedRows(const Automaton & a, std::vector<unsigned> shared_positions,
                std::vector<std::pair<unsigned, std::uint64_t>> contributions, std::uint64_t q) :
                _a(a),
                _shared(std::move(shared_positions)),
                _contrib(std::move(contributions)),
                _q(q),
                _rows(a.state_count()),
                _ready(a.state_count(), 0)
            {
            }

            auto get(State s) -> const std::vector<KeyedTransition> &
            {
                if (! _ready[s]) {
                    auto & out = _rows[s];
                    const auto & alph = _a.alphabet();
                    for (const auto & t : _a.row(s)) {
                        std::uint64_t key = 0;
                        for (std::size_t k = _shared.size(); k-- > 0;)
                            key = key * _q + alph.digit(t.letter, _shared[k]);
                        LetterCode c = 0;
                        for (const auto & [track, place] : _contrib)
                            c += alph.digit(t.letter, track) * place;
                        out.push_back({key, c, t.target});
                    }
                    std::stable_sort(out.begin(), out.end());
                    _ready[s] = 1;
                }
                return _rows[s];
            }

        private:
            const Automaton & _a;
            std::vector<unsigned> _shared;
            std::vector<std::pair<unsigned, std::uint64_t>> _contrib;
            std::uint64_t _q;
            std::vector<std::vector<KeyedTransition>> _rows;
            std::vector<char> _ready;
        };
    }

    auto intersect_aligned(const Automaton & a, std::span<const unsigned> a_tracks, const Automaton & b,
        std::span<const unsigned> b_tracks, unsigned arity) -> Automaton
    {
        if (a.alphabet().base() != b.alphabet().base())
            throw AlphabetMismatch("automata over different bases");
        if (a_tracks.size() != a.alphabet().arity() || b_tracks.size() != b.alphabet().arity())
            throw InvalidArgument("track map size does not match automaton arity");

        Alphabet out_alphabet(a.alphabet().base(), arity);
        std::vector<int> a_of(arity, -1), b_of(arity, -1);
        for (unsigned i = 0; i < a_tracks.size(); ++i) {
            if (a_tracks[i] >= arity || a_of[a_tracks[i]] != -1)
                throw InvalidArgument("invalid track map");
            a_of[a_tracks[i]] = static_cast<int>(i);
        }
        for (unsigned i = 0; i < b_tracks.size(); ++i) {
            if (b_tracks[i] >= arity || b_of[b_tracks[i]] != -1)
                throw InvalidArgument("invalid track map");
            b_of[b_tracks[i]] = static_cast<int>(i);
        }

        std::vector<unsigned> a_shared, b_shared;
        std::vector<std::pair<unsigned, std::uint64_t>> a_contrib, b_contrib;
        for (unsigned t = 0; t < arity; ++t) {
            if (a_of[t] < 0 && b_of[t] < 0)
                throw InvalidArgument("output track " + std::to_string(t) + " is not covered");
            if (a_of[t] >= 0 && b_of[t] >= 0) {
                a_shared.push_back(static_cast<unsigned>(a_of[t]));
                b_shared.push_back(static_cast<unsigned>(b_of[t]));
            }
            if (a_of[t] >= 0)
                a_contrib.emplace_back(static_cast<unsigned>(a_of[t]), out_alphabet.place(t));
            else
                b_contrib.emplace_back(static_cast<unsigned>(b_of[t]), out_alphabet.place(t));
        }

        const auto q = static_cast<std::uint64_t>(a.alphabet().base());
        KeyedRows a_rows(a, a_shared, a_contrib, q);
        KeyedRows b_rows(b, b_shared, b_contrib, q);

        Automaton result(out_alphabet);
        std::unordered_map<std::uint64_t, State> index;
        std::vector<std::pair<State, State>> pairs;
        auto intern = [&](State p, State r) -> State {
            auto [it, inserted] = index.try_emplace(pair_key(p, r), static_cast<State>(pairs.size()));
            if (inserted) {
                pairs.emplace_back(p, r);
                result.add_state(a.is_final(p) && b.is_final(r));
            }
            return it->second;
        };
        for (auto p : a.initial())
            for (auto r : b.initial())
                result.add_initial(intern(p, r));

        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [p, r] = pairs[i];
            const auto & ra = a_rows.get(p);
            const auto & rb = b_rows.get(r);
            auto ia = ra.begin();
            auto ib = rb.begin();
            while (ia != ra.end() && ib != rb.end()) {
                if (ia->key < ib->key)
                    ++ia;
                else if (ib->key < ia->key)
                    ++ib;
                else {
                    auto key = ia->key;
                    auto ea = ia;
                    while (ea != ra.end() && ea->key == key)
                        ++ea;
                    auto eb = ib;
                    while (eb != rb.end() && eb->key == key)
                        ++eb;
                    for (auto x = ia; x != ea; ++x)
                        for (auto y = ib; y != eb; ++y) {
                            auto target = intern(x->target, y->target);
                            result.add_transition(static_cast<State>(i), x->contribution + y->contribution, target);
                        }
                    ia = ea;
                    ib = eb;
                }
            }
        }
        result.finish();
        result.mark_padding_closed(a.padding_closed() && b.padding_closed());
        return minimize(result);
    }

    auto unite(const Automaton & a, const Automaton & b) -> Automaton
    {
        check_same_alphabet(a, b);
        auto da = determinize(a);
        auto db = determinize(b);

        Automaton result(a.alphabet());
        std::unordered_map<std::uint64_t, State> index;
        std::vector<std::pair<State, State>> pairs;
        auto intern = [&](State p, State r) -> State {
            auto [it, inserted] = index.try_emplace(pair_key(p, r), static_cast<State>(pairs.size()));
            if (inserted) {
                pairs.emplace_back(p, r);
                bool fin = (p != no_state && da.is_final(p)) || (r != no_state && db.is_final(r));
                result.add_state(fin);
            }
            return it->second;
        };
        result.add_initial(intern(da.initial().front(), db.initial().front()));

        const std::span<const Transition> none;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [p, r] = pairs[i];
            auto ra = p == no_state ? none : da.row(p);
            auto rb = r == no_state ? none : db.row(r);
            auto ia = ra.begin();
            auto ib = rb.begin();
            while (ia != ra.end() || ib != rb.end()) {
                State tp = no_state, tr = no_state;
                LetterCode letter;
                if (ib == rb.end() || (ia != ra.end() && ia->letter < ib->letter)) {
                    letter = ia->letter;
                    tp = (ia++)->target;
                }
                else if (ia == ra.end() || ib->letter < ia->letter) {
                    letter = ib->letter;
                    tr = (ib++)->target;
                }
                else {
                    letter = ia->letter;
                    tp = (ia++)->target;
                    tr = (ib++)->target;
                }
                auto target = intern(tp, tr);
                result.add_transition(static_cast<State>(i), letter, target);
            }
        }
        result.finish();
        result.mark_padding_closed(a.padding_closed() && b.padding_closed());
        return minimize(result);
    }

    auto erase_track(const Automaton & a, unsigned track) -> Automaton
    {
        const auto & alph = a.alphabet();
        if (track >= alph.arity())
            throw InvalidArgument("track " + std::to_string(track) + " out of range for arity "
                + std::to_string(alph.arity()));
        Alphabet out(alph.base(), alph.arity() - 1);
        Automaton result(out);
        for (State s = 0; s < a.state_count(); ++s)
            result.add_state(a.is_final(s));
        for (auto s : a.initial())
            result.add_initial(s);
        const auto low = alph.place(track);
        const auto high = alph.place(track + 1);
        for (State s = 0; s < a.state_count(); ++s)
            for (const auto & t : a.row(s))
                result.add_transition(s, t.letter % low + (t.letter / high) * low, t.target);
        result.finish();
        return result;
    }

    auto project(const Automaton & a, unsigned track) -> Automaton
    {
        return minimize(saturate_padding(erase_track(a, track)));
    }

    auto saturate_padding(const Automaton & a) -> Automaton
    {
        if (a.padding_closed())
            return a;

        const auto & alph = a.alphabet();
        const auto n = a.state_count();

        // For every pad letter p, the states from which some p^j (j >= 0)
        // reaches a final state.
        std::unordered_map<LetterCode, std::vector<std::pair<State, State>>> pad_edges;
        for (State s = 0; s < n; ++s)
            for (const auto & t : a.row(s))
                if (alph.pad(t.letter) == t.letter)
                    pad_edges[t.letter].emplace_back(t.target, s);

        std::unordered_map<LetterCode, std::vector<char>> good;
        auto good_for = [&](LetterCode pad) -> const std::vector<char> & {
            auto [it, inserted] = good.try_emplace(pad);
            if (inserted) {
                auto & mark = it->second;
                mark.assign(n, 0);
                std::unordered_map<State, std::vector<State>> reverse;
                if (auto e = pad_edges.find(pad); e != pad_edges.end())
                    for (auto [to, from] : e->second)
                        reverse[to].push_back(from);
                std::vector<State> work;
                for (State s = 0; s < n; ++s)
                    if (a.is_final(s)) {
                        mark[s] = 1;
                        work.push_back(s);
                    }
                while (! work.empty()) {
                    auto s = work.back();
                    work.pop_back();
                    if (auto r = reverse.find(s); r != reverse.end())
                        for (auto p : r->second)
                            if (! mark[p]) {
                                mark[p] = 1;
                                work.push_back(p);
                            }
                }
            }
            return it->second;
        };

        Automaton result(alph);
        for (State s = 0; s < n; ++s)
            result.add_state(false);
        auto accept = result.add_state(true);
        for (auto s : a.initial())
            result.add_initial(s);
        for (State s = 0; s < n; ++s)
            for (const auto & t : a.row(s)) {
                result.add_transition(s, t.letter, t.target);
                if (good_for(alph.pad(t.letter))[t.target])
                    result.add_transition(s, t.letter, accept);
            }
        result.finish();
        auto saturated = minimize(result);
        saturated.mark_padding_closed();
        return saturated;
    }

    auto cylindrify(const Automaton & a, unsigned position) -> Automaton
    {
        const auto & alph = a.alphabet();
        if (position > alph.arity())
            throw InvalidArgument("cylindrify position " + std::to_string(position) + " out of range");
        Alphabet out(alph.base(), alph.arity() + 1);
        Automaton result(out);
        for (State s = 0; s < a.state_count(); ++s)
            result.add_state(a.is_final(s));
        for (auto s : a.initial())
            result.add_initial(s);
        const auto low = alph.place(position);
        for (State s = 0; s < a.state_count(); ++s)
            for (const auto & t : a.row(s)) {
                auto lo = t.letter % low;
                auto hi = t.letter / low;
                for (int d = 0; d < alph.base(); ++d)
                    result.add_transition(s, lo + static_cast<LetterCode>(d) * out.place(position)
                            + hi * out.place(position + 1), t.target);
            }
        result.finish();
        result.mark_padding_closed(a.padding_closed());
        return minimize(result);
    }

    auto reorder_tracks(const Automaton & a, std::span<const unsigned> permutation) -> Automaton
    {
        const auto & alph = a.alphabet();
        if (permutation.size() != alph.arity())
            throw InvalidArgument("permutation size does not match arity");
        std::vector<char> seen(alph.arity(), 0);
        for (auto p : permutation) {
            if (p >= alph.arity() || seen[p])
                throw InvalidArgument("not a permutation");
            seen[p] = 1;
        }
        Automaton result(alph);
        for (State s = 0; s < a.state_count(); ++s)
            result.add_state(a.is_final(s));
        for (auto s : a.initial())
            result.add_initial(s);
        for (State s = 0; s < a.state_count(); ++s)
            for (const auto & t : a.row(s)) {
                LetterCode code = 0;
                for (unsigned j = 0; j < alph.arity(); ++j)
                    code += alph.digit(t.letter, permutation[j]) * alph.place(j);
                result.add_transition(s, code, t.target);
            }
        result.finish();
        result.mark_padding_closed(a.padding_closed());
        return minimize(result);
    }

    auto identify_tracks(const Automaton & a, unsigned keep, unsigned drop) -> Automaton
    {
        const auto & alph = a.alphabet();
        if (keep >= alph.arity() || drop >= alph.arity() || keep == drop)
            throw InvalidArgument("invalid tracks to identify");
        Automaton filtered(alph);
        for (State s = 0; s < a.state_count(); ++s)
            filtered.add_state(a.is_final(s));
        for (auto s : a.initial())
            filtered.add_initial(s);
        for (State s = 0; s < a.state_count(); ++s)
            for (const auto & t : a.row(s))
                if (alph.digit(t.letter, keep) == alph.digit(t.letter, drop))
                    filtered.add_transition(s, t.letter, t.target);
        filtered.finish();
        auto result = erase_track(filtered, drop);
        result.mark_padding_closed(a.padding_closed());
        return minimize(result);
    }

    auto is_empty(const Automaton & a) -> bool
    {
        std::vector<char> seen(a.state_count(), 0);
        std::vector<State> work;
        for (auto s : a.initial())
            if (! seen[s]) {
                seen[s] = 1;
                work.push_back(s);
            }
        while (! work.empty()) {
            auto s = work.back();
            work.pop_back();
            if (a.is_final(s))
                return false;
            for (const auto & t : a.row(s))
                if (! seen[t.target]) {
                    seen[t.target] = 1;
                    work.push_back(t.target);
                }
        }
        return true;
    }

    auto shortest_accepted(const Automaton & a) -> std::optional<EncodedWord>
    {
        auto d = determinize(a);
        const auto n = d.state_count();
        std::vector<State> parent(n, no_state);
        std::vector<LetterCode> via(n, 0);
        std::vector<char> seen(n, 0);
        std::deque<State> queue;
        auto start = d.initial().front();
        seen[start] = 1;
        queue.push_back(start);

        // BFS with rows in letter order discovers every state first along its
        // lexicographically least shortest word.
        while (! queue.empty()) {
            auto s = queue.front();
            queue.pop_front();
            for (const auto & t : d.row(s)) {
                if (seen[t.target])
                    continue;
                seen[t.target] = 1;
                parent[t.target] = s;
                via[t.target] = t.letter;
                if (d.is_final(t.target)) {
                    EncodedWord word;
                    for (auto v = t.target; v != start; v = parent[v])
                        word.push_back(via[v]);
                    std::reverse(word.begin(), word.end());
                    return word;
                }
                queue.push_back(t.target);
            }
        }
        return std::nullopt;
    }

    auto language_equal(const Automaton & a, const Automaton & b) -> bool
    {
        return a.alphabet() == b.alphabet() && minimize(a) == minimize(b);
    }

    auto to_dot(const Automaton & a, const std::string & name, std::span<const std::string> track_names) -> std::string
    {
        const auto & alph = a.alphabet();
        std::ostringstream out;
        out << "digraph \"" << name << "\" {\n";
        out << "  // base " << alph.base() << ", " << alph.arity()
            << " tracks, letters are digit tuples, least significant digit first\n";
        if (! track_names.empty()) {
            out << "  // tracks:";
            for (const auto & t : track_names)
                out << ' ' << t;
            out << '\n';
        }
        out << "  rankdir=LR;\n";
        out << "  node [shape=circle];\n";
        for (State s = 0; s < a.state_count(); ++s)
            out << "  s" << s << " [label=\"" << s << "\"" << (a.is_final(s) ? ", shape=doublecircle" : "") << "];\n";
        for (auto s : a.initial()) {
            out << "  init" << s << " [shape=point];\n";
            out << "  init" << s << " -> s" << s << ";\n";
        }
        for (State s = 0; s < a.state_count(); ++s)
            for (const auto & t : a.row(s)) {
                out << "  s" << s << " -> s" << t.target << " [label=\"";
                for (unsigned k = 0; k < alph.arity(); ++k)
                    out << (k ? ":" : "") << alph.digit(t.letter, k);
                out << "\"];\n";
            }
        out << "}\n";
        return out.str();
    }
}
