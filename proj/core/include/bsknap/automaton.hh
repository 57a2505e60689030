#pragma once

#include <bsknap/bigint.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

/// Finite automata over tuples of base-q digits.
///
/// A word d_0 d_1 ... d_{n-1} on one track (least significant digit first,
/// n >= 1) denotes
///
///     sum_{i<n-1} d_i q^i + z(d_{n-1}) q^{n-1},   z(d) = d for d <= q-2, z(q-1) = -1,
///
/// so the last digit doubles as a sign digit: appending 0 to a nonnegative
/// track or q-1 to a negative one leaves the value unchanged. Multi-track
/// words read every track in lockstep.
///
/// Letters are packed as sum_t digit_t q^t (track 0 least significant).
/// Transition rows are sorted sparse lists; a letter missing from a row
/// rejects, so deterministic automata are complete up to an implicit sink.
/// Automata never accept the empty word.
namespace bsknap
{
    using State = std::uint32_t;
    using LetterCode = std::uint64_t;

    inline constexpr unsigned default_max_tracks = 24;

    class Alphabet
    {
    public:
        Alphabet(int q, unsigned arity);

        [[nodiscard]] auto base() const noexcept -> int { return _q; }
        [[nodiscard]] auto arity() const noexcept -> unsigned { return _arity; }
        [[nodiscard]] auto size() const noexcept -> std::uint64_t { return _places.back(); }

        [[nodiscard]] auto digit(LetterCode letter, unsigned track) const -> unsigned
        {
            return static_cast<unsigned>((letter / _places[track]) % static_cast<unsigned>(_q));
        }
        [[nodiscard]] auto place(unsigned track) const -> std::uint64_t { return _places[track]; }

        [[nodiscard]] auto letter(std::span<const unsigned> digits) const -> LetterCode;
        [[nodiscard]] auto digits(LetterCode letter) const -> std::vector<unsigned>;

        /// The letter that pads a word ending in `letter`: q-1 on tracks whose
        /// last digit is q-1, 0 elsewhere.
        [[nodiscard]] auto pad(LetterCode letter) const -> LetterCode;

        auto operator==(const Alphabet & other) const -> bool { return _q == other._q && _arity == other._arity; }

    private:
        int _q;
        unsigned _arity;
        std::vector<std::uint64_t> _places;
    };

    struct Transition
    {
        LetterCode letter;
        State target;

        auto operator<=>(const Transition &) const = default;
    };

    using EncodedWord = std::vector<LetterCode>;

    class Automaton
    {
    public:
        explicit Automaton(Alphabet alphabet);

        [[nodiscard]] static auto empty(Alphabet alphabet) -> Automaton;
        /// Accepts every nonempty word.
        [[nodiscard]] static auto universal(Alphabet alphabet) -> Automaton;

        [[nodiscard]] auto alphabet() const -> const Alphabet & { return _alphabet; }
        [[nodiscard]] auto state_count() const -> std::size_t { return _rows.size(); }
        [[nodiscard]] auto transition_count() const -> std::size_t;
        [[nodiscard]] auto initial() const -> const std::vector<State> & { return _initial; }
        [[nodiscard]] auto is_final(State s) const -> bool { return _final[s] != 0; }
        [[nodiscard]] auto row(State s) const -> std::span<const Transition> { return _rows[s]; }
        [[nodiscard]] auto deterministic() const -> bool { return _deterministic; }
        [[nodiscard]] auto padding_closed() const -> bool { return _padding_closed; }

        auto add_state(bool is_final = false) -> State;
        void set_final(State s, bool is_final = true);
        void add_initial(State s);
        void add_transition(State from, LetterCode letter, State to);
        /// Sorts rows, drops duplicate transitions and recomputes the
        /// determinism flag. Builders call this once when done.
        void finish();
        void mark_padding_closed(bool closed = true) { _padding_closed = closed; }

        /// Structural equality; for minimized automata this is language
        /// equality since minimize() numbers states canonically.
        auto operator==(const Automaton & other) const -> bool;

    private:
        Alphabet _alphabet;
        std::vector<std::vector<Transition>> _rows;
        std::vector<char> _final;
        std::vector<State> _initial;
        bool _deterministic = true;
        bool _padding_closed = false;
    };

    [[nodiscard]] auto encode(std::span<const BigInt> values, const Alphabet & alphabet) -> EncodedWord;
    [[nodiscard]] auto encode(std::initializer_list<long long> values, const Alphabet & alphabet) -> EncodedWord;
    [[nodiscard]] auto decode(const EncodedWord & word, const Alphabet & alphabet) -> std::vector<BigInt>;

    [[nodiscard]] auto accepts(const Automaton & a, const EncodedWord & word) -> bool;
    /// Convenience: accepts(a, encode(values)).
    [[nodiscard]] auto accepts_values(const Automaton & a, std::span<const BigInt> values) -> bool;
    [[nodiscard]] auto accepts_values(const Automaton & a, std::initializer_list<long long> values) -> bool;

    [[nodiscard]] auto determinize(const Automaton & a) -> Automaton;
    /// Minimal deterministic automaton, trimmed to states that reach a final
    /// state, with states numbered in breadth-first order from the initial
    /// state (ties by letter). The empty language gives a single non-final
    /// state with no transitions.
    [[nodiscard]] auto minimize(const Automaton & a) -> Automaton;
    [[nodiscard]] auto complement(const Automaton & a) -> Automaton;
    [[nodiscard]] auto intersect(const Automaton & a, const Automaton & b) -> Automaton;
    [[nodiscard]] auto unite(const Automaton & a, const Automaton & b) -> Automaton;

    /// Product over a merged track layout. Track i of `a` becomes output
    /// track a_tracks[i], likewise for `b`; tracks named by both must agree.
    /// Equivalent to cylindrifying both sides to `arity` tracks and
    /// intersecting, without materialising the cylinders.
    [[nodiscard]] auto intersect_aligned(const Automaton & a, std::span<const unsigned> a_tracks, const Automaton & b,
        std::span<const unsigned> b_tracks, unsigned arity) -> Automaton;

    /// Removes a track without any padding repair; usually followed by
    /// saturate_padding().
    [[nodiscard]] auto erase_track(const Automaton & a, unsigned track) -> Automaton;
    /// Existential quantification of one track: erase_track, saturate, minimize.
    [[nodiscard]] auto project(const Automaton & a, unsigned track) -> Automaton;
    /// Accepts w iff `a` accepts w followed by zero or more pad letters.
    [[nodiscard]] auto saturate_padding(const Automaton & a) -> Automaton;
    /// Inserts an unconstrained track so that it becomes track `position`.
    [[nodiscard]] auto cylindrify(const Automaton & a, unsigned position) -> Automaton;
    /// Output track j reads input track permutation[j].
    [[nodiscard]] auto reorder_tracks(const Automaton & a, std::span<const unsigned> permutation) -> Automaton;
    /// Keeps letters whose digits agree on tracks `keep` and `drop`, then erases `drop`.
    [[nodiscard]] auto identify_tracks(const Automaton & a, unsigned keep, unsigned drop) -> Automaton;

    [[nodiscard]] auto is_empty(const Automaton & a) -> bool;
    /// Minimum-length accepted word, lexicographically least by letter code
    /// among those.
    [[nodiscard]] auto shortest_accepted(const Automaton & a) -> std::optional<EncodedWord>;
    [[nodiscard]] auto language_equal(const Automaton & a, const Automaton & b) -> bool;

    /// Graphviz rendering; letters print as colon-separated digits.
    [[nodiscard]] auto to_dot(const Automaton & a, const std::string & name = "automaton",
        std::span<const std::string> track_names = {}) -> std::string;
}
