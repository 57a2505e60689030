// Partition refinement for partial DFAs after Valmari and Lehtinen, running
// in O(m log n) for m transitions: states and transitions ("cords", grouped by
// label) are refined against each other until both partitions are stable.

#include <bsknap/automaton.hh>

#include <algorithm>
#include <deque>
#include <numeric>

namespace bsknap
{
    namespace
    {
        struct Refinable
        {
            int blocks = 0;
            std::vector<int> elements, location, set_of, first, past;

            void init(int n)
            {
                blocks = n > 0 ? 1 : 0;
                elements.resize(n);
                location.resize(n);
                set_of.assign(n, 0);
                first.assign(std::max(n, 1), 0);
                past.assign(std::max(n, 1), 0);
                std::iota(elements.begin(), elements.end(), 0);
                std::iota(location.begin(), location.end(), 0);
                if (n > 0)
                    past[0] = n;
            }

            void mark(int e, std::vector<int> & marked, std::vector<int> & touched, int & touched_count)
            {
                int s = set_of[e], i = location[e], j = first[s] + marked[s];
                elements[i] = elements[j];
                location[elements[i]] = i;
                elements[j] = e;
                location[e] = j;
                if (! marked[s]++)
                    touched[touched_count++] = s;
            }

            void split(std::vector<int> & marked, std::vector<int> & touched, int & touched_count)
            {
                while (touched_count) {
                    int s = touched[--touched_count], j = first[s] + marked[s];
                    if (j == past[s]) {
                        marked[s] = 0;
                        continue;
                    }
                    if (marked[s] <= past[s] - j) {
                        first[blocks] = first[s];
                        past[blocks] = first[s] = j;
                    }
                    else {
                        past[blocks] = past[s];
                        first[blocks] = past[s] = j;
                    }
                    for (int i = first[blocks]; i < past[blocks]; ++i)
                        set_of[elements[i]] = blocks;
                    marked[s] = marked[blocks++] = 0;
                }
            }
        };

        class Minimizer
        {
        public:
            explicit Minimizer(const Automaton & dfa) :
                _dfa(dfa),
                _states(static_cast<int>(dfa.state_count()))
            {
                for (State s = 0; s < dfa.state_count(); ++s)
                    for (const auto & t : dfa.row(s)) {
                        _tail.push_back(static_cast<int>(s));
                        _label.push_back(t.letter);
                        _head.push_back(static_cast<int>(t.target));
                    }
                _transitions = static_cast<int>(_tail.size());
            }

            auto run() -> Automaton
            {
                const int initial = static_cast<int>(_dfa.initial().front());
                _blocks.init(_states);
                _adjacent.assign(std::max(_transitions, 1), 0);
                _offsets.assign(_states + 1, 0);

                reach(initial);
                remove_unreached(_tail, _head);
                for (int s = 0; s < _states; ++s)
                    if (_dfa.is_final(static_cast<State>(s)) && _blocks.location[s] < _blocks.past[0])
                        reach(s);
                int finals = _reached;
                remove_unreached(_head, _tail);

                if (_blocks.location[initial] >= _blocks.past[0])
                    return Automaton::empty(_dfa.alphabet());

                int scratch = std::max(_states, _transitions) + 1;
                _touched.assign(scratch, 0);
                _marked.assign(scratch, 0);
                _marked[0] = finals;
                if (finals) {
                    _touched[_touched_count++] = 0;
                    _blocks.split(_marked, _touched, _touched_count);
                }

                _cords.init(_transitions);
                if (_transitions) {
                    std::sort(_cords.elements.begin(), _cords.elements.end(),
                        [&](int a, int b) { return _label[a] < _label[b]; });
                    _cords.blocks = _marked[0] = 0;
                    auto current = _label[_cords.elements[0]];
                    for (int i = 0; i < _transitions; ++i) {
                        int t = _cords.elements[i];
                        if (_label[t] != current) {
                            current = _label[t];
                            _cords.past[_cords.blocks++] = i;
                            _cords.first[_cords.blocks] = i;
                            _marked[_cords.blocks] = 0;
                        }
                        _cords.set_of[t] = _cords.blocks;
                        _cords.location[t] = i;
                    }
                    _cords.past[_cords.blocks++] = _transitions;
                }

                make_adjacent(_head);
                int b = 1, c = 0;
                while (c < _cords.blocks) {
                    for (int i = _cords.first[c]; i < _cords.past[c]; ++i)
                        _blocks.mark(_tail[_cords.elements[i]], _marked, _touched, _touched_count);
                    _blocks.split(_marked, _touched, _touched_count);
                    ++c;
                    while (b < _blocks.blocks) {
                        for (int i = _blocks.first[b]; i < _blocks.past[b]; ++i)
                            for (int j = _offsets[_blocks.elements[i]]; j < _offsets[_blocks.elements[i] + 1]; ++j)
                                _cords.mark(_adjacent[j], _marked, _touched, _touched_count);
                        _cords.split(_marked, _touched, _touched_count);
                        ++b;
                    }
                }
                return build(initial);
            }

        private:
            void make_adjacent(const std::vector<int> & key)
            {
                std::fill(_offsets.begin(), _offsets.end(), 0);
                for (int t = 0; t < _transitions; ++t)
                    ++_offsets[key[t]];
                for (int s = 0; s < _states; ++s)
                    _offsets[s + 1] += _offsets[s];
                for (int t = _transitions; t--;)
                    _adjacent[--_offsets[key[t]]] = t;
            }

            void reach(int s)
            {
                int i = _blocks.location[s];
                if (i >= _reached) {
                    _blocks.elements[i] = _blocks.elements[_reached];
                    _blocks.location[_blocks.elements[i]] = i;
                    _blocks.elements[_reached] = s;
                    _blocks.location[s] = _reached++;
                }
            }

            // Keeps states reachable from the reached set along from -> to,
            // and the transitions leaving them.
            void remove_unreached(std::vector<int> & from, std::vector<int> & to)
            {
                make_adjacent(from);
                for (int i = 0; i < _reached; ++i)
                    for (int j = _offsets[_blocks.elements[i]]; j < _offsets[_blocks.elements[i] + 1]; ++j)
                        reach(to[_adjacent[j]]);
                int kept = 0;
                for (int t = 0; t < _transitions; ++t)
                    if (_blocks.location[from[t]] < _reached) {
                        _head[kept] = _head[t];
                        _label[kept] = _label[t];
                        _tail[kept] = _tail[t];
                        ++kept;
                    }
                _transitions = kept;
                _blocks.past[0] = _reached;
                _reached = 0;
            }

            // Quotient automaton numbered breadth-first from the initial block.
            auto build(int initial) -> Automaton
            {
                const int count = _blocks.blocks;
                std::vector<std::vector<Transition>> rows(count);
                for (int t = 0; t < _transitions; ++t) {
                    int block = _blocks.set_of[_tail[t]];
                    if (_blocks.elements[_blocks.first[block]] == _tail[t])
                        rows[block].push_back({_label[t], static_cast<State>(_blocks.set_of[_head[t]])});
                }
                for (auto & r : rows)
                    std::sort(r.begin(), r.end());

                std::vector<State> number(count, static_cast<State>(-1));
                std::vector<int> order;
                order.reserve(count);
                int start = _blocks.set_of[initial];
                number[start] = 0;
                order.push_back(start);
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (const auto & t : rows[order[i]])
                        if (number[t.target] == static_cast<State>(-1)) {
                            number[t.target] = static_cast<State>(order.size());
                            order.push_back(static_cast<int>(t.target));
                        }

                Automaton result(_dfa.alphabet());
                for (int block : order)
                    result.add_state(_dfa.is_final(static_cast<State>(_blocks.elements[_blocks.first[block]])));
                result.add_initial(0);
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (const auto & t : rows[order[i]])
                        result.add_transition(static_cast<State>(i), t.letter, number[t.target]);
                result.finish();
                return result;
            }

            const Automaton & _dfa;
            int _states;
            int _transitions = 0;
            std::vector<int> _tail, _head;
            std::vector<LetterCode> _label;
            Refinable _blocks, _cords;
            std::vector<int> _adjacent, _offsets;
            std::vector<int> _touched, _marked;
            int _touched_count = 0;
            int _reached = 0;
        };
    }

    auto minimize(const Automaton & a) -> Automaton
    {
        auto dfa = determinize(a);
        auto result = Minimizer(dfa).run();
        result.mark_padding_closed(a.padding_closed());
        return result;
    }
}
