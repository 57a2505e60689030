#include <bsknap/atoms.hh>
#include <bsknap/knapsack.hh>
#include <bsknap/oracle.hh>

#include <benchmark/benchmark.h>

using namespace bsknap;

namespace
{
    // A batch of seeded instances, solved end to end.
    void solve_random(benchmark::State & state)
    {
        const auto q = static_cast<int>(state.range(0));
        const auto n = static_cast<std::size_t>(state.range(1));
        std::vector<KnapsackInstance> batch;
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            batch.push_back(random_instance(q, n, 4, seed).instance);
        for (auto _ : state)
            for (const auto & inst : batch)
                benchmark::DoNotOptimize(solve(inst));
        state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch.size()));
    }
    BENCHMARK(solve_random)->ArgsProduct({{2, 3, 5}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

    void oracle_random(benchmark::State & state)
    {
        const auto q = static_cast<int>(state.range(0));
        std::vector<KnapsackInstance> batch;
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            batch.push_back(random_instance(q, 3, 4, seed).instance);
        for (auto _ : state)
            for (const auto & inst : batch)
                benchmark::DoNotOptimize(brute_force(inst, default_oracle_bound));
    }
    BENCHMARK(oracle_random)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

    // Carry automaton for c x - y = 0; size grows with c.
    void linear_build(benchmark::State & state)
    {
        const BigInt c = state.range(0);
        const LinearAtom atom{{{"x", c}, {"y", -1}}, 0, LinearAtom::Kind::Equal};
        const std::vector<std::string> env{"x", "y"};
        std::size_t states = 0;
        for (auto _ : state) {
            auto a = linear_automaton(atom, env, 2);
            states = a.state_count();
        }
        state.counters["states"] = static_cast<double>(states);
    }
    BENCHMARK(linear_build)->RangeMultiplier(8)->Range(8, 1 << 15);

    // The same relation with x restricted to powers of two.
    void linear_build_guarded(benchmark::State & state)
    {
        const BigInt c = ipow(BigInt(2), static_cast<std::uint64_t>(state.range(0))) + 1;
        const LinearAtom atom{{{"x", c}, {"y", -1}}, 0, LinearAtom::Kind::Equal};
        const std::vector<std::string> env{"x", "y"};
        const std::vector<unsigned> guard{0};
        std::size_t states = 0;
        for (auto _ : state) {
            auto a = linear_automaton(atom, env, 2, guard);
            states = a.state_count();
        }
        state.counters["states"] = static_cast<double>(states);
    }
    BENCHMARK(linear_build_guarded)->Arg(8)->Arg(64)->Arg(256);

    void minimize_product(benchmark::State & state)
    {
        const auto q = static_cast<int>(state.range(0));
        const std::vector<std::string> env{"x", "y", "z"};
        auto a = linear_automaton({{{"x", 7}, {"y", -3}, {"z", 5}}, 2, LinearAtom::Kind::GreaterEqual}, env, q);
        auto b = linear_automaton({{{"x", 2}, {"y", 9}, {"z", -4}}, 1, LinearAtom::Kind::Equal}, env, q);
        auto product = intersect(a, b);
        for (auto _ : state)
            benchmark::DoNotOptimize(minimize(product));
        state.counters["states"] = static_cast<double>(product.state_count());
    }
    BENCHMARK(minimize_product)->Arg(2)->Arg(3);
}

BENCHMARK_MAIN();
