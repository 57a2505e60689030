#include <bsknap/error.hh>
#include <bsknap/oracle.hh>

#include <random>

namespace bsknap
{
    namespace
    {
        auto search(const KnapsackInstance & instance, std::uint64_t bound, std::size_t index,
            const GroupElement & prefix, std::vector<std::uint64_t> & exponents) -> bool
        {
            if (index == instance.generators.size())
                return prefix == instance.target;
            const auto & g = instance.generators[index];
            GroupElement current = prefix;
            for (std::uint64_t x = 0; x <= bound; ++x) {
                exponents[index] = x;
                if (search(instance, bound, index + 1, current, exponents))
                    return true;
                current = multiply(current, g, instance.q);
            }
            return false;
        }

        auto random_word(std::mt19937_64 & rng, std::size_t length) -> GroupWord
        {
            std::uniform_int_distribution<int> letter(0, 3);
            GroupWord w;
            for (std::size_t i = 0; i < length; ++i)
                w.push_back(static_cast<Letter>(letter(rng)));
            return w;
        }
    }

    auto brute_force(const KnapsackInstance & instance, std::uint64_t bound) -> OracleOutcome
    {
        OracleOutcome outcome;
        outcome.searched_bound = bound;
        std::vector<std::uint64_t> exponents(instance.generators.size(), 0);
        if (search(instance, bound, 0, GroupElement::identity(), exponents))
            outcome.found = exponents;
        return outcome;
    }

    auto random_instance(int q, std::size_t generators, std::size_t max_word_length, std::uint64_t seed,
        std::uint64_t max_exponent) -> RandomInstance
    {
        check_base(q);
        if (max_word_length == 0)
            throw InvalidArgument("max_word_length must be positive");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> length(1, max_word_length);
        std::uniform_int_distribution<std::uint64_t> exponent(0, max_exponent);

        RandomInstance r;
        r.instance.q = q;
        for (std::size_t i = 0; i < generators; ++i) {
            auto w = random_word(rng, length(rng));
            r.instance.generators.push_back(eval_word(w, q));
            r.generator_words.push_back(std::move(w));
        }
        for (std::size_t i = 0; i < generators; ++i)
            r.planted.push_back(exponent(rng));
        r.instance.target = power_product(r.instance.generators, r.planted, q);

        r.constructed_sat = std::bernoulli_distribution(0.5)(rng);
        if (! r.constructed_sat) {
            GroupElement factor;
            do
                factor = eval_word(random_word(rng, length(rng)), q);
            while (factor.is_identity());
            r.instance.target = multiply(r.instance.target, factor, q);
            r.planted.clear();
        }
        return r;
    }
}
