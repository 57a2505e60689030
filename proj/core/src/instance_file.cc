#include <bsknap/error.hh>
#include <bsknap/instance_file.hh>

#include <optional>
#include <regex>
#include <sstream>

namespace bsknap
{
    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            auto begin = s.find_first_not_of(" \t\r");
            if (begin == std::string_view::npos)
                return {};
            auto end = s.find_last_not_of(" \t\r");
            return s.substr(begin, end - begin + 1);
        }

        auto fail(std::size_t line, const std::string & message) -> ParseError
        {
            return ParseError("line " + std::to_string(line) + ": " + message, line);
        }

        struct PendingElement
        {
            std::string text;
            std::size_t line;
        };

        auto parse_element(const PendingElement & e, int q) -> GroupElement
        {
            if (e.text.starts_with("mat")) {
                static const std::regex triple(R"(mat\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*(\d+)\s*\))");
                std::smatch m;
                if (! std::regex_match(e.text, m, triple))
                    throw fail(e.line, "malformed triple '" + e.text + "', expected mat(<k>, <num>, <denexp>)");
                try {
                    auto k = std::stoll(m[1].str());
                    BigInt numerator(m[2].str());
                    auto exponent = std::stoll(m[3].str());
                    return GroupElement{k, QFraction::make(std::move(numerator), exponent, q)};
                }
                catch (const std::out_of_range &) {
                    throw fail(e.line, "triple component out of range in '" + e.text + "'");
                }
            }
            try {
                return eval_word(parse_word(e.text), q);
            }
            catch (const ParseError & error) {
                throw fail(e.line, error.what());
            }
        }
    }

    auto parse_instance(std::string_view text) -> KnapsackInstance
    {
        std::optional<int> q;
        std::optional<PendingElement> target;
        std::vector<PendingElement> generators;

        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t line = 0;
        while (std::getline(in, raw)) {
            ++line;
            std::string_view content = raw;
            if (auto hash = content.find('#'); hash != std::string_view::npos)
                content = content.substr(0, hash);
            content = trim(content);
            if (content.empty())
                continue;

            auto colon = content.find(':');
            if (colon == std::string_view::npos)
                throw fail(line, "expected '<key>: <value>'");
            auto key = std::string(trim(content.substr(0, colon)));
            auto value = std::string(trim(content.substr(colon + 1)));

            if (key == "q") {
                if (q)
                    throw fail(line, "duplicate key 'q'");
                static const std::regex integer(R"([+-]?\d+)");
                if (! std::regex_match(value, integer))
                    throw fail(line, "q must be an integer, got '" + value + "'");
                long long parsed = 0;
                try {
                    parsed = std::stoll(value);
                }
                catch (const std::out_of_range &) {
                    throw fail(line, "q out of range");
                }
                if (parsed < 2 || parsed > 1'000'000)
                    throw fail(line, "q must be at least 2, got " + value);
                q = static_cast<int>(parsed);
            }
            else if (key == "gen")
                generators.push_back({value, line});
            else if (key == "target") {
                if (target)
                    throw fail(line, "duplicate key 'target'");
                target = PendingElement{value, line};
            }
            else
                throw fail(line, "unknown key '" + key + "'");
        }

        if (! q)
            throw ParseError("missing required key 'q'", 0);
        if (! target)
            throw ParseError("missing required key 'target'", 0);

        KnapsackInstance instance;
        instance.q = *q;
        for (const auto & g : generators)
            instance.generators.push_back(parse_element(g, *q));
        instance.target = parse_element(*target, *q);
        return instance;
    }

    auto format_triple(const GroupElement & g) -> std::string
    {
        return "mat(" + std::to_string(g.t_exponent) + ", " + g.coefficient.numerator.str() + ", "
            + std::to_string(g.coefficient.exponent) + ")";
    }

    auto format_instance(const KnapsackInstance & instance) -> std::string
    {
        std::string out = "q: " + std::to_string(instance.q) + "\n";
        for (const auto & g : instance.generators)
            out += "gen: " + format_triple(g) + "\n";
        out += "target: " + format_triple(instance.target) + "\n";
        return out;
    }
}
