#include <gridram/caps.hh>
#include <gridram/error.hh>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

using std::string;
using std::string_view;

namespace gridram
{
    namespace
    {
        template <typename T_>
        auto parse_number(string_view key, string_view text) -> T_
        {
            T_ value{};
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0)
                throw InvalidArgument("cap '" + string(key) + "' needs a positive integer, got '" + string(text) + "'");
            return value;
        }
    }

    auto parse_caps(string_view spec, Caps base) -> Caps
    {
        const std::map<string, std::function<void(Caps &, string_view, string_view)>> setters = {
            {"canonical", [](Caps & c, auto k, auto v) { c.canonical_lines = parse_number<int>(k, v); }},
            {"coclique", [](Caps & c, auto k, auto v) { c.coclique_line = parse_number<int>(k, v); }},
            {"diverse", [](Caps & c, auto k, auto v) { c.diverse_product = parse_number<int>(k, v); }},
            {"constructible", [](Caps & c, auto k, auto v) { c.constructible_lines = parse_number<int>(k, v); }},
            {"brute_force_n", [](Caps & c, auto k, auto v) { c.brute_force_n = parse_number<int>(k, v); }},
            {"backtrack_n", [](Caps & c, auto k, auto v) { c.backtrack_n = parse_number<int>(k, v); }},
            {"backtrack_nodes", [](Caps & c, auto k, auto v) { c.backtrack_nodes = parse_number<std::uint64_t>(k, v); }},
            {"cnf_eval_vars", [](Caps & c, auto k, auto v) { c.cnf_eval_vars = parse_number<int>(k, v); }},
            {"coloring_rows", [](Caps & c, auto k, auto v) { c.coloring_rows = parse_number<int>(k, v); }},
            {"color_subset", [](Caps & c, auto k, auto v) { c.color_subset_exact = parse_number<int>(k, v); }},
            {"hyper_vertices", [](Caps & c, auto k, auto v) { c.hyper_pattern_vertices = parse_number<int>(k, v); }},
            {"bipartition", [](Caps & c, auto k, auto v) { c.bipartition_search = parse_number<int>(k, v); }},
        };

        while (! spec.empty()) {
            auto comma = spec.find(',');
            auto item = spec.substr(0, comma);
            spec = (comma == string_view::npos) ? string_view{} : spec.substr(comma + 1);
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == string_view::npos)
                throw InvalidArgument("cap override '" + string(item) + "' is not key=value");
            auto key = item.substr(0, eq);
            auto setter = setters.find(string(key));
            if (setter == setters.end())
                throw InvalidArgument("unknown cap '" + string(key) + "'");
            setter->second(base, key, item.substr(eq + 1));
        }
        return base;
    }

    auto default_caps() -> const Caps &
    {
        static const Caps caps = [] {
            const char * env = std::getenv("GRIDRAM_CAPS");
            return env ? parse_caps(env) : Caps{};
        }();
        return caps;
    }
}
