#include <gridram/cnf.hh>
#include <gridram/embed.hh>
#include <gridram/json_io.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto slot_string(const Slot & s) -> string
        {
            if (s.kind == LineKind::row)
                return "h " + to_string(s.a) + " " + to_string(s.b) + " " + to_string(s.line);
            return "v " + to_string(s.line) + " " + to_string(s.a) + " " + to_string(s.b);
        }

        // k-subsets of [n] in lexicographic order
        auto for_each_subset(int n, int k, const std::function<void(const vector<int> &)> & visit) -> void
        {
            vector<int> pick(k);
            for (int i = 0; i < k; ++i)
                pick[i] = i + 1;
            if (k > n)
                return;
            while (true) {
                visit(pick);
                int i = k - 1;
                while (i >= 0 && pick[i] == n - k + i + 1)
                    --i;
                if (i < 0)
                    return;
                ++pick[i];
                for (int j = i + 1; j < k; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }

    auto encode_cnf(const GridSubgraph & pattern, int k, int n) -> CnfInstance
    {
        if (n < 1 || k < 1)
            throw InvalidArgument("need N >= 1 and k >= 1");
        if (n > 20)
            throw CapExceeded("CNF export supports N <= 20");

        CnfInstance cnf;
        cnf.n = n;
        cnf.k = k;
        cnf.pattern_json = grid_to_json(pattern);
        cnf.slots = slot_order(n);

        std::map<Slot, int> var;
        for (std::size_t i = 0; i < cnf.slots.size(); ++i)
            var[cnf.slots[i]] = static_cast<int>(i) + 1;

        std::set<vector<int>> seen;
        auto add = [&](vector<int> clause) {
            std::sort(clause.begin(), clause.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
            if (seen.insert(clause).second)
                cnf.clauses.push_back(std::move(clause));
        };

        for_each_embedding(pattern, GridSubgraph::complete(n, n), [&](const Embedding & e) {
            auto img = image(pattern, e);
            vector<int> clause;
            for (auto & h : img.h_edges)
                clause.push_back(-var.at({LineKind::row, h.y, h.x1, h.x2}));
            for (auto & v : img.v_edges)
                clause.push_back(-var.at({LineKind::column, v.x, v.y1, v.y2}));
            add(std::move(clause));
            return true;
        });

        for (int line = 1; line <= n; ++line)
            for (auto kind : {LineKind::row, LineKind::column})
                for_each_subset(n, k, [&](const vector<int> & s) {
                    vector<int> clause;
                    for (std::size_t a = 0; a < s.size(); ++a)
                        for (std::size_t b = a + 1; b < s.size(); ++b)
                            clause.push_back(var.at({kind, line, s[a], s[b]}));
                    add(std::move(clause));
                });
        return cnf;
    }

    auto to_dimacs(const CnfInstance & cnf) -> string
    {
        std::ostringstream out;
        out << "c gridram avoidance n " << cnf.n << " k " << cnf.k << "\n";
        out << "c pattern " << cnf.pattern_json << "\n";
        for (std::size_t i = 0; i < cnf.slots.size(); ++i)
            out << "c var " << i + 1 << " = " << slot_string(cnf.slots[i]) << "\n";
        out << "p cnf " << cnf.slots.size() << " " << cnf.clauses.size() << "\n";
        for (auto & clause : cnf.clauses) {
            for (int lit : clause)
                out << lit << " ";
            out << "0\n";
        }
        return out.str();
    }

    auto parse_dimacs(const string & text) -> CnfInstance
    {
        CnfInstance cnf;
        std::istringstream in(text);
        string line;
        bool header = false;
        long declared_vars = -1, declared_clauses = -1;
        vector<int> current;
        std::map<int, Slot> vars;
        while (std::getline(in, line)) {
            std::istringstream words(line);
            string first;
            if (! (words >> first))
                continue;
            if (first == "c") {
                string what;
                words >> what;
                if (what == "gridram") {
                    string tag, ntag, ktag;
                    words >> tag >> ntag >> cnf.n >> ktag >> cnf.k;
                }
                else if (what == "pattern") {
                    string rest;
                    std::getline(words, rest);
                    auto p = rest.find_first_not_of(' ');
                    cnf.pattern_json = p == string::npos ? "" : rest.substr(p);
                }
                else if (what == "var") {
                    int id;
                    string eq, kind;
                    int p1, p2, p3;
                    if (! (words >> id >> eq >> kind >> p1 >> p2 >> p3) || eq != "=" || (kind != "h" && kind != "v"))
                        throw ParseError("malformed variable comment: " + line);
                    vars[id] = kind == "h" ? Slot{LineKind::row, p3, p1, p2} : Slot{LineKind::column, p1, p2, p3};
                }
                continue;
            }
            if (first == "p") {
                string fmt;
                if (! (words >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf")
                    throw ParseError("malformed header: " + line);
                header = true;
                continue;
            }
            if (! header)
                throw ParseError("clause before the p cnf header");
            std::istringstream lits(line);
            long lit;
            while (lits >> lit) {
                if (lit == 0) {
                    cnf.clauses.push_back(current);
                    current.clear();
                }
                else {
                    if (std::abs(lit) > declared_vars)
                        throw ParseError("literal " + to_string(lit) + " out of range");
                    current.push_back(static_cast<int>(lit));
                }
            }
            if (! lits.eof())
                throw ParseError("non-integer token in clause line: " + line);
        }
        if (! header)
            throw ParseError("no p cnf header");
        if (! current.empty())
            throw ParseError("last clause is not terminated by 0");
        if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
            throw ParseError("header declares " + to_string(declared_clauses) + " clauses, found " +
                to_string(cnf.clauses.size()));
        for (long i = 1; i <= declared_vars; ++i) {
            auto it = vars.find(static_cast<int>(i));
            if (it == vars.end())
                throw ParseError("no slot comment for variable " + to_string(i));
            cnf.slots.push_back(it->second);
        }
        return cnf;
    }

    auto parse_model(const string & text, int variables) -> SolverModel
    {
        SolverModel model;
        model.values.assign(variables, false);
        std::istringstream in(text);
        string line;
        while (std::getline(in, line)) {
            std::istringstream words(line);
            string first;
            if (! (words >> first))
                continue;
            if (first == "c")
                continue;
            if (first == "s") {
                string status;
                words >> status;
                if (status == "UNSATISFIABLE")
                    model.unsatisfiable = true;
                continue;
            }
            std::istringstream lits(first == "v" ? line.substr(line.find('v') + 1) : line);
            string token;
            while (lits >> token) {
                long lit;
                try {
                    std::size_t used = 0;
                    lit = std::stol(token, &used);
                    if (used != token.size())
                        throw std::invalid_argument(token);
                }
                catch (const std::exception &) {
                    throw ParseError("bad literal '" + token + "' in model");
                }
                if (lit == 0)
                    continue;
                if (std::abs(lit) > variables)
                    throw ParseError("model literal " + token + " out of range");
                model.values[std::abs(lit) - 1] = lit > 0;
            }
        }
        return model;
    }

    auto satisfies(const CnfInstance & cnf, const vector<bool> & values) -> bool
    {
        if (static_cast<int>(values.size()) != cnf.variables())
            return false;
        for (auto & clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause)
                if (values[std::abs(lit) - 1] == (lit > 0)) {
                    sat = true;
                    break;
                }
            if (! sat)
                return false;
        }
        return true;
    }

    auto evaluate_cnf(const CnfInstance & cnf, const Caps & caps) -> optional<vector<bool>>
    {
        int v = cnf.variables();
        if (v > caps.cnf_eval_vars)
            throw CapExceeded(to_string(v) + " variables is above the exhaustive evaluation cap of " +
                to_string(caps.cnf_eval_vars) + "; use an external solver or raise 'cnf_eval_vars'");
        // variable i lives at bit v - i
        struct Masks
        {
            std::uint64_t pos = 0, neg = 0;
        };
        vector<Masks> clauses;
        for (auto & clause : cnf.clauses) {
            Masks m;
            for (int lit : clause)
                (lit > 0 ? m.pos : m.neg) |= std::uint64_t{1} << (v - std::abs(lit));
            clauses.push_back(m);
        }
        std::uint64_t all = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
        for (std::uint64_t a = 0;; ++a) {
            bool ok = true;
            for (auto & m : clauses)
                if (! (a & m.pos) && ! (~a & m.neg)) {
                    ok = false;
                    break;
                }
            if (ok) {
                vector<bool> values(v);
                for (int i = 1; i <= v; ++i)
                    values[i - 1] = (a >> (v - i)) & 1;
                return values;
            }
            if (a == all)
                break;
        }
        return std::nullopt;
    }

    auto decode_model(const CnfInstance & cnf, const vector<bool> & values, const Caps & caps) -> DecodedModel
    {
        if (static_cast<int>(values.size()) != cnf.variables())
            throw InvalidArgument("model has " + to_string(values.size()) + " values for " +
                to_string(cnf.variables()) + " variables");
        DecodedModel d;
        d.satisfies_clauses = satisfies(cnf, values);
        d.witness = grid_from_slots(cnf.n, cnf.slots, values);
        auto pattern = grid_from_json(cnf.pattern_json);
        d.avoids_pattern = ! contains(pattern, d.witness);
        d.avoids_cocliques = ! find_coclique(d.witness, cnf.k, caps);
        return d;
    }
}
