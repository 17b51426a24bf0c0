#include <gridram/bridging.hh>

#include <map>

using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    auto supersaturation_identity_check(const GridSubgraph & h, int column, int anchor, const GridSubgraph & g,
        int workers) -> SupersaturationReport
    {
        SupersaturationReport report;
        report.bridged = bridge(h, {LineKind::column, column, anchor});
        report.t_bridged = count_embeddings(report.bridged, g, workers);

        // Every embedding of H is an embedding of H minus `column` together
        // with one admissible column for it; group them by that base.
        std::map<Embedding, vector<int>> groups;
        for_each_embedding(h, g, [&](const Embedding & e) {
            Embedding base{e.column_map, e.row_map};
            base.column_map.erase(base.column_map.begin() + (column - 1));
            groups[base].push_back(e.column_map[column - 1]);
            return true;
        });

        for (auto & [base, extensions] : groups) {
            ExtensionClass cls{base, extensions, 0};
            int image_row = base.row_map[anchor - 1];
            for (std::size_t a = 0; a < extensions.size(); ++a)
                for (std::size_t b = a + 1; b < extensions.size(); ++b)
                    if (g.has_h_edge(extensions[a], extensions[b], image_row))
                        ++cls.f_edges;
            report.sum_f_edges += cls.f_edges;
            report.classes.push_back(std::move(cls));
        }
        report.ordered_pairs = 2 * report.sum_f_edges;
        report.equal = report.ordered_pairs == report.t_bridged;
        return report;
    }
}
