#ifndef GRIDRAM_JSON_IO_HH
#define GRIDRAM_JSON_IO_HH

#include <gridram/grid.hh>
#include <gridram/hyper.hh>

#include <string>

namespace gridram
{
    /// Compact JSON, keys in the order columns, rows, spanning, vertices,
    /// h_edges, v_edges. vertices is left out for spanning graphs.
    auto grid_to_json(const GridSubgraph &) -> std::string;

    /// Raw parse into a draft; throws ParseError for malformed JSON or
    /// missing fields. Invariants are not checked here.
    auto grid_draft_from_json(const std::string & text) -> GridDraft;

    /// Parse and validate; throws ParseError or InvalidGrid.
    auto grid_from_json(const std::string & text) -> GridSubgraph;

    auto three_graph_to_json(const ThreeGraph &) -> std::string;
    auto three_graph_from_json(const std::string & text) -> ThreeGraph;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, const std::string & contents) -> void;
}

#endif
