#ifndef PCUBE_IO_HPP
#define PCUBE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pcube/complex.hpp"
#include "pcube/completion.hpp"
#include "pcube/core.hpp"
#include "pcube/recognition.hpp"

namespace pcube::io {

/// {"format":"pcube/1","m":int,"vertices":["0101",...],"names":[...]}.
/// Character k of a bitstring is coordinate k, so index 1 is leftmost.
struct GraphDocument {
    int m = 0;
    std::vector<Label> vertices;
    /// Empty or one per vertex.
    std::vector<std::string> names;

    static GraphDocument of(const CubeGraph& g);
    /// Throws Error{NotConnected}/Error{NotIsometric}.
    CubeGraph graph() const;
};

nlohmann::json to_json(const GraphDocument& d);
/// Throws Error{ParseError}.
GraphDocument document_from_json(const nlohmann::json& j);
std::string serialize(const CubeGraph& g);
/// Throws Error{ParseError} or the errors of GraphDocument::graph().
CubeGraph parse_graph(std::string_view text);

/// One "u v" pair per line with 0-based ids; '#' starts a comment. The vertex
/// count is one more than the largest id. Throws Error{ParseError}.
AbstractGraph parse_edge_list(std::string_view text);

/// A graph document if the text starts with '{', otherwise an edge list to be
/// recognized. Vertex k of an edge list becomes the vertex named "k".
struct Input {
    GraphDocument document;
    CubeGraph graph;
    bool recognized = false;
};

/// Throws Error{ParseError}, RecognitionError or the graph validation errors.
Input read_input(std::string_view text);

/// Undirected DOT with vertices named by bitstring and edges colored by class.
std::string to_dot(const CubeGraph& g, std::string_view name = "G");

nlohmann::json to_json(const CompletionReport& r);
nlohmann::json to_json(const AmalgamTree& t);

/// Class profile, VC-dimension, membership, cells, subdivisions, disk
/// structure and hyperplane VC profile.
nlohmann::json analyze(const CubeGraph& g);
/// Human-readable rendering of an analyze() report.
std::string analysis_text(const nlohmann::json& report);

} // namespace pcube::io

#endif
