// pcube: recognize, analyze, complete and generate partial cubes.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcube/complex.hpp"
#include "pcube/completion.hpp"
#include "pcube/generators.hpp"
#include "pcube/io.hpp"
#include "pcube/minors.hpp"
#include "pcube/wiring.hpp"

using namespace pcube;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNotPartialCube = 2, kDimension = 3, kBudget = 4 };

int exit_code(Errc code)
{
    switch (code) {
    case Errc::NotConnected:
    case Errc::NotIsometric:
    case Errc::NotBipartite:
    case Errc::HalfspaceNotConvex: return kNotPartialCube;
    case Errc::HostNotTwoDimensional: return kDimension;
    case Errc::BudgetExceeded:
    case Errc::TooManyFreeClasses: return kBudget;
    default: return kUsage;
    }
}

std::string read_text(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void emit_graph(const CubeGraph& g, bool dot)
{
    if (dot) {
        std::cout << io::to_dot(g);
    } else {
        std::cout << io::serialize(g);
    }
}

void print_witness(const RecognitionError& e)
{
    const RecognitionWitness& w = e.witness();
    if (e.code() == Errc::NotBipartite) {
        std::cout << "witness: odd cycle";
        for (VertexId v : w.cycle) std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cout << "witness: W(" << w.edge.first << "," << w.edge.second << ") is not convex, shortest path";
        for (VertexId v : w.path) std::cout << ' ' << v;
        std::cout << " leaves it\n";
    }
}

CubeGraph generate(const std::string& kind, const std::vector<std::string>& params)
{
    auto number = [&](std::size_t k) {
        if (k >= params.size()) throw Error(Errc::BadParams, kind + " needs " + std::to_string(k + 1) + " parameter(s)");
        try {
            std::size_t used = 0;
            const int v = std::stoi(params[k], &used);
            if (used != params[k].size()) throw std::invalid_argument(params[k]);
            return v;
        } catch (const std::logic_error&) {
            throw Error(Errc::BadParams, "'" + params[k] + "' is not an integer");
        }
    };
    if (kind == "qm") return gen::hypercube(number(0));
    if (kind == "cycle") return gen::cycle(number(0));
    if (kind == "path") return gen::path(number(0));
    if (kind == "star") return gen::star(number(0));
    if (kind == "skn") return gen::full_subdivision(number(0));
    if (kind == "skn-star") return gen::full_subdivision_star(number(0));
    if (kind == "qm-minus") return gen::cube_minus(number(0));
    if (kind == "qmm") return gen::cube_minus_minus(number(0));
    if (kind == "xfamily") return gen::xfamily(number(0), number(1));
    if (kind == "wiring") {
        if (params.empty()) throw Error(Errc::BadParams, "wiring needs a diagram file");
        return disk_from_wiring(parse_wiring(read_text(params[0])));
    }
    throw Error(Errc::BadParams, "unknown generator '" + kind + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partial cube toolkit"};
    app.require_subcommand(1);

    std::string file;
    bool dot = false;
    bool json = false;

    auto* recognize_cmd = app.add_subcommand("recognize", "Embed an edge list or document isometrically in a hypercube");
    recognize_cmd->add_option("input", file, "Edge list or graph document, '-' for stdin")->required();
    recognize_cmd->add_flag("--dot", dot, "Print DOT instead of a document");

    auto* analyze_cmd = app.add_subcommand("analyze", "Report classes, VC-dimension, membership and cells");
    analyze_cmd->add_option("input", file, "Edge list or graph document")->required();
    analyze_cmd->add_flag("--json", json, "Print the report as JSON");

    std::string target;
    std::string report_file;
    auto* complete_cmd = app.add_subcommand("complete", "Complete a two-dimensional partial cube");
    complete_cmd->add_option("input", file, "Edge list or graph document")->required();
    complete_cmd->add_option("--to", target, "com or ample")->required()->check(CLI::IsMember({"com", "ample"}));
    complete_cmd->add_option("--report", report_file, "Write the completion report as JSON");
    complete_cmd->add_flag("--dot", dot, "Print DOT instead of a document");

    std::string kind;
    std::vector<std::string> params;
    auto* generate_cmd = app.add_subcommand("generate", "Build a standard family member");
    generate_cmd->add_option("kind", kind, "qm, cycle, path, star, skn, skn-star, qm-minus, qmm, xfamily, wiring")
        ->required();
    generate_cmd->add_option("params", params, "Generator parameters or wiring file");
    generate_cmd->add_flag("--dot", dot, "Print DOT instead of a document");

    auto* dot_cmd = app.add_subcommand("dot", "Render a graph as DOT, edges colored by class");
    dot_cmd->add_option("input", file, "Edge list or graph document")->required();

    auto* amalgam_cmd = app.add_subcommand("amalgam", "Decompose a two-dimensional partial cube into gated cells");
    amalgam_cmd->add_option("input", file, "Edge list or graph document")->required();
    amalgam_cmd->add_flag("--json", json, "Print the tree as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate_cmd->parsed()) {
            emit_graph(generate(kind, params), dot);
            return kOk;
        }
        const io::Input in = io::read_input(read_text(file));
        if (recognize_cmd->parsed()) {
            if (dot) {
                std::cout << io::to_dot(in.graph);
            } else {
                std::cout << io::to_json(in.document).dump() << '\n';
            }
        } else if (analyze_cmd->parsed()) {
            const auto report = io::analyze(in.graph);
            if (json) {
                std::cout << report.dump(2) << '\n';
            } else {
                std::cout << io::analysis_text(report);
            }
        } else if (complete_cmd->parsed()) {
            const CompletionReport r = target == "com" ? com_completion(in.graph) : ample_completion(in.graph);
            emit_graph(r.output, dot);
            if (!report_file.empty()) {
                std::ofstream out(report_file);
                out << io::to_json(r).dump(2) << '\n';
            }
        } else if (dot_cmd->parsed()) {
            std::cout << io::to_dot(in.graph);
        } else if (amalgam_cmd->parsed()) {
            const AmalgamTree t = amalgam_decompose(in.graph);
            if (json) {
                std::cout << io::to_json(t).dump(2) << '\n';
            } else {
                std::cout << to_text(t);
            }
        }
        return kOk;
    } catch (const RecognitionError& e) {
        std::cerr << "pcube: not a partial cube: " << e.what() << '\n';
        print_witness(e);
        return exit_code(e.code());
    } catch (const Error& e) {
        std::cerr << "pcube: " << e.what() << '\n';
        return exit_code(e.code());
    }
}
