#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rtp/catalog.hpp"
#include "rtp/nondeg.hpp"
#include "rtp/okagraph.hpp"
#include "rtp/resgraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rtp::Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_graph(const rtp::ResolutionGraph& g, const std::string& format) {
    if (format == "json")
        std::cout << rtp::graph_to_json(g) << "\n";
    else if (format == "dot")
        std::cout << rtp::graph_to_dot(g);
    else
        std::cout << rtp::graph_to_ascii(g);
}

// Usage-level failures: bad expressions, selectors, parameters.
bool is_usage_error(const rtp::Error& e) {
    return dynamic_cast<const rtp::SyntaxError*>(&e) ||
           dynamic_cast<const rtp::ZeroPolynomial*>(&e) ||
           dynamic_cast<const rtp::ParameterOutOfRange*>(&e) ||
           dynamic_cast<const rtp::AmbiguousBranch*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric resolution of rational triple point singularities"};
    app.require_subcommand(1);

    std::string format = "ascii";
    std::string expr, fan_path, graph_path, selector;
    bool blowdown = false;
    std::int64_t max_param = 6;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "dot", "ascii"}));
    };

    CLI::App* resolve = app.add_subcommand("resolve", "Resolve a polynomial or abstract fan");
    resolve->add_option("expr", expr, "Polynomial in x, y, z");
    resolve->add_option("--fan", fan_path, "Abstract fan JSON file");
    resolve->add_flag("--blowdown,!--no-blowdown", blowdown, "Minimize by blow-downs");
    add_format(resolve);

    CLI::App* nondeg = app.add_subcommand("nondeg", "Newton non-degeneracy check");
    nondeg->add_option("expr", expr, "Polynomial in x, y, z")->required();

    CLI::App* verify = app.add_subcommand("verify", "Verify RTP families");
    verify->add_option("selector", selector, "Family selector or 'all'")->required();
    verify->add_option("--max", max_param, "Sweep parameter bound");

    CLI::App* fan_graph = app.add_subcommand("fan-graph", "Graph of an abstract fan");
    fan_graph->add_option("--fan", fan_path, "Abstract fan JSON file")->required();
    add_format(fan_graph);

    CLI::App* export_cmd = app.add_subcommand("export", "Re-render a graph JSON file");
    export_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    add_format(export_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (resolve->parsed()) {
            if (expr.empty() == fan_path.empty()) {
                std::cerr << "resolve: need exactly one of <expr> or --fan\n";
                return kExitUsage;
            }
            rtp::ResolutionGraph g;
            if (!fan_path.empty()) {
                g = rtp::graph_from_fan(rtp::fan_from_json(read_file(fan_path)));
            } else {
                rtp::MultiPoly p = rtp::parse_poly(expr, 3);
                if (p.is_zero()) throw rtp::ZeroPolynomial(expr);
                g = rtp::oka_resolve(p);
            }
            if (blowdown) g = rtp::blow_down(g).graph;
            print_graph(g, format);
            return kExitOk;
        }
        if (nondeg->parsed()) {
            rtp::MultiPoly p = rtp::parse_poly(expr, 3);
            if (p.is_zero()) throw rtp::ZeroPolynomial(expr);
            std::cout << rtp::verdict_to_json(rtp::check_newton_nondegenerate(p)) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            std::vector<rtp::RtpFamily> fams;
            if (selector == "all")
                fams = rtp::family_sweep(max_param);
            else
                fams.push_back(rtp::parse_family(selector));
            bool all_pass = true;
            for (const rtp::RtpFamily& fam : fams) {
                rtp::FamilyReport rep = rtp::verify_family(fam);
                all_pass = all_pass && rep.passed;
                std::cout << rep.message << "\n";
            }
            return all_pass ? kExitOk : kExitMismatch;
        }
        if (fan_graph->parsed()) {
            rtp::AbstractFan fan = rtp::fan_from_json(read_file(fan_path));
            for (std::size_t k = 0; k < fan.two_cones.size(); ++k) {
                auto [i, j] = fan.two_cones[k];
                std::cout << "cone " << rtp::to_string(fan.generators[static_cast<std::size_t>(i)])
                          << " " << rtp::to_string(fan.generators[static_cast<std::size_t>(j)])
                          << ": det "
                          << rtp::cone_det(fan.generators[static_cast<std::size_t>(i)],
                                           fan.generators[static_cast<std::size_t>(j)])
                          << "\n";
            }
            print_graph(rtp::graph_from_fan(fan), format);
            return kExitOk;
        }
        if (export_cmd->parsed()) {
            print_graph(rtp::graph_from_json(read_file(graph_path)), format);
            return kExitOk;
        }
    } catch (const rtp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e) ? kExitUsage : kExitObstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
