#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "carc/arc_model.hpp"
#include "carc/catalog.hpp"
#include "carc/error.hpp"
#include "carc/graph.hpp"
#include "carc/gtc.hpp"
#include "carc/io.hpp"
#include "carc/r_circular.hpp"
#include "carc/recognition.hpp"
#include "carc/svg.hpp"

namespace carc::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class FileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw FileError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RPartiteGraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

ArcModel load_model(const std::string& path) {
    json doc;
    try {
        doc = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw Error(Errc::malformed_input, std::string("malformed input: ") + e.what());
    }
    return model_from_json(doc);
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        sizes.push_back(std::stoi(item));
    return sizes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recognition and certification toolkit for circular-arc r-graphs", "carc"};
    app.require_subcommand(1);

    std::string graph_path, model_path, ordering_text, output_path, sizes_text = "2,2";
    int colors = 4, limit = 12, parts = 2;
    unsigned threads = 0;
    double density = 0.5;
    std::uint64_t seed = 1;
    bool count_only = false, parallel = false, bruteforce = false, dump_scans = false;
    bool normalize = false;
    std::string example_name;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_path, "graph JSON file ('-' for stdin)")->required();
    };
    auto add_ordering = [&](CLI::App* sub) {
        sub->add_option("--ordering", ordering_text, "comma-separated permutation, ranges a..b allowed")
            ->required();
    };

    auto* recognize_cmd = app.add_subcommand("recognize", "decide membership with a certificate");
    add_graph(recognize_cmd);
    recognize_cmd->add_option("--limit", limit, "maximum vertex count");
    recognize_cmd->add_flag("--parallel", parallel, "concurrent search");
    recognize_cmd->add_option("--threads", threads, "worker threads for --parallel");
    recognize_cmd->add_flag("--bruteforce", bruteforce, "try every permutation (n <= 9)");

    auto* verify_cmd = app.add_subcommand("verify-ordering", "check a generalized total-circular ordering");
    add_graph(verify_cmd);
    add_ordering(verify_cmd);

    auto* rcirc_cmd = app.add_subcommand("verify-rcircular", "check an r-circular ordering");
    add_graph(rcirc_cmd);
    add_ordering(rcirc_cmd);
    rcirc_cmd->add_flag("--dump-scans", dump_scans, "include per-row scans");

    auto* build_cmd = app.add_subcommand("build-model", "construct arcs from an ordering");
    add_graph(build_cmd);
    add_ordering(build_cmd);

    auto* check_cmd = app.add_subcommand("check-model", "validate an arc model against a graph");
    add_graph(check_cmd);
    check_cmd->add_option("--model", model_path, "model JSON file")->required();
    check_cmd->add_flag("--normalize", normalize, "also emit the normalized model and its ordering");

    auto* scan_cmd = app.add_subcommand("scan-patterns", "list forbidden quadruples of an ordering");
    add_graph(scan_cmd);
    add_ordering(scan_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "dump the forbidden-pattern catalog");
    catalog_cmd->add_option("--colors", colors, "number of colours (>= 2)");
    catalog_cmd->add_flag("--count-only", count_only, "print only the count");

    auto* gen_cmd = app.add_subcommand("gen", "random r-partite graph");
    gen_cmd->add_option("--parts", parts, "part count r");
    gen_cmd->add_option("--sizes", sizes_text, "comma-separated part sizes");
    gen_cmd->add_option("--density", density, "edge probability in [0,1]");
    gen_cmd->add_option("--seed", seed, "64-bit seed");

    auto* example_cmd = app.add_subcommand("example", "emit a built-in graph");
    example_cmd->add_option("name", example_name, "fig1 or fig2")->required();

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of an arc model");
    add_graph(render_cmd);
    auto* model_opt = render_cmd->add_option("--model", model_path, "model JSON file");
    render_cmd->add_option("--ordering", ordering_text, "build the model from this ordering")
        ->excludes(model_opt);
    render_cmd->add_option("--output", output_path, "SVG file (default: stdout)");

    auto* harness_cmd = app.add_subcommand("harness", "cross-check all characterizations (n <= 10)");
    add_graph(harness_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "carc: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*example_cmd) {
            out << to_json(builtin_example(example_name)).dump() << "\n";
            return kPass;
        }
        if (*gen_cmd) {
            out << to_json(random_rpartite(parts, parse_sizes(sizes_text), density, seed)).dump() << "\n";
            return kPass;
        }
        if (*catalog_cmd) {
            const auto catalog = enumerate_catalog(colors);
            if (count_only) {
                out << json{{"count", catalog.size()}}.dump() << "\n";
            } else {
                json doc = json::array();
                for (const auto& c : catalog)
                    doc.push_back(to_json(c));
                out << doc.dump() << "\n";
            }
            return kPass;
        }

        const RPartiteGraph g = load_graph(graph_path);

        if (*recognize_cmd) {
            Decision d;
            if (bruteforce) {
                d = recognize_bruteforce(g);
            } else {
                SearchLimits limits;
                limits.max_vertices = limit;
                limits.mode = parallel ? SearchMode::parallel : SearchMode::sequential;
                limits.threads = threads;
                d = recognize(g, limits);
            }
            out << to_json(d).dump() << "\n";
            return d.yes ? kPass : kFail;
        }
        if (*harness_cmd) {
            const auto report = equivalence_harness(g);
            out << to_json(report).dump() << "\n";
            return report.agree ? kPass : kFail;
        }
        if (*check_cmd) {
            const ArcModel m = load_model(model_path);
            const auto verdict = validate_model(g, m);
            json doc{{"pass", verdict.pass}};
            if (verdict.offending)
                doc["offending"] = {verdict.offending->first, verdict.offending->second};
            if (normalize) {
                const ArcModel norm = normalize_model(m);
                doc["normalized"] = to_json(norm);
                doc["ordering"] = extract_ordering(norm).sequence();
            }
            out << doc.dump() << "\n";
            return verdict.pass ? kPass : kFail;
        }
        if (*render_cmd) {
            ArcModel m;
            if (!model_path.empty())
                m = load_model(model_path);
            else if (!ordering_text.empty())
                m = build_model(g, parse_ordering(ordering_text));
            else
                throw Error(Errc::invalid_argument, "render needs --model or --ordering");
            const std::string svg = render_svg(g, m);
            if (output_path.empty()) {
                out << svg;
            } else {
                std::ofstream file(output_path);
                if (!file)
                    throw FileError("cannot write '" + output_path + "'");
                file << svg;
                out << json{{"svg", output_path}}.dump() << "\n";
            }
            return kPass;
        }

        const CircularOrdering order = parse_ordering(ordering_text);
        if (*verify_cmd) {
            const auto verdict = verify_gtc(g, order);
            json doc{{"pass", verdict.pass}};
            if (verdict.witness) {
                const auto match = classify_witness(g, order, *verdict.witness);
                doc["witness"] = to_json(*verdict.witness, match.config->id());
            }
            out << doc.dump() << "\n";
            return verdict.pass ? kPass : kFail;
        }
        if (*rcirc_cmd) {
            const auto verdict = verify_r_circular(g, order);
            json doc{{"pass", verdict.pass}};
            if (verdict.uncovered)
                doc["uncovered"] = {verdict.uncovered->first, verdict.uncovered->second};
            if (dump_scans) {
                doc["scans"] = json::array();
                for (int i = 1; i <= g.order(); ++i)
                    doc["scans"].push_back(format_scan(row_scan(g, order, i)));
            }
            out << doc.dump() << "\n";
            return verdict.pass ? kPass : kFail;
        }
        if (*build_cmd) {
            out << to_json(build_model(g, order)).dump() << "\n";
            return kPass;
        }
        if (*scan_cmd) {
            const auto witnesses = scan_violations(g, order);
            json doc{{"count", witnesses.size()}, {"witnesses", json::array()}};
            for (const auto& w : witnesses)
                doc["witnesses"].push_back(to_json(w, classify_witness(g, order, w).config->id()));
            out << doc.dump() << "\n";
            return witnesses.empty() ? kPass : kFail;
        }
    } catch (const Error& e) {
        err << "carc: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const FileError& e) {
        err << "carc: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "carc: invalid number: " << e.what() << "\n";
        return kUsage;
    }
    err << "carc: no subcommand handled\n";
    return kUsage;
}

} // namespace carc::cli
