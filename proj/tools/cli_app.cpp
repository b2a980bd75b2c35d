#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "safenum/construct.hpp"
#include "safenum/error.hpp"
#include "safenum/graph.hpp"
#include "safenum/json_io.hpp"
#include "safenum/oracle.hpp"
#include "safenum/product.hpp"
#include "safenum/safe_number.hpp"
#include "safenum/safety.hpp"

namespace safenum::cli {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw invalid_input_error("cannot open file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw invalid_input_error("cannot write file: " + path);
    f << text << '\n';
}

struct GridSpec {
    int m = 0;
    int n = 0;
};

GridSpec parse_grid_spec(const std::string& spec) {
    const std::size_t comma = spec.find(',');
    bool ok = comma != std::string::npos;
    GridSpec grid;
    if (ok) {
        try {
            std::size_t used_m = 0;
            std::size_t used_n = 0;
            const std::string tail = spec.substr(comma + 1);
            grid.m = std::stoi(spec.substr(0, comma), &used_m);
            grid.n = std::stoi(tail, &used_n);
            ok = used_m == comma && !tail.empty() && used_n == tail.size();
        } catch (const std::exception&) {
            ok = false;
        }
    }
    if (!ok) throw invalid_input_error(R"(--product expects two sizes as "m,n")");
    return grid;
}

ordered_json cells_value(const ProductGraph& p, const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.members()) {
        const ProductCoord c = p.coord_of(v);
        arr.push_back(ordered_json{c.row, c.col});
    }
    return arr;
}

ordered_json flat_value(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.members()) arr.push_back(v);
    return arr;
}

// ---- compute ----------------------------------------------------------------

void run_compute(int m, int n, const std::string& format, std::ostream& out) {
    const long long value = safe_number(m, n);
    const bool detailed = std::min(m, n) >= 3;
    std::optional<BlockOptimum> opt;
    if (detailed) opt = block_minimum(m, n);

    if (format == "json") {
        ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["s"] = value;
        j["cs"] = value;
        if (opt) {
            ordered_json argmin;
            argmin["m1"] = opt->argmin.m1;
            argmin["m2"] = opt->argmin.m2;
            argmin["n1"] = opt->argmin.n1;
            argmin["n2"] = opt->argmin.n2;
            j["argmin"] = std::move(argmin);
            j["deficits"] = ordered_json{opt->deficit1, opt->deficit2};
            j["clamp_active"] = opt->clamp_active;
        }
        out << j.dump() << '\n';
        return;
    }
    out << "grid: " << m << " x " << n << "\n";
    out << "safe number s = cs = " << value << "\n";
    if (opt) {
        out << "best split: rows " << opt->argmin.m1 << "+" << opt->argmin.m2 << ", columns "
            << opt->argmin.n1 << "+" << opt->argmin.n2 << "\n";
        out << "deficits: " << opt->deficit1 << ", " << opt->deficit2
            << (opt->clamp_active ? " (floor of 1 active)" : "") << "\n";
    }
}

// ---- table ------------------------------------------------------------------

void run_table(int max, const std::string& format, std::ostream& out) {
    if (format == "json") {
        ordered_json j;
        j["max"] = max;
        ordered_json entries = ordered_json::array();
        for (int m = 1; m <= max; ++m)
            for (int n = m; n <= max; ++n) {
                ordered_json e;
                e["m"] = m;
                e["n"] = n;
                e["value"] = safe_number(m, n);
                entries.push_back(std::move(e));
            }
        j["entries"] = std::move(entries);
        out << j.dump() << '\n';
        return;
    }
    if (format == "csv") {
        out << "m/n";
        for (int n = 1; n <= max; ++n) out << ',' << n;
        out << '\n';
        for (int m = 1; m <= max; ++m) {
            out << m;
            for (int n = 1; n <= max; ++n) {
                out << ',';
                if (n >= m) out << safe_number(m, n);
            }
            out << '\n';
        }
        return;
    }
    // aligned text grid, upper triangle
    const int width = static_cast<int>(std::to_string(safe_number(max, max)).size()) + 2;
    out << std::setw(width) << "m\\n";
    for (int n = 1; n <= max; ++n) out << std::setw(width) << n;
    out << '\n';
    for (int m = 1; m <= max; ++m) {
        out << std::setw(width) << m;
        for (int n = 1; n <= max; ++n) {
            if (n >= m)
                out << std::setw(width) << safe_number(m, n);
            else
                out << std::setw(width) << ' ';
        }
        out << '\n';
    }
}

// ---- construct ---------------------------------------------------------------

void run_construct(int m, int n, bool half_cut, const std::string& format, std::ostream& out) {
    const Construction c = half_cut ? construct_half_cut(m, n) : construct_min(m, n);
    const ProductGraph p(m, n);
    if (format == "json") {
        ordered_json j;
        j["size"] = c.size();
        j["recipe"] = std::string(recipe_name(c.recipe));
        j["vertices"] = cells_value(p, c.set);
        out << j.dump() << '\n';
        return;
    }
    out << "recipe: " << recipe_name(c.recipe) << "\n";
    out << "size: " << c.size() << "\n";
    out << "cells:";
    for (int v : c.set.members()) {
        const ProductCoord cell = p.coord_of(v);
        out << " (" << cell.row << "," << cell.col << ")";
    }
    out << "\n";
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& graph_path, const std::string& product_spec, bool product_given,
               const std::string& set_path, const std::string& export_path, std::ostream& out) {
    std::optional<ProductGraph> product;
    std::optional<Graph> plain;
    if (product_given) {
        const GridSpec grid = parse_grid_spec(product_spec);
        product.emplace(grid.m, grid.n);
    } else {
        plain.emplace(graph_from_json(slurp(graph_path)));
    }
    const Graph& g = product ? product->graph() : *plain;
    const std::string set_text = slurp(set_path);
    const VertexSet s =
        product ? vertex_set_from_json(set_text, *product) : vertex_set_from_json(set_text, g);
    if (!export_path.empty()) write_file(export_path, graph_to_json(g));
    const SafetyReport report = verify_safe_set(g, s);
    out << safety_report_to_json(report, product ? &*product : nullptr) << '\n';
    return report.is_safe ? 0 : 1;
}

// ---- oracle -----------------------------------------------------------------

struct OracleOptions {
    std::string graph_path;
    std::string product_spec;
    int path_order = 0;
    int cycle_order = 0;
    int star_leaves = 0;
    bool product_given = false;
    bool graph_given = false;
    bool path_given = false;
    bool cycle_given = false;
    bool connected_only = false;
    int cap = kDefaultOracleCap;
    std::string export_path;
    std::string format = "text";
};

void run_oracle(const OracleOptions& opt, std::ostream& out) {
    std::optional<ProductGraph> product;
    std::optional<Graph> plain;
    if (opt.product_given) {
        const GridSpec grid = parse_grid_spec(opt.product_spec);
        product.emplace(grid.m, grid.n);
    } else if (opt.graph_given) {
        plain.emplace(graph_from_json(slurp(opt.graph_path)));
    } else if (opt.path_given) {
        plain.emplace(Graph::path(opt.path_order));
    } else if (opt.cycle_given) {
        plain.emplace(Graph::cycle(opt.cycle_order));
    } else {
        plain.emplace(Graph::star(opt.star_leaves));
    }
    const Graph& g = product ? product->graph() : *plain;
    if (!opt.export_path.empty()) write_file(opt.export_path, graph_to_json(g));

    auto witness_value = [&](const VertexSet& s) {
        return product ? cells_value(*product, s) : flat_value(s);
    };

    if (opt.connected_only) {
        const SearchResult r = min_safe_set(g, true, opt.cap);
        if (opt.format == "json") {
            ordered_json j;
            j["cs"] = r.size;
            j["cs_witness"] = witness_value(r.witness);
            j["subsets_examined"] = r.subsets_examined;
            out << j.dump() << '\n';
        } else {
            out << "cs = " << r.size << "\n";
            out << "cs witness: " << witness_value(r.witness).dump() << "\n";
            out << "subsets examined: " << r.subsets_examined << "\n";
        }
        return;
    }

    const OracleResult r = exhaustive_safe_numbers(g, opt.cap);
    if (opt.format == "json") {
        ordered_json j;
        j["s"] = r.s_value;
        j["cs"] = r.cs_value;
        j["s_witness"] = witness_value(r.s_witness);
        j["cs_witness"] = witness_value(r.cs_witness);
        j["subsets_examined"] = r.subsets_examined;
        out << j.dump() << '\n';
    } else {
        out << "s = " << r.s_value << ", cs = " << r.cs_value << "\n";
        out << "s witness: " << witness_value(r.s_witness).dump() << "\n";
        out << "cs witness: " << witness_value(r.cs_witness).dump() << "\n";
        out << "subsets examined: " << r.subsets_examined << "\n";
    }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"safe-set computations on rook graphs", "safenum"};
    app.require_subcommand(1);
    int exit_code = 0;

    // compute
    auto* compute = app.add_subcommand("compute", "compute the safe number of an m-by-n grid");
    int compute_m = 0;
    int compute_n = 0;
    std::string compute_format = "text";
    compute->add_option("m", compute_m, "number of rows")->required();
    compute->add_option("n", compute_n, "number of columns")->required();
    compute->add_option("--format", compute_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    compute->callback([&] { run_compute(compute_m, compute_n, compute_format, out); });

    // table
    auto* table = app.add_subcommand("table", "tabulate safe numbers for all m <= n <= max");
    int table_max = 10;
    std::string table_format = "text";
    table->add_option("--max", table_max, "largest side")->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->callback([&] { run_table(table_max, table_format, out); });

    // construct
    auto* construct = app.add_subcommand("construct", "build a minimum connected safe set");
    int construct_m = 0;
    int construct_n = 0;
    bool construct_half = false;
    std::string construct_format = "text";
    construct->add_option("m", construct_m, "number of rows")->required();
    construct->add_option("n", construct_n, "number of columns")->required();
    construct->add_flag("--half-cut", construct_half,
                        "build the near-half vertex cut witness instead");
    construct->add_option("--format", construct_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    construct->callback(
        [&] { run_construct(construct_m, construct_n, construct_half, construct_format, out); });

    // verify
    auto* verify = app.add_subcommand("verify", "check a vertex set against the safety rules");
    std::string verify_graph;
    std::string verify_product;
    std::string verify_set;
    std::string verify_export;
    auto* verify_source = verify->add_option_group("source", "where the graph comes from");
    verify_source->add_option("--graph", verify_graph, "path to a graph JSON file");
    auto* verify_product_option =
        verify_source->add_option("--product", verify_product, "rook graph given as m,n");
    verify_source->require_option(1);
    verify->add_option("--set", verify_set, "path to a vertex set JSON file")->required();
    verify->add_option("--export-graph", verify_export, "write the graph used to this path");
    verify->callback([&] {
        exit_code = run_verify(verify_graph, verify_product, verify_product_option->count() > 0,
                               verify_set, verify_export, out);
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum search on a small graph");
    OracleOptions oracle_opt;
    auto* oracle_source = oracle->add_option_group("source", "where the graph comes from");
    auto* graph_option =
        oracle_source->add_option("--graph", oracle_opt.graph_path, "path to a graph JSON file");
    auto* product_option =
        oracle_source->add_option("--product", oracle_opt.product_spec, "rook graph given as m,n");
    auto* path_option =
        oracle_source->add_option("--path", oracle_opt.path_order, "path graph on N vertices");
    auto* cycle_option =
        oracle_source->add_option("--cycle", oracle_opt.cycle_order, "cycle graph on N vertices");
    oracle_source->add_option("--star", oracle_opt.star_leaves, "star graph with N leaves");
    oracle_source->require_option(1);
    oracle->add_flag("--connected", oracle_opt.connected_only,
                     "search connected safe sets only");
    oracle->add_option("--cap", oracle_opt.cap, "largest graph order the search accepts")
        ->check(CLI::Range(1, 63))
        ->envname("SAFENUM_ORACLE_CAP");
    oracle->add_option("--export-graph", oracle_opt.export_path,
                       "write the graph used to this path");
    oracle->add_option("--format", oracle_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    oracle->callback([&] {
        oracle_opt.graph_given = graph_option->count() > 0;
        oracle_opt.product_given = product_option->count() > 0;
        oracle_opt.path_given = path_option->count() > 0;
        oracle_opt.cycle_given = cycle_option->count() > 0;
        run_oracle(oracle_opt, out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

} // namespace safenum::cli
