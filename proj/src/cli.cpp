#include "c4gb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "c4gb/json_io.hpp"
#include "c4gb/random_gen.hpp"

namespace c4gb {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

FieldDesc parse_field_flag(const std::string& flag) {
    if (flag == "Q") return field_q();
    if (flag.rfind("Fp:", 0) == 0) {
        std::uint64_t p = std::stoull(flag.substr(3));
        if (!is_prime(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
        return field_fp(p);
    }
    throw ParseError("--field must be Q or Fp:<prime>");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct Options {
    std::uint64_t seed = 0;
    std::string output = "json";
    std::string field = "Q";
    int max_dim = 4;
    std::size_t max_size = 8;
};

void check_guards(const StandardSet& s, const Options& opt) {
    if (s.dim() > opt.max_dim)
        throw SizeLimitExceeded("dimension " + std::to_string(s.dim()) + " exceeds --max-dim " +
                                std::to_string(opt.max_dim));
    if (s.size() > opt.max_size)
        throw SizeLimitExceeded("size " + std::to_string(s.size()) + " exceeds --max-size " +
                                std::to_string(opt.max_size));
}

int cmd_add(const std::string& a_path, const std::string& b_path, std::ostream& out) {
    auto a = standard_set_from_json(load_json(a_path));
    auto b = standard_set_from_json(load_json(b_path));
    emit(out, json_of(connect_four_add(a, b)));
    return 0;
}

int cmd_decompose(const std::string& path, bool count_only, bool graph, bool truncate,
                  const Options& opt, std::ostream& out) {
    auto delta = standard_set_from_json(load_json(path));
    check_guards(delta, opt);
    if (graph) {
        auto g = build_iterated_graph(delta, {opt.max_dim, opt.max_size}, truncate);
        if (opt.output == "dot")
            out << graph_to_dot(g);
        else
            emit(out, graph_to_json(g));
        return 0;
    }
    auto decs = enumerate_decompositions(delta);
    auto d = decomposition_number(delta);
    if (count_only) {
        emit(out, Json{{"decompositions", decs.size()}, {"d", d}});
        return 0;
    }
    Json list = Json::array();
    for (const auto& dec : decs) list.push_back(json_of(dec));
    emit(out, Json{{"delta", json_of(delta)},
                   {"decompositions", std::move(list)},
                   {"count", decs.size()},
                   {"d", d}});
    return 0;
}

int cmd_points(const std::string& path, bool with_slices, bool with_gb, int random_count,
               int random_dim, const Options& opt, std::ostream& out) {
    if (random_count > 0) {
        Rng rng(opt.seed);
        auto a = random_point_set(rng, parse_field_flag(opt.field), random_dim, random_count, 7);
        emit(out, json_of(a));
        return 0;
    }
    auto a = point_set_from_json(load_json(path));
    auto gb = vanishing_ideal_gb(a);
    Json result{{"delta", json_of(gb.delta())}};
    if (with_gb) result["basis"] = json_of(gb);
    if (with_slices) {
        Json slices = Json::array();
        for (const auto& [lambda, piece] : slice_last(a))
            slices.push_back(Json{{"lambda", json_of_coef(lambda)},
                                  {"delta", json_of(standard_set_of(piece))},
                                  {"points", json_of(piece)["points"]}});
        result["slices"] = std::move(slices);
    }
    emit(out, result);
    return 0;
}

int cmd_gb(const std::string& path, bool with_trace, const std::string& verify, std::ostream& out) {
    auto inst = instance_from_json(load_json(path));
    auto result = reduce_to_psi(inst, with_trace);
    Json output = json_of(result);
    bool all_ok = true;
    if (verify == "oracle" || verify == "both") {
        std::vector<IdealSlice> slices;
        for (const auto& s : inst.summands()) slices.push_back({s.basis, s.lambda});
        auto oracle = intersect_ideals_gb(slices);
        bool ok = oracle.delta() == result.psi.delta() && oracle.entries() == result.psi.entries();
        output["verification"]["oracle"] = ok ? "pass" : "fail";
        all_ok = all_ok && ok;
    }
    if (verify == "membership" || verify == "both") {
        auto report = membership_check(inst, result);
        output["verification"]["membership"] = json_of(report);
        all_ok = all_ok && report.all_pass;
    }
    emit(out, output);
    return all_ok ? 0 : 1;
}

int cmd_stratum_report(const std::string& path, const Options& opt, std::ostream& out) {
    auto delta = standard_set_from_json(load_json(path));
    check_guards(delta, opt);
    emit(out, json_of(stratum_report(delta)));
    return 0;
}

int cmd_stratum_table(int dim, int size, const Options& opt, std::ostream& out) {
    if (dim > opt.max_dim || static_cast<std::size_t>(size) > opt.max_size)
        throw SizeLimitExceeded("sweep exceeds --max-dim/--max-size guards");
    if (opt.output == "table") {
        out << "delta\tdimension\td\tnr\n";
        for (const auto& s : all_standard_sets(dim, size)) {
            auto r = stratum_report(s);
            auto b = dimension_vs_nr(s);
            std::string label;
            for (const auto& e : s.elements()) label += "(" + exponent_key(e) + ")";
            out << label << "\t" << r.dimension << "\t" << r.irreducible_components << "\t" << b.nr
                << "\n";
        }
        return 0;
    }
    Json rows = Json::array();
    for (const auto& s : all_standard_sets(dim, size)) rows.push_back(json_of(stratum_report(s)));
    emit(out, Json{{"dim", dim}, {"size", size}, {"rows", std::move(rows)}});
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"staircase combinatorics and lex Groebner bases of sliced ideals"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--seed", opt.seed, "seed for all randomized generation");
    app.add_option("--output", opt.output, "output format: json, table, or dot")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--field", opt.field, "coefficient field for generated fixtures: Q or Fp:<prime>");
    app.add_option("--max-dim", opt.max_dim, "dimension guard for combinatorial sweeps");
    app.add_option("--max-size", opt.max_size, "size guard for combinatorial sweeps");

    auto* add = app.add_subcommand("add", "connect-four sum of two standard sets");
    std::string add_a, add_b;
    add->add_option("a", add_a, "first standard-set file")->required();
    add->add_option("b", add_b, "second standard-set file")->required();

    auto* dec = app.add_subcommand("decompose", "decompositions and decomposition number");
    std::string dec_file;
    bool dec_count = false, dec_graph = false, dec_trunc = false;
    dec->add_option("delta", dec_file, "standard-set file")->required();
    dec->add_flag("--count-only", dec_count, "only report counts");
    dec->add_flag("--graph", dec_graph, "emit the iterated decomposition graph");
    dec->add_flag("--truncate", dec_trunc, "cut the graph below label 2 1/2");

    auto* pts = app.add_subcommand("points", "staircases and bases of vanishing ideals");
    std::string pts_file;
    bool pts_slice = false, pts_gb = false;
    int pts_random = 0, pts_dim = 2;
    pts->add_option("points", pts_file, "point-set file");
    pts->add_flag("--slice", pts_slice, "slice by the last coordinate");
    pts->add_flag("--gb", pts_gb, "include the reduced basis");
    pts->add_option("--random", pts_random, "generate a random fixture with this many points");
    pts->add_option("--dim", pts_dim, "ambient dimension for --random");

    auto* gb = app.add_subcommand("gb", "assemble the basis of an intersection of sliced ideals");
    std::string gb_file, gb_verify;
    bool gb_trace = false;
    gb->add_option("--instance", gb_file, "instance file")->required();
    gb->add_flag("--trace", gb_trace, "record the reduction steps");
    gb->add_option("--verify", gb_verify, "cross-check: oracle, membership, or both")
        ->check(CLI::IsMember({"oracle", "membership", "both"}));

    auto* stratum = app.add_subcommand("stratum", "dimension and component reports");
    auto* srep = stratum->add_subcommand("report", "report for one staircase");
    std::string srep_file;
    srep->add_option("--delta", srep_file, "standard-set file")->required();
    auto* stab = stratum->add_subcommand("table", "sweep all staircases of a given size");
    int stab_dim = 0, stab_size = 0;
    stab->add_option("--dim", stab_dim, "ambient dimension")->required();
    stab->add_option("--size", stab_size, "staircase size")->required();
    stratum->require_subcommand(1);

    for (auto* sub : {add, dec, pts, gb, stratum}) sub->fallthrough();
    for (auto* sub : {srep, stab}) sub->fallthrough();

    std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv-style vectors
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (add->parsed()) return cmd_add(add_a, add_b, out);
        if (dec->parsed()) return cmd_decompose(dec_file, dec_count, dec_graph, dec_trunc, opt, out);
        if (pts->parsed()) {
            if (pts_random == 0 && pts_file.empty()) throw ParseError("points needs a file or --random");
            return cmd_points(pts_file, pts_slice, pts_gb, pts_random, pts_dim, opt, out);
        }
        if (gb->parsed()) return cmd_gb(gb_file, gb_trace, gb_verify, out);
        if (stratum->parsed()) {
            if (srep->parsed()) return cmd_stratum_report(srep_file, opt, out);
            if (stab->parsed()) return cmd_stratum_table(stab_dim, stab_size, opt, out);
        }
        err << "error: no command\n";
        return 2;
    } catch (const SizeLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace c4gb
