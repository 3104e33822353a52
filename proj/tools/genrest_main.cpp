// Command-line front end: group construction and inspection, character table
// export, and the verification suites, with JSON output and a per-(family,q)
// element/class cache.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genrest/errors.hpp"
#include "genrest/field.hpp"
#include "genrest/groups.hpp"
#include "genrest/json_writer.hpp"
#include "genrest/tables.hpp"
#include "genrest/verify.hpp"

namespace {

using namespace genrest;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitStructural = 2;

struct CommandConfig {
    std::string family = "gl2";
    int q = 3;
    std::string method = "dixon";
    std::string levi = "torus";
    std::string out;
    std::string cache_dir;
    bool no_cache = false;
    bool json = false;
    bool timings = false;
    bool control = false;
    long long bound = 200000;
    int verbosity = 0;
};

BuildOptions build_options(const CommandConfig& cfg) {
    BuildOptions opts;
    opts.order_bound = cfg.bound;
    if (!cfg.no_cache) {
        if (!cfg.cache_dir.empty()) {
            opts.cache_dir = cfg.cache_dir;
        } else if (const char* env = std::getenv("GENREST_CACHE"); env && *env) {
            opts.cache_dir = env;
        } else {
            opts.cache_dir = ".genrest-cache";
        }
    }
    return opts;
}

Family parse_family(const std::string& name) {
    auto fam = family_from_name(name);
    if (!fam) throw StructuralError("unknown family '" + name + "'");
    return *fam;
}

void emit(const CommandConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) throw StructuralError("cannot open output file " + cfg.out);
    f << text;
}

int cmd_group_info(const CommandConfig& cfg) {
    Family fam = parse_family(cfg.family);
    FieldTable F = field_build(parse_prime_power(cfg.q));
    auto G = build_group(fam, F, build_options(cfg));
    const auto& sub = G->subgroups();
    if (cfg.json) {
        JsonWriter w;
        w.begin_object();
        w.key("family");
        w.value(cfg.family);
        w.key("q");
        w.value(cfg.q);
        w.key("order");
        w.value(static_cast<long long>(G->size()));
        w.key("order_formula");
        w.value(family_order_formula(fam, cfg.q));
        w.key("classes");
        w.value(G->class_count());
        w.key("b");
        w.value(static_cast<long long>(sub.borel.size()));
        w.key("t");
        w.value(static_cast<long long>(sub.torus.size()));
        w.key("u");
        w.value(static_cast<long long>(sub.unipotent.size()));
        w.key("z");
        w.value(static_cast<long long>(sub.center.size()));
        w.key("parabolics");
        w.begin_array();
        for (const auto& rec : sub.parabolics) w.value(rec.name);
        w.end_array();
        w.end_object();
        emit(cfg, w.str());
    } else {
        std::string text = "family " + cfg.family + ", q=" + std::to_string(cfg.q) + "\n";
        text += "order " + std::to_string(G->size()) + " (formula " +
                std::to_string(family_order_formula(fam, cfg.q)) + ")\n";
        text += "classes " + std::to_string(G->class_count()) + "\n";
        text += "|B| " + std::to_string(sub.borel.size()) + "  |T| " + std::to_string(sub.torus.size()) +
                "  |U| " + std::to_string(sub.unipotent.size()) + "  |Z| " + std::to_string(sub.center.size()) +
                "\n";
        text += "parabolics:";
        for (const auto& rec : sub.parabolics) text += " " + rec.name;
        emit(cfg, text);
    }
    return kExitPass;
}

int cmd_table(const CommandConfig& cfg) {
    Family fam = parse_family(cfg.family);
    FieldTable F = field_build(parse_prime_power(cfg.q));
    auto G = build_group(fam, F, build_options(cfg));
    IrreducibleTable t;
    if (cfg.method == "closed") {
        if (fam != Family::Gl2) throw StructuralError("--method closed is only available for gl2");
        t = gl2_table(*G);
    } else if (cfg.method == "dixon") {
        t = dixon_table(*G);
    } else {
        throw StructuralError("unknown method '" + cfg.method + "' (expected closed or dixon)");
    }
    emit(cfg, table_to_json(t));
    return kExitPass;
}

int cmd_verify(const std::string& statement, const CommandConfig& cfg) {
    BuildOptions opts = build_options(cfg);
    VerificationReport rep;
    if (statement == "rodier") {
        rep = run_rodier(parse_family(cfg.family), cfg.q, cfg.levi, opts);
    } else if (statement == "transfer") {
        rep = run_transfer(parse_family(cfg.family), cfg.q, cfg.levi, opts);
    } else if (statement == "mult-one") {
        rep = run_mult_one(parse_family(cfg.family), cfg.q, opts);
    } else if (statement == "counterexample") {
        rep = run_counterexample(cfg.q, cfg.control, opts);
    } else {
        throw StructuralError("unknown statement '" + statement + "'");
    }
    emit(cfg, report_to_json(rep, cfg.timings));
    if (cfg.verbosity > 0)
        std::cerr << rep.statement << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.cells.size()
                  << " cells, " << rep.wall_ms << " ms)\n";
    return rep.pass ? kExitPass : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-theory engine for small finite reductive groups"};
    app.require_subcommand(1);
    CommandConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_family) {
        if (with_family)
            sub->add_option("--family", cfg.family, "group family: gl2, sp4, gsp4, paramodular-levi, gl2xgl2");
        sub->add_option("--q", cfg.q, "field size (prime power)")->required();
        sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
        sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $GENREST_CACHE or ./.genrest-cache)");
        sub->add_flag("--no-cache", cfg.no_cache, "disable the element/class cache");
        sub->add_option("--bound", cfg.bound, "maximum group order to enumerate");
        sub->add_flag("-v,--verbose", cfg.verbosity, "progress notes on stderr");
    };

    CLI::App* info = app.add_subcommand("group-info", "enumerate a group and print its structure");
    add_common(info, true);
    info->add_flag("--json", cfg.json, "JSON output");

    CLI::App* table = app.add_subcommand("table", "emit the irreducible character table as JSON");
    add_common(table, true);
    table->add_option("--method", cfg.method, "closed (gl2 only) or dixon")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification statement");
    verify->require_subcommand(1);
    CLI::App* rodier = verify->add_subcommand("rodier", "Whittaker transfer identity, all irreducible sigma");
    add_common(rodier, true);
    rodier->add_option("--levi", cfg.levi, "torus, siegel or klingen");
    CLI::App* transfer = verify->add_subcommand("transfer", "genericity transfer for cuspidal sigma");
    add_common(transfer, true);
    transfer->add_option("--levi", cfg.levi, "torus, siegel, klingen or all");
    CLI::App* multone = verify->add_subcommand("mult-one", "Whittaker multiplicity one for Ind_B^G");
    add_common(multone, true);
    CLI::App* cex = verify->add_subcommand("counterexample", "non-generic nonzero restriction to the det-matched pair group");
    add_common(cex, false);
    cex->add_flag("--control", cfg.control, "also verify that a generic restriction is detected");
    for (CLI::App* sub : {rodier, transfer, multone, cex})
        sub->add_flag("--timings", cfg.timings, "include the volatile ms field in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_group_info(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (verify->parsed()) {
            // default levi for transfer is every proper Levi
            if (verify->get_subcommand("transfer")->parsed() && !transfer->count("--levi")) cfg.levi = "all";
            for (const std::string& s : {"rodier", "transfer", "mult-one", "counterexample"})
                if (verify->get_subcommand(s)->parsed()) return cmd_verify(s, cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    }
    return kExitStructural;
}
