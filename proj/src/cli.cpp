#include "ringlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "ringlab/report.hpp"
#include "json_views.hpp"

namespace ringlab {

namespace {

using nlohmann::json;
using namespace views;

std::string flags_table(const json& j, const std::string& title) {
    std::string out = title + "\n";
    for (auto& [k, v] : j.items()) {
        if (k == "witnesses") continue;
        out += "  " + k + std::string(k.size() < 12 ? 12 - k.size() : 1, ' ') +
               (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.dump()) + "\n";
    }
    if (j.contains("witnesses") && !j["witnesses"].empty()) {
        out += "  witnesses:\n";
        for (auto& [k, v] : j["witnesses"].items())
            out += "    " + k + " -> " + v.get<std::string>() + "\n";
    }
    return out;
}





int emit(std::ostream& out, const json& j, const std::string& format,
         const std::string& table_title) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << flags_table(j, table_title);
    return 0;
}

struct Options {
    std::string ring_expr, mod_expr, gens, show = "flags", format = "table";
    std::string filter, suite = "all", corpus_file, report_file, property, fixture_id;
    int max_order = 36;
    int threads = 0;
    bool fail_on_hit = false, run_all = false, timings = false;
};

int do_ring_info(const Options& opt, std::ostream& out) {
    auto ast = parse_ring_expr(opt.ring_expr);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        const RingTable& R = *er.table;
        j["expr"] = format_canonical(ast);
        j["kind"] = "table";
        j["order"] = R.order;
        auto f = ring_flags(R);
        j["flags"] = {{"uz", f.is_uz},
                      {"reduced", f.is_reduced},
                      {"domain", f.is_domain},
                      {"field", f.is_field},
                      {"boolean", f.is_boolean}};
        j["units"] = format_elems(R, units(R));
        j["zero_divisors"] = format_elems(R, zero_divisors(R));
        j["nilradical"] = format_elems(R, nilradical_set(R));
        if (R.order <= 128) j["ideal_count"] = all_ideals(er.table).size();
    } else {
        const auto& sr = std::get<SymRing>(result);
        j["expr"] = format_canonical(ast);
        j["kind"] = "symbolic";
        j["factors"] = sr.factors;
        if (sr.is_idz()) j["idealization_modulus"] = sr.idz_k;
        if (sr.is_poly()) j["polyfix"] = sr.polyfix;
    }
    return emit(out, j, opt.format, "ring " + opt.ring_expr);
}

int do_ideal_classify(const Options& opt, std::ostream& out) {
    auto ast = parse_ring_expr(opt.ring_expr);
    auto gens = parse_gens(opt.gens);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        std::vector<ElementId> g;
        for (auto& lit : gens) g.push_back(er.resolve(lit));
        Ideal I = generate_ideal(er.table, g);
        auto f = classify_ideal(I);
        j = ideal_flags_json(f, *er.table);
        j["ring"] = format_canonical(ast);
        j["ideal"] = format_elems(*er.table, I.members);
        if (f.is_proper) {
            j["char_crosscheck"] = char_crosscheck(I);
            j["mode"] = "table-exact";
        }
    } else {
        const auto& sr = std::get<SymRing>(result);
        SymIdeal I = sym_ideal_from_gens(sr, gens);
        j = sym_ideal_flags_json(sym_classify(I), sr);
        j["ring"] = format_canonical(ast);
    }
    return emit(out, j, opt.format, "ideal in " + opt.ring_expr);
}

int do_ideal_list(const Options& opt, std::ostream& out) {
    auto ast = parse_ring_expr(opt.ring_expr);
    auto result = elaborate(ast);
    if (!std::holds_alternative<ElabRing>(result))
        throw UsageError("ideal list requires a finite table ring");
    const auto& er = std::get<ElabRing>(result);
    json arr = json::array();
    for (auto& I : all_ideals(er.table)) {
        auto f = classify_ideal(I);
        if (!opt.filter.empty()) {
            // reuse the search predicate machinery via a single-ring corpus
            auto lookup_ok = [&]() {
                CorpusSpec one;
                one.exprs = {format_canonical(ast)};
                one.include_symbolic = false;
                for (auto& hit : search_counterexamples(opt.filter, one, er.table->order)) {
                    std::string gens = "<";
                    for (size_t i = 0; i < I.gens.size(); ++i) {
                        if (i) gens += ",";
                        gens += er.table->names[I.gens[i]];
                    }
                    gens += ">";
                    if (hit.object == gens) return true;
                }
                return false;
            };
            if (!lookup_ok()) continue;
        }
        json r = ideal_flags_json(f, *er.table);
        r["members"] = format_elems(*er.table, I.members);
        json gens = json::array();
        for (auto g : I.gens) gens.push_back(er.table->names[g]);
        r["gens"] = gens;
        arr.push_back(std::move(r));
    }
    if (opt.format == "json") {
        out << arr.dump(2) << "\n";
    } else {
        out << "ideals of " << format_canonical(ast) << ": " << arr.size() << "\n";
        for (auto& r : arr)
            out << "  {" << r["members"].get<std::string>() << "}"
                << (r["proper"].get<bool>() ? "" : " (improper)")
                << (r["proper"].get<bool>() && r["semi_r"].get<bool>() ? " semi_r" : "")
                << (r["proper"].get<bool>() && r["semiprime"].get<bool>() ? " semiprime" : "")
                << (r["proper"].get<bool>() && r["prime"].get<bool>() ? " prime" : "") << "\n";
    }
    return 0;
}

int do_module_classify(const Options& opt, std::ostream& out) {
    auto ast = parse_ring_expr(opt.ring_expr);
    auto mexpr = parse_mod_expr(opt.mod_expr);
    auto gens = parse_gens(opt.gens);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        auto em = elaborate_module(er, mexpr);
        std::vector<uint16_t> g;
        for (auto& lit : gens) g.push_back(em.resolve(lit));
        Submodule N = generate_submodule(em.table, g);
        j = sub_flags_json(classify_submodule(N), *em.table);
        j["mode"] = "table-exact";
    } else {
        const auto& sr = std::get<SymRing>(result);
        if (sr.factors != std::vector<long long>{0} || sr.is_idz() || sr.is_poly())
            throw UsageError("symbolic modules are supported over the ring ZZ");
        FGZModule M = elaborate_sym_module(mexpr);
        std::vector<std::vector<long long>> g;
        for (auto& lit : gens) {
            std::vector<long long> vec;
            if (M.inv.size() == 1 && !lit.is_tuple)
                vec.push_back(lit.value);
            else {
                if (!lit.is_tuple || lit.parts.size() != M.inv.size())
                    throw Error("generator arity must match the module rank");
                for (auto& p : lit.parts) vec.push_back(p.value);
            }
            g.push_back(std::move(vec));
        }
        auto N = make_lattice_submodule(M, g);
        j = sym_sub_flags_json(sym_classify_submodule(N));
    }
    j["ring"] = format_canonical(ast);
    j["module"] = format_canonical(mexpr);
    return emit(out, j, opt.format, "submodule of " + opt.mod_expr + " over " + opt.ring_expr);
}

int do_construct(const Options& opt, std::ostream& out) {
    auto ast = parse_ring_expr(opt.ring_expr);
    auto result = elaborate(ast);
    if (!std::holds_alternative<ElabRing>(result)) {
        json j;
        j["expr"] = format_canonical(ast);
        j["kind"] = "symbolic";
        return emit(out, j, opt.format, "construct " + opt.ring_expr);
    }
    const auto& er = std::get<ElabRing>(result);
    const RingTable& R = *er.table;
    if (opt.show == "table") {
        out << "order " << R.order << ", one = " << R.names[R.one] << "\n";
        out << "elements:";
        for (auto& n : R.names) out << " " << n;
        out << "\nadd:\n";
        for (ElementId i = 0; i < R.order; ++i) {
            for (ElementId k = 0; k < R.order; ++k) out << (k ? " " : "") << R.a(i, k);
            out << "\n";
        }
        out << "mul:\n";
        for (ElementId i = 0; i < R.order; ++i) {
            for (ElementId k = 0; k < R.order; ++k) out << (k ? " " : "") << R.m(i, k);
            out << "\n";
        }
        return 0;
    }
    json j;
    j["expr"] = format_canonical(ast);
    j["order"] = R.order;
    auto f = ring_flags(R);
    j["uz"] = f.is_uz;
    j["reduced"] = f.is_reduced;
    j["domain"] = f.is_domain;
    j["field"] = f.is_field;
    j["boolean"] = f.is_boolean;
    if (R.order <= 256) j["axioms_ok"] = verify_ring_axioms(R).empty();
    return emit(out, j, opt.format, "construct " + opt.ring_expr);
}

int do_verify(const Options& opt, std::ostream& out) {
    CorpusSpec corpus =
        opt.corpus_file.empty() ? default_corpus() : corpus_from_file(opt.corpus_file);
    std::vector<std::string> ids;
    if (opt.suite != "all") {
        std::string cur;
        for (char c : opt.suite + ",") {
            if (c == ',') {
                if (!cur.empty()) ids.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
    }
    SuiteReport report = run_suite(corpus, ids, opt.threads);
    std::string text = emit_report(
        report, opt.format == "json" ? ReportFormat::Json : ReportFormat::Table, opt.timings);
    if (opt.format == "json") {
        std::string err = validate_report_json(text);
        if (!err.empty()) throw Error("report failed schema validation: " + err);
    }
    out << text;
    if (!opt.report_file.empty()) {
        std::ofstream f(opt.report_file);
        if (!f) throw UsageError("cannot write report file: " + opt.report_file);
        f << text;
    }
    for (auto& c : report.checks)
        if (c.verdict.status == "refuted") return 1;
    return 0;
}

int do_search(const Options& opt, std::ostream& out) {
    CorpusSpec corpus =
        opt.corpus_file.empty() ? default_corpus() : corpus_from_file(opt.corpus_file);
    auto hits = search_counterexamples(opt.property, corpus, opt.max_order);
    if (opt.format == "json") {
        json arr = json::array();
        for (auto& h : hits)
            arr.push_back({{"carrier", h.carrier}, {"object", h.object}, {"detail", h.detail}});
        out << arr.dump(2) << "\n";
    } else {
        out << hits.size() << " hit(s) for: " << opt.property << "\n";
        for (auto& h : hits) out << "  " << h.carrier << " | " << h.object << "\n";
    }
    return opt.fail_on_hit && !hits.empty() ? 1 : 0;
}

int do_fixtures_list(const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << fixtures_json();
        return 0;
    }
    for (auto& rec : fixture_registry())
        out << rec.id << "  [" << rec.expected << "]  " << rec.carrier << " : " << rec.object
            << "\n";
    return 0;
}

int do_fixtures_run(const Options& opt, std::ostream& out) {
    std::vector<FixtureOutcome> outcomes;
    if (opt.run_all) {
        for (auto& rec : fixture_registry()) outcomes.push_back(run_fixture(rec));
    } else {
        outcomes.push_back(run_fixture_by_id(opt.fixture_id));
    }
    bool all_ok = true;
    if (opt.format == "json") {
        json arr = json::array();
        for (auto& o : outcomes) {
            arr.push_back({{"id", o.id},
                           {"status", o.status},
                           {"witness", o.witness},
                           {"detail", o.detail},
                           {"matches_expected", o.matches_expected}});
            all_ok = all_ok && o.matches_expected;
        }
        out << arr.dump(2) << "\n";
    } else {
        for (auto& o : outcomes) {
            out << (o.matches_expected ? "[ok]   " : "[FAIL] ") << o.id << " -> " << o.status;
            if (!o.witness.empty()) out << " witness " << o.witness;
            out << "\n";
            all_ok = all_ok && o.matches_expected;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int cli_execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-ring ideal and submodule classification workbench"};
    app.require_subcommand(1);
    Options opt;

    auto* ring = app.add_subcommand("ring", "inspect a ring");
    auto* ring_info = ring->add_subcommand("info", "order, flags, units, zero divisors");
    ring_info->add_option("--ring", opt.ring_expr)->required();
    ring_info->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* ideal = app.add_subcommand("ideal", "classify or list ideals");
    auto* ideal_classify = ideal->add_subcommand("classify", "classify one generated ideal");
    ideal_classify->add_option("--ring", opt.ring_expr)->required();
    ideal_classify->add_option("--gens", opt.gens)->required();
    ideal_classify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
    auto* ideal_list = ideal->add_subcommand("list", "list all ideals");
    ideal_list->add_option("--ring", opt.ring_expr)->required();
    ideal_list->add_option("--filter", opt.filter);
    ideal_list->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* module_cmd = app.add_subcommand("module", "classify submodules");
    auto* module_classify = module_cmd->add_subcommand("classify", "classify one submodule");
    module_classify->add_option("--ring", opt.ring_expr)->required();
    module_classify->add_option("--module", opt.mod_expr)->required();
    module_classify->add_option("--gens", opt.gens)->required();
    module_classify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* construct = app.add_subcommand("construct", "elaborate an expression");
    construct->add_option("--expr", opt.ring_expr)->required();
    construct->add_option("--show", opt.show)->check(CLI::IsMember({"table", "flags"}));
    construct->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* verify = app.add_subcommand("verify", "run the theorem suite");
    verify->add_option("--suite", opt.suite);
    verify->add_option("--corpus", opt.corpus_file);
    verify->add_option("--report", opt.report_file);
    verify->add_option("--threads", opt.threads);
    verify->add_flag("--timings", opt.timings, "emit real timings (breaks byte determinism)");
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* search = app.add_subcommand("search", "search objects by flag expression");
    search->add_option("--property", opt.property)->required();
    search->add_option("--max-order", opt.max_order);
    search->add_option("--corpus", opt.corpus_file);
    search->add_flag("--fail-on-hit", opt.fail_on_hit);
    search->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    auto* fixtures = app.add_subcommand("fixtures", "list or run the example registry");
    auto* fx_list = fixtures->add_subcommand("list", "print the registry");
    fx_list->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
    auto* fx_run = fixtures->add_subcommand("run", "run fixtures");
    fx_run->add_option("--id", opt.fixture_id);
    fx_run->add_flag("--all", opt.run_all);
    fx_run->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ring_info->parsed()) return do_ring_info(opt, out);
        if (ideal_classify->parsed()) return do_ideal_classify(opt, out);
        if (ideal_list->parsed()) return do_ideal_list(opt, out);
        if (module_classify->parsed()) return do_module_classify(opt, out);
        if (construct->parsed()) return do_construct(opt, out);
        if (verify->parsed()) return do_verify(opt, out);
        if (search->parsed()) return do_search(opt, out);
        if (fx_list->parsed()) return do_fixtures_list(opt, out);
        if (fx_run->parsed()) {
            if (!opt.run_all && opt.fixture_id.empty())
                throw UsageError("fixtures run needs --id or --all");
            return do_fixtures_run(opt, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error at offset " << e.offset << ": expected " << e.expected << "\n";
        return 3;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ringlab
