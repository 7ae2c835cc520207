#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json_views.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/report.hpp"

namespace py = pybind11;
using namespace ringlab;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (auto& v : j) out.append(to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
        default:
            return py::none();
    }
}

py::object ring_info(const std::string& expr) {
    auto ast = parse_ring_expr(expr);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        const RingTable& R = *er.table;
        auto f = ring_flags(R);
        j["expr"] = format_canonical(ast);
        j["kind"] = "table";
        j["order"] = R.order;
        j["uz"] = f.is_uz;
        j["reduced"] = f.is_reduced;
        j["domain"] = f.is_domain;
        j["field"] = f.is_field;
        j["boolean"] = f.is_boolean;
        j["units"] = format_elems(R, units(R));
        j["zero_divisors"] = format_elems(R, zero_divisors(R));
        j["nilradical"] = format_elems(R, nilradical_set(R));
    } else {
        const auto& sr = std::get<SymRing>(result);
        j["expr"] = format_canonical(ast);
        j["kind"] = "symbolic";
        j["factors"] = sr.factors;
        if (sr.is_idz()) j["idealization_modulus"] = sr.idz_k;
        if (sr.is_poly()) j["polyfix"] = sr.polyfix;
    }
    return to_py(j);
}

py::object classify_ideal_py(const std::string& ring_expr, const std::string& gens_text) {
    auto ast = parse_ring_expr(ring_expr);
    auto gens = parse_gens(gens_text);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        std::vector<ElementId> g;
        for (auto& lit : gens) g.push_back(er.resolve(lit));
        Ideal I = generate_ideal(er.table, g);
        j = views::ideal_flags_json(classify_ideal(I), *er.table);
        j["members"] = format_elems(*er.table, I.members);
        j["mode"] = "table-exact";
    } else {
        const auto& sr = std::get<SymRing>(result);
        j = views::sym_ideal_flags_json(sym_classify(views::sym_ideal_from_gens(sr, gens)), sr);
    }
    j["ring"] = format_canonical(ast);
    return to_py(j);
}

py::object classify_submodule_py(const std::string& ring_expr, const std::string& mod_expr,
                                 const std::string& gens_text) {
    auto ast = parse_ring_expr(ring_expr);
    auto mexpr = parse_mod_expr(mod_expr);
    auto gens = parse_gens(gens_text);
    auto result = elaborate(ast);
    json j;
    if (std::holds_alternative<ElabRing>(result)) {
        const auto& er = std::get<ElabRing>(result);
        auto em = elaborate_module(er, mexpr);
        std::vector<uint16_t> g;
        for (auto& lit : gens) g.push_back(em.resolve(lit));
        j = views::sub_flags_json(classify_submodule(generate_submodule(em.table, g)),
                                  *em.table);
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
        j = views::sym_sub_flags_json(sym_classify_submodule(make_lattice_submodule(M, g)));
    }
    j["ring"] = format_canonical(ast);
    j["module"] = format_canonical(mexpr);
    return to_py(j);
}

py::object run_suite_py(const std::vector<std::string>& ids,
                        const std::vector<std::string>& corpus_exprs, int threads) {
    CorpusSpec corpus;
    if (corpus_exprs.empty())
        corpus = default_corpus();
    else
        corpus.exprs = corpus_exprs;
    SuiteReport rep = run_suite(corpus, ids, threads);
    return to_py(json::parse(emit_report(rep, ReportFormat::Json)));
}

py::object fixtures_py() { return to_py(json::parse(fixtures_json())); }

py::object run_fixture_py(const std::string& id) {
    auto o = run_fixture_by_id(id);
    json j = {{"id", o.id},
              {"status", o.status},
              {"witness", o.witness},
              {"detail", o.detail},
              {"matches_expected", o.matches_expected}};
    return to_py(j);
}

py::object search_py(const std::string& property, int max_order) {
    json arr = json::array();
    for (auto& h : search_counterexamples(property, default_corpus(), max_order))
        arr.push_back({{"carrier", h.carrier}, {"object", h.object}, {"detail", h.detail}});
    return to_py(arr);
}

py::object cli_py(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_execute(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-ring ideal and submodule classification workbench";

    auto base = py::register_exception<Error>(m, "RinglabError");
    py::register_exception<ParseError>(m, "RinglabParseError", base);

    m.def("ring_info", &ring_info, py::arg("expr"),
          "order, flags, units and zero divisors of a ring expression");
    m.def("classify_ideal", &classify_ideal_py, py::arg("ring"), py::arg("gens"),
          "classify the ideal generated by the given elements");
    m.def("classify_submodule", &classify_submodule_py, py::arg("ring"), py::arg("module"),
          py::arg("gens"), "classify the submodule generated by the given elements");
    m.def("canonical", [](const std::string& expr) { return format_canonical(parse_ring_expr(expr)); },
          py::arg("expr"), "canonical form of a ring expression");
    m.def("check_ids", [] { return all_check_ids(); }, "all theorem-check identifiers");
    m.def("run_suite", &run_suite_py, py::arg("ids") = std::vector<std::string>{},
          py::arg("corpus") = std::vector<std::string>{}, py::arg("threads") = 0,
          "run theorem checks and return the report");
    m.def("fixtures", &fixtures_py, "the example fixture registry");
    m.def("run_fixture", &run_fixture_py, py::arg("id"), "run one fixture by id");
    m.def("search", &search_py, py::arg("property"), py::arg("max_order") = 36,
          "search corpus objects by a flag expression");
    m.def("cli", &cli_py, py::arg("args"), "run a CLI invocation; returns (code, out, err)");
}
