#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/harness.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

TEST_CASE("default corpus contents and determinism") {
    auto c1 = default_corpus();
    auto c2 = default_corpus();
    CHECK(c1.exprs == c2.exprs);
    CHECK(c1.digest() == c2.digest());
    auto has = [&](const std::string& e) {
        return std::find(c1.exprs.begin(), c1.exprs.end(), e) != c1.exprs.end();
    };
    CHECK(has("Z12"));
    CHECK(has("dup(Z4, <2>)"));
    CHECK(has("Z2 x Z2 x Z2 x Z2"));
    CHECK(has("idz(Z4, Z2)"));
    CHECK(c1.exprs.size() > 200);
    // every expression elaborates within the corpus cap and passes the axiom
    // checker (make_ring verifies at order <= 64)
    for (auto& e : c1.exprs) {
        auto r = elaborate(parse_ring_expr(e), 64);
        CHECK(std::holds_alternative<ElabRing>(r));
        CHECK(std::get<ElabRing>(r).table->order <= 64);
    }
}

TEST_CASE("check id registry") {
    auto& ids = all_check_ids();
    CHECK(ids.size() == 34);
    for (const char* id :
         {"T_char", "C_coro", "L_max", "T_maxzd", "T_every", "P_f", "C_quotient", "P_inters",
          "P_S", "P_essential", "P_Ca2", "T_ca1", "C_cc", "L_red", "T_cchar", "L_am", "T_a1",
          "T_a2", "P_kpow_mod", "P_torsionfree", "P_eqM", "L_smith", "L_majed", "T_IM", "C_NM",
          "P_mrad", "T_IN", "P_fsub", "T_SM", "P_ide", "T_amalg", "C_dup1", "T_amalg2",
          "C_dup2"})
        CHECK(is_check_id(id));
    CHECK(!is_check_id("T_nonsense"));
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("run_check on a small corpus") {
    CorpusSpec small;
    small.exprs = {"Z12", "Z4", "Z2 x Z3", "Z2 x Z2"};
    auto r = run_check("T_char", small);
    CHECK(r.verdict.status == "proved");
    CHECK(r.verdict.hypothesis_hits > 0);
    CHECK(r.verdict.witness.empty());

    auto e = run_check("T_every", small);
    CHECK(e.verdict.status == "proved");

    CHECK_THROWS_AS(run_check("bogus", small), UsageError);
}

TEST_CASE("vacuous pass is reported distinctly") {
    CorpusSpec empty;
    empty.include_symbolic = false;
    auto r = run_check("T_cchar", empty);
    CHECK(r.verdict.status == "vacuous_pass");
    CHECK(r.verdict.hypothesis_hits == 0);
}

TEST_CASE("suite on a reduced corpus is deterministic and proved") {
    CorpusSpec small;
    small.exprs = {"Z8", "Z12", "Z2 x Z2", "Z2 x Z6", "idz(Z4, Z2)", "dup(Z4, <2>)"};
    auto rep1 = run_suite(small, {"T_char", "T_every", "P_inters", "T_ca1", "P_ide", "C_dup1"},
                          2);
    auto rep2 = run_suite(small, {"T_char", "T_every", "P_inters", "T_ca1", "P_ide", "C_dup1"},
                          1);
    REQUIRE(rep1.checks.size() == 6);
    for (size_t i = 0; i < rep1.checks.size(); ++i) {
        CHECK(rep1.checks[i].id == rep2.checks[i].id);
        CHECK(rep1.checks[i].verdict.status == rep2.checks[i].verdict.status);
        CHECK(rep1.checks[i].verdict.instances == rep2.checks[i].verdict.instances);
        CHECK(rep1.checks[i].verdict.hypothesis_hits == rep2.checks[i].verdict.hypothesis_hits);
        CHECK(rep1.checks[i].verdict.status == "proved");
    }
    CHECK(std::is_sorted(rep1.checks.begin(), rep1.checks.end(),
                         [](auto& a, auto& b) { return a.id < b.id; }));
}

TEST_CASE("report emission is stable and validates") {
    SuiteReport rep;
    rep.corpus_digest = "0123456789abcdef";
    CheckResult a;
    a.id = "T_char";
    a.anchor = "statement";
    a.verdict = {"proved", 10, 10, 0, ""};
    a.millis = 123;
    CheckResult b;
    b.id = "T_every";
    b.anchor = "statement";
    b.verdict = {"refuted", 5, 3, 1, "Z6 ideal <2>"};
    rep.checks = {a, b};

    std::string j1 = emit_report(rep, ReportFormat::Json);
    std::string j2 = emit_report(rep, ReportFormat::Json);
    CHECK(j1 == j2);
    CHECK(validate_report_json(j1).empty());
    CHECK(j1.find("\"millis\": 0") != std::string::npos);  // timings zeroed by default
    std::string jt = emit_report(rep, ReportFormat::Json, true);
    CHECK(jt.find("\"millis\": 123") != std::string::npos);

    // golden table format
    std::string table = emit_report(rep, ReportFormat::Table);
    std::string expect =
        "check            status        instances  hits     skipped\n"
        "---------------- ------------- ---------- -------- -------\n"
        "T_char           proved                10       10       0\n"
        "T_every          refuted                5        3       1\n"
        "  witness: Z6 ideal <2>\n"
        "corpus digest: 0123456789abcdef\n";
    CHECK(table == expect);

    CHECK(!validate_report_json("{}").empty());
    CHECK(!validate_report_json("not json").empty());
    std::string bad = j1;
    bad.replace(bad.find("proved"), 6, "prooed");
    CHECK(!validate_report_json(bad).empty());
}

TEST_CASE("search predicate language") {
    CorpusSpec small;
    small.exprs = {"Z12", "Z2 x Z2 x Z2"};
    small.include_symbolic = false;
    auto hits = search_counterexamples("semi_r & !semi_n", small);
    bool found = false;
    for (auto& h : hits)
        if (h.carrier == "Z12" && h.object == "<4>") found = true;
    CHECK(found);

    auto none = search_counterexamples("r & !semi_r", small);
    CHECK(none.empty());

    auto boolean = search_counterexamples("semi_r & !prime", small);
    bool z2cube = false;
    for (auto& h : boolean)
        if (h.carrier == "Z2 x Z2 x Z2") z2cube = true;
    CHECK(z2cube);

    auto subs = search_counterexamples("sub_semi_r & !sub_semiprime", small);
    CHECK(!subs.empty());

    CHECK_THROWS_AS(search_counterexamples("bogus_flag", small), UsageError);
    CHECK_THROWS_AS(search_counterexamples("semi_r & sub_r", small), UsageError);
    CHECK_THROWS_AS(search_counterexamples("semi_r & (", small), ParseError);
}

TEST_CASE("negative controls refute expected-failure statement variants") {
    // dropping the hypotheses of the quotient/product statements must refute;
    // the fixtures encode exactly those controls
    for (const char* id : {"ctrl_quotient_1", "ctrl_quotient_2", "ctrl_ca1_converse"}) {
        auto o = run_fixture_by_id(id);
        CHECK(o.status == "refuted");
        CHECK(o.matches_expected);
        CHECK(!o.witness.empty());
    }
}

TEST_CASE("empty corpus yields vacuous passes") {
    CorpusSpec empty;
    empty.include_symbolic = false;
    auto rep = run_suite(empty, {"T_char", "T_every", "P_inters", "C_dup1"}, 1);
    for (auto& c : rep.checks) {
        CHECK(c.verdict.status == "vacuous_pass");
        CHECK(c.verdict.instances == 0);
    }
}

TEST_CASE("symbolic registry objects appear in search") {
    CorpusSpec none;
    none.exprs = {};
    auto hits = search_counterexamples("semi_r & !semiprime", none);
    bool has_idz = false;
    for (auto& h : hits)
        if (h.carrier == "idz(ZZ, Z4)" && h.object == "4Z(+)Z4") has_idz = true;
    CHECK(has_idz);

    auto rhits = search_counterexamples("!semi_r", none);
    bool has_8z = false;
    for (auto& h : rhits)
        if (h.carrier == "ZZ" && h.object == "8Z") has_8z = true;
    CHECK(has_8z);

    auto shits = search_counterexamples("sub_semi_r & !sub_r", none);
    bool has_ex5 = false;
    for (auto& h : shits)
        if (h.carrier == "ZZ x ZZ over ZZ" && h.object == "<(6,0)>") has_ex5 = true;
    CHECK(has_ex5);
}

TEST_CASE("fixture registry completeness") {
    std::vector<std::string> ids;
    for (auto& rec : fixture_registry()) ids.push_back(rec.id);
    auto once = [&](const std::string& id) {
        return std::count(ids.begin(), ids.end(), id) == 1;
    };
    // each named example appears exactly once
    for (const char* id :
         {"ex1_domain_semiprime", "ex1_p2q", "ex1_zero_ideal", "ex1_boolean",
          "ex1_pr_out_of_scope", "poly_sum_x_4", "poly_square_x2", "z16_8", "z_8Z",
          "zxz_monomorphism", "ex5_1", "ex5_2", "idz_4Z_Z4"})
        CHECK(once(id));
    // the out-of-scope record is marked as such, not runnable as a proof
    for (auto& rec : fixture_registry())
        if (rec.id == "ex1_pr_out_of_scope") CHECK(rec.expected == "out_of_scope");
}

TEST_CASE("corpus file parsing") {
    std::string path = "corpus_test_tmp.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "Z6\n";
        f << "  Z8  # trailing comment\n";
        f << "\n";
        f << "dup(Z4, <2>)\n";
    }
    auto spec = corpus_from_file(path);
    REQUIRE(spec.exprs.size() == 3);
    CHECK(spec.exprs[0] == "Z6");
    CHECK(spec.exprs[1] == "Z8");
    CHECK(spec.exprs[2] == "dup(Z4, <2>)");
    std::remove(path.c_str());
    CHECK_THROWS_AS(corpus_from_file("no_such_file_anywhere.txt"), UsageError);
}
