#include "ringlab/fixtures.hpp"

#include <json.hpp>

#include "ringlab/dsl.hpp"

namespace ringlab {

namespace {

const std::vector<FixtureRecord> kRegistry = {
    {"ex1_domain_semiprime", "ZZ", "6Z", "semi_r & !r", "proved", "",
     "a nonzero radical ideal of a domain: a^2 in 6Z with a != 0 forces a in 6Z, while 2*3 in 6Z "
     "with 2 regular and 3 outside shows the r-property fails"},
    {"ex1_p2q", "Z12", "<4>", "semi_r & !semi_n & !semiprime", "proved", "a=2",
     "in Z_{p^2 q} with p=2, q=3 the ideal <p^2> satisfies the semi-r condition but 2^2 in <4> "
     "with 2 not nilpotent and 2 outside <4> breaks the semi-n and semiprime conditions"},
    {"ex1_zero_ideal", "Z4", "<0>", "semi_r & !semiprime", "proved", "a=2",
     "the zero ideal is always semi-r; it is semiprime only when the ring has no nonzero "
     "nilpotents (2^2 = 0 in Z4)"},
    {"ex1_boolean", "Z2 x Z2 x Z2", "<(0,0,1)>", "semi_r & !prime & all ideals semi_r", "proved",
     "(1,0,0)*(0,1,1)",
     "every ideal of a Boolean ring is semi-r; 0 x 0 x Z2 is semi-r but not prime since "
     "(1,0,0)(0,1,1) = 0 lies in it while neither factor does"},
    {"ex1_pr_out_of_scope", "polyfix:zx", "x^2 P[x] inside Z + x T[x]", "pr & !semi_r",
     "out_of_scope", "",
     "pr-ideals and semi-r-ideals are incomparable in general; the witness ring Z + xT[x] over a "
     "reduced overring with a minimal prime is not representable in this workbench"},
    {"poly_sum_x_4", "polyfix:zx", "<x,4>", "semi_r", "refuted", "2+x",
     "(2+x)^2 = 4+4x+x^2 lies in <x,4>, 2+x is a nonzero element of a domain, yet 2+x is not in "
     "<x,4>: the sum of two semi-r ideals <x> and <x-4> need not be semi-r"},
    {"poly_square_x2", "polyfix:zx", "<x^2>", "semi_r", "refuted", "x",
     "x^2 lies in <x>^2 = <x^2>, x is regular, x is not in <x^2>: the product of semi-r ideals "
     "need not be semi-r"},
    {"z16_8", "Z16", "<8>", "semi_r", "proved", "",
     "the image 8Z/16Z is a semi-r ideal of Z/16Z: every element squaring into <8> is a zero "
     "divisor there"},
    {"z_8Z", "ZZ", "8Z", "semi_r", "refuted", "4",
     "4^2 = 16 lies in 8Z, 4 is regular in Z, but 4 is not in 8Z"},
    {"zxz_monomorphism", "ZZ x ZZ", "Z x 0", "r & semi_r & trace on the first-factor copy of Z is improper",
     "proved", "",
     "Z x 0 annihilates (0,1) and is a (semi) r-ideal of Z x Z, but its intersection with the "
     "subring Z x 0 (the image of x -> (x,0)) is the whole subring, hence not a proper ideal "
     "there"},
    {"zxz_4x0", "ZZ x ZZ", "4Z x 0", "semi_r", "proved", "",
     "4Z x 0 is semi-r in Z x Z because any element with square in it has zero second coordinate "
     "and is therefore a zero divisor"},
    {"zxz_4x6", "ZZ x ZZ", "4Z x 6Z", "semi_r", "refuted", "(2,6)",
     "(2,6)^2 = (4,36) lies in 4Z x 6Z, (2,6) has both coordinates nonzero, but (2,6) is not in "
     "4Z x 6Z"},
    {"idz_4Z_Z4", "idz(ZZ, Z4)", "4Z(+)Z4", "r & semi_r & base 4Z not semi_r", "proved", "",
     "in Z(+)Z4 any (a,m) with (a,m)^2 in 4Z(+)Z4 has a^2 in 4Z, hence a even and (a,m) a zero "
     "divisor, so 4Z(+)Z4 is a (semi) r-ideal even though 4Z itself is not semi-r in Z"},
    {"ctrl_quotient_1", "idz(ZZ, Z4)", "4Z(+)Z4 modulo 0(+)Z4", "quotient preserves semi_r without the zd hypothesis",
     "refuted", "2",
     "4Z(+)Z4 is semi-r in Z(+)Z4 and meets the zero divisors nontrivially (e.g. (0,1)); its "
     "image 4Z in Z(+)Z4 / 0(+)Z4 = Z is not semi-r, so dropping the I cap zd(R) = 0 hypothesis "
     "breaks the quotient statement"},
    {"ctrl_quotient_2", "Z16", "<8> versus 8Z", "quotient lifts semi_r without the r-ideal hypothesis",
     "refuted", "4",
     "8Z/16Z is semi-r in Z/16Z but 8Z is not semi-r in Z (witness 4); 16Z is not an r-ideal of "
     "Z, so that hypothesis in the lifting statement is essential"},
    {"ctrl_ca1_converse", "ZZ x ZZ", "4Z x 0", "semi_r product forces semi_r factors", "refuted",
     "2",
     "4Z x 0 is semi-r in Z x Z while the factor 4Z is not semi-r in Z (witness 4): the converse "
     "of the product statement fails"},
    {"ex5_1", "ZZ x ZZ", "N = 6Z x 0", "semi_r & !r & !sr", "proved", "(2,(3,0))",
     "6Z x 0 is a semi-r submodule of the Z-module Z x Z; 2*(3,0) lies in N with 2 acting "
     "injectively and (3,0) of infinite order, yet (3,0) is not in N and 2 is not in (N:M), so N "
     "is neither an r-submodule nor an sr-submodule"},
    {"ex5_2", "Z8 x ZZ", "N = <4> x 0", "semi_r & !semiprime", "proved", "(2,(1,0))",
     "<4> x 0 is a semi-r submodule of the Z-module Z8 x Z, but 2^2*(1,0) lies in N while "
     "2*(1,0) does not, so N is not semiprime"},
    {"d_cond_Zn", "Z12", "<4> as a Z-submodule", "d_annihilator", "proved", "",
     "every proper submodule of the Z-module Z_n satisfies the D-annihilator condition: a scalar "
     "with zero annihilator acts invertibly on Z_n"},
    {"d_cond_ZxZ", "ZZ x ZZ", "6Z x 0", "d_annihilator", "proved", "",
     "every proper submodule of a torsion-free module satisfies the D-annihilator condition "
     "since K meets T(M) = 0 trivially"},
    {"torsionfree_Z", "ZZ", "0 in the Z-module Z", "semi_r == semiprime", "proved", "",
     "on a torsion-free module the semi-r and semiprime submodule conditions coincide"},
};

FixtureOutcome outcome(const FixtureRecord& rec, bool ok, const std::string& status,
                       const std::string& witness, const std::string& detail) {
    FixtureOutcome o;
    o.id = rec.id;
    o.status = status;
    o.witness = witness;
    o.detail = detail;
    o.matches_expected = ok;
    return o;
}

FixtureOutcome proved_if(const FixtureRecord& rec, bool holds, const std::string& detail,
                         const std::string& witness = "") {
    std::string status = holds ? "proved" : "error";
    bool ok = holds && rec.expected == "proved";
    FixtureOutcome o = outcome(rec, ok, status, witness.empty() ? rec.witness : witness, detail);
    return o;
}

FixtureOutcome refuted_if(const FixtureRecord& rec, bool refutes, const std::string& witness,
                          const std::string& detail) {
    std::string status = refutes ? "refuted" : "error";
    bool ok = refutes && rec.expected == "refuted" && witness == rec.witness;
    return outcome(rec, ok, status, witness, detail);
}

SymRing zz(int n) {
    SymRing r;
    r.factors.assign(n, 0);
    r.expr = n == 1 ? "ZZ" : "ZZ x ZZ";
    return r;
}

FixtureOutcome run_impl(const FixtureRecord& rec) {
    const std::string& id = rec.id;
    if (id == "ex1_domain_semiprime") {
        auto f = sym_classify(sym_ideal(zz(1), {6}, "6Z"));
        return proved_if(rec, f.is_semi_r && f.is_semiprime && !f.is_r,
                         "6Z semi_r and semiprime, not r");
    }
    if (id == "ex1_p2q") {
        auto R = build_zn(12);
        auto f = classify_ideal(generate_ideal(R, {4}));
        bool ok = f.is_semi_r && !f.is_semi_n && !f.is_semiprime && f.wit_semi_n &&
                  f.wit_semi_n->a == 2;
        return proved_if(rec, ok, "<4> in Z12: semi_r, not semi_n (a=2), not semiprime");
    }
    if (id == "ex1_zero_ideal") {
        auto R = build_zn(4);
        auto f = classify_ideal(generate_ideal(R, {}));
        return proved_if(rec, f.is_semi_r && !f.is_semiprime && f.wit_semiprime->a == 2,
                         "<0> in Z4: semi_r, not semiprime (a=2)");
    }
    if (id == "ex1_boolean") {
        auto e = elaborate_table(parse_ring_expr("Z2 x Z2 x Z2"));
        bool all_semi = true;
        for (auto& I : all_ideals(e.table))
            if (I.is_proper() && !classify_ideal(I).is_semi_r) all_semi = false;
        auto f = classify_ideal(generate_ideal(e.table, {1}));
        return proved_if(rec, all_semi && f.is_semi_r && !f.is_prime,
                         "all ideals of the Boolean ring semi_r; 0x0xZ2 semi_r, not prime");
    }
    if (id == "ex1_pr_out_of_scope")
        return outcome(rec, rec.expected == "out_of_scope", "out_of_scope", "",
                       "carrier ring not representable; excluded by design");
    if (id == "poly_sum_x_4") {
        PolyIdeal I{PolyIdeal::Kind::EvalMod, 4, 0, {}, "<x,4>"};
        Poly w = poly({2, 1});
        bool refutes = poly_membership(I, poly_mul(w, w)) && !w.is_zero() &&
                       !poly_membership(I, w);
        return refuted_if(rec, refutes, w.str(), "(2+x)^2 in <x,4>, Ann(2+x)=0, 2+x outside");
    }
    if (id == "poly_square_x2") {
        PolyIdeal I{PolyIdeal::Kind::MonicDiv, 0, 0, poly({0, 0, 1}), "<x^2>"};
        Poly w = poly({0, 1});
        bool refutes = poly_membership(I, poly_mul(w, w)) && !w.is_zero() &&
                       !poly_membership(I, w);
        return refuted_if(rec, refutes, w.str(), "x^2 in <x^2>, Ann(x)=0, x outside");
    }
    if (id == "z16_8") {
        auto R = build_zn(16);
        auto f = classify_ideal(generate_ideal(R, {8}));
        return proved_if(rec, f.is_semi_r, "<8> semi_r in Z16");
    }
    if (id == "z_8Z") {
        auto f = sym_classify(sym_ideal(zz(1), {8}, "8Z"));
        bool refutes = !f.is_semi_r && f.wit_semi_r;
        std::string w = refutes ? std::to_string((*f.wit_semi_r)[0]) : "";
        return refuted_if(rec, refutes, w, "4^2 in 8Z, 4 regular, 4 outside 8Z");
    }
    if (id == "zxz_monomorphism") {
        auto J = sym_ideal(zz(2), {1, 0}, "Zx0");
        auto f = sym_classify(J);
        // the subring copy of Z is {(x,0)}; J contains its unity (1,0) and
        // with it every (x,0), so the trace J cap R is the whole subring
        bool trace_improper = sym_membership(J, SymElem{1, 0});
        for (long long x = -4; x <= 4 && trace_improper; ++x)
            trace_improper = sym_membership(J, SymElem{x, 0});
        return proved_if(rec, f.is_r && f.is_semi_r && trace_improper,
                         "J = Ann((0,1)) = Z x 0 is (semi) r; J meets the subring copy of Z in "
                         "the whole subring");
    }
    if (id == "zxz_4x0") {
        auto f = sym_classify(sym_ideal(zz(2), {4, 0}, "4Zx0"));
        return proved_if(rec, f.is_semi_r, "4Z x 0 semi_r in Z x Z");
    }
    if (id == "zxz_4x6") {
        auto f = sym_classify(sym_ideal(zz(2), {4, 6}, "4Zx6Z"));
        bool refutes = !f.is_semi_r && f.wit_semi_r && *f.wit_semi_r == SymElem{2, 6};
        return refuted_if(rec, refutes, "(2,6)", "(2,6)^2 in 4Zx6Z, (2,6) regular, outside");
    }
    if (id == "idz_4Z_Z4") {
        SymRing r = zz(1);
        r.idz_k = 4;
        r.expr = "idz(ZZ, Z4)";
        auto f = sym_classify(sym_ideal(r, {4}, "4Z(+)Z4"));
        auto base = sym_classify(sym_ideal(zz(1), {4}, "4Z"));
        return proved_if(rec, f.is_r && f.is_semi_r && !base.is_semi_r,
                         "4Z(+)Z4 is a (semi) r-ideal while 4Z is not semi_r in Z");
    }
    if (id == "ctrl_quotient_1") {
        SymRing r = zz(1);
        r.idz_k = 4;
        r.expr = "idz(ZZ, Z4)";
        auto f = sym_classify(sym_ideal(r, {4}, "4Z(+)Z4"));
        // I meets zd(R(+)M): (0,1) lies in I and in the zero divisors
        bool meets_zd = !sym_elem_regular(r, SymElem{0, 1});
        auto image = sym_classify(sym_ideal(zz(1), {4}, "4Z"));
        bool refutes = f.is_semi_r && meets_zd && !image.is_semi_r && image.wit_semi_r;
        std::string w = refutes ? std::to_string((*image.wit_semi_r)[0]) : "";
        return refuted_if(rec, refutes, w,
                          "I semi_r, I meets zd nontrivially, image 4Z in Z not semi_r");
    }
    if (id == "ctrl_quotient_2") {
        auto R = build_zn(16);
        auto small = classify_ideal(generate_ideal(R, {8}));
        auto base = sym_classify(sym_ideal(zz(1), {8}, "8Z"));
        auto kernel = sym_classify(sym_ideal(zz(1), {16}, "16Z"));
        bool refutes = small.is_semi_r && !base.is_semi_r && !kernel.is_r && base.wit_semi_r;
        std::string w = refutes ? std::to_string((*base.wit_semi_r)[0]) : "";
        return refuted_if(rec, refutes, w,
                          "8Z/16Z semi_r in Z16, 16Z not an r-ideal of Z, 8Z not semi_r");
    }
    if (id == "ctrl_ca1_converse") {
        auto prod = sym_classify(sym_ideal(zz(2), {4, 0}, "4Zx0"));
        auto factor = sym_classify(sym_ideal(zz(1), {4}, "4Z"));
        bool refutes = prod.is_semi_r && !factor.is_semi_r && factor.wit_semi_r;
        std::string w = refutes ? std::to_string((*factor.wit_semi_r)[0]) : "";
        return refuted_if(rec, refutes, w, "4Zx0 semi_r but its factor 4Z is not");
    }
    if (id == "ex5_1") {
        FGZModule m{{0, 0}, "ZZ x ZZ"};
        auto N = make_lattice_submodule(m, {{6, 0}}, "6Zx0");
        auto f = sym_classify_submodule(N);
        // validate the stored witness (2,(3,0)) against the definitions
        bool wit_ok = lattice_membership(N, {6, 0}) && !lattice_membership(N, {3, 0});
        // Ann_M(2)=0 and Ann_Z((3,0))=0 in a torsion-free module; 2 not in (N:M)=0
        bool flags_ok = f.is_semi_r && !f.is_r && !f.is_sr_intro;
        return proved_if(rec, wit_ok && flags_ok,
                         "semi_r holds; (2,(3,0)) violates both the r and sr conditions");
    }
    if (id == "ex5_2") {
        FGZModule m{{8, 0}, "Z8 x ZZ"};
        auto N = make_lattice_submodule(m, {{4, 0}}, "<4>x0");
        auto f = sym_classify_submodule(N);
        bool wit_ok = lattice_membership(N, {4, 0}) && !lattice_membership(N, {2, 0});
        return proved_if(rec, wit_ok && f.is_semi_r && !f.is_semiprime,
                         "semi_r holds; 2^2*(1,0) in N while 2*(1,0) is not");
    }
    if (id == "d_cond_Zn") {
        FGZModule m{{12}, "Z12"};
        auto N = make_lattice_submodule(m, {{4}}, "<4>");
        auto f = sym_classify_submodule(N);
        return proved_if(rec, f.satisfies_D && f.d_exact, "all-torsion rule applies");
    }
    if (id == "d_cond_ZxZ") {
        FGZModule m{{0, 0}, "ZZ x ZZ"};
        auto N = make_lattice_submodule(m, {{6, 0}}, "6Zx0");
        auto f = sym_classify_submodule(N);
        return proved_if(rec, f.satisfies_D && f.d_exact, "torsion-free rule applies");
    }
    if (id == "torsionfree_Z") {
        FGZModule m{{0}, "ZZ"};
        auto N = make_lattice_submodule(m, {{0}}, "0");
        auto f = sym_classify_submodule(N);
        return proved_if(rec, f.is_semi_r && f.is_semiprime && f.is_semi_r == f.is_semiprime,
                         "0 is semi_r and semiprime; the flags coincide");
    }
    return outcome(rec, false, "error", "", "no runner for fixture id");
}

}  // namespace

const std::vector<FixtureRecord>& fixture_registry() { return kRegistry; }

FixtureOutcome run_fixture(const FixtureRecord& rec) {
    try {
        return run_impl(rec);
    } catch (const std::exception& e) {
        return outcome(rec, false, "error", "", e.what());
    }
}

FixtureOutcome run_fixture_by_id(const std::string& id) {
    for (auto& rec : kRegistry)
        if (rec.id == id) return run_fixture(rec);
    throw UsageError("unknown fixture id: " + id);
}

std::string fixtures_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& rec : kRegistry) {
        nlohmann::json r;
        r["id"] = rec.id;
        r["carrier"] = rec.carrier;
        r["object"] = rec.object;
        r["predicate"] = rec.predicate;
        r["expected"] = rec.expected;
        r["witness"] = rec.witness;
        r["anchor"] = rec.anchor;
        arr.push_back(r);
    }
    return arr.dump(2) + "\n";
}

}  // namespace ringlab
