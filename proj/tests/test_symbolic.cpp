#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringlab/symbolic.hpp"

using namespace ringlab;

namespace {
SymRing zz(int n = 1) {
    SymRing r;
    r.factors.assign(n, 0);
    r.expr = n == 1 ? "ZZ" : "ZZ^" + std::to_string(n);
    return r;
}
}  // namespace

TEST_CASE("poly arithmetic and oracles") {
    Poly f = poly({2, 1});  // 2 + x
    Poly sq = poly_mul(f, f);
    CHECK(sq.c == std::vector<long long>{4, 4, 1});
    CHECK(f.eval(0) == 2);
    CHECK(sq.eval(0) == 4);

    PolyIdeal x4{PolyIdeal::Kind::EvalMod, 4, 0, {}, "<x,4>"};
    CHECK(poly_membership(x4, sq));          // (2+x)^2 has constant term 4
    CHECK(!poly_membership(x4, f));          // 2+x has constant term 2
    CHECK(poly_membership(x4, poly({4})));   // 4
    CHECK(poly_membership(x4, poly({0, 1})));  // x

    PolyIdeal x2{PolyIdeal::Kind::MonicDiv, 0, 0, poly({0, 0, 1}), "<x^2>"};
    CHECK(poly_membership(x2, poly({0, 0, 1})));
    CHECK(poly_membership(x2, poly({0, 0, 2, 3})));
    CHECK(!poly_membership(x2, poly({0, 1})));
    CHECK(f.str() == "2+x");
    CHECK(poly({0, 0, 1}).str() == "x^2");
}

TEST_CASE("8Z in Z is not a semi r-ideal, witness 4") {
    auto I = sym_ideal(zz(), {8}, "8Z");
    auto f = sym_classify(I);
    CHECK(f.is_proper);
    CHECK(!f.is_semi_r);
    REQUIRE(f.wit_semi_r.has_value());
    CHECK((*f.wit_semi_r)[0] == 4);
    // witness validates definitionally
    SymElem w = *f.wit_semi_r;
    CHECK(sym_elem_regular(I.ring, w));
    CHECK(sym_membership(I, {w[0] * w[0]}));
    CHECK(!sym_membership(I, w));
    CHECK(!f.is_semiprime);
    CHECK(!f.is_r);
}

TEST_CASE("semiprime ideals of Z are semi r but not r") {
    auto I = sym_ideal(zz(), {6}, "6Z");
    auto f = sym_classify(I);
    CHECK(f.is_semiprime);
    CHECK(f.is_semi_r);
    CHECK(!f.is_r);
    REQUIRE(f.wit_r_a.has_value());
    // ab in I with a regular and b outside I
    CHECK((*f.wit_r_a)[0] * (*f.wit_r_b)[0] % 6 == 0);
    CHECK((*f.wit_r_b)[0] % 6 != 0);
}

TEST_CASE("zero ideal of Z") {
    auto f = sym_classify(sym_ideal(zz(), {0}, "0"));
    CHECK(f.is_semi_r);
    CHECK(f.is_semiprime);
    CHECK(f.is_r);
}

TEST_CASE("products of Z: the registry product fixtures") {
    auto f40 = sym_classify(sym_ideal(zz(2), {4, 0}, "4Zx0"));
    CHECK(f40.is_semi_r);

    auto f46 = sym_classify(sym_ideal(zz(2), {4, 6}, "4Zx6Z"));
    CHECK(!f46.is_semi_r);
    REQUIRE(f46.wit_semi_r.has_value());
    CHECK(*f46.wit_semi_r == SymElem{2, 6});

    // Z x 0 = Ann((0,1)) is a (semi) r-ideal
    auto fz0 = sym_classify(sym_ideal(zz(2), {1, 0}, "Zx0"));
    CHECK(fz0.is_r);
    CHECK(fz0.is_semi_r);

    // 4Z x Z fails exactly like 4Z
    auto f4z = sym_classify(sym_ideal(zz(2), {4, 1}, "4ZxZ"));
    CHECK(!f4z.is_semi_r);
}

TEST_CASE("mixed products with torsion factors") {
    SymRing r;
    r.factors = {8, 0};
    r.expr = "Z8 x ZZ";
    // <2> x 4Z: units of Z8 never square into <2>, so no violating element
    auto f = sym_classify(sym_ideal(r, {2, 4}, ""));
    CHECK(f.is_semi_r);
    CHECK(!f.is_semiprime);  // the Z8 component escapes without regularity
}

TEST_CASE("bounded search agrees with exact verdicts") {
    for (long long n1 = 0; n1 <= 12; ++n1)
        for (long long n2 = 0; n2 <= 12; ++n2) {
            auto I = sym_ideal(zz(2), {n1, n2}, "");
            if (!I.is_proper()) continue;
            auto f = sym_classify(I);
            auto hit = sym_bounded_semi_r_violation(I, 10);
            if (f.is_semi_r) CHECK(!hit.has_value());
            if (hit) {
                CHECK(!f.is_semi_r);
                CHECK(sym_elem_regular(I.ring, *hit));
                SymElem sq = {(*hit)[0] * (*hit)[0], (*hit)[1] * (*hit)[1]};
                CHECK(sym_membership(I, sq));
                CHECK(!sym_membership(I, *hit));
            }
            // exact refutations validate their witnesses definitionally
            if (!f.is_semi_r) {
                SymElem w = *f.wit_semi_r;
                CHECK(sym_elem_regular(I.ring, w));
                CHECK(sym_membership(I, {w[0] * w[0], w[1] * w[1]}));
                CHECK(!sym_membership(I, w));
            }
        }
}

TEST_CASE("cchar trichotomy matches the exact classifier") {
    for (long long n1 = 0; n1 <= 12; ++n1)
        for (long long n2 = 0; n2 <= 12; ++n2) {
            auto I = sym_ideal(zz(2), {n1, n2}, "");
            if (!I.is_proper()) continue;
            CHECK(cchar_trichotomy(I) == sym_classify(I).is_semi_r);
        }
    for (long long n1 : {0, 1, 2, 4, 6})
        for (long long n2 : {0, 1, 4, 9})
            for (long long n3 : {0, 1, 3, 8}) {
                auto I = sym_ideal(zz(3), {n1, n2, n3}, "");
                if (!I.is_proper()) continue;
                CHECK(cchar_trichotomy(I) == sym_classify(I).is_semi_r);
            }
}

TEST_CASE("idealization carrier Z(+)Z4") {
    SymRing r;
    r.factors = {0};
    r.idz_k = 4;
    r.expr = "idz(ZZ, Z4)";
    auto I = sym_ideal(r, {4}, "4Z(+)Z4");
    auto f = sym_classify(I);
    CHECK(f.is_proper);
    CHECK(f.is_semi_r);
    CHECK(f.is_r);
    CHECK(!f.is_semiprime);

    auto I0 = sym_ideal(r, {0}, "0(+)Z4");
    auto f0 = sym_classify(I0);
    CHECK(f0.is_semi_r);
    CHECK(f0.is_r);

    // 3Z(+)Z4: prime 3 coprime to 4, squarefree -> semi r, not r
    auto I3 = sym_classify(sym_ideal(r, {3}, ""));
    CHECK(I3.is_semi_r);
    CHECK(!I3.is_r);

    // 8Z(+)Z4 stays semi r because rad(8)=2 divides 4
    auto I8 = sym_classify(sym_ideal(r, {8}, ""));
    CHECK(I8.is_semi_r);

    // bounded search agreement on the idealization carrier
    CHECK(!sym_bounded_semi_r_violation(I, 10).has_value());
    CHECK(!sym_bounded_semi_r_violation(I0, 10).has_value());
}

TEST_CASE("lattice membership") {
    FGZModule z2m{{0, 0}, "ZZ x ZZ"};
    auto n6 = make_lattice_submodule(z2m, {{6, 0}}, "6Zx0");
    CHECK(lattice_membership(n6, {12, 0}));
    CHECK(!lattice_membership(n6, {6, 1}));
    CHECK(!lattice_membership(n6, {3, 0}));

    auto diag = make_lattice_submodule(z2m, {{2, 1}}, "<(2,1)>");
    CHECK(lattice_membership(diag, {2, 1}));
    CHECK(!lattice_membership(diag, {6, 2}));
    CHECK(lattice_membership(diag, {6, 3}));

    auto grid = make_lattice_submodule(z2m, {{2, 0}, {0, 2}}, "");
    CHECK(lattice_membership(grid, {2, 2}));
    CHECK(!lattice_membership(grid, {1, 2}));
}

TEST_CASE("lattice normal form canonicity") {
    FGZModule z2m{{0, 0}, "ZZ x ZZ"};
    auto a = make_lattice_submodule(z2m, {{6, 0}, {12, 0}, {18, 0}}, "");
    auto b = make_lattice_submodule(z2m, {{6, 0}}, "");
    CHECK(a.hnf == b.hnf);
    auto c = make_lattice_submodule(z2m, {{2, 1}, {0, 3}}, "");
    auto d = make_lattice_submodule(z2m, {{2, 4}, {2, 1}}, "");
    CHECK(c.hnf == d.hnf);
    FGZModule z8z{{8, 0}, "Z8 x ZZ"};
    auto e = make_lattice_submodule(z8z, {{4, 0}, {12, 0}}, "");
    auto f = make_lattice_submodule(z8z, {{4, 0}}, "");
    CHECK(e.hnf == f.hnf);
}

TEST_CASE("ex5(1): 6Z x 0 in Z x Z") {
    FGZModule m{{0, 0}, "ZZ x ZZ"};
    auto n = make_lattice_submodule(m, {{6, 0}}, "6Zx0");
    auto f = sym_classify_submodule(n);
    CHECK(f.is_proper);
    CHECK(f.is_semi_r);
    CHECK(!f.is_r);
    REQUIRE(f.wit_r.has_value());
    CHECK(f.wit_r->r == 2);
    CHECK(f.wit_r->m == std::vector<long long>{3, 0});
    CHECK(!f.is_sr_intro);
    CHECK(f.wit_sr_intro->r == 2);
    CHECK(f.wit_sr_intro->m == std::vector<long long>{3, 0});
    CHECK(f.satisfies_D);
    CHECK(f.d_exact);
    CHECK(f.is_semiprime);  // 6 squarefree, zero subgroup on a free factor
}

TEST_CASE("ex5(2): <4> x 0 in Z8 x Z") {
    FGZModule m{{8, 0}, "Z8 x ZZ"};
    auto n = make_lattice_submodule(m, {{4, 0}}, "<4>x0");
    auto f = sym_classify_submodule(n);
    CHECK(f.is_semi_r);
    CHECK(!f.is_semiprime);
    REQUIRE(f.wit_semiprime.has_value());
    CHECK(f.wit_semiprime->r == 2);
    CHECK(f.wit_semiprime->m == std::vector<long long>{1, 0});
}

TEST_CASE("torsion-free coincidence: semi_r equals semiprime") {
    FGZModule z{{0}, "ZZ"};
    for (long long n : {0, 1, 2, 4, 6, 8, 9, 12}) {
        auto N = make_lattice_submodule(z, {{n}}, "");
        if (!lattice_is_proper(N)) continue;
        auto f = sym_classify_submodule(N);
        CHECK(f.is_semi_r == f.is_semiprime);
    }
    FGZModule z2{{0, 0}, "ZZ x ZZ"};
    for (long long n1 : {0, 4, 6})
        for (long long n2 : {0, 1, 9}) {
            auto N = make_lattice_submodule(z2, {{n1, 0}, {0, n2}}, "");
            if (!lattice_is_proper(N)) continue;
            auto f = sym_classify_submodule(N);
            CHECK(f.is_semi_r == f.is_semiprime);
        }
}

TEST_CASE("submodule witnesses validate and bounded search agrees") {
    std::vector<std::pair<FGZModule, std::vector<long long>>> cases = {
        {{{0, 0}, "ZxZ"}, {6, 0}},   {{{0, 0}, "ZxZ"}, {4, 0}},  {{{0, 0}, "ZxZ"}, {12, 2}},
        {{{8, 0}, "Z8xZ"}, {4, 0}},  {{{8, 0}, "Z8xZ"}, {2, 3}}, {{{12}, "Z12"}, {4}},
        {{{0}, "Z"}, {9}},           {{{0}, "Z"}, {0}},
    };
    for (auto& [mod, diag] : cases) {
        std::vector<std::vector<long long>> gens;
        for (size_t i = 0; i < diag.size(); ++i) {
            std::vector<long long> g(diag.size(), 0);
            g[i] = diag[i];
            gens.push_back(g);
        }
        auto N = make_lattice_submodule(mod, gens, "");
        if (!lattice_is_proper(N)) continue;
        auto f = sym_classify_submodule(N);
        for (auto& [flag, val, wit] :
             std::vector<std::tuple<std::string, bool, std::optional<SymModWitness>>>{
                 {"semiprime", f.is_semiprime, f.wit_semiprime},
                 {"semi_r", f.is_semi_r, f.wit_semi_r},
                 {"r", f.is_r, f.wit_r},
                 {"sr_intro", f.is_sr_intro, f.wit_sr_intro},
                 {"sr_alt", f.is_sr_alt, f.wit_sr_alt}}) {
            auto hit = sym_bounded_submodule_violation(N, flag, 8);
            if (val) {
                CHECK_MESSAGE(!hit.has_value(), flag, " on ", mod.expr);
            } else {
                REQUIRE_MESSAGE(wit.has_value(), flag, " needs a witness");
            }
        }
    }
}

TEST_CASE("product form detection") {
    FGZModule m{{0, 0}, "ZxZ"};
    CHECK(lattice_product_form(make_lattice_submodule(m, {{6, 0}}, "")).has_value());
    CHECK(!lattice_product_form(make_lattice_submodule(m, {{2, 1}}, "")).has_value());
    auto pf = lattice_product_form(make_lattice_submodule(m, {{6, 0}, {0, 4}}, ""));
    REQUIRE(pf.has_value());
    CHECK(*pf == std::vector<long long>{6, 4});
}

TEST_CASE("symbolic membership examples") {
    auto I8 = sym_ideal(zz(), {8}, "8Z");
    CHECK(!sym_membership(I8, {4}));
    CHECK(sym_membership(I8, {16}));
    CHECK(sym_membership(I8, {-8}));

    auto I60 = sym_ideal(zz(2), {6, 0}, "6Zx0");
    CHECK(sym_membership(I60, {12, 0}));
    CHECK(!sym_membership(I60, {12, 1}));

    SymRing z8z;
    z8z.factors = {8, 0};
    auto mixed = sym_ideal(z8z, {4, 6}, "");
    CHECK(sym_membership(mixed, {4, 6}));
    CHECK(sym_membership(mixed, {12, -6}));  // 12 = 4 mod 8
    CHECK(!sym_membership(mixed, {2, 6}));
    CHECK_THROWS_AS(sym_membership(mixed, {1, 2, 3}), UsageError);
}

TEST_CASE("lattice canonicity under randomized respanning") {
    std::mt19937 rng(987654);
    auto rnd = [&](long long m) { return static_cast<long long>(rng() % (2 * m + 1)) - m; };
    for (int trial = 0; trial < 200; ++trial) {
        FGZModule mod;
        int rows = 1 + static_cast<int>(rng() % 3);
        for (int r = 0; r < rows; ++r)
            mod.inv.push_back(rng() % 2 ? 0 : 2 + static_cast<long long>(rng() % 11));
        std::vector<std::vector<long long>> gens;
        int g = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < g; ++i) {
            std::vector<long long> col(rows);
            for (int r = 0; r < rows; ++r) col[r] = rnd(9);
            gens.push_back(col);
        }
        auto N = make_lattice_submodule(mod, gens);
        // respan: integer combinations of the originals plus relation shifts
        std::vector<std::vector<long long>> gens2;
        for (int i = 0; i < g; ++i) {
            std::vector<long long> col(rows, 0);
            for (int k = 0; k < g; ++k) {
                long long c = rnd(2);
                if (i == k && c == 0) c = 1;  // keep the span
                for (int r = 0; r < rows; ++r) col[r] += c * gens[k][r];
            }
            for (int r = 0; r < rows; ++r)
                if (mod.inv[r] != 0) col[r] += mod.inv[r] * rnd(2);
            gens2.push_back(col);
        }
        // adding redundant combinations must not change the normal form when
        // the span is preserved; verify by mutual membership instead of
        // trusting construction
        auto N2 = make_lattice_submodule(mod, gens2);
        bool same_span = true;
        for (auto& c : gens)
            if (!lattice_membership(N2, c)) same_span = false;
        for (auto& c : gens2)
            if (!lattice_membership(N, c)) same_span = false;
        if (same_span) {
            CHECK(N.hnf == N2.hnf);
            CHECK(N.pivot == N2.pivot);
        }
    }
}
