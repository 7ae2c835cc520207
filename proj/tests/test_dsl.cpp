#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringlab/dsl.hpp"

using namespace ringlab;

TEST_CASE("parse basics") {
    auto e = parse_ring_expr("Z12");
    CHECK(e.kind == RingExpr::Kind::ZMod);
    CHECK(e.n == 12);

    auto p = parse_ring_expr("Z2 x Z2 x Z2");
    CHECK(p.kind == RingExpr::Kind::Prod);
    CHECK(p.children.size() == 3);

    auto d = parse_ring_expr("dup(Z4, <2>)");
    CHECK(d.kind == RingExpr::Kind::Dup);
    CHECK(d.children[0].n == 4);
    REQUIRE(d.gens.size() == 1);
    CHECK(d.gens[0].value == 2);

    CHECK(parse_ring_expr("ZZ").kind == RingExpr::Kind::ZZ);
    CHECK(parse_ring_expr("polyfix:zx").ident == "zx");

    auto a = parse_ring_expr("amal(Z4, Z4, id, <2>)");
    CHECK(a.hom == "id");
    auto q = parse_ring_expr("quot(Z16, <8>)");
    CHECK(q.gens.size() == 1);
    auto t = parse_ring_expr("quot(Z2 x Z4, <(0,2)>)");
    CHECK(t.children[0].kind == RingExpr::Kind::Prod);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_ring_expr("Zx"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("dup(Z4 <2>)"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Z12 junk"), ParseError);
    try {
        parse_ring_expr("dup(Z4, 2)");
        CHECK(false);
    } catch (const ParseError& pe) {
        CHECK(pe.offset <= std::string("dup(Z4, 2)").size());
        CHECK(!pe.expected.empty());
    }
}

TEST_CASE("format canonical examples") {
    CHECK(format_canonical(parse_ring_expr("Z2 x Z3")) == "Z2 x Z3");
    CHECK(format_canonical(parse_ring_expr("quot( Z12 ,<4> )")) == "quot(Z12, <4>)");
    CHECK(format_canonical(parse_ring_expr("amal(Z4,Z4,id,<2>)")) == "amal(Z4, Z4, id, <2>)");
    CHECK(format_canonical(parse_ring_expr("idz(Z4, Z2)")) == "idz(Z4, Z2)");
}

namespace {

RingExpr gen_expr(std::mt19937& rng, int depth);

ElemLit gen_lit(std::mt19937& rng, int arity) {
    ElemLit l;
    if (arity <= 1) {
        l.value = rng() % 7;
        return l;
    }
    l.is_tuple = true;
    for (int i = 0; i < arity; ++i) l.parts.push_back(gen_lit(rng, 1));
    return l;
}

RingExpr gen_leaf(std::mt19937& rng) {
    RingExpr e;
    e.kind = RingExpr::Kind::ZMod;
    e.n = 2 + static_cast<int>(rng() % 10);
    return e;
}

RingExpr gen_expr(std::mt19937& rng, int depth) {
    int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 8);
    switch (pick) {
        case 0:
        default:
            return gen_leaf(rng);
        case 1: {
            RingExpr e;
            e.kind = RingExpr::Kind::Prod;
            int k = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < k; ++i) e.children.push_back(gen_leaf(rng));
            return e;
        }
        case 2: {
            RingExpr e;
            e.kind = RingExpr::Kind::Quot;
            e.children.push_back(gen_expr(rng, depth - 1));
            e.gens.push_back(gen_lit(rng, 1));
            return e;
        }
        case 3: {
            RingExpr e;
            e.kind = RingExpr::Kind::Dup;
            e.children.push_back(gen_expr(rng, depth - 1));
            e.gens.push_back(gen_lit(rng, 1));
            e.gens.push_back(gen_lit(rng, 1));
            return e;
        }
        case 4: {
            RingExpr e;
            e.kind = RingExpr::Kind::Amal;
            e.children.push_back(gen_expr(rng, depth - 1));
            e.children.push_back(gen_expr(rng, depth - 1));
            e.hom = rng() % 2 ? "id" : "hom#" + std::to_string(rng() % 4);
            e.gens.push_back(gen_lit(rng, rng() % 2 ? 1 : 2));
            return e;
        }
        case 5: {
            RingExpr e;
            e.kind = RingExpr::Kind::Idz;
            e.children.push_back(gen_leaf(rng));
            e.mod.kind = ModExpr::Kind::Cyclic;
            e.mod.d = 2 + static_cast<int>(rng() % 4);
            return e;
        }
        case 6: {
            RingExpr e;
            e.kind = RingExpr::Kind::Loc;
            e.children.push_back(gen_expr(rng, depth - 1));
            e.gens.push_back(gen_lit(rng, 1));
            return e;
        }
        case 7: {
            RingExpr e;
            e.kind = rng() % 2 ? RingExpr::Kind::ZZ : RingExpr::Kind::PolyFix;
            if (e.kind == RingExpr::Kind::PolyFix) e.ident = "zx";
            return e;
        }
    }
}

}  // namespace

TEST_CASE("round trip on 1000 generated ASTs") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        RingExpr e = gen_expr(rng, 3);
        std::string s = format_canonical(e);
        RingExpr back = parse_ring_expr(s);
        CHECK(back == e);
        CHECK(format_canonical(back) == s);
    }
}

TEST_CASE("elaboration of table expressions") {
    auto q = elaborate_table(parse_ring_expr("quot(Z16, <8>)"));
    CHECK(q.table->order == 8);
    auto idz = elaborate_table(parse_ring_expr("idz(Z2, Z2)"));
    CHECK(idz.table->order == 4);
    CHECK(nilradical_set(*idz.table).count() == 2);
    auto dup = elaborate_table(parse_ring_expr("dup(Z4, <2>)"));
    CHECK(dup.table->order == 8);
    auto loc = elaborate_table(parse_ring_expr("loc(Z12, <4>)"));
    CHECK(loc.table->order == 3);
    CHECK_THROWS_AS(elaborate_table(parse_ring_expr("Z1")), Error);
    CHECK_THROWS_AS(elaborate_table(parse_ring_expr("Z100"), 64), CapacityError);
}

TEST_CASE("elaboration determinism") {
    for (const char* txt : {"Z12", "Z2 x Z6", "dup(Z4, <2>)", "idz(Z4, Z2)", "quot(Z16, <8>)"}) {
        auto a = elaborate_table(parse_ring_expr(txt));
        auto b = elaborate_table(parse_ring_expr(txt));
        CHECK(a.table->add == b.table->add);
        CHECK(a.table->mul == b.table->mul);
        CHECK(a.table->names == b.table->names);
        CHECK(verify_ring_axioms(*a.table).empty());
    }
}

TEST_CASE("symbolic elaboration") {
    auto r = elaborate(parse_ring_expr("ZZ"));
    REQUIRE(std::holds_alternative<SymRing>(r));
    CHECK(std::get<SymRing>(r).factors == std::vector<long long>{0});

    auto p = elaborate(parse_ring_expr("ZZ x ZZ"));
    CHECK(std::get<SymRing>(p).factors.size() == 2);

    auto zi = elaborate(parse_ring_expr("idz(ZZ, Z4)"));
    CHECK(std::get<SymRing>(zi).idz_k == 4);

    auto mix = elaborate(parse_ring_expr("Z8 x ZZ"));
    CHECK(std::get<SymRing>(mix).factors == std::vector<long long>{8, 0});
}

TEST_CASE("literal resolution") {
    auto prod = elaborate_table(parse_ring_expr("Z2 x Z2 x Z2"));
    ElemLit t;
    t.is_tuple = true;
    for (long long v : {0, 0, 1}) {
        ElemLit p;
        p.value = v;
        t.parts.push_back(p);
    }
    CHECK(prod.resolve(t) == 1);
    ElemLit bad;
    bad.value = 9;
    CHECK_THROWS_AS(prod.resolve(bad), Error);

    auto dup = elaborate_table(parse_ring_expr("dup(Z4, <2>)"));
    ElemLit pr;
    pr.is_tuple = true;
    pr.parts.resize(2);
    pr.parts[0].value = 1;
    pr.parts[1].value = 3;  // (1, 1+2)
    CHECK_NOTHROW(dup.resolve(pr));
    pr.parts[1].value = 2;  // (1,2): 2-1=1 not in J
    CHECK_THROWS_AS(dup.resolve(pr), Error);
}

TEST_CASE("module elaboration") {
    auto z12 = elaborate_table(parse_ring_expr("Z12"));
    auto m = elaborate_module(z12, parse_mod_expr("Z4"));
    CHECK(m.table->order == 4);
    auto s = elaborate_module(z12, parse_mod_expr("self"));
    CHECK(s.table->order == 12);
    auto fg = elaborate_sym_module(parse_mod_expr("Z8 x ZZ"));
    CHECK(fg.inv == std::vector<long long>{8, 0});
}

TEST_CASE("hom#k elaboration") {
    auto a = elaborate_table(parse_ring_expr("amal(Z6, Z2, hom#0, <0>)"));
    CHECK(a.table->order == 6);  // |R1| * |J| with J = 0
    auto b = elaborate_table(parse_ring_expr("amal(Z6, Z2, hom#0, <1>)"));
    CHECK(b.table->order == 12);
    CHECK_THROWS_AS(elaborate_table(parse_ring_expr("amal(Z6, Z2, hom#1, <0>)")), Error);
    CHECK_THROWS_AS(elaborate_table(parse_ring_expr("amal(Z2, Z6, hom#0, <0>)")), Error);
    // 'id' needs identical rings
    CHECK_THROWS_AS(elaborate_table(parse_ring_expr("amal(Z2, Z6, id, <0>)")), Error);
}
