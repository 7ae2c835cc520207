#include "ringlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <cstdio>
#include <thread>

namespace ringlab {

namespace {

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct Entry {
    std::string expr;
    RingExpr ast;
    ElabRing ring;
};

struct Ctx {
    const CorpusSpec* spec = nullptr;
    std::vector<Entry> rings;
};

Ctx materialize(const CorpusSpec& spec) {
    Ctx ctx;
    ctx.spec = &spec;
    for (auto& txt : spec.exprs) {
        RingExpr ast = parse_ring_expr(txt);
        auto result = elaborate(ast, 64);
        if (!std::holds_alternative<ElabRing>(result)) continue;  // symbolic handled separately
        Entry e{txt, std::move(ast), std::get<ElabRing>(std::move(result))};
        ctx.rings.push_back(std::move(e));
    }
    return ctx;
}

// thrown by conclusion checks to stop a refuted run early
struct Refuted {
    std::string witness;
};

void conclude(Verdict& v, bool conclusion, const std::function<std::string()>& witness) {
    ++v.hypothesis_hits;
    if (!conclusion) throw Refuted{witness()};
}

std::vector<Ideal> proper_ideals(RingPtr R) {
    std::vector<Ideal> out;
    for (auto& I : all_ideals(R))
        if (I.is_proper()) out.push_back(std::move(I));
    return out;
}

std::string gens_str(const RingTable& R, const std::vector<ElementId>& gens) {
    std::string out = "<";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += R.names[gens[i]];
    }
    return out + ">";
}

std::string ideal_wit(const Entry& e, const Ideal& I, const std::string& extra) {
    return e.expr + " ideal " + gens_str(*e.ring.table, I.gens) + (extra.empty() ? "" : " | " + extra);
}

// elements of the saturated multiplicative sets generated by single units
std::vector<ElemSet> unit_generated_sats(RingPtr R) {
    std::vector<ElemSet> out;
    for (uint32_t u : R->units.elements()) {
        ElemSet s(R->order);
        s.set(u);
        s.set(R->one);
        bool grew = true;
        while (grew) {
            grew = false;
            auto mem = s.elements();
            for (uint32_t x : mem)
                for (uint32_t y : mem) {
                    ElementId p = R->m(static_cast<ElementId>(x), static_cast<ElementId>(y));
                    if (!s.test(p)) {
                        s.set(p);
                        grew = true;
                    }
                }
        }
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

// product-ideal bitset from per-factor ideal choices
ElemSet product_ideal_set(const Entry& e, const std::vector<const Ideal*>& comps) {
    const auto& factors = e.ring.factors;
    const RingTable& R = *e.ring.table;
    ElemSet s(R.order);
    for (ElementId x = 0; x < R.order; ++x) {
        auto t = product_split(factors, x);
        bool in = true;
        for (size_t i = 0; i < factors.size() && in; ++i) in = comps[i]->members.test(t[i]);
        if (in) s.set(x);
    }
    return s;
}

struct ModEntry {
    const Entry* host;
    ModulePtr mod;
    std::string desc;
};

std::vector<ModEntry> module_corpus(const Ctx& ctx, uint32_t max_ring, uint32_t max_mod) {
    std::vector<ModEntry> out;
    for (auto& e : ctx.rings) {
        if (e.ring.table->order > max_ring) continue;
        out.push_back({&e, build_module(e.ring.table, SelfModule{}), e.expr + " module self"});
        int n = e.ring.table->zn_modulus;
        if (n <= 0) continue;
        std::vector<int> divisors;
        for (int d = 2; d < n; ++d)
            if (n % d == 0) divisors.push_back(d);
        for (int d : divisors)
            out.push_back({&e, build_module(e.ring.table, CyclicModule{d}),
                           e.expr + " module Z" + std::to_string(d)});
        for (int d : divisors)
            for (int d2 : divisors) {
                if (uint32_t(d) * d2 > max_mod) continue;
                auto a = build_module(e.ring.table, CyclicModule{d});
                auto b = build_module(e.ring.table, CyclicModule{d2});
                out.push_back({&e, build_module(e.ring.table, ProductModule{{a, b}}),
                               e.expr + " module Z" + std::to_string(d) + " x Z" +
                                   std::to_string(d2)});
            }
    }
    return out;
}

struct AmalgEntry {
    const Entry* e1;
    const Entry* e2;
    size_t hom_index;
    AmalgRing A;
    std::string desc;
};

std::vector<AmalgEntry> amalg_corpus(const Ctx& ctx, Verdict& v, uint32_t max_order = 8) {
    std::vector<AmalgEntry> out;
    std::vector<const Entry*> small;
    for (auto& e : ctx.rings)
        if (e.ring.table->order <= max_order) small.push_back(&e);
    for (auto* e1 : small)
        for (auto* e2 : small) {
            std::vector<RingHom> homs;
            try {
                homs = enumerate_homs(e1->ring.table, e2->ring.table);
            } catch (const CapacityError&) {
                ++v.skipped;
                continue;
            }
            for (size_t h = 0; h < homs.size(); ++h)
                for (auto& J : all_ideals(e2->ring.table)) {
                    try {
                        AmalgRing A = amalgamation(e1->ring.table, e2->ring.table, homs[h], J);
                        std::string desc = "amal(" + e1->expr + ", " + e2->expr + ", hom#" +
                                           std::to_string(h) + ", " +
                                           gens_str(*e2->ring.table, J.gens) + ")";
                        out.push_back({e1, e2, h, std::move(A), std::move(desc)});
                    } catch (const CapacityError&) {
                        ++v.skipped;
                    }
                }
        }
    return out;
}

// submodule generated by the image of N under a module hom
Submodule image_submodule(const ModuleHom& f, const Submodule& N) {
    std::vector<uint16_t> gens;
    for (uint32_t x = 0; x < N.mod->order; ++x)
        if (N.members.test(x)) gens.push_back(f.map[x]);
    return generate_submodule(f.dst, gens);
}

Submodule preimage_submodule(const ModuleHom& f, const Submodule& N2) {
    ElemSet s(f.src->order);
    for (uint16_t x = 0; x < f.src->order; ++x)
        if (N2.members.test(f.map[x])) s.set(x);
    return submodule_from_set(f.src, std::move(s));
}

bool is_iso_module_hom(const ModuleHom& f) {
    if (f.src->order != f.dst->order) return false;
    ElemSet img(f.dst->order);
    for (auto v : f.map) {
        if (img.test(v)) return false;
        img.set(v);
    }
    return true;
}

// symbolic product rings used by several checks
SymRing sym_zz(int n) {
    SymRing r;
    r.factors.assign(n, 0);
    r.expr = n == 1 ? "ZZ" : (n == 2 ? "ZZ x ZZ" : "ZZ x ZZ x ZZ");
    return r;
}

// ---------------------------------------------------------------------------
// per-check evaluators
// ---------------------------------------------------------------------------

void check_T_char(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        for (auto& I : proper_ideals(e.ring.table)) {
            ++v.instances;
            auto f = classify_ideal(I);
            // statement 2: 0 != a^2 in I with Ann(a) = 0 forces a in I
            bool st2 = true;
            for (ElementId a = 0; a < R.order && st2; ++a) {
                ElementId sq = R.m(a, a);
                if (sq != 0 && I.members.test(sq) && R.regular(a) && !I.members.test(a))
                    st2 = false;
            }
            auto kpow = [&](uint32_t k) {
                for (ElementId a = 0; a < R.order; ++a)
                    if (R.regular(a) && I.members.test(R.pow(a, k)) && !I.members.test(a))
                        return false;
                return true;
            };
            bool st4 = radical(I).members.subset_of(R.zdiv | I.members);
            bool agree = st2 == f.is_semi_r && kpow(2) == f.is_semi_r &&
                         kpow(3) == f.is_semi_r && kpow(R.order) == f.is_semi_r &&
                         st4 == f.is_semi_r;
            conclude(v, agree, [&] { return ideal_wit(e, I, "route disagreement"); });
        }
    }
}

void check_C_coro(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        auto ideals = all_ideals(e.ring.table);
        ElemSet zero(e.ring.table->order);
        zero.set(0);
        for (auto& I : ideals) {
            if (!ideal_is_semi_r(I)) continue;
            for (auto& J : ideals) {
                if ((J.members & e.ring.table->zdiv) != zero) {
                    ++v.instances;
                    continue;
                }
                Ideal power = J;
                for (int k = 1; k <= 3; ++k) {
                    if (k > 1) power = ideal_arith(IdealArith::Product, power, J);
                    ++v.instances;
                    if (!power.members.subset_of(I.members)) continue;
                    conclude(v, J.members.subset_of(I.members), [&] {
                        return ideal_wit(e, I,
                                         "J=" + gens_str(*e.ring.table, J.gens) +
                                             " k=" + std::to_string(k));
                    });
                }
            }
        }
    }
    if (ctx.spec->include_symbolic) {
        for (long long m = 0; m <= 12; ++m) {
            auto I = sym_ideal(sym_zz(1), {m}, "");
            if (!I.is_proper() || !sym_classify(I).is_semi_r) continue;
            for (long long n = 0; n <= 12; ++n)
                for (int k = 1; k <= 3; ++k) {
                    ++v.instances;
                    // J = nZ: J^k subset of mZ iff m | n^k; J cap zd(Z) = {0} always
                    long long nk = 1;
                    for (int i = 0; i < k; ++i) nk *= n;
                    bool jk_in = m == 0 ? nk == 0 : nk % m == 0;
                    if (!jk_in) continue;
                    bool j_in = m == 0 ? n == 0 : n % m == 0;
                    conclude(v, j_in, [&] {
                        return "Z: I=" + std::to_string(m) + "Z J=" + std::to_string(n) +
                               "Z k=" + std::to_string(k);
                    });
                }
        }
    }
}

void check_L_max(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        std::vector<ElemSet> sets;
        for (uint32_t u : R.units.elements()) {
            ElemSet s(R.order);
            s.set(u);
            sets.push_back(std::move(s));
        }
        sets.push_back(R.units);
        for (auto& I : proper_ideals(e.ring.table)) {
            if (!ideal_is_semi_r(I)) continue;
            for (auto& S : sets) {
                ++v.instances;
                if (S.intersects(R.zdiv)) continue;
                bool outside = false;  // S not inside I
                for (uint32_t s : S.elements())
                    if (!I.members.test(s)) outside = true;
                if (!outside) continue;
                Ideal colon = colon_ideal(I, S);
                bool ok = !colon.is_proper() || ideal_is_semi_r(colon);
                // (I:S) is proper here since S consists of units
                conclude(v, colon.is_proper() && ok,
                         [&] { return ideal_wit(e, I, "colon by a unit set"); });
            }
        }
    }
}

void check_T_maxzd(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        auto ideals = proper_ideals(e.ring.table);
        std::vector<const Ideal*> candidates;
        for (auto& I : ideals)
            if (I.members.subset_of(e.ring.table->zdiv) && ideal_is_semi_r(I))
                candidates.push_back(&I);
        for (auto* I : candidates) {
            ++v.instances;
            bool maximal = true;
            for (auto* J : candidates)
                if (J != I && I->members.subset_of(J->members) && I->members != J->members)
                    maximal = false;
            if (!maximal) continue;
            conclude(v, ideal_is_r(*I),
                     [&] { return ideal_wit(e, *I, "maximal semi-r inside zd but not r"); });
        }
    }
}

void check_T_every(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        bool s1 = R.flags.is_uz;
        bool s2 = true, s3 = true, s5 = true;
        for (auto& I : proper_ideals(e.ring.table)) {
            ++v.instances;
            bool fr = ideal_is_r(I), fs = ideal_is_semi_r(I);
            s2 = s2 && fr;
            s3 = s3 && fs;
            if (fs && !fr) s5 = false;
        }
        bool s4 = true;  // principal proper ideals
        for (ElementId a = 0; a < R.order && s4; ++a) {
            Ideal P = generate_ideal(e.ring.table, {a});
            if (P.is_proper()) s4 = ideal_is_semi_r(P);
        }
        bool agree = s1 && s2 && s3 && s4 && s5;
        conclude(v, agree, [&] { return e.expr + " | five-way equivalence failed"; });
    }
}

void check_P_f(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        if (R.order > 16) continue;
        ElemSet z(R.order);
        z.set(0);
        auto ideals = proper_ideals(e.ring.table);
        // natural epimorphisms onto quotients
        for (auto& J : ideals) {
            QuotientRing Q = quotient_ring(e.ring.table, J);
            for (auto& I : ideals) {
                ++v.instances;
                if (!J.members.subset_of(I.members)) continue;           // ker inside I
                if ((I.members & R.zdiv) != z) continue;                 // I cap zd = 0
                if (!ideal_is_semi_r(I)) continue;
                Ideal img = push_ideal(Q, I);
                conclude(v, !img.is_proper() || ideal_is_semi_r(img),
                         [&] { return ideal_wit(e, I, "epimorphic image not semi-r"); });
            }
        }
    }
    // isomorphic preimages across same-order corpus rings
    std::vector<const Entry*> small;
    for (auto& e : ctx.rings)
        if (e.ring.table->order <= 8) small.push_back(&e);
    for (auto* a : small)
        for (auto* b : small) {
            if (a->ring.table->order != b->ring.table->order) continue;
            std::vector<RingHom> homs;
            try {
                homs = enumerate_homs(a->ring.table, b->ring.table);
            } catch (const CapacityError&) {
                ++v.skipped;
                continue;
            }
            for (auto& h : homs) {
                if (!hom_injective(h) || !hom_surjective(h)) continue;
                for (auto& I2 : proper_ideals(b->ring.table)) {
                    ++v.instances;
                    if (!ideal_is_semi_r(I2)) continue;
                    ElemSet pre(a->ring.table->order);
                    for (ElementId x = 0; x < a->ring.table->order; ++x)
                        if (I2.members.test(h.map[x])) pre.set(x);
                    Ideal preimage = ideal_from_set(a->ring.table, std::move(pre));
                    conclude(v, ideal_is_semi_r(preimage), [&] {
                        return a->expr + " <- " + b->expr + " iso preimage not semi-r";
                    });
                }
            }
        }
}

void check_C_quotient(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        if (R.order > 16) continue;
        ElemSet z(R.order);
        z.set(0);
        auto ideals = proper_ideals(e.ring.table);
        for (auto& J : ideals) {
            QuotientRing Q = quotient_ring(e.ring.table, J);
            for (auto& I : ideals) {
                if (!J.members.subset_of(I.members)) continue;
                Ideal img = push_ideal(Q, I);
                // (1)
                ++v.instances;
                if (ideal_is_semi_r(I) && (I.members & R.zdiv) == z) {
                    conclude(v, !img.is_proper() || ideal_is_semi_r(img),
                             [&] { return ideal_wit(e, I, "quotient image not semi-r"); });
                }
                // (2)
                ++v.instances;
                if (img.is_proper() && ideal_is_semi_r(img) && ideal_is_r(J)) {
                    conclude(v, ideal_is_semi_r(I),
                             [&] { return ideal_wit(e, I, "lift from quotient not semi-r"); });
                }
            }
        }
    }
}

void check_P_inters(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        std::vector<Ideal> semis;
        for (auto& I : proper_ideals(e.ring.table))
            if (ideal_is_semi_r(I)) semis.push_back(std::move(I));
        for (size_t i = 0; i < semis.size(); ++i)
            for (size_t k = i + 1; k < semis.size(); ++k) {
                ++v.instances;
                Ideal meet = ideal_arith(IdealArith::Intersect, semis[i], semis[k]);
                conclude(v, ideal_is_semi_r(meet),
                         [&] { return ideal_wit(e, meet, "pair intersection"); });
                for (size_t t = k + 1; t < semis.size(); ++t) {
                    ++v.instances;
                    Ideal m3 = ideal_arith(IdealArith::Intersect, meet, semis[t]);
                    conclude(v, ideal_is_semi_r(m3),
                             [&] { return ideal_wit(e, m3, "triple intersection"); });
                }
            }
    }
}

void check_P_S(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        const RingTable& R = *e.ring.table;
        if (R.order > 16) continue;
        for (auto& S : unit_generated_sats(e.ring.table)) {
            if (S.intersects(R.zdiv)) continue;
            Localization L = localization(e.ring.table, S);
            for (auto& I : proper_ideals(e.ring.table)) {
                // (1)
                ++v.instances;
                if (ideal_is_semi_r(I) && !I.members.intersects(S)) {
                    Ideal li = localize_ideal(L, I);
                    conclude(v, li.is_proper() && ideal_is_semi_r(li),
                             [&] { return ideal_wit(e, I, "localized ideal not semi-r"); });
                }
                // (2)
                ++v.instances;
                Ideal li = localize_ideal(L, I);
                if (li.is_proper() && ideal_is_semi_r(li) &&
                    !S.intersects(z_upper(I))) {
                    conclude(v, ideal_is_semi_r(I),
                             [&] { return ideal_wit(e, I, "pullback not semi-r"); });
                }
            }
        }
    }
}

void check_P_essential(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ring.table->order > 16) continue;
        std::vector<SubringInfo> subs;
        try {
            subs = enumerate_subrings(e.ring.table);
        } catch (const CapacityError&) {
            ++v.skipped;
            continue;
        }
        for (auto& sub : subs) {
            for (auto& J : proper_ideals(e.ring.table)) {
                ++v.instances;
                if (!sub.essential || !ideal_is_semi_r(J)) continue;
                Ideal trace = restrict_ideal(sub, J);
                conclude(v, !trace.is_proper() || ideal_is_semi_r(trace), [&] {
                    return ideal_wit(e, J, "essential subring trace not semi-r");
                });
            }
        }
    }
}

void check_P_Ca2(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ast.kind != RingExpr::Kind::Prod) continue;
        const auto& factors = e.ring.factors;
        for (size_t j = 0; j < factors.size(); ++j) {
            std::vector<Ideal> whole;
            for (auto& f : factors) {
                ElemSet full(f->order);
                for (uint32_t i = 0; i < f->order; ++i) full.set(i);
                whole.push_back(ideal_from_set(f, std::move(full)));
            }
            for (auto& Ij : proper_ideals(factors[j])) {
                ++v.instances;
                std::vector<const Ideal*> comps;
                for (size_t i = 0; i < factors.size(); ++i)
                    comps.push_back(i == j ? &Ij : &whole[i]);
                Ideal I = ideal_from_set(e.ring.table, product_ideal_set(e, comps));
                bool lhs = ideal_is_semi_r(I);
                bool rhs = ideal_is_semi_r(Ij);
                conclude(v, lhs == rhs,
                         [&] { return ideal_wit(e, I, "border product equivalence"); });
            }
        }
    }
    if (ctx.spec->include_symbolic) {
        for (long long n = 0; n <= 12; ++n) {
            auto side = sym_ideal(sym_zz(1), {n}, "");
            if (!side.is_proper()) continue;
            for (int pos = 0; pos < 2; ++pos) {
                ++v.instances;
                auto I = sym_ideal(sym_zz(2), pos == 0 ? std::vector<long long>{n, 1}
                                                       : std::vector<long long>{1, n},
                                   "");
                conclude(v, sym_classify(I).is_semi_r == sym_classify(side).is_semi_r, [&] {
                    return "Z x Z border ideal with nZ, n=" + std::to_string(n);
                });
            }
        }
    }
}

void check_T_ca1(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ast.kind != RingExpr::Kind::Prod || e.ring.factors.size() != 2) continue;
        const auto& factors = e.ring.factors;
        auto ideals1 = proper_ideals(factors[0]);
        auto ideals2 = proper_ideals(factors[1]);
        for (auto& I1 : ideals1)
            for (auto& I2 : ideals2) {
                std::vector<const Ideal*> comps{&I1, &I2};
                Ideal I = ideal_from_set(e.ring.table, product_ideal_set(e, comps));
                bool p = ideal_is_semi_r(I);
                bool a = ideal_is_semi_r(I1);
                bool b = ideal_is_semi_r(I2);
                ++v.instances;
                if (a && b)
                    conclude(v, p, [&] { return ideal_wit(e, I, "product of semi-r not semi-r"); });
                ++v.instances;
                if (p) conclude(v, a || b, [&] { return ideal_wit(e, I, "no semi-r factor"); });
                ++v.instances;
                if (p && !I2.members.subset_of(factors[1]->zdiv))
                    conclude(v, a, [&] { return ideal_wit(e, I, "item 3"); });
                ++v.instances;
                if (p && !I1.members.subset_of(factors[0]->zdiv))
                    conclude(v, b, [&] { return ideal_wit(e, I, "item 4"); });
            }
    }
    if (ctx.spec->include_symbolic) {
        for (long long n1 = 0; n1 <= 12; ++n1)
            for (long long n2 = 0; n2 <= 12; ++n2) {
                auto I = sym_ideal(sym_zz(2), {n1, n2}, "");
                auto I1 = sym_ideal(sym_zz(1), {n1}, "");
                auto I2 = sym_ideal(sym_zz(1), {n2}, "");
                if (!I1.is_proper() || !I2.is_proper()) continue;
                bool p = sym_classify(I).is_semi_r;
                bool a = sym_classify(I1).is_semi_r;
                bool b = sym_classify(I2).is_semi_r;
                auto wit = [&] {
                    return "Z x Z ideal " + std::to_string(n1) + "Z x " + std::to_string(n2) + "Z";
                };
                ++v.instances;
                if (a && b) conclude(v, p, wit);
                ++v.instances;
                if (p) conclude(v, a || b, wit);
                ++v.instances;
                if (p && n2 != 0) conclude(v, a, wit);  // I2 outside zd(Z) = {0}
                ++v.instances;
                if (p && n1 != 0) conclude(v, b, wit);
            }
    }
}

void check_C_cc(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ast.kind != RingExpr::Kind::Prod || e.ring.factors.size() < 3) continue;
        const auto& factors = e.ring.factors;
        std::vector<std::vector<Ideal>> per;
        for (auto& f : factors) per.push_back(proper_ideals(f));
        std::vector<size_t> pick(factors.size(), 0);
        bool done = false;
        while (!done) {
            std::vector<const Ideal*> comps;
            for (size_t i = 0; i < factors.size(); ++i) comps.push_back(&per[i][pick[i]]);
            Ideal I = ideal_from_set(e.ring.table, product_ideal_set(e, comps));
            bool p = ideal_is_semi_r(I);
            std::vector<bool> fs;
            for (size_t i = 0; i < factors.size(); ++i)
                fs.push_back(ideal_is_semi_r(*comps[i]));
            ++v.instances;
            if (std::all_of(fs.begin(), fs.end(), [](bool b) { return b; }))
                conclude(v, p, [&] { return ideal_wit(e, I, "item 1"); });
            ++v.instances;
            if (p)
                conclude(v, std::any_of(fs.begin(), fs.end(), [](bool b) { return b; }),
                         [&] { return ideal_wit(e, I, "item 2"); });
            for (size_t i = 0; i < factors.size(); ++i) {
                ++v.instances;
                bool others_outside = true;
                for (size_t j = 0; j < factors.size(); ++j)
                    if (j != i && comps[j]->members.subset_of(factors[j]->zdiv))
                        others_outside = false;
                if (p && others_outside)
                    conclude(v, fs[i], [&] { return ideal_wit(e, I, "item 3"); });
            }
            // advance
            done = true;
            for (size_t i = 0; i < pick.size(); ++i) {
                if (++pick[i] < per[i].size()) {
                    done = false;
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    if (ctx.spec->include_symbolic) {
        for (long long n1 : {0, 1, 2, 4, 6, 9})
            for (long long n2 : {0, 1, 3, 4, 8})
                for (long long n3 : {0, 1, 5, 12}) {
                    auto I = sym_ideal(sym_zz(3), {n1, n2, n3}, "");
                    if (!I.is_proper()) continue;
                    std::vector<long long> ns{n1, n2, n3};
                    std::vector<bool> fs;
                    bool all_proper = true;
                    for (long long n : ns) {
                        auto Ii = sym_ideal(sym_zz(1), {n}, "");
                        if (!Ii.is_proper()) all_proper = false;
                        fs.push_back(Ii.is_proper() && sym_classify(Ii).is_semi_r);
                    }
                    bool p = sym_classify(I).is_semi_r;
                    auto wit = [&] {
                        return "Z^3 ideal " + std::to_string(n1) + "," + std::to_string(n2) +
                               "," + std::to_string(n3);
                    };
                    if (all_proper) {
                        ++v.instances;
                        if (std::all_of(fs.begin(), fs.end(), [](bool b) { return b; }))
                            conclude(v, p, wit);
                        ++v.instances;
                        if (p) conclude(v, std::any_of(fs.begin(), fs.end(), [](bool b) { return b; }), wit);
                    }
                    for (size_t i = 0; i < 3; ++i) {
                        ++v.instances;
                        bool others_nonzero = true;
                        for (size_t j = 0; j < 3; ++j)
                            if (j != i && ns[j] == 0) others_nonzero = false;
                        if (p && others_nonzero && ns[i] != 1) {
                            auto Ii = sym_ideal(sym_zz(1), {ns[i]}, "");
                            conclude(v, sym_classify(Ii).is_semi_r, wit);
                        }
                    }
                }
    }
}

void check_L_red(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ast.kind != RingExpr::Kind::Prod) continue;
        const auto& factors = e.ring.factors;
        std::vector<std::vector<Ideal>> per;  // all ideals, improper included
        for (auto& f : factors) per.push_back(all_ideals(f));
        for (size_t j = 0; j < factors.size(); ++j) {
            if (!factors[j]->flags.is_reduced) continue;
            std::vector<size_t> pick(factors.size(), 0);
            bool done = false;
            while (!done) {
                Ideal zeroj = generate_ideal(factors[j], {});
                std::vector<const Ideal*> comps;
                for (size_t i = 0; i < factors.size(); ++i)
                    comps.push_back(i == j ? &zeroj : &per[i][pick[i]]);
                ++v.instances;
                Ideal I = ideal_from_set(e.ring.table, product_ideal_set(e, comps));
                conclude(v, ideal_is_semi_r(I),
                         [&] { return ideal_wit(e, I, "zero at a reduced factor"); });
                done = true;
                for (size_t i = 0; i < pick.size(); ++i) {
                    if (i == j) continue;
                    if (++pick[i] < per[i].size()) {
                        done = false;
                        break;
                    }
                    pick[i] = 0;
                }
            }
        }
    }
    if (ctx.spec->include_symbolic) {
        for (long long n : {0, 1, 2, 4, 6, 8, 9, 12})
            for (int pos = 0; pos < 2; ++pos) {
                ++v.instances;
                auto I = sym_ideal(sym_zz(2), pos == 0 ? std::vector<long long>{0, n}
                                                       : std::vector<long long>{n, 0},
                                   "");
                conclude(v, sym_classify(I).is_semi_r, [&] {
                    return "Z x Z ideal with a zero component and " + std::to_string(n) + "Z";
                });
            }
    }
}

void check_T_cchar(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    if (!ctx.spec->include_symbolic) return;
    auto run = [&](const SymIdeal& I, const std::string& desc) {
        ++v.instances;
        if (!I.is_proper()) return;
        auto f = sym_classify(I);
        bool tri = cchar_trichotomy(I);
        auto bounded = sym_bounded_semi_r_violation(I, 10);
        bool consistent = tri == f.is_semi_r && (!bounded || !f.is_semi_r);
        if (!f.is_semi_r && f.wit_semi_r) {
            // exact refutations must carry a definitionally valid witness
            SymElem w = *f.wit_semi_r;
            SymElem sq(w.size());
            for (size_t i = 0; i < w.size(); ++i) sq[i] = w[i] * w[i];
            consistent = consistent && sym_elem_regular(I.ring, w) && sym_membership(I, sq) &&
                         !sym_membership(I, w);
        }
        conclude(v, consistent, [&] { return desc; });
    };
    for (long long n1 = 0; n1 <= 12; ++n1)
        for (long long n2 = 0; n2 <= 12; ++n2)
            run(sym_ideal(sym_zz(2), {n1, n2}, ""),
                "Z x Z ideal " + std::to_string(n1) + "Z x " + std::to_string(n2) + "Z");
    for (long long n1 : {0, 1, 4, 6})
        for (long long n2 : {0, 1, 8, 9})
            for (long long n3 : {0, 1, 2, 12})
                run(sym_ideal(sym_zz(3), {n1, n2, n3}, ""),
                    "Z^3 ideal " + std::to_string(n1) + "," + std::to_string(n2) + "," +
                        std::to_string(n3));
}

void check_L_am(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& inst : amalg_corpus(ctx, v)) {
        ++v.instances;
        const AmalgRing& A = inst.A;
        ElemSet envelope(A.ring->order);
        for (uint32_t i = 0; i < A.ring->order; ++i) {
            auto [a, s] = A.elems[i];
            bool inA = A.r1->zdiv.test(a);
            bool inB = false;
            for (uint32_t j = 1; j < A.r2->order && !inB; ++j)
                if (A.j.members.test(j) && A.r2->m(s, static_cast<ElementId>(j)) == 0)
                    inB = true;
            if (inA || inB) envelope.set(i);
        }
        conclude(v, A.ring->zdiv.subset_of(envelope), [&] { return inst.desc; });
    }
}

void check_T_a1(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& inst : amalg_corpus(ctx, v)) {
        const AmalgRing& A = inst.A;
        ElemSet zj = z_of_ideal(*A.r2, A.j);
        bool reg_cond = true;  // f(reg(R1)) cap Z(J) = empty
        for (ElementId r = 0; r < A.r1->order; ++r)
            if (A.r1->regular(r) && zj.test(A.f.map[r])) reg_cond = false;
        for (auto& I : proper_ideals(A.r1)) {
            Ideal join = transfer_join(A, I);
            ++v.instances;
            if (ideal_is_semi_r(I))
                conclude(v, join.is_proper() && ideal_is_semi_r(join),
                         [&] { return inst.desc + " | forward on " + gens_str(*A.r1, I.gens); });
            ++v.instances;
            if (reg_cond && join.is_proper() && ideal_is_semi_r(join))
                conclude(v, ideal_is_semi_r(I),
                         [&] { return inst.desc + " | converse on " + gens_str(*A.r1, I.gens); });
        }
    }
}

void check_T_a2(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    uint64_t header_instances = 0, header_failures = 0;
    for (auto& inst : amalg_corpus(ctx, v)) {
        const AmalgRing& A = inst.A;
        SubringInfo subinfo{A.sub, A.sub_embed, false};
        Ideal Jsub = restrict_ideal(subinfo, A.j);
        ElemSet zj_sub = z_of_ideal(*A.sub, Jsub);
        bool zd_eq = A.sub->zdiv == zj_sub;
        // f(zd(R1)) inside zd(f(R1)+J) and f(zd(R1)) J = 0
        bool zd_sub = true, zd_kills = true;
        for (ElementId r = 0; r < A.r1->order; ++r) {
            if (!A.r1->zdiv.test(r)) continue;
            ElementId fr = A.f.map[r];
            if (!A.sub->zdiv.test(A.sub_index(fr))) zd_sub = false;
            for (uint32_t j = 0; j < A.r2->order; ++j)
                if (A.j.members.test(j) && A.r2->m(fr, static_cast<ElementId>(j)) != 0)
                    zd_kills = false;
        }
        for (auto& K : proper_ideals(A.sub)) {
            Ideal bar = transfer_bar(A, K);
            bool k_semi = ideal_is_semi_r(K);
            bool bar_semi = bar.is_proper() && ideal_is_semi_r(bar);
            ++v.instances;
            if (k_semi && zd_eq)
                conclude(v, bar_semi,
                         [&] { return inst.desc + " | bar of " + gens_str(*A.sub, K.gens); });
            ++v.instances;
            if (bar_semi && zd_sub && zd_kills)
                conclude(v, k_semi,
                         [&] { return inst.desc + " | pullback of " + gens_str(*A.sub, K.gens); });
            // header form without the item hypotheses, reported only
            ++header_instances;
            if (k_semi && !bar_semi) ++header_failures;
        }
    }
    res.note = "header-form: " + std::to_string(header_instances) + " instances, " +
               std::to_string(header_failures) + " violations";
}

void check_P_kpow_mod(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        for (auto& N : all_submodules(me.mod)) {
            if (!N.is_proper()) continue;
            ++v.instances;
            // classify_submodule already crosschecks the k = 3 route and throws
            // on disagreement; surface that as a refutation
            try {
                auto f = classify_submodule(N);
                conclude(v, true, [] { return std::string(); });
                (void)f;
            } catch (const Error& err) {
                throw Refuted{me.desc + " | " + err.what()};
            }
        }
    }
}

void check_P_torsionfree(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        if (!module_flags(me.mod).is_torsion_free || me.mod->order <= 1) continue;
        for (auto& N : all_submodules(me.mod)) {
            if (!N.is_proper()) continue;
            ++v.instances;
            auto f = classify_submodule(N);
            conclude(v, f.is_semi_r == f.is_semiprime,
                     [&] { return me.desc + " | torsion-free coincidence"; });
        }
    }
    if (ctx.spec->include_symbolic) {
        FGZModule z{{0}, "ZZ"};
        for (long long n = 0; n <= 12; ++n) {
            auto N = make_lattice_submodule(z, {{n}}, "");
            if (!lattice_is_proper(N)) continue;
            ++v.instances;
            auto f = sym_classify_submodule(N);
            conclude(v, f.is_semi_r == f.is_semiprime,
                     [&] { return "Z submodule " + std::to_string(n) + "Z"; });
        }
        FGZModule z2{{0, 0}, "ZZ x ZZ"};
        for (long long n1 : {0, 1, 4, 6, 9})
            for (long long n2 : {0, 1, 2, 8, 12}) {
                auto N = make_lattice_submodule(z2, {{n1, 0}, {0, n2}}, "");
                if (!lattice_is_proper(N)) continue;
                ++v.instances;
                auto f = sym_classify_submodule(N);
                conclude(v, f.is_semi_r == f.is_semiprime, [&] {
                    return "Z x Z submodule " + std::to_string(n1) + "Z x " +
                           std::to_string(n2) + "Z";
                });
            }
    }
}

void check_P_eqM(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto subs = all_submodules(me.mod);
        for (auto& N : subs) {
            if (!N.is_proper()) continue;
            ++v.instances;
            if (!d_annihilator(N)) continue;
            bool n_semi = submodule_is_semi_r(N);
            bool item2 = true;
            for (ElementId r = 0; r < me.mod->ring->order && item2; ++r) {
                if (!me.mod->scalar_regular(r)) continue;
                ElementId r2 = me.mod->ring->m(r, r);
                for (auto& K : subs) {
                    bool r2k = true, rk = true;
                    for (uint32_t x = 0; x < me.mod->order; ++x) {
                        if (!K.members.test(x)) continue;
                        if (!N.members.test(me.mod->s(r2, static_cast<uint16_t>(x)))) r2k = false;
                        if (!N.members.test(me.mod->s(r, static_cast<uint16_t>(x)))) rk = false;
                    }
                    if (r2k && !rk) {
                        item2 = false;
                        break;
                    }
                }
            }
            conclude(v, n_semi == item2, [&] { return me.desc + " | eqM equivalence"; });
        }
    }
}

void check_L_smith(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_faithful || !mf.is_multiplication) continue;
        auto ideals = all_ideals(me.mod->ring);
        auto subs = all_submodules(me.mod);
        for (auto& I : ideals) {
            ++v.instances;
            Ideal im_colon = colon_rm(ideal_times_module(I, me.mod));
            conclude(v, im_colon.members == I.members,
                     [&] { return me.desc + " | (IM:M) = I fails"; });
            for (auto& N : subs) {
                ++v.instances;
                Ideal lhs = colon_rm(ideal_times_submodule(I, N));
                Ideal rhs = ideal_arith(IdealArith::Product, I, colon_rm(N));
                conclude(v, lhs.members == rhs.members,
                         [&] { return me.desc + " | (IN:M) = I(N:M) fails"; });
            }
        }
    }
}

void check_L_majed(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_faithful || !mf.is_multiplication) continue;
        auto ideals = all_ideals(me.mod->ring);
        for (auto& I : ideals) {
            // I must be a faithful multiplication module itself
            bool faithful = true;
            const RingTable& R = *me.mod->ring;
            for (ElementId r = 1; r < R.order && faithful; ++r) {
                bool kills = true;
                for (uint32_t x = 0; x < R.order && kills; ++x)
                    if (I.members.test(x) && R.m(r, static_cast<ElementId>(x)) != 0) kills = false;
                if (kills) faithful = false;
            }
            if (!faithful) {
                ++v.instances;
                continue;
            }
            bool mult = true;
            for (auto& K : ideals) {
                if (!K.members.subset_of(I.members)) continue;
                bool found = false;
                for (auto& J : ideals)
                    if (ideal_arith(IdealArith::Product, J, I).members == K.members) found = true;
                if (!found) mult = false;
            }
            if (!mult) {
                ++v.instances;
                continue;
            }
            for (auto& N : all_submodules(me.mod)) {
                ++v.instances;
                Submodule in = ideal_times_submodule(I, N);
                conclude(v, colon_mi(in, I).members == N.members,
                         [&] { return me.desc + " | N = (IN:I) fails"; });
                // item 2: N inside IM
                Submodule im = ideal_times_module(I, me.mod);
                if (N.members.subset_of(im.members)) {
                    for (auto& J : ideals) {
                        ++v.instances;
                        Submodule lhs = colon_mi(ideal_times_submodule(J, N), I);
                        Submodule rhs = ideal_times_submodule(J, colon_mi(N, I));
                        conclude(v, lhs.members == rhs.members,
                                 [&] { return me.desc + " | (JN:I) = J(N:I) fails"; });
                    }
                }
            }
        }
    }
}

void check_T_IM(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_faithful || !mf.is_multiplication) continue;
        for (auto& I : proper_ideals(me.mod->ring)) {
            ++v.instances;
            Submodule N = ideal_times_module(I, me.mod);
            if (!N.is_proper()) continue;
            if (!d_annihilator(N)) continue;
            conclude(v, submodule_is_semi_r(N) == ideal_is_semi_r(I),
                     [&] { return me.desc + " | IM equivalence"; });
        }
    }
}

void check_C_NM(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_faithful || !mf.is_multiplication) continue;
        auto ideals = all_ideals(me.mod->ring);
        for (auto& N : all_submodules(me.mod)) {
            if (!N.is_proper()) continue;
            ++v.instances;
            if (!d_annihilator(N)) continue;
            bool a = submodule_is_semi_r(N);
            Ideal nm = colon_rm(N);
            bool b = ideal_is_semi_r(nm);
            bool c = false;
            for (auto& I : ideals) {
                if (ideal_times_module(I, me.mod).members != N.members) continue;
                if (ideal_is_semi_r(I)) c = true;
            }
            conclude(v, a == b && b == c, [&] { return me.desc + " | three-way equivalence"; });
        }
    }
}

void check_P_mrad(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_multiplication) continue;
        auto ideals = all_ideals(me.mod->ring);
        for (auto& N : all_submodules(me.mod)) {
            if (!N.is_proper()) continue;
            if (!submodule_is_semi_r(N) || !d_annihilator(N)) continue;
            // item 1: (N :_M I) stays semi-r when proper
            for (auto& I : ideals) {
                ++v.instances;
                Submodule col = colon_mi(N, I);
                if (!col.is_proper()) continue;
                conclude(v, submodule_is_semi_r(col),
                         [&] { return me.desc + " | (N:I) not semi-r"; });
            }
            // item 2 needs faithfulness
            if (!mf.is_faithful) continue;
            ++v.instances;
            Submodule rad_n = m_rad(N);
            Ideal lhs = colon_rm(rad_n);
            Ideal rhs = radical(colon_rm(N));
            conclude(v, lhs.members.subset_of(me.mod->ring->zdiv | rhs.members),
                     [&] { return me.desc + " | m-rad colon containment"; });
        }
    }
}

// does the ideal qualify as a finitely generated faithful multiplication
// module over its own ring
bool ideal_faithful_multiplication(const Ideal& I, const std::vector<Ideal>& ideals) {
    const RingTable& R = *I.ring;
    for (ElementId r = 1; r < R.order; ++r) {
        bool kills = true;
        for (uint32_t x = 0; x < R.order && kills; ++x)
            if (I.members.test(x) && R.m(r, static_cast<ElementId>(x)) != 0) kills = false;
        if (kills) return false;
    }
    for (auto& K : ideals) {
        if (!K.members.subset_of(I.members)) continue;
        bool found = false;
        for (auto& J : ideals)
            if (ideal_arith(IdealArith::Product, J, I).members == K.members) found = true;
        if (!found) return false;
    }
    return true;
}

void check_T_IN(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 12, 16)) {
        auto mf = module_flags(me.mod);
        if (!mf.is_faithful || !mf.is_multiplication) continue;
        auto ideals = all_ideals(me.mod->ring);
        std::vector<bool> qualifies(ideals.size());
        for (size_t i = 0; i < ideals.size(); ++i)
            qualifies[i] = ideal_faithful_multiplication(ideals[i], ideals);
        for (auto& N : all_submodules(me.mod)) {
            bool n_semi = submodule_is_semi_r(N);
            bool n_pure = is_pure(N);
            for (size_t i = 0; i < ideals.size(); ++i) {
                const Ideal& I = ideals[i];
                Submodule in = ideal_times_submodule(I, N);
                bool in_proper = in.is_proper();
                bool in_d = in_proper && d_annihilator(in);
                // (1)
                ++v.instances;
                if (ideal_is_semi_r(I) && n_pure && n_semi && in_proper && in_d) {
                    conclude(v, submodule_is_semi_r(in),
                             [&] { return me.desc + " | IN not semi-r"; });
                }
                // (2): I finitely generated faithful multiplication
                ++v.instances;
                if (qualifies[i] && in_proper && in_d && submodule_is_semi_r(in)) {
                    conclude(v, ideal_is_semi_r(I) || n_semi,
                             [&] { return me.desc + " | neither I nor N semi-r"; });
                }
            }
        }
    }
}

void check_P_fsub(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    auto mods = module_corpus(ctx, 8, 8);
    for (auto& a : mods)
        for (auto& b : mods) {
            if (a.host != b.host) continue;  // homs over the same ring
            if (a.mod->order > 8 || b.mod->order > 8) continue;
            std::vector<ModuleHom> homs;
            try {
                homs = enumerate_module_homs(a.mod, b.mod, identity_hom(a.mod->ring));
            } catch (const CapacityError&) {
                ++v.skipped;
                continue;
            }
            for (auto& h : homs) {
                bool epi = [&] {
                    ElemSet img(b.mod->order);
                    for (auto x : h.map) img.set(x);
                    return img.count() == b.mod->order;
                }();
                bool iso = is_iso_module_hom(h);
                ElemSet ker(a.mod->order);
                for (uint16_t x = 0; x < a.mod->order; ++x)
                    if (h.map[x] == 0) ker.set(x);
                ElemSet zero(a.mod->order);
                zero.set(0);
                for (auto& N : all_submodules(a.mod)) {
                    ++v.instances;
                    if (!epi || !N.is_proper()) continue;
                    if (!ker.subset_of(N.members)) continue;
                    if ((N.members & a.mod->torsion) != zero) continue;
                    if (!submodule_is_semi_r(N)) continue;
                    Submodule img = image_submodule(h, N);
                    conclude(v, !img.is_proper() || submodule_is_semi_r(img),
                             [&] { return a.desc + " -> " + b.desc + " | image not semi-r"; });
                }
                if (iso) {
                    for (auto& N2 : all_submodules(b.mod)) {
                        ++v.instances;
                        if (!submodule_is_semi_r(N2)) continue;
                        Submodule pre = preimage_submodule(h, N2);
                        conclude(v, submodule_is_semi_r(pre), [&] {
                            return a.desc + " <- " + b.desc + " | preimage not semi-r";
                        });
                    }
                }
            }
        }
}

void check_T_SM(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& me : module_corpus(ctx, 8, 8)) {
        const RingTable& R = *me.mod->ring;
        // saturated multiplicative sets acting injectively on M
        std::vector<ElemSet> sats;
        for (ElementId s = 0; s < R.order; ++s) {
            if (me.mod->zm.test(s)) continue;
            ElemSet set(R.order);
            set.set(s);
            set.set(R.one);
            bool grew = true;
            while (grew) {
                grew = false;
                auto mem = set.elements();
                for (uint32_t x : mem)
                    for (uint32_t y : mem) {
                        ElementId p = R.m(static_cast<ElementId>(x), static_cast<ElementId>(y));
                        if (!set.test(p)) {
                            set.set(p);
                            grew = true;
                        }
                    }
            }
            if (set.intersects(me.mod->zm)) continue;  // S cap Z(M) must stay empty
            if (std::find(sats.begin(), sats.end(), set) == sats.end()) sats.push_back(set);
        }
        for (auto& S : sats) {
            Localization L;
            ModLocalization LM;
            try {
                L = localization(me.mod->ring, S);
                LM = localize_module(L, me.mod);
            } catch (const Error&) {
                ++v.skipped;
                continue;
            }
            for (auto& N : all_submodules(me.mod)) {
                if (!N.is_proper()) continue;
                Ideal nm = colon_rm(N);
                Submodule ln = localize_submodule(L, LM, N);
                bool ln_proper = ln.is_proper();
                // (1)
                ++v.instances;
                if (submodule_is_semi_r(N) && !nm.members.intersects(S)) {
                    conclude(v, ln_proper && submodule_is_semi_r(ln),
                             [&] { return me.desc + " | localized submodule not semi-r"; });
                }
                // (2): S cap Z_N(M) = empty
                ++v.instances;
                ElemSet zn(R.order);
                for (ElementId r = 0; r < R.order; ++r) {
                    for (uint16_t m = 0; m < me.mod->order; ++m)
                        if (!N.members.test(m) && N.members.test(me.mod->s(r, m))) {
                            zn.set(r);
                            break;
                        }
                }
                if (ln_proper && submodule_is_semi_r(ln) && !S.intersects(zn)) {
                    conclude(v, submodule_is_semi_r(N),
                             [&] { return me.desc + " | pullback not semi-r"; });
                }
            }
        }
    }
}

void check_P_ide(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& e : ctx.rings) {
        if (e.ast.kind != RingExpr::Kind::Idz) continue;
        RingPtr base = e.ring.idz_base;
        ModulePtr M = e.ring.idz_mod;
        RingPtr RM = e.ring.table;
        bool zm_in_zd = M->zm.subset_of(base->zdiv);
        Submodule full = [&] {
            ElemSet s(M->order);
            for (uint32_t i = 0; i < M->order; ++i) s.set(i);
            return submodule_from_set(M, std::move(s));
        }();
        auto subs = all_submodules(M);
        for (auto& I : proper_ideals(base)) {
            bool i_semi = ideal_is_semi_r(I);
            // (1) with N = M
            Ideal im = ideal_idealization(RM, I, full);
            bool im_semi = im.is_proper() && ideal_is_semi_r(im);
            ++v.instances;
            if (i_semi)
                conclude(v, im_semi, [&] { return e.expr + " | I(+)M not semi-r"; });
            ++v.instances;
            if (zm_in_zd && im_semi)
                conclude(v, i_semi, [&] { return e.expr + " | I(+)M converse"; });
            // (2) with r-submodules N
            for (auto& N : subs) {
                Submodule prod = ideal_times_module(I, M);
                if (!prod.members.subset_of(N.members)) continue;  // I(+)N must be an ideal
                Ideal in = ideal_idealization(RM, I, N);
                bool in_semi = in.is_proper() && ideal_is_semi_r(in);
                bool n_r = !N.is_proper() || submodule_is_r(N);
                ++v.instances;
                if (i_semi && N.is_proper() && submodule_is_r(N))
                    conclude(v, in_semi, [&] { return e.expr + " | I(+)N not semi-r"; });
                ++v.instances;
                if (zm_in_zd && in_semi)
                    conclude(v, i_semi && n_r, [&] { return e.expr + " | I(+)N converse"; });
            }
        }
    }
}

// shared amalgamated-module corpus for T_amalg and T_amalg2
struct AmalgModInstance {
    AmalgRing A;
    ModulePtr m1, m2;
    ModuleHom phi;
    AmalgModule D;
    std::string desc;
};

std::vector<AmalgModInstance> amalg_module_corpus(const Ctx& ctx, Verdict& v) {
    std::vector<AmalgModInstance> out;
    std::vector<const Entry*> small;
    for (auto& e : ctx.rings)
        if (e.ring.table->zn_modulus >= 2 && e.ring.table->zn_modulus <= 6) small.push_back(&e);
    for (auto* e1 : small)
        for (auto* e2 : small) {
            std::vector<RingHom> homs;
            try {
                homs = enumerate_homs(e1->ring.table, e2->ring.table);
            } catch (const CapacityError&) {
                ++v.skipped;
                continue;
            }
            auto m1 = build_module(e1->ring.table, SelfModule{});
            std::vector<ModulePtr> m2s{build_module(e2->ring.table, SelfModule{})};
            int n2 = e2->ring.table->zn_modulus;
            for (int d = 2; d < n2; ++d)
                if (n2 % d == 0) m2s.push_back(build_module(e2->ring.table, CyclicModule{d}));
            for (size_t h = 0; h < homs.size(); ++h)
                for (auto& m2 : m2s) {
                    std::vector<ModuleHom> phis;
                    try {
                        phis = enumerate_module_homs(m1, m2, homs[h]);
                    } catch (const CapacityError&) {
                        ++v.skipped;
                        continue;
                    }
                    for (auto& phi : phis)
                        for (auto& J : all_ideals(e2->ring.table)) {
                            try {
                                AmalgRing A =
                                    amalgamation(e1->ring.table, e2->ring.table, homs[h], J);
                                AmalgModule D = amalg_module(A, m1, m2, phi);
                                std::string desc = "amal(" + e1->expr + ", " + e2->expr +
                                                   ", hom#" + std::to_string(h) + ", " +
                                                   gens_str(*e2->ring.table, J.gens) +
                                                   ") module " + m2->expr;
                                out.push_back({std::move(A), m1, m2, phi, std::move(D),
                                               std::move(desc)});
                            } catch (const CapacityError&) {
                                ++v.skipped;
                            }
                        }
                }
        }
    return out;
}

void check_T_amalg(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& inst : amalg_module_corpus(ctx, v)) {
        if (inst.D.jm2.members.count() != 1) continue;  // JM2 = 0 hypothesis
        bool m2_faithful = inst.m2->ann.count() == 1;
        for (auto& N1 : all_submodules(inst.m1)) {
            if (!N1.is_proper()) continue;
            Submodule tr = amalg_transfer_n1(inst.D, N1);
            bool tr_proper = tr.is_proper();
            bool n1_r = submodule_is_r(N1), n1_semi = submodule_is_semi_r(N1);
            bool tr_r = tr_proper && submodule_is_r(tr);
            bool tr_semi = tr_proper && submodule_is_semi_r(tr);
            // (1) r-submodule equivalence
            ++v.instances;
            if (n1_r)
                conclude(v, tr_r, [&] { return inst.desc + " | transfer not r"; });
            ++v.instances;
            if (tr_r) conclude(v, n1_r, [&] { return inst.desc + " | base not r"; });
            // (2)
            ++v.instances;
            if (n1_semi)
                conclude(v, tr_semi, [&] { return inst.desc + " | transfer not semi-r"; });
            // (3)
            ++v.instances;
            if (m2_faithful && tr_semi)
                conclude(v, n1_semi, [&] { return inst.desc + " | base not semi-r"; });
        }
    }
}

void check_T_amalg2(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    for (auto& inst : amalg_module_corpus(ctx, v)) {
        if (inst.D.jm2.members.count() == 1) continue;  // JM2 != 0
        if (!inst.m2->torsion.subset_of(inst.D.jm2.members)) continue;  // T(M2) in JM2
        bool f_epi = hom_surjective(inst.A.f);
        bool phi_iso = is_iso_module_hom(inst.phi);
        bool f_iso = f_epi && hom_injective(inst.A.f);
        for (auto& N2 : all_submodules(inst.m2)) {
            if (!N2.is_proper()) continue;
            Submodule bar = amalg_transfer_bar2(inst.D, N2);
            bool bar_proper = bar.is_proper();
            bool n2_r = submodule_is_r(N2), n2_semi = submodule_is_semi_r(N2);
            bool bar_r = bar_proper && submodule_is_r(bar);
            bool bar_semi = bar_proper && submodule_is_semi_r(bar);
            // (1)
            ++v.instances;
            if (n2_r)
                conclude(v, !bar_proper || bar_r,
                         [&] { return inst.desc + " | bar not r"; });
            ++v.instances;
            if (f_epi && phi_iso && bar_r)
                conclude(v, n2_r, [&] { return inst.desc + " | converse not r"; });
            // (2)
            ++v.instances;
            if (f_iso && phi_iso && bar_semi)
                conclude(v, n2_semi, [&] { return inst.desc + " | not semi-r"; });
        }
    }
}

void dup_corpus_run(const Ctx& ctx, Verdict& v,
                    const std::function<void(const std::string&, const DupModule&, bool)>& fn) {
    for (auto& e : ctx.rings) {
        int n = e.ring.table->zn_modulus;
        if (n < 2 || n > 8) continue;
        for (auto& J : all_ideals(e.ring.table)) {
            try {
                AmalgRing A = amalgamation(e.ring.table, e.ring.table,
                                           identity_hom(e.ring.table), J);
                auto M = build_module(e.ring.table, SelfModule{});
                DupModule D = dup_module(A, M);
                bool jm_zero = D.jm.members.count() == 1;
                fn(e.expr + " dup " + gens_str(*e.ring.table, J.gens), D, jm_zero);
            } catch (const CapacityError&) {
                ++v.skipped;
            }
        }
    }
}

void check_C_dup1(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    dup_corpus_run(ctx, v, [&](const std::string& desc, const DupModule& D, bool jm_zero) {
        for (auto& N : all_submodules(D.base)) {
            if (!N.is_proper()) continue;
            Submodule nj = dup_transfer_njoin(D, N);
            bool n_r = submodule_is_r(N), n_semi = submodule_is_semi_r(N);
            bool nj_r = submodule_is_r(nj), nj_semi = submodule_is_semi_r(nj);
            ++v.instances;
            if (nj_r) conclude(v, n_r, [&] { return desc + " | N join J r but N not"; });
            ++v.instances;
            if (jm_zero && n_r)
                conclude(v, nj_r, [&] { return desc + " | converse (JM=0) not r"; });
            ++v.instances;
            if (nj_semi)
                conclude(v, n_semi, [&] { return desc + " | semi-r descent"; });
            ++v.instances;
            if (jm_zero && n_semi)
                conclude(v, nj_semi, [&] { return desc + " | semi-r converse (JM=0)"; });
        }
    });
}

void check_C_dup2(const Ctx& ctx, CheckResult& res) {
    Verdict& v = res.verdict;
    dup_corpus_run(ctx, v, [&](const std::string& desc, const DupModule& D, bool jm_zero) {
        for (auto& N : all_submodules(D.base)) {
            if (!N.is_proper()) continue;
            Submodule nb = dup_transfer_bar(D, N);
            bool n_r = submodule_is_r(N), n_semi = submodule_is_semi_r(N);
            bool nb_r = submodule_is_r(nb), nb_semi = submodule_is_semi_r(nb);
            ++v.instances;
            if (nb_r) conclude(v, n_r, [&] { return desc + " | bar N r but N not"; });
            ++v.instances;
            if (jm_zero && n_r)
                conclude(v, nb_r, [&] { return desc + " | converse not r"; });
            ++v.instances;
            if (nb_semi)
                conclude(v, n_semi, [&] { return desc + " | semi-r descent"; });
            ++v.instances;
            if (jm_zero && n_semi)
                conclude(v, nb_semi, [&] { return desc + " | semi-r converse"; });
        }
    });
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct CheckDef {
    std::string id;
    std::string anchor;
    void (*fn)(const Ctx&, CheckResult&);
};

const std::vector<CheckDef>& check_defs() {
    static const std::vector<CheckDef> defs = {
        {"C_NM",
         "N semi-r iff (N:_R M) semi-r iff N = IM for some semi-r ideal I, for N with the "
         "D-annihilator condition over finitely generated faithful multiplication modules",
         check_C_NM},
        {"C_cc", "the n-ary product statements: all factors semi-r give a semi-r product, a "
                 "semi-r product has a semi-r factor, factors outside zd force the rest",
         check_C_cc},
        {"C_coro",
         "J^k inside I with J cap zd(R) = {0} and I semi-r force J inside I (k <= 3)",
         check_C_coro},
        {"C_dup1", "N join J r-submodule (semi-r) forces N r-submodule (semi-r); converses "
                   "under JM = 0",
         check_C_dup1},
        {"C_dup2", "bar N r-submodule (semi-r) forces N r-submodule (semi-r); converses under "
                   "JM = 0",
         check_C_dup2},
        {"C_quotient",
         "I/J semi-r when I semi-r with I cap zd(R) = {0}; I semi-r when I/J semi-r and J is "
         "an r-ideal",
         check_C_quotient},
        {"L_am", "zd(R join^f J) lies inside {(r,f(r)+j) : r in zd(R)} union {(r,s) : s kills a "
                 "nonzero element of J}",
         check_L_am},
        {"L_majed",
         "N = (IN :_M I) for a finitely generated faithful multiplication ideal I, and (JN :_M "
         "I) = J(N :_M I) when N lies inside IM",
         check_L_majed},
        {"L_max", "for nonempty S with S cap zd(R) = empty and S not inside I: (I:S) of a "
                  "semi-r ideal is semi-r",
         check_L_max},
        {"L_red", "a product ideal with zero component at a reduced factor is semi-r",
         check_L_red},
        {"L_smith", "(IN :_R M) = I(N :_R M) and (IM :_R M) = I over finitely generated "
                    "faithful multiplication modules",
         check_L_smith},
        {"P_Ca2", "I1 x R2 (resp. R1 x I2) is semi-r iff I1 (resp. I2) is semi-r",
         check_P_Ca2},
        {"P_S", "S^{-1}I semi-r when I semi-r, S cap zd(R) = empty, I cap S = empty; the "
                "pullback is semi-r when S cap Z_I(R) = empty",
         check_P_S},
        {"P_eqM", "under the D-annihilator condition: N semi-r iff r^2 K inside N with "
                  "Ann_M(r) = 0 forces rK inside N",
         check_P_eqM},
        {"P_essential",
         "if R is essential in S and J is a semi-r ideal of S then J cap R is semi-r in R",
         check_P_essential},
        {"P_f", "epimorphic images (kernel inside I, I cap zd(R) = {0}) and isomorphic "
                "preimages of semi-r ideals are semi-r",
         check_P_f},
        {"P_fsub", "epimorphic images (kernel inside N, N cap T(M) = {0}) and isomorphic "
                   "preimages of semi-r submodules are semi-r",
         check_P_fsub},
        {"P_ide", "I(+)M is semi-r iff I is; I(+)N is semi-r for I semi-r and N an "
                  "r-submodule; converses under Z(M) inside zd(R)",
         check_P_ide},
        {"P_inters", "the intersection of any family of semi-r ideals is semi-r (subsets of "
                     "size <= 3 exhausted)",
         check_P_inters},
        {"P_kpow_mod", "the semi-r submodule condition is equivalent to its k-power variant "
                       "(k = 3 crosschecked)",
         check_P_kpow_mod},
        {"P_mrad", "(N :_M I) stays semi-r when proper, and (M-rad(N) :_R M) lies inside zd(R) "
                   "union sqrt((N :_R M))",
         check_P_mrad},
        {"P_torsionfree", "semi-r and semiprime submodules coincide in torsion-free modules",
         check_P_torsionfree},
        {"T_IM", "N = IM with the D-annihilator condition is semi-r iff I is semi-r, over "
                 "finitely generated faithful multiplication modules",
         check_T_IM},
        {"T_IN", "IN is semi-r for semi-r I and pure semi-r N; IN semi-r forces I or N semi-r "
                 "when I is finitely generated faithful multiplication",
         check_T_IN},
        {"T_SM", "S^{-1}N semi-r when N semi-r, S cap Z(M) = empty, (N :_R M) cap S = empty; "
                 "the pullback is semi-r when S cap Z_N(M) = empty",
         check_T_SM},
        {"T_a1", "I semi-r gives I join^f J semi-r; converse under f(reg(R)) cap Z(J) = empty",
         check_T_a1},
        {"T_a2", "K semi-r in f(R)+J with zd(f(R)+J) = Z(J) gives bar K^f semi-r; bar K^f "
                 "semi-r with f(zd(R)) inside zd(f(R)+J) and f(zd(R))J = 0 gives K semi-r",
         check_T_a2},
        {"T_amalg", "with JM2 = 0: N1 r-submodule iff its transfer is; semi-r transfers "
                    "forward, and back when M2 is faithful",
         check_T_amalg},
        {"T_amalg2", "with T(M2) inside JM2 != 0: N2 r-submodule gives bar N2 r-submodule "
                     "(converse for f epi and phi iso); bar N2 semi-r gives N2 semi-r for f, "
                     "phi isomorphisms",
         check_T_amalg2},
        {"T_ca1", "both factors semi-r give a semi-r product; a semi-r product has a semi-r "
                  "factor; a factor outside zd forces the other factor semi-r",
         check_T_ca1},
        {"T_cchar",
         "over products of domains: I1 x ... x In is semi-r iff some component is zero or "
         "every proper component is semi-r (whole components allowed)",
         check_T_cchar},
        {"T_char", "for a proper ideal the square definition, the nonzero-square variant, the "
                   "k-power conditions (k = 2, 3, order) and sqrt(I) inside zd(R) union I are "
                   "equivalent",
         check_T_char},
        {"T_every", "R = U(R) union zd(R) iff every proper ideal is an r-ideal iff every "
                    "proper (principal) ideal is semi-r iff every semi-r ideal is an r-ideal",
         check_T_every},
        {"T_maxzd", "an ideal maximal among the semi-r ideals contained in zd(R) is an r-ideal",
         check_T_maxzd},
    };
    return defs;
}

}  // namespace

// ---------------------------------------------------------------------------
// public API
// ---------------------------------------------------------------------------

std::string CorpusSpec::digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    for (auto& e : exprs) mix(e);
    mix(include_symbolic ? "+symbolic" : "-symbolic");
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CorpusSpec default_corpus() {
    CorpusSpec spec;
    std::vector<std::string> exprs;
    auto add = [&](const std::string& e) {
        if (std::find(exprs.begin(), exprs.end(), e) == exprs.end()) exprs.push_back(e);
    };
    for (int n = 2; n <= 36; ++n) add("Z" + std::to_string(n));
    for (int a = 2; a <= 32; ++a)
        for (int b = 2; b <= 32; ++b)
            if (a * b <= 64) add("Z" + std::to_string(a) + " x Z" + std::to_string(b));
    add("Z2 x Z2 x Z2");
    add("Z2 x Z2 x Z2 x Z2");
    for (int n = 2; n <= 32; ++n)
        for (int d = 2; d <= n; ++d)
            if (n % d == 0 && n * d <= 64)
                add("idz(Z" + std::to_string(n) + ", Z" + std::to_string(d) + ")");
    for (int n = 2; n <= 8; ++n) {
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            // ideal <d> of Z_n; d = n gives <0>
            std::string g = d == n ? "0" : std::to_string(d);
            add("dup(Z" + std::to_string(n) + ", <" + g + ">)");
        }
    }
    spec.exprs = std::move(exprs);
    return spec;
}

CorpusSpec corpus_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open corpus file: " + path);
    CorpusSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line = line.substr(start);
        if (!line.empty()) spec.exprs.push_back(line);
    }
    return spec;
}

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (auto& d : check_defs()) out.push_back(d.id);
        return out;
    }();
    return ids;
}

bool is_check_id(const std::string& id) {
    for (auto& d : check_defs())
        if (d.id == id) return true;
    return false;
}

std::string check_anchor(const std::string& id) {
    for (auto& d : check_defs())
        if (d.id == id) return d.anchor;
    throw UsageError("unknown check id: " + id);
}

namespace {

CheckResult run_one(const CheckDef& def, const Ctx& ctx) {
    CheckResult res;
    res.id = def.id;
    res.anchor = def.anchor;
    auto start = std::chrono::steady_clock::now();
    try {
        def.fn(ctx, res);
        res.verdict.status = res.verdict.hypothesis_hits > 0 ? "proved" : "vacuous_pass";
    } catch (const Refuted& r) {
        res.verdict.status = "refuted";
        res.verdict.witness = r.witness;
    } catch (const Error& e) {
        // crosscheck assertions inside the engines surface as refutations
        res.verdict.status = "refuted";
        res.verdict.witness = e.what();
    }
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return res;
}

int thread_budget(int requested) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("RINGLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

}  // namespace

CheckResult run_check(const std::string& id, const CorpusSpec& corpus) {
    for (auto& d : check_defs())
        if (d.id == id) {
            Ctx ctx = materialize(corpus);
            return run_one(d, ctx);
        }
    throw UsageError("unknown check id: " + id);
}

SuiteReport run_suite(const CorpusSpec& corpus, std::vector<std::string> ids, int threads) {
    if (ids.empty()) ids = all_check_ids();
    for (auto& id : ids)
        if (!is_check_id(id)) throw UsageError("unknown check id: " + id);
    Ctx ctx = materialize(corpus);
    SuiteReport report;
    report.corpus_digest = corpus.digest();
    report.checks.resize(ids.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= ids.size()) break;
            for (auto& d : check_defs())
                if (d.id == ids[i]) report.checks[i] = run_one(d, ctx);
        }
    };
    int n = thread_budget(threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return report;
}

// ---------------------------------------------------------------------------
// counterexample search
// ---------------------------------------------------------------------------

namespace {

struct FlagExpr {
    enum class Kind { Name, Not, And, Or } kind;
    std::string name;
    std::vector<FlagExpr> kids;
};

struct FlagParser {
    const std::string& s;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at(char c) {
        ws();
        return pos < s.size() && s[pos] == c;
    }
    FlagExpr parse_or() {
        FlagExpr e = parse_and();
        while (at('|')) {
            ++pos;
            FlagExpr o{FlagExpr::Kind::Or, "", {}};
            o.kids.push_back(std::move(e));
            o.kids.push_back(parse_and());
            e = std::move(o);
        }
        return e;
    }
    FlagExpr parse_and() {
        FlagExpr e = parse_not();
        while (at('&')) {
            ++pos;
            FlagExpr o{FlagExpr::Kind::And, "", {}};
            o.kids.push_back(std::move(e));
            o.kids.push_back(parse_not());
            e = std::move(o);
        }
        return e;
    }
    FlagExpr parse_not() {
        if (at('!')) {
            ++pos;
            FlagExpr o{FlagExpr::Kind::Not, "", {}};
            o.kids.push_back(parse_not());
            return o;
        }
        if (at('(')) {
            ++pos;
            FlagExpr e = parse_or();
            if (!at(')')) throw ParseError(pos, "')'", "flag expression: expected ')'");
            ++pos;
            return e;
        }
        ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos)
            throw ParseError(pos, "a flag name", "flag expression: expected a flag name");
        return FlagExpr{FlagExpr::Kind::Name, s.substr(start, pos - start), {}};
    }
};

void collect_names(const FlagExpr& e, std::vector<std::string>& out) {
    if (e.kind == FlagExpr::Kind::Name)
        out.push_back(e.name);
    else
        for (auto& k : e.kids) collect_names(k, out);
}

bool eval_expr(const FlagExpr& e, const std::function<bool(const std::string&)>& lookup) {
    switch (e.kind) {
        case FlagExpr::Kind::Name:
            return lookup(e.name);
        case FlagExpr::Kind::Not:
            return !eval_expr(e.kids[0], lookup);
        case FlagExpr::Kind::And:
            return eval_expr(e.kids[0], lookup) && eval_expr(e.kids[1], lookup);
        case FlagExpr::Kind::Or:
            return eval_expr(e.kids[0], lookup) || eval_expr(e.kids[1], lookup);
    }
    return false;
}

const std::vector<std::string> kIdealFlagNames = {"proper", "prime",  "maximal", "semiprime",
                                                  "r",      "pr",     "n",       "semi_n",
                                                  "semi_r"};
const std::vector<std::string> kSubFlagNames = {"sub_proper", "sub_prime", "sub_semiprime",
                                                "sub_r",      "sub_sr",    "sub_sr_alt",
                                                "sub_semi_r", "sub_d"};

}  // namespace

std::vector<SearchHit> search_counterexamples(const std::string& predicate,
                                              const CorpusSpec& corpus, int max_order) {
    FlagParser p{predicate};
    FlagExpr expr = p.parse_or();
    p.ws();
    if (p.pos != predicate.size())
        throw ParseError(p.pos, "end of input", "flag expression: trailing input");
    std::vector<std::string> names;
    collect_names(expr, names);
    bool ideal_mode = false, sub_mode = false;
    for (auto& n : names) {
        if (std::find(kIdealFlagNames.begin(), kIdealFlagNames.end(), n) != kIdealFlagNames.end())
            ideal_mode = true;
        else if (std::find(kSubFlagNames.begin(), kSubFlagNames.end(), n) != kSubFlagNames.end())
            sub_mode = true;
        else
            throw UsageError("unknown flag name: " + n);
    }
    if (ideal_mode && sub_mode)
        throw UsageError("flag expression mixes ideal and submodule flags");

    std::vector<SearchHit> hits;
    Ctx ctx = materialize(corpus);
    // symbolic registry objects, when every referenced flag is decidable there
    if (corpus.include_symbolic) {
        const std::vector<std::string> sym_ok = {"proper", "semiprime", "r", "semi_r"};
        bool usable = ideal_mode;
        for (auto& n : names)
            if (std::find(sym_ok.begin(), sym_ok.end(), n) == sym_ok.end()) usable = false;
        if (usable) {
            std::vector<SymIdeal> registry;
            for (long long n = 0; n <= 12; ++n)
                registry.push_back(sym_ideal(sym_zz(1), {n}, std::to_string(n) + "Z"));
            for (long long n1 = 0; n1 <= 12; ++n1)
                for (long long n2 = 0; n2 <= 12; ++n2)
                    registry.push_back(sym_ideal(sym_zz(2), {n1, n2},
                                                 std::to_string(n1) + "Z x " +
                                                     std::to_string(n2) + "Z"));
            SymRing idz = sym_zz(1);
            idz.idz_k = 4;
            idz.expr = "idz(ZZ, Z4)";
            for (long long n : {0, 2, 3, 4, 8})
                registry.push_back(sym_ideal(idz, {n}, std::to_string(n) + "Z(+)Z4"));
            for (auto& I : registry) {
                auto f = sym_classify(I);
                auto lookup = [&](const std::string& n) -> bool {
                    if (n == "proper") return f.is_proper;
                    if (n == "semiprime") return f.is_proper && f.is_semiprime;
                    if (n == "r") return f.is_proper && f.is_r;
                    if (n == "semi_r") return f.is_proper && f.is_semi_r;
                    return false;
                };
                if (eval_expr(expr, lookup)) hits.push_back({I.ring.expr, I.label, "symbolic"});
            }
        }
        const std::vector<std::string> sub_ok = {"sub_proper", "sub_semiprime", "sub_r",
                                                 "sub_sr",     "sub_sr_alt",   "sub_semi_r",
                                                 "sub_d"};
        bool sub_usable = sub_mode;
        for (auto& n : names)
            if (std::find(sub_ok.begin(), sub_ok.end(), n) == sub_ok.end()) sub_usable = false;
        if (sub_usable) {
            std::vector<std::pair<FGZModule, std::vector<std::vector<long long>>>> lattices = {
                {{{0, 0}, "ZZ x ZZ"}, {{6, 0}}},
                {{{0, 0}, "ZZ x ZZ"}, {{4, 0}}},
                {{{8, 0}, "Z8 x ZZ"}, {{4, 0}}},
                {{{0}, "ZZ"}, {{0}}},
                {{{12}, "Z12"}, {{4}}},
            };
            for (auto& [mod, gens] : lattices) {
                auto N = make_lattice_submodule(mod, gens, "");
                if (!lattice_is_proper(N)) continue;
                auto f = sym_classify_submodule(N);
                auto lookup = [&](const std::string& n) -> bool {
                    if (n == "sub_proper") return f.is_proper;
                    if (n == "sub_semiprime") return f.is_semiprime;
                    if (n == "sub_r") return f.is_r;
                    if (n == "sub_sr") return f.is_sr_intro;
                    if (n == "sub_sr_alt") return f.is_sr_alt;
                    if (n == "sub_semi_r") return f.is_semi_r;
                    if (n == "sub_d") return f.satisfies_D;
                    return false;
                };
                std::string obj = "<";
                for (size_t i = 0; i < gens.size(); ++i) {
                    if (i) obj += ",";
                    obj += "(";
                    for (size_t k = 0; k < gens[i].size(); ++k)
                        obj += (k ? "," : "") + std::to_string(gens[i][k]);
                    obj += ")";
                }
                if (eval_expr(expr, lookup))
                    hits.push_back({mod.expr + " over ZZ", obj + ">", "symbolic"});
            }
        }
    }
    if (ideal_mode) {
        for (auto& e : ctx.rings) {
            if (e.ring.table->order > static_cast<uint32_t>(max_order)) continue;
            for (auto& I : all_ideals(e.ring.table)) {
                auto f = classify_ideal(I);
                auto lookup = [&](const std::string& n) -> bool {
                    if (n == "proper") return f.is_proper;
                    if (n == "prime") return f.is_prime;
                    if (n == "maximal") return f.is_maximal;
                    if (n == "semiprime") return f.is_semiprime;
                    if (n == "r") return f.is_r;
                    if (n == "pr") return f.is_pr;
                    if (n == "n") return f.is_n;
                    if (n == "semi_n") return f.is_semi_n;
                    if (n == "semi_r") return f.is_semi_r;
                    return false;
                };
                if (eval_expr(expr, lookup))
                    hits.push_back({e.expr, gens_str(*e.ring.table, I.gens),
                                    "order " + std::to_string(e.ring.table->order)});
            }
        }
    } else {
        for (auto& me : module_corpus(ctx, std::min(max_order, 12), 16)) {
            for (auto& N : all_submodules(me.mod)) {
                auto f = N.is_proper() ? classify_submodule(N) : SubmoduleFlags{};
                auto lookup = [&](const std::string& n) -> bool {
                    if (n == "sub_proper") return f.is_proper;
                    if (n == "sub_prime") return f.is_prime;
                    if (n == "sub_semiprime") return f.is_semiprime;
                    if (n == "sub_r") return f.is_r;
                    if (n == "sub_sr") return f.is_sr_intro;
                    if (n == "sub_sr_alt") return f.is_sr_alt;
                    if (n == "sub_semi_r") return f.is_semi_r;
                    if (n == "sub_d") return f.satisfies_D;
                    return false;
                };
                if (eval_expr(expr, lookup)) {
                    std::string obj = "<";
                    for (size_t i = 0; i < N.gens.size(); ++i) {
                        if (i) obj += ",";
                        obj += me.mod->names[N.gens[i]];
                    }
                    hits.push_back({me.desc, obj + ">", ""});
                }
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return std::tie(a.carrier, a.object) < std::tie(b.carrier, b.object);
    });
    return hits;
}

}  // namespace ringlab
