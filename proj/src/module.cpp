#include "ringlab/module.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlab {

namespace {

ElemSet close_submodule(const ModuleTable& M, ElemSet s) {
    std::vector<uint16_t> queue;
    for (uint32_t i = 0; i < M.order; ++i)
        if (s.test(i)) queue.push_back(static_cast<uint16_t>(i));
    while (!queue.empty()) {
        uint16_t x = queue.back();
        queue.pop_back();
        for (ElementId r = 0; r < M.ring->order; ++r) {
            uint16_t p = M.s(r, x);
            if (!s.test(p)) {
                s.set(p);
                queue.push_back(p);
            }
        }
        for (uint32_t y = 0; y < M.order; ++y) {
            if (!s.test(y)) continue;
            uint16_t q = M.a(x, static_cast<uint16_t>(y));
            if (!s.test(q)) {
                s.set(q);
                queue.push_back(q);
            }
        }
    }
    return s;
}

ElemSet elementwise_sum(const ModuleTable& M, const ElemSet& A, const ElemSet& B) {
    ElemSet s(M.order);
    for (uint32_t x = 0; x < M.order; ++x) {
        if (!A.test(x)) continue;
        for (uint32_t y = 0; y < M.order; ++y)
            if (B.test(y)) s.set(M.a(static_cast<uint16_t>(x), static_cast<uint16_t>(y)));
    }
    return s;
}

}  // namespace

std::vector<ModuleViolation> verify_module_axioms(const ModuleTable& M) {
    std::vector<ModuleViolation> out;
    auto bad = [&](const char* ax, uint16_t x, uint16_t y, uint16_t z) {
        out.push_back({ax, {x, y, z}});
    };
    const uint16_t n = M.order;
    const RingTable& R = *M.ring;
    if (n == 0 || M.madd.size() != size_t(n) * n || M.act.size() != size_t(R.order) * n) {
        out.push_back({"table shape", {0, 0, 0}});
        return out;
    }
    for (uint16_t x = 0; x < n; ++x) {
        if (M.a(0, x) != x) bad("additive identity at index 0", 0, x, 0);
        if (M.s(R.one, x) != x) bad("unital action", R.one, x, 0);
        bool inv = false;
        for (uint16_t y = 0; y < n && !inv; ++y) inv = M.a(x, y) == 0;
        if (!inv) bad("additive inverse", x, 0, 0);
    }
    for (uint16_t x = 0; x < n; ++x)
        for (uint16_t y = 0; y < n; ++y) {
            if (M.a(x, y) != M.a(y, x)) bad("addition commutative", x, y, 0);
            for (uint16_t z = 0; z < n; ++z)
                if (M.a(M.a(x, y), z) != M.a(x, M.a(y, z))) {
                    bad("addition associative", x, y, z);
                    if (out.size() > 32) return out;
                }
        }
    for (ElementId r = 0; r < R.order; ++r)
        for (uint16_t x = 0; x < n; ++x) {
            for (uint16_t y = 0; y < n; ++y)
                if (M.s(r, M.a(x, y)) != M.a(M.s(r, x), M.s(r, y))) bad("action additive in m", r, x, y);
            for (ElementId q = 0; q < R.order; ++q) {
                if (M.s(R.a(r, q), x) != M.a(M.s(r, x), M.s(q, x))) bad("action additive in r", r, q, x);
                if (M.s(R.m(r, q), x) != M.s(r, M.s(q, x))) bad("action associative", r, q, x);
                if (out.size() > 32) return out;
            }
        }
    return out;
}

ModulePtr make_module(ModuleTable t, bool verify) {
    if (t.order == 0) throw Error("module must be nonempty");
    if (verify) {
        auto v = verify_module_axioms(t);
        if (!v.empty()) throw Error("module axiom violation: " + v.front().axiom);
    }
    const uint16_t n = t.order;
    const RingTable& R = *t.ring;
    t.mneg.assign(n, 0);
    for (uint16_t x = 0; x < n; ++x)
        for (uint16_t y = 0; y < n; ++y)
            if (t.a(x, y) == 0) t.mneg[x] = y;
    t.torsion = ElemSet(n);
    t.zm = ElemSet(R.order);
    t.ann = ElemSet(R.order);
    for (ElementId r = 0; r < R.order; ++r) {
        bool kills_all = true;
        for (uint16_t m = 0; m < n; ++m) {
            if (t.s(r, m) == 0) {
                if (m != 0 && r != 0) t.torsion.set(m);
                if (m != 0) t.zm.set(r);
            } else {
                kills_all = false;
            }
        }
        if (kills_all) t.ann.set(r);
    }
    // 0_M is killed by every nonzero scalar, and rings here have order >= 2
    t.torsion.set(0);
    return std::make_shared<const ModuleTable>(std::move(t));
}

ModulePtr build_module(RingPtr R, const ModuleKind& kind) {
    if (std::holds_alternative<SelfModule>(kind)) {
        ModuleTable t;
        t.ring = R;
        t.order = R->order;
        t.madd = R->add;
        t.act = R->mul;
        t.names = R->names;
        t.expr = "self";
        if (R->zn_modulus > 0) t.cyclic_modulus = R->zn_modulus;
        return make_module(std::move(t), false);
    }
    if (auto* c = std::get_if<CyclicModule>(&kind)) {
        if (R->zn_modulus <= 0)
            throw Error("build_module: cyclic(d) requires a Z_n base ring");
        int n = R->zn_modulus, d = c->d;
        if (d < 1 || n % d != 0)
            throw Error("build_module: cyclic(" + std::to_string(d) + ") needs d dividing " +
                        std::to_string(n));
        ModuleTable t;
        t.ring = R;
        t.order = static_cast<uint16_t>(d);
        t.madd.resize(size_t(d) * d);
        t.act.resize(size_t(n) * d);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) t.madd[size_t(x) * d + y] = static_cast<uint16_t>((x + y) % d);
        for (int r = 0; r < n; ++r)
            for (int m = 0; m < d; ++m) t.act[size_t(r) * d + m] = static_cast<uint16_t>((r * m) % d);
        t.names.resize(d);
        for (int x = 0; x < d; ++x) t.names[x] = std::to_string(x);
        t.cyclic_modulus = d;
        t.expr = "Z" + std::to_string(d);
        return make_module(std::move(t), t.order <= 64);
    }
    const auto& prod = std::get<ProductModule>(kind);
    if (prod.factors.size() < 2) throw UsageError("build_module: product needs >= 2 factors");
    uint64_t ord = 1;
    for (auto& f : prod.factors) {
        if (f->ring != R && !f->ring->same_table(*R)) throw Error("build_module: factor ring mismatch");
        ord *= f->order;
        if (ord > 4096) throw CapacityError("build_module: order exceeds 4096");
    }
    const uint16_t n = static_cast<uint16_t>(ord);
    auto split = [&](uint16_t x) {
        std::vector<uint16_t> t(prod.factors.size());
        for (size_t i = prod.factors.size(); i-- > 0;) {
            t[i] = static_cast<uint16_t>(x % prod.factors[i]->order);
            x = static_cast<uint16_t>(x / prod.factors[i]->order);
        }
        return t;
    };
    auto join = [&](const std::vector<uint16_t>& t) {
        uint32_t x = 0;
        for (size_t i = 0; i < prod.factors.size(); ++i) x = x * prod.factors[i]->order + t[i];
        return static_cast<uint16_t>(x);
    };
    ModuleTable t;
    t.ring = R;
    t.order = n;
    t.madd.resize(size_t(n) * n);
    t.act.resize(size_t(R->order) * n);
    t.names.resize(n);
    for (uint16_t x = 0; x < n; ++x) {
        auto tx = split(x);
        std::string nm = "(";
        for (size_t i = 0; i < prod.factors.size(); ++i) {
            if (i) nm += ",";
            nm += prod.factors[i]->names[tx[i]];
        }
        t.names[x] = nm + ")";
        for (uint16_t y = 0; y < n; ++y) {
            auto ty = split(y);
            std::vector<uint16_t> sa(prod.factors.size());
            for (size_t i = 0; i < prod.factors.size(); ++i) sa[i] = prod.factors[i]->a(tx[i], ty[i]);
            t.madd[size_t(x) * n + y] = join(sa);
        }
        for (ElementId r = 0; r < R->order; ++r) {
            std::vector<uint16_t> sm(prod.factors.size());
            for (size_t i = 0; i < prod.factors.size(); ++i) sm[i] = prod.factors[i]->s(r, tx[i]);
            t.act[size_t(r) * n + x] = join(sm);
        }
    }
    std::string e = "(";
    for (size_t i = 0; i < prod.factors.size(); ++i) e += (i ? " x " : "") + prod.factors[i]->expr;
    t.expr = e + ")";
    return make_module(std::move(t), false);
}

Submodule generate_submodule(ModulePtr M, const std::vector<uint16_t>& gens) {
    ElemSet s(M->order);
    s.set(0);
    for (uint16_t g : gens) {
        if (g >= M->order) throw Error("generate_submodule: element index out of range");
        s.set(g);
    }
    return Submodule{M, close_submodule(*M, std::move(s)), gens};
}

Submodule submodule_from_set(ModulePtr M, ElemSet members) {
    std::vector<uint16_t> gens;
    ElemSet span(M->order);
    span.set(0);
    while (span != members) {
        uint16_t next = 0;
        bool got = false;
        for (uint32_t i = 1; i < M->order; ++i)
            if (members.test(i) && !span.test(i)) {
                next = static_cast<uint16_t>(i);
                got = true;
                break;
            }
        if (!got) throw Error("submodule_from_set: set is not a submodule");
        gens.push_back(next);
        span.set(next);
        span = close_submodule(*M, std::move(span));
    }
    return Submodule{M, std::move(members), std::move(gens)};
}

std::vector<Submodule> all_submodules(ModulePtr M) {
    std::vector<ElemSet> cyclic;
    std::unordered_set<ElemSet, ElemSetHash> seen;
    for (uint16_t x = 0; x < M->order; ++x) {
        ElemSet c(M->order);
        c.set(0);
        c.set(x);
        c = close_submodule(*M, std::move(c));
        if (seen.insert(c).second) cyclic.push_back(c);
    }
    std::vector<ElemSet> work = cyclic;
    std::unordered_set<ElemSet, ElemSetHash> all(cyclic.begin(), cyclic.end());
    while (!work.empty()) {
        ElemSet cur = work.back();
        work.pop_back();
        for (const auto& c : cyclic) {
            if (c.subset_of(cur)) continue;
            ElemSet join = elementwise_sum(*M, cur, c);
            if (all.insert(join).second) {
                work.push_back(join);
                if (all.size() > 65536) throw CapacityError("all_submodules: more than 2^16");
            }
        }
    }
    std::vector<ElemSet> sorted(all.begin(), all.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Submodule> out;
    out.reserve(sorted.size());
    for (auto& s : sorted) out.push_back(submodule_from_set(M, std::move(s)));
    return out;
}

const ElemSet& torsion_set(const ModuleTable& M) { return M.torsion; }

Submodule ann_scalar(ModulePtr M, ElementId r) {
    ElemSet s(M->order);
    for (uint16_t m = 0; m < M->order; ++m)
        if (M->s(r, m) == 0) s.set(m);
    return submodule_from_set(M, std::move(s));
}

Ideal ann_element(ModulePtr M, uint16_t m) {
    ElemSet s(M->ring->order);
    for (ElementId r = 0; r < M->ring->order; ++r)
        if (M->s(r, m) == 0) s.set(r);
    return ideal_from_set(M->ring, std::move(s));
}

Ideal colon_rm(const Submodule& N) {
    const ModuleTable& M = *N.mod;
    ElemSet s(M.ring->order);
    for (ElementId r = 0; r < M.ring->order; ++r) {
        bool ok = true;
        for (uint16_t m = 0; m < M.order && ok; ++m) ok = N.members.test(M.s(r, m));
        if (ok) s.set(r);
    }
    return ideal_from_set(M.ring, std::move(s));
}

Submodule colon_mi(const Submodule& N, const Ideal& I) {
    const ModuleTable& M = *N.mod;
    if (I.ring != M.ring && !I.ring->same_table(*M.ring))
        throw UsageError("colon_mi: ring mismatch");
    ElemSet s(M.order);
    for (uint16_t m = 0; m < M.order; ++m) {
        bool ok = true;
        for (uint32_t i = 0; i < I.ring->order && ok; ++i)
            if (I.members.test(i)) ok = N.members.test(M.s(static_cast<ElementId>(i), m));
        if (ok) s.set(m);
    }
    return submodule_from_set(N.mod, std::move(s));
}

Submodule ideal_times_module(const Ideal& I, ModulePtr M) {
    ElemSet s(M->order);
    s.set(0);
    for (uint32_t i = 0; i < I.ring->order; ++i) {
        if (!I.members.test(i)) continue;
        for (uint16_t m = 0; m < M->order; ++m) s.set(M->s(static_cast<ElementId>(i), m));
    }
    return submodule_from_set(M, close_submodule(*M, std::move(s)));
}

Submodule ideal_times_submodule(const Ideal& I, const Submodule& N) {
    const ModuleTable& M = *N.mod;
    ElemSet s(M.order);
    s.set(0);
    for (uint32_t i = 0; i < I.ring->order; ++i) {
        if (!I.members.test(i)) continue;
        for (uint32_t m = 0; m < M.order; ++m)
            if (N.members.test(m)) s.set(M.s(static_cast<ElementId>(i), static_cast<uint16_t>(m)));
    }
    return submodule_from_set(N.mod, close_submodule(M, std::move(s)));
}

ModuleFlags module_flags(ModulePtr M) {
    ModuleFlags f;
    f.is_faithful = M->ann.count() == 1;
    f.is_torsion = M->torsion.count() == M->order || M->order == 1;
    f.is_torsion_free = M->torsion.count() <= 1;
    f.is_multiplication = true;
    for (const auto& N : all_submodules(M)) {
        Submodule im = ideal_times_module(colon_rm(N), M);
        if (im.members != N.members) {
            f.is_multiplication = false;
            break;
        }
    }
    return f;
}

bool is_pure(const Submodule& N) {
    for (const auto& J : all_ideals(N.mod->ring)) {
        Submodule jn = ideal_times_submodule(J, N);
        Submodule jm = ideal_times_module(J, N.mod);
        if (jn.members != (jm.members & N.members)) return false;
    }
    return true;
}

std::vector<Submodule> prime_submodules(ModulePtr M) {
    std::vector<Submodule> out;
    for (auto& P : all_submodules(M)) {
        if (!P.is_proper()) continue;
        Ideal pm = colon_rm(P);
        bool prime = true;
        for (ElementId r = 0; r < M->ring->order && prime; ++r)
            for (uint16_t m = 0; m < M->order && prime; ++m)
                if (P.members.test(M->s(r, m)) && !P.members.test(m) && !pm.members.test(r))
                    prime = false;
        if (prime) out.push_back(std::move(P));
    }
    return out;
}

Submodule m_rad(const Submodule& N) {
    const ModulePtr& M = N.mod;
    // intersection over the empty family is M
    ElemSet inter(M->order);
    for (uint32_t i = 0; i < M->order; ++i) inter.set(i);
    for (const auto& P : prime_submodules(M)) {
        if (!N.members.subset_of(P.members)) continue;
        inter = inter & P.members;
    }
    Submodule result = submodule_from_set(M, std::move(inter));
    ModuleFlags mf = module_flags(M);
    if (mf.is_faithful && mf.is_multiplication) {
        Submodule viaideal = ideal_times_module(radical(colon_rm(N)), M);
        if (viaideal.members != result.members)
            throw Error("m_rad: prime-intersection and radical routes disagree on " +
                        M->ring->expr);
    }
    return result;
}

SubmoduleFlags classify_submodule(const Submodule& N) {
    SubmoduleFlags f;
    f.is_proper = N.is_proper();
    if (!f.is_proper) return f;
    const ModuleTable& M = *N.mod;
    const RingTable& R = *M.ring;
    Ideal nm = colon_rm(N);

    std::vector<bool> ann_zero(M.order, true);  // Ann_R(m) = 0
    for (uint16_t m = 0; m < M.order; ++m)
        for (ElementId c = 1; c < R.order; ++c)
            if (M.s(c, m) == 0) {
                ann_zero[m] = false;
                break;
            }

    f.is_prime = f.is_semiprime = f.is_r = f.is_sr_intro = f.is_sr_alt = f.is_semi_r = true;
    for (ElementId r = 0; r < R.order; ++r) {
        bool reg_scalar = M.scalar_regular(r);
        ElementId r2 = R.m(r, r);
        for (uint16_t m = 0; m < M.order; ++m) {
            bool ann_elem_zero = ann_zero[m];
            uint16_t rm = M.s(r, m);
            uint16_t r2m = M.s(r2, m);
            if (N.members.test(r2m) && !N.members.test(rm)) {
                if (f.is_semiprime) {
                    f.is_semiprime = false;
                    f.wit_semiprime = FlagWitness{r, m, true};
                }
                if (f.is_semi_r && reg_scalar && ann_elem_zero) {
                    f.is_semi_r = false;
                    f.wit_semi_r = FlagWitness{r, m, true};
                }
            }
            if (N.members.test(rm)) {
                if (f.is_prime && !N.members.test(m) && !nm.members.test(r)) f.is_prime = false;
                if (f.is_r && reg_scalar && !N.members.test(m)) {
                    f.is_r = false;
                    f.wit_r = FlagWitness{r, m, true};
                }
                if (f.is_sr_intro && ann_elem_zero && !nm.members.test(r)) {
                    f.is_sr_intro = false;
                    f.wit_sr_intro = FlagWitness{r, m, true};
                }
                if (f.is_sr_alt && ann_elem_zero && !N.members.test(m)) {
                    f.is_sr_alt = false;
                    f.wit_sr_alt = FlagWitness{r, m, true};
                }
            }
        }
    }
    f.satisfies_D = d_annihilator(N);

    // k-power crosscheck for k = 3
    bool k3 = true;
    for (ElementId r = 0; r < R.order && k3; ++r) {
        if (!M.scalar_regular(r)) continue;
        ElementId r3 = R.m(R.m(r, r), r);
        for (uint16_t m = 0; m < M.order && k3; ++m) {
            if (!ann_zero[m]) continue;
            if (N.members.test(M.s(r3, m)) && !N.members.test(M.s(r, m))) k3 = false;
        }
    }
    if (k3 != f.is_semi_r)
        throw Error("classify_submodule: k-power route disagrees on " + R.expr);

    auto implies = [](bool p, bool q) { return !p || q; };
    if (!implies(f.is_r, f.is_semi_r) || !implies(f.is_semiprime, f.is_semi_r) ||
        !implies(f.is_sr_intro, f.is_semi_r))
        throw Error("classify_submodule: implication diagram violated on " + R.expr);
    return f;
}

bool submodule_is_semi_r(const Submodule& N) {
    if (!N.is_proper()) return false;
    const ModuleTable& M = *N.mod;
    const RingTable& R = *M.ring;
    for (ElementId r = 0; r < R.order; ++r) {
        if (!M.scalar_regular(r)) continue;
        ElementId r2 = R.m(r, r);
        for (uint16_t m = 0; m < M.order; ++m) {
            if (!N.members.test(M.s(r2, m)) || N.members.test(M.s(r, m))) continue;
            bool ann_zero = true;
            for (ElementId c = 1; c < R.order && ann_zero; ++c)
                if (M.s(c, m) == 0) ann_zero = false;
            if (ann_zero) return false;
        }
    }
    return true;
}

bool submodule_is_r(const Submodule& N) {
    if (!N.is_proper()) return false;
    const ModuleTable& M = *N.mod;
    for (ElementId r = 0; r < M.ring->order; ++r) {
        if (!M.scalar_regular(r)) continue;
        for (uint16_t m = 0; m < M.order; ++m)
            if (N.members.test(M.s(r, m)) && !N.members.test(m)) return false;
    }
    return true;
}

bool d_annihilator(const Submodule& N) {
    const ModuleTable& M = *N.mod;
    const RingTable& R = *M.ring;
    ElemSet zero_only(M.order);
    zero_only.set(0);
    for (const auto& K : all_submodules(N.mod)) {
        for (ElementId r = 0; r < R.order; ++r) {
            if (!M.scalar_regular(r)) continue;
            bool rk_in = true;
            for (uint32_t k = 0; k < M.order && rk_in; ++k)
                if (K.members.test(k)) rk_in = N.members.test(M.s(r, static_cast<uint16_t>(k)));
            if (!rk_in) continue;
            if (!K.members.subset_of(N.members) && (K.members & M.torsion) != zero_only)
                return false;
        }
    }
    return true;
}

}  // namespace ringlab
