#include "ringlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace ringlab {

namespace {

std::vector<uint32_t> additive_orders_ring(const RingTable& R) {
    std::vector<uint32_t> ord(R.order, 1);
    for (ElementId x = 0; x < R.order; ++x) {
        ElementId acc = x;
        uint32_t k = 1;
        while (acc != 0) {
            acc = R.a(acc, x);
            ++k;
        }
        ord[x] = k;
    }
    return ord;
}

std::vector<uint32_t> additive_orders_mod(const ModuleTable& M) {
    std::vector<uint32_t> ord(M.order, 1);
    for (uint16_t x = 0; x < M.order; ++x) {
        uint16_t acc = x;
        uint32_t k = 1;
        while (acc != 0) {
            acc = M.a(acc, x);
            ++k;
        }
        ord[x] = k;
    }
    return ord;
}

ElemSet ring_subset_closure(const RingTable& R, ElemSet s) {
    std::vector<ElementId> queue;
    for (uint32_t i = 0; i < R.order; ++i)
        if (s.test(i)) queue.push_back(static_cast<ElementId>(i));
    while (!queue.empty()) {
        ElementId x = queue.back();
        queue.pop_back();
        for (uint32_t y = 0; y < R.order; ++y) {
            if (!s.test(y)) continue;
            for (ElementId z :
                 {R.a(x, static_cast<ElementId>(y)), R.m(x, static_cast<ElementId>(y))})
                if (!s.test(z)) {
                    s.set(z);
                    queue.push_back(z);
                }
        }
    }
    return s;
}

}  // namespace

bool hom_valid(const RingHom& f) {
    const RingTable& A = *f.src;
    const RingTable& B = *f.dst;
    if (f.map.size() != A.order) return false;
    if (f.map[A.one] != B.one) return false;
    for (ElementId x = 0; x < A.order; ++x)
        for (ElementId y = 0; y < A.order; ++y) {
            if (f.map[A.a(x, y)] != B.a(f.map[x], f.map[y])) return false;
            if (f.map[A.m(x, y)] != B.m(f.map[x], f.map[y])) return false;
        }
    return true;
}

bool hom_surjective(const RingHom& f) {
    ElemSet img(f.dst->order);
    for (ElementId v : f.map) img.set(v);
    return img.count() == f.dst->order;
}

bool hom_injective(const RingHom& f) {
    ElemSet img(f.dst->order);
    for (ElementId v : f.map) {
        if (img.test(v)) return false;
        img.set(v);
    }
    return true;
}

RingHom identity_hom(RingPtr R) {
    RingHom f{R, R, {}};
    f.map.resize(R->order);
    for (ElementId x = 0; x < R->order; ++x) f.map[x] = x;
    return f;
}

QuotientRing quotient_ring(RingPtr R, const Ideal& I) {
    if (!I.is_proper()) throw UsageError("quotient_ring: ideal must be proper");
    if (I.ring != R && !I.ring->same_table(*R)) throw UsageError("quotient_ring: ring mismatch");
    const uint16_t n = R->order;
    std::vector<ElementId> rep(n);
    for (ElementId x = 0; x < n; ++x) {
        ElementId best = x;
        for (uint32_t i = 0; i < n; ++i)
            if (I.members.test(i)) best = std::min(best, R->a(x, static_cast<ElementId>(i)));
        rep[x] = best;
    }
    std::vector<ElementId> reps;
    for (ElementId x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<ElementId> idx(n, 0);
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<ElementId>(i);

    RingTable t;
    t.order = static_cast<uint16_t>(reps.size());
    t.add.resize(size_t(t.order) * t.order);
    t.mul.resize(size_t(t.order) * t.order);
    t.names.resize(t.order);
    for (size_t i = 0; i < reps.size(); ++i) {
        t.names[i] = "[" + R->names[reps[i]] + "]";
        for (size_t k = 0; k < reps.size(); ++k) {
            t.add[i * t.order + k] = idx[rep[R->a(reps[i], reps[k])]];
            t.mul[i * t.order + k] = idx[rep[R->m(reps[i], reps[k])]];
        }
    }
    t.one = idx[rep[R->one]];
    t.expr = R->expr.empty() ? "quotient" : R->expr + "/I";
    QuotientRing q;
    q.ring = make_ring(std::move(t), t.order <= 64);
    q.proj.resize(n);
    for (ElementId x = 0; x < n; ++x) q.proj[x] = idx[rep[x]];
    return q;
}

Ideal push_ideal(const QuotientRing& Q, const Ideal& I) {
    ElemSet s(Q.ring->order);
    for (uint32_t x = 0; x < I.ring->order; ++x)
        if (I.members.test(x)) s.set(Q.proj[x]);
    return ideal_from_set(Q.ring, std::move(s));
}

Localization localization(RingPtr R, const ElemSet& S) {
    if (S.none()) throw UsageError("localization: S must be nonempty");
    ElemSet sat = S;
    sat.set(R->one);
    bool grew = true;
    while (grew) {
        grew = false;
        auto mem = sat.elements();
        for (uint32_t x : mem)
            for (uint32_t y : mem) {
                ElementId p = R->m(static_cast<ElementId>(x), static_cast<ElementId>(y));
                if (!sat.test(p)) {
                    sat.set(p);
                    grew = true;
                }
            }
    }
    if (sat.test(0)) throw Error("localization: saturation of S contains 0");
    auto svals = sat.elements();

    auto equiv = [&](ElementId r, ElementId s, ElementId r2, ElementId s2) {
        ElementId d = R->sub(R->m(r, s2), R->m(r2, s));
        for (uint32_t u : svals)
            if (R->m(static_cast<ElementId>(u), d) == 0) return true;
        return false;
    };

    std::vector<std::pair<ElementId, ElementId>> reps;
    std::vector<std::vector<ElementId>> cls(R->order, std::vector<ElementId>(svals.size()));
    for (ElementId r = 0; r < R->order; ++r)
        for (size_t si = 0; si < svals.size(); ++si) {
            ElementId s = static_cast<ElementId>(svals[si]);
            int found = -1;
            for (size_t c = 0; c < reps.size(); ++c)
                if (equiv(r, s, reps[c].first, reps[c].second)) {
                    found = static_cast<int>(c);
                    break;
                }
            if (found < 0) {
                found = static_cast<int>(reps.size());
                reps.push_back({r, s});
            }
            cls[r][si] = static_cast<ElementId>(found);
        }
    std::vector<size_t> spos(R->order, 0);
    for (size_t si = 0; si < svals.size(); ++si) spos[svals[si]] = si;
    auto cls_of = [&](ElementId r, ElementId s) { return cls[r][spos[s]]; };

    const uint16_t n = static_cast<uint16_t>(reps.size());
    RingTable t;
    t.order = n;
    t.add.resize(size_t(n) * n);
    t.mul.resize(size_t(n) * n);
    t.names.resize(n);
    for (uint16_t i = 0; i < n; ++i) {
        auto [r, s] = reps[i];
        t.names[i] = R->names[r] + "/" + R->names[s];
        for (uint16_t k = 0; k < n; ++k) {
            auto [r2, s2] = reps[k];
            t.add[size_t(i) * n + k] = cls_of(R->a(R->m(r, s2), R->m(r2, s)), R->m(s, s2));
            t.mul[size_t(i) * n + k] = cls_of(R->m(r, r2), R->m(s, s2));
        }
    }
    t.one = cls_of(R->one, R->one);
    t.expr = R->expr.empty() ? "localization" : "loc(" + R->expr + ", .)";
    Localization L;
    L.ring = make_ring(std::move(t), n <= 64);
    L.saturated = sat;
    L.canonical.resize(R->order);
    for (ElementId r = 0; r < R->order; ++r) L.canonical[r] = cls_of(r, R->one);
    for (uint32_t s : svals)
        if (!L.ring->units.test(L.canonical[s]))
            throw Error("localization: image of S is not invertible");
    return L;
}

Ideal localize_ideal(const Localization& L, const Ideal& I) {
    std::vector<ElementId> gens;
    for (uint32_t x = 0; x < I.ring->order; ++x)
        if (I.members.test(x)) gens.push_back(L.canonical[x]);
    return generate_ideal(L.ring, gens);
}

ModLocalization localize_module(const Localization& L, ModulePtr M) {
    const RingTable& R = *M->ring;
    auto svals = L.saturated.elements();
    auto equiv = [&](uint16_t m, ElementId s, uint16_t m2, ElementId s2) {
        uint16_t d = M->sub(M->s(s2, m), M->s(s, m2));
        for (uint32_t u : svals)
            if (M->s(static_cast<ElementId>(u), d) == 0) return true;
        return false;
    };
    std::vector<std::pair<uint16_t, ElementId>> reps;
    std::vector<std::vector<uint16_t>> cls(M->order, std::vector<uint16_t>(svals.size()));
    for (uint16_t m = 0; m < M->order; ++m)
        for (size_t si = 0; si < svals.size(); ++si) {
            ElementId s = static_cast<ElementId>(svals[si]);
            int found = -1;
            for (size_t c = 0; c < reps.size(); ++c)
                if (equiv(m, s, reps[c].first, reps[c].second)) {
                    found = static_cast<int>(c);
                    break;
                }
            if (found < 0) {
                found = static_cast<int>(reps.size());
                reps.push_back({m, s});
            }
            cls[m][si] = static_cast<uint16_t>(found);
        }
    std::vector<size_t> spos(R.order, 0);
    for (size_t si = 0; si < svals.size(); ++si) spos[svals[si]] = si;
    auto cls_of = [&](uint16_t m, ElementId s) { return cls[m][spos[s]]; };

    // pick a (r, s) pair representing each class of the localized ring
    std::vector<std::pair<ElementId, ElementId>> rreps(L.ring->order, {0, R.one});
    std::vector<bool> seen(L.ring->order, false);
    for (ElementId r = 0; r < R.order; ++r)
        for (uint32_t sv : svals) {
            ElementId s = static_cast<ElementId>(sv);
            for (ElementId cand = 0; cand < L.ring->order; ++cand)
                if (L.ring->m(cand, L.canonical[s]) == L.canonical[r]) {
                    if (!seen[cand]) {
                        seen[cand] = true;
                        rreps[cand] = {r, s};
                    }
                    break;
                }
        }
    for (bool b : seen)
        if (!b) throw Error("localize_module: missing class representative");

    const uint16_t n = static_cast<uint16_t>(reps.size());
    ModuleTable t;
    t.ring = L.ring;
    t.order = n;
    t.madd.resize(size_t(n) * n);
    t.act.resize(size_t(L.ring->order) * n);
    t.names.resize(n);
    for (uint16_t i = 0; i < n; ++i) {
        auto [m, s] = reps[i];
        t.names[i] = M->names[m] + "/" + R.names[s];
        for (uint16_t k = 0; k < n; ++k) {
            auto [m2, s2] = reps[k];
            t.madd[size_t(i) * n + k] = cls_of(M->a(M->s(s2, m), M->s(s, m2)), R.m(s, s2));
        }
        for (ElementId rc = 0; rc < L.ring->order; ++rc) {
            auto [r, s2] = rreps[rc];
            t.act[size_t(rc) * n + i] = cls_of(M->s(r, m), R.m(s2, s));
        }
    }
    t.expr = "loc-module";
    ModLocalization out;
    out.mod = make_module(std::move(t), true);
    out.canonical.resize(M->order);
    for (uint16_t m = 0; m < M->order; ++m) out.canonical[m] = cls_of(m, R.one);
    return out;
}

Submodule localize_submodule(const Localization&, const ModLocalization& LM, const Submodule& N) {
    std::vector<uint16_t> gens;
    for (uint32_t x = 0; x < N.mod->order; ++x)
        if (N.members.test(x)) gens.push_back(LM.canonical[x]);
    return generate_submodule(LM.mod, gens);
}

RingPtr idealization(RingPtr R, ModulePtr M) {
    if (M->ring != R && !M->ring->same_table(*R))
        throw UsageError("idealization: module/ring mismatch");
    uint32_t n = uint32_t(R->order) * M->order;
    if (n > 4096) throw CapacityError("idealization: order exceeds 4096");
    RingTable t;
    t.order = static_cast<uint16_t>(n);
    t.add.resize(size_t(n) * n);
    t.mul.resize(size_t(n) * n);
    t.names.resize(n);
    auto ix = [&](ElementId r, uint16_t m) { return uint32_t(r) * M->order + m; };
    for (ElementId r1 = 0; r1 < R->order; ++r1)
        for (uint16_t m1 = 0; m1 < M->order; ++m1) {
            uint32_t i = ix(r1, m1);
            t.names[i] = "(" + R->names[r1] + "," + M->names[m1] + ")";
            for (ElementId r2 = 0; r2 < R->order; ++r2)
                for (uint16_t m2 = 0; m2 < M->order; ++m2) {
                    uint32_t k = ix(r2, m2);
                    t.add[size_t(i) * n + k] =
                        static_cast<ElementId>(ix(R->a(r1, r2), M->a(m1, m2)));
                    t.mul[size_t(i) * n + k] = static_cast<ElementId>(
                        ix(R->m(r1, r2), M->a(M->s(r1, m2), M->s(r2, m1))));
                }
        }
    t.one = static_cast<ElementId>(ix(R->one, 0));
    t.expr = "idz(" + R->expr + ", " + (M->expr.empty() ? "M" : M->expr) + ")";
    RingPtr out = make_ring(std::move(t), n <= 64);
    // zd(R(+)M) = {(r,m) : r in zd(R) u Z(M)}
    for (ElementId r = 0; r < R->order; ++r)
        for (uint16_t m = 0; m < M->order; ++m) {
            bool formula = R->zdiv.test(r) || M->zm.test(r);
            if (out->zdiv.test(static_cast<ElementId>(ix(r, m))) != formula)
                throw Error("idealization: zero-divisor formula mismatch");
        }
    return out;
}

Ideal ideal_idealization(RingPtr RM, const Ideal& I, const Submodule& N) {
    const ModuleTable& M = *N.mod;
    const RingTable& R = *I.ring;
    if (RM->order != uint32_t(R.order) * M.order)
        throw UsageError("ideal_idealization: table is not the idealization of these parents");
    Submodule im = ideal_times_module(I, N.mod);
    if (!im.members.subset_of(N.members))
        throw Error("ideal_idealization: IM is not contained in N (not an ideal)");
    ElemSet s(RM->order);
    for (uint32_t r = 0; r < R.order; ++r) {
        if (!I.members.test(r)) continue;
        for (uint32_t m = 0; m < M.order; ++m)
            if (N.members.test(m)) s.set(r * M.order + m);
    }
    return ideal_from_set(RM, std::move(s));
}

ElementId AmalgRing::pair_index(ElementId a, ElementId s) const {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].first == a && elems[i].second == s) return static_cast<ElementId>(i);
    throw Error("amalgamation: pair (" + r1->names[a] + "," + r2->names[s] + ") not in carrier");
}

ElementId AmalgRing::sub_index(ElementId x) const {
    for (size_t i = 0; i < sub_embed.size(); ++i)
        if (sub_embed[i] == x) return static_cast<ElementId>(i);
    throw Error("amalgamation: element outside f(R1)+J");
}

ElemSet z_of_ideal(const RingTable& S, const Ideal& J) {
    ElemSet out(S.order);
    for (ElementId x = 0; x < S.order; ++x)
        for (uint32_t j = 1; j < S.order; ++j)
            if (J.members.test(j) && S.m(x, static_cast<ElementId>(j)) == 0) {
                out.set(x);
                break;
            }
    return out;
}

AmalgRing amalgamation(RingPtr R1, RingPtr R2, const RingHom& f, const Ideal& J) {
    if (f.src->order != R1->order || !f.src->same_table(*R1))
        throw UsageError("amalgamation: hom source mismatch");
    if (f.dst->order != R2->order || !f.dst->same_table(*R2))
        throw UsageError("amalgamation: hom target mismatch");
    if (!hom_valid(f)) throw Error("amalgamation: invalid ring homomorphism");
    if (J.ring != R2 && !J.ring->same_table(*R2))
        throw UsageError("amalgamation: J must be an ideal of R2");
    if (R1->order > 64 || R2->order > 64)
        throw CapacityError("amalgamation: factor orders must be <= 64");
    uint32_t n = uint32_t(R1->order) * J.members.count();
    if (n > 4096) throw CapacityError("amalgamation: order exceeds 4096");

    AmalgRing A;
    A.r1 = R1;
    A.r2 = R2;
    A.f = f;
    A.j = J;
    std::vector<int> lookup(size_t(R1->order) * R2->order, -1);
    for (ElementId a = 0; a < R1->order; ++a)
        for (uint32_t j = 0; j < R2->order; ++j) {
            if (!J.members.test(j)) continue;
            ElementId s = R2->a(f.map[a], static_cast<ElementId>(j));
            lookup[size_t(a) * R2->order + s] = static_cast<int>(A.elems.size());
            A.elems.push_back({a, s});
        }
    RingTable t;
    t.order = static_cast<uint16_t>(n);
    t.add.resize(size_t(n) * n);
    t.mul.resize(size_t(n) * n);
    t.names.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        auto [a, s] = A.elems[i];
        t.names[i] = "(" + R1->names[a] + "," + R2->names[s] + ")";
        for (uint32_t k = 0; k < n; ++k) {
            auto [b, u] = A.elems[k];
            t.add[size_t(i) * n + k] =
                static_cast<ElementId>(lookup[size_t(R1->a(a, b)) * R2->order + R2->a(s, u)]);
            t.mul[size_t(i) * n + k] =
                static_cast<ElementId>(lookup[size_t(R1->m(a, b)) * R2->order + R2->m(s, u)]);
        }
    }
    t.one = static_cast<ElementId>(lookup[size_t(R1->one) * R2->order + R2->one]);
    t.expr = "amal(" + R1->expr + ", " + R2->expr + ", ., .)";
    A.ring = make_ring(std::move(t), n <= 64);

    ElemSet carrier(R2->order);
    for (auto& pr : A.elems) carrier.set(pr.second);
    auto members = carrier.elements();
    A.sub_embed.assign(members.begin(), members.end());
    std::vector<int> subidx(R2->order, -1);
    for (size_t i = 0; i < members.size(); ++i) subidx[members[i]] = static_cast<int>(i);
    RingTable st;
    st.order = static_cast<uint16_t>(members.size());
    st.add.resize(size_t(st.order) * st.order);
    st.mul.resize(size_t(st.order) * st.order);
    st.names.resize(st.order);
    for (size_t i = 0; i < members.size(); ++i) {
        st.names[i] = R2->names[members[i]];
        for (size_t k = 0; k < members.size(); ++k) {
            st.add[i * st.order + k] = static_cast<ElementId>(
                subidx[R2->a(static_cast<ElementId>(members[i]), static_cast<ElementId>(members[k]))]);
            st.mul[i * st.order + k] = static_cast<ElementId>(
                subidx[R2->m(static_cast<ElementId>(members[i]), static_cast<ElementId>(members[k]))]);
        }
    }
    st.one = static_cast<ElementId>(subidx[R2->one]);
    st.expr = "f(" + R1->expr + ")+J";
    A.sub = make_ring(std::move(st), st.order <= 64);

    // zd(R1 join^f J) must lie inside A u B (zero-divisor envelope)
    ElemSet envelope(A.ring->order);
    for (uint32_t i = 0; i < A.ring->order; ++i) {
        auto [a, s] = A.elems[i];
        bool inA = R1->zdiv.test(a);
        bool inB = false;
        for (uint32_t j = 1; j < R2->order && !inB; ++j)
            if (J.members.test(j) && R2->m(s, static_cast<ElementId>(j)) == 0) inB = true;
        if (inA || inB) envelope.set(i);
    }
    if (!A.ring->zdiv.subset_of(envelope))
        throw Error("amalgamation: zero-divisor envelope violated");
    return A;
}

Ideal transfer_join(const AmalgRing& A, const Ideal& I) {
    if (I.ring != A.r1 && !I.ring->same_table(*A.r1))
        throw UsageError("transfer_join: I must be an ideal of R1");
    ElemSet s(A.ring->order);
    for (uint32_t i = 0; i < A.ring->order; ++i)
        if (I.members.test(A.elems[i].first)) s.set(i);
    return ideal_from_set(A.ring, std::move(s));
}

Ideal transfer_bar(const AmalgRing& A, const Ideal& K) {
    if (K.ring != A.sub && !K.ring->same_table(*A.sub))
        throw UsageError("transfer_bar: K must be an ideal of f(R1)+J");
    ElemSet s(A.ring->order);
    for (uint32_t i = 0; i < A.ring->order; ++i)
        if (K.members.test(A.sub_index(A.elems[i].second))) s.set(i);
    return ideal_from_set(A.ring, std::move(s));
}

uint16_t DupModule::pair_index(uint16_t m, uint16_t mp) const {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].first == m && elems[i].second == mp) return static_cast<uint16_t>(i);
    throw Error("dup_module: pair not in carrier");
}

DupModule dup_module(const AmalgRing& A, ModulePtr M) {
    if (!A.r1->same_table(*A.r2)) throw UsageError("dup_module: duplication needs R1 = R2");
    for (ElementId x = 0; x < A.r1->order; ++x)
        if (A.f.map[x] != x) throw UsageError("dup_module: duplication needs f = id");
    if (M->ring != A.r1 && !M->ring->same_table(*A.r1))
        throw UsageError("dup_module: module is not over the base ring");
    DupModule D;
    D.base = M;
    D.jm = ideal_times_module(A.j, M);
    std::vector<int> lookup(size_t(M->order) * M->order, -1);
    for (uint16_t m = 0; m < M->order; ++m)
        for (uint16_t mp = 0; mp < M->order; ++mp)
            if (D.jm.members.test(M->sub(m, mp))) {
                lookup[size_t(m) * M->order + mp] = static_cast<int>(D.elems.size());
                D.elems.push_back({m, mp});
            }
    uint32_t n = static_cast<uint32_t>(D.elems.size());
    if (n > 4096) throw CapacityError("dup_module: order exceeds 4096");
    ModuleTable t;
    t.ring = A.ring;
    t.order = static_cast<uint16_t>(n);
    t.madd.resize(size_t(n) * n);
    t.act.resize(size_t(A.ring->order) * n);
    t.names.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        auto [m, mp] = D.elems[i];
        t.names[i] = "(" + M->names[m] + "," + M->names[mp] + ")";
        for (uint32_t k = 0; k < n; ++k) {
            auto [m2, mp2] = D.elems[k];
            t.madd[size_t(i) * n + k] =
                static_cast<uint16_t>(lookup[size_t(M->a(m, m2)) * M->order + M->a(mp, mp2)]);
        }
        for (uint32_t rc = 0; rc < A.ring->order; ++rc) {
            auto [r, rj] = A.elems[rc];
            t.act[size_t(rc) * n + i] =
                static_cast<uint16_t>(lookup[size_t(M->s(r, m)) * M->order + M->s(rj, mp)]);
        }
    }
    t.expr = "dup-module";
    D.mod = make_module(std::move(t), n <= 64);
    bool base_faithful = M->ann.count() == 1;
    bool dup_faithful = D.mod->ann.count() == 1;
    if (base_faithful != dup_faithful) throw Error("dup_module: faithfulness criterion violated");
    return D;
}

Submodule dup_transfer_njoin(const DupModule& D, const Submodule& N) {
    ElemSet s(D.mod->order);
    for (size_t i = 0; i < D.elems.size(); ++i)
        if (N.members.test(D.elems[i].first)) s.set(static_cast<uint32_t>(i));
    return submodule_from_set(D.mod, std::move(s));
}

Submodule dup_transfer_bar(const DupModule& D, const Submodule& N) {
    ElemSet s(D.mod->order);
    for (size_t i = 0; i < D.elems.size(); ++i)
        if (N.members.test(D.elems[i].second)) s.set(static_cast<uint32_t>(i));
    return submodule_from_set(D.mod, std::move(s));
}

bool module_hom_valid(const ModuleHom& phi) {
    const ModuleTable& A = *phi.src;
    const ModuleTable& B = *phi.dst;
    if (phi.map.size() != A.order) return false;
    for (uint16_t x = 0; x < A.order; ++x) {
        for (uint16_t y = 0; y < A.order; ++y)
            if (phi.map[A.a(x, y)] != B.a(phi.map[x], phi.map[y])) return false;
        for (ElementId r = 0; r < A.ring->order; ++r)
            if (phi.map[A.s(r, x)] != B.s(phi.f.map[r], phi.map[x])) return false;
    }
    return true;
}

uint16_t AmalgModule::pair_index(uint16_t x1, uint16_t x2) const {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].first == x1 && elems[i].second == x2) return static_cast<uint16_t>(i);
    throw Error("amalg_module: pair not in carrier");
}

AmalgModule amalg_module(const AmalgRing& A, ModulePtr M1, ModulePtr M2, const ModuleHom& phi) {
    if (phi.src != M1 || phi.dst != M2) throw UsageError("amalg_module: hom endpoints mismatch");
    if (!module_hom_valid(phi)) throw Error("amalg_module: invalid module homomorphism");
    AmalgModule D;
    D.m1 = M1;
    D.m2 = M2;
    D.phi = phi;
    D.jm2 = ideal_times_module(A.j, M2);
    std::vector<int> lookup(size_t(M1->order) * M2->order, -1);
    for (uint16_t m1 = 0; m1 < M1->order; ++m1)
        for (uint16_t m2 = 0; m2 < M2->order; ++m2) {
            if (!D.jm2.members.test(m2)) continue;
            uint16_t x2 = M2->a(phi.map[m1], m2);
            lookup[size_t(m1) * M2->order + x2] = static_cast<int>(D.elems.size());
            D.elems.push_back({m1, x2});
        }
    uint32_t n = static_cast<uint32_t>(D.elems.size());
    if (n > 4096) throw CapacityError("amalg_module: order exceeds 4096");
    ModuleTable t;
    t.ring = A.ring;
    t.order = static_cast<uint16_t>(n);
    t.madd.resize(size_t(n) * n);
    t.act.resize(size_t(A.ring->order) * n);
    t.names.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        auto [m1, x2] = D.elems[i];
        t.names[i] = "(" + M1->names[m1] + "," + M2->names[x2] + ")";
        for (uint32_t k = 0; k < n; ++k) {
            auto [n1, y2] = D.elems[k];
            t.madd[size_t(i) * n + k] =
                static_cast<uint16_t>(lookup[size_t(M1->a(m1, n1)) * M2->order + M2->a(x2, y2)]);
        }
        for (uint32_t rc = 0; rc < A.ring->order; ++rc) {
            auto [r, s] = A.elems[rc];
            t.act[size_t(rc) * n + i] =
                static_cast<uint16_t>(lookup[size_t(M1->s(r, m1)) * M2->order + M2->s(s, x2)]);
        }
    }
    t.expr = "amalg-module";
    D.mod = make_module(std::move(t), n <= 64);
    return D;
}

Submodule amalg_transfer_n1(const AmalgModule& D, const Submodule& N1) {
    ElemSet s(D.mod->order);
    for (size_t i = 0; i < D.elems.size(); ++i)
        if (N1.members.test(D.elems[i].first)) s.set(static_cast<uint32_t>(i));
    return submodule_from_set(D.mod, std::move(s));
}

Submodule amalg_transfer_bar2(const AmalgModule& D, const Submodule& N2) {
    ElemSet s(D.mod->order);
    for (size_t i = 0; i < D.elems.size(); ++i)
        if (N2.members.test(D.elems[i].second)) s.set(static_cast<uint32_t>(i));
    return submodule_from_set(D.mod, std::move(s));
}

std::vector<RingHom> enumerate_homs(RingPtr R1, RingPtr R2) {
    if (R1->order > 32 || R2->order > 32)
        throw CapacityError("enumerate_homs: orders must be <= 32");
    const RingTable& A = *R1;
    const RingTable& B = *R2;
    auto ordA = additive_orders_ring(A);
    auto ordB = additive_orders_ring(B);
    std::vector<RingHom> out;

    auto propagate = [&](std::vector<int>& m) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (ElementId x = 0; x < A.order; ++x) {
                if (m[x] < 0) continue;
                for (ElementId y = x; y < A.order; ++y) {
                    if (m[y] < 0) continue;
                    ElementId sx = A.a(x, y), px = A.m(x, y);
                    ElementId sv = B.a(static_cast<ElementId>(m[x]), static_cast<ElementId>(m[y]));
                    ElementId pv = B.m(static_cast<ElementId>(m[x]), static_cast<ElementId>(m[y]));
                    if (m[sx] < 0) {
                        m[sx] = sv;
                        changed = true;
                    } else if (m[sx] != sv)
                        return false;
                    if (m[px] < 0) {
                        m[px] = pv;
                        changed = true;
                    } else if (m[px] != pv)
                        return false;
                }
            }
        }
        return true;
    };

    std::function<void(std::vector<int>)> dfs = [&](std::vector<int> m) {
        if (!propagate(m)) return;
        int next = -1;
        for (ElementId x = 0; x < A.order; ++x)
            if (m[x] < 0) {
                next = x;
                break;
            }
        if (next < 0) {
            RingHom h{R1, R2, {}};
            h.map.resize(m.size());
            for (size_t i = 0; i < m.size(); ++i) h.map[i] = static_cast<ElementId>(m[i]);
            if (hom_valid(h)) out.push_back(std::move(h));
            return;
        }
        bool nil = A.nil.test(static_cast<ElementId>(next));
        bool idem = A.m(static_cast<ElementId>(next), static_cast<ElementId>(next)) ==
                    static_cast<ElementId>(next);
        for (ElementId cand = 0; cand < B.order; ++cand) {
            if (ordA[next] % ordB[cand] != 0) continue;
            if (nil && !B.nil.test(cand)) continue;
            if (idem && B.m(cand, cand) != cand) continue;
            auto m2 = m;
            m2[next] = cand;
            dfs(std::move(m2));
        }
    };

    std::vector<int> img(A.order, -1);
    img[0] = 0;
    img[A.one] = B.one;
    dfs(img);
    std::sort(out.begin(), out.end(),
              [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
    return out;
}

std::vector<ModuleHom> enumerate_module_homs(ModulePtr M1, ModulePtr M2, const RingHom& f) {
    if (M1->order > 16 || M2->order > 16)
        throw CapacityError("enumerate_module_homs: orders must be <= 16");
    const ModuleTable& A = *M1;
    const ModuleTable& B = *M2;
    auto ordA = additive_orders_mod(A);
    auto ordB = additive_orders_mod(B);
    std::vector<ModuleHom> out;

    auto propagate = [&](std::vector<int>& m) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint16_t x = 0; x < A.order; ++x) {
                if (m[x] < 0) continue;
                for (ElementId r = 0; r < A.ring->order; ++r) {
                    uint16_t rx = A.s(r, x);
                    uint16_t rv = B.s(f.map[r], static_cast<uint16_t>(m[x]));
                    if (m[rx] < 0) {
                        m[rx] = rv;
                        changed = true;
                    } else if (m[rx] != rv)
                        return false;
                }
                for (uint16_t y = x; y < A.order; ++y) {
                    if (m[y] < 0) continue;
                    uint16_t sx = A.a(x, y);
                    uint16_t sv = B.a(static_cast<uint16_t>(m[x]), static_cast<uint16_t>(m[y]));
                    if (m[sx] < 0) {
                        m[sx] = sv;
                        changed = true;
                    } else if (m[sx] != sv)
                        return false;
                }
            }
        }
        return true;
    };

    std::function<void(std::vector<int>)> dfs = [&](std::vector<int> m) {
        if (!propagate(m)) return;
        int next = -1;
        for (uint16_t x = 0; x < A.order; ++x)
            if (m[x] < 0) {
                next = x;
                break;
            }
        if (next < 0) {
            ModuleHom h{M1, M2, f, {}};
            h.map.resize(m.size());
            for (size_t i = 0; i < m.size(); ++i) h.map[i] = static_cast<uint16_t>(m[i]);
            if (module_hom_valid(h)) out.push_back(std::move(h));
            return;
        }
        for (uint16_t cand = 0; cand < B.order; ++cand) {
            if (ordA[next] % ordB[cand] != 0) continue;
            auto m2 = m;
            m2[next] = cand;
            dfs(std::move(m2));
        }
    };

    std::vector<int> img(A.order, -1);
    img[0] = 0;
    dfs(img);
    std::sort(out.begin(), out.end(),
              [](const ModuleHom& a, const ModuleHom& b) { return a.map < b.map; });
    return out;
}

std::vector<SubringInfo> enumerate_subrings(RingPtr S) {
    if (S->order > 16) throw CapacityError("enumerate_subrings: order must be <= 16");
    ElemSet base(S->order);
    base.set(0);
    base.set(S->one);
    base = ring_subset_closure(*S, std::move(base));
    std::unordered_set<ElemSet, ElemSetHash> found{base};
    std::vector<ElemSet> queue{base};
    while (!queue.empty()) {
        ElemSet cur = queue.back();
        queue.pop_back();
        for (ElementId x = 0; x < S->order; ++x) {
            if (cur.test(x)) continue;
            ElemSet grown = cur;
            grown.set(x);
            grown = ring_subset_closure(*S, std::move(grown));
            if (found.insert(grown).second) queue.push_back(grown);
        }
    }
    std::vector<ElemSet> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end());

    auto ideals = all_ideals(S);
    std::vector<SubringInfo> out;
    for (auto& carrier : sorted) {
        SubringInfo info;
        auto members = carrier.elements();
        info.embed.assign(members.begin(), members.end());
        std::vector<int> idx(S->order, -1);
        for (size_t i = 0; i < members.size(); ++i) idx[members[i]] = static_cast<int>(i);
        RingTable t;
        t.order = static_cast<uint16_t>(members.size());
        t.add.resize(size_t(t.order) * t.order);
        t.mul.resize(size_t(t.order) * t.order);
        t.names.resize(t.order);
        for (size_t i = 0; i < members.size(); ++i) {
            t.names[i] = S->names[members[i]];
            for (size_t k = 0; k < members.size(); ++k) {
                t.add[i * t.order + k] = static_cast<ElementId>(idx[S->a(
                    static_cast<ElementId>(members[i]), static_cast<ElementId>(members[k]))]);
                t.mul[i * t.order + k] = static_cast<ElementId>(idx[S->m(
                    static_cast<ElementId>(members[i]), static_cast<ElementId>(members[k]))]);
            }
        }
        t.one = static_cast<ElementId>(idx[S->one]);
        t.expr = "subring of " + S->expr;
        info.table = make_ring(std::move(t), true);
        info.essential = true;
        for (auto& J : ideals) {
            if (J.members.count() <= 1) continue;
            if ((J.members & carrier).count() <= 1) {
                info.essential = false;
                break;
            }
        }
        out.push_back(std::move(info));
    }
    return out;
}

Ideal restrict_ideal(const SubringInfo& sub, const Ideal& J) {
    ElemSet s(sub.table->order);
    for (size_t i = 0; i < sub.embed.size(); ++i)
        if (J.members.test(sub.embed[i])) s.set(static_cast<uint32_t>(i));
    return ideal_from_set(sub.table, std::move(s));
}

}  // namespace ringlab
