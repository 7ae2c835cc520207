#include "ringlab/ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ringlab {

namespace {

ElemSet close_under_ops(const RingTable& R, ElemSet s) {
    // BFS closure under addition and multiplication by every ring element.
    std::vector<ElementId> queue = {};
    for (uint32_t i = 0; i < R.order; ++i)
        if (s.test(i)) queue.push_back(static_cast<ElementId>(i));
    while (!queue.empty()) {
        ElementId x = queue.back();
        queue.pop_back();
        for (ElementId r = 0; r < R.order; ++r) {
            ElementId p = R.m(r, x);
            if (!s.test(p)) {
                s.set(p);
                queue.push_back(p);
            }
        }
        for (uint32_t y = 0; y < R.order; ++y) {
            if (!s.test(y)) continue;
            ElementId q = R.a(x, static_cast<ElementId>(y));
            if (!s.test(q)) {
                s.set(q);
                queue.push_back(q);
            }
        }
    }
    return s;
}

ElemSet elementwise_sum(const RingTable& R, const ElemSet& A, const ElemSet& B) {
    ElemSet s(R.order);
    for (uint32_t x = 0; x < R.order; ++x) {
        if (!A.test(x)) continue;
        for (uint32_t y = 0; y < R.order; ++y)
            if (B.test(y)) s.set(R.a(static_cast<ElementId>(x), static_cast<ElementId>(y)));
    }
    return s;
}

}  // namespace

Ideal generate_ideal(RingPtr R, const std::vector<ElementId>& gens) {
    ElemSet s(R->order);
    s.set(0);
    for (ElementId g : gens) {
        if (g >= R->order) throw Error("generate_ideal: element index out of range");
        s.set(g);
    }
    return Ideal{R, close_under_ops(*R, std::move(s)), gens};
}

Ideal ideal_from_set(RingPtr R, ElemSet members) {
    std::vector<ElementId> gens;
    ElemSet span(R->order);
    span.set(0);
    while (span != members) {
        ElementId next = 0;
        bool got = false;
        for (uint32_t i = 1; i < R->order; ++i)
            if (members.test(i) && !span.test(i)) {
                next = static_cast<ElementId>(i);
                got = true;
                break;
            }
        if (!got) throw Error("ideal_from_set: set is not an ideal");
        gens.push_back(next);
        span.set(next);
        span = close_under_ops(*R, std::move(span));
    }
    return Ideal{R, std::move(members), std::move(gens)};
}

std::vector<Ideal> all_ideals(RingPtr R) {
    std::vector<ElemSet> principal;
    std::unordered_set<ElemSet, ElemSetHash> seen;
    for (ElementId x = 0; x < R->order; ++x) {
        ElemSet p(R->order);
        for (ElementId r = 0; r < R->order; ++r) p.set(R->m(r, x));
        if (seen.insert(p).second) principal.push_back(p);
    }
    std::vector<ElemSet> work = principal;
    std::unordered_set<ElemSet, ElemSetHash> all(principal.begin(), principal.end());
    while (!work.empty()) {
        ElemSet cur = work.back();
        work.pop_back();
        for (const auto& p : principal) {
            if (p.subset_of(cur)) continue;
            ElemSet join = elementwise_sum(*R, cur, p);
            if (all.insert(join).second) {
                work.push_back(join);
                if (all.size() > 65536) throw CapacityError("all_ideals: more than 2^16 ideals");
            }
        }
    }
    std::vector<ElemSet> sorted(all.begin(), all.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Ideal> out;
    out.reserve(sorted.size());
    for (auto& s : sorted) out.push_back(ideal_from_set(R, std::move(s)));
    return out;
}

Ideal ideal_arith(IdealArith mode, const Ideal& I, const Ideal& J) {
    if (I.ring != J.ring && !I.ring->same_table(*J.ring))
        throw UsageError("ideal_arith: parent ring mismatch");
    const RingTable& R = *I.ring;
    switch (mode) {
        case IdealArith::Sum:
            return ideal_from_set(I.ring, elementwise_sum(R, I.members, J.members));
        case IdealArith::Product: {
            ElemSet s(R.order);
            s.set(0);
            for (uint32_t x = 0; x < R.order; ++x) {
                if (!I.members.test(x)) continue;
                for (uint32_t y = 0; y < R.order; ++y)
                    if (J.members.test(y))
                        s.set(R.m(static_cast<ElementId>(x), static_cast<ElementId>(y)));
            }
            return ideal_from_set(I.ring, close_under_ops(R, std::move(s)));
        }
        case IdealArith::Intersect:
            return ideal_from_set(I.ring, I.members & J.members);
    }
    throw UsageError("ideal_arith: unknown mode");
}

Ideal radical(const Ideal& I) {
    const RingTable& R = *I.ring;
    ElemSet s(R.order);
    for (ElementId x = 0; x < R.order; ++x) {
        ElementId p = x;
        for (uint16_t k = 1; k <= R.order; ++k) {
            if (I.members.test(p)) {
                s.set(x);
                break;
            }
            p = R.m(p, x);
        }
    }
    return ideal_from_set(I.ring, std::move(s));
}

Ideal colon_ideal(const Ideal& I, const ElemSet& S) {
    if (S.none()) throw UsageError("colon_ideal: S must be nonempty");
    const RingTable& R = *I.ring;
    ElemSet s(R.order);
    for (ElementId a = 0; a < R.order; ++a) {
        bool ok = true;
        for (uint32_t x = 0; x < R.order && ok; ++x)
            if (S.test(x)) ok = I.members.test(R.m(a, static_cast<ElementId>(x)));
        if (ok) s.set(a);
    }
    return ideal_from_set(I.ring, std::move(s));
}

ElemSet z_upper(const Ideal& I) {
    if (!I.is_proper()) throw UsageError("z_upper: ideal must be proper");
    const RingTable& R = *I.ring;
    ElemSet s(R.order);
    for (ElementId r = 0; r < R.order; ++r)
        for (ElementId x = 0; x < R.order; ++x)
            if (!I.members.test(x) && I.members.test(R.m(r, x))) {
                s.set(r);
                break;
            }
    return s;
}

Ideal annihilator_elem(RingPtr R, ElementId a) {
    return ideal_from_set(R, annihilator_set(*R, a));
}

Ideal nilradical(RingPtr R) { return ideal_from_set(R, R->nil); }

IdealFlags classify_ideal(const Ideal& I) {
    IdealFlags f;
    f.is_proper = I.is_proper();
    if (!f.is_proper) return f;
    const RingTable& R = *I.ring;
    Ideal rad = radical(I);

    f.is_semiprime = f.is_semi_n = f.is_semi_r = true;
    for (ElementId a = 0; a < R.order; ++a) {
        if (!I.members.test(R.m(a, a)) || I.members.test(a)) continue;
        if (f.is_semiprime) {
            f.is_semiprime = false;
            f.wit_semiprime = FlagWitness{a, 0, false};
        }
        if (f.is_semi_n && !R.nil.test(a)) {
            f.is_semi_n = false;
            f.wit_semi_n = FlagWitness{a, 0, false};
        }
        if (f.is_semi_r && R.regular(a)) {
            f.is_semi_r = false;
            f.wit_semi_r = FlagWitness{a, 0, false};
        }
    }

    f.is_prime = f.is_r = f.is_pr = f.is_n = true;
    for (ElementId a = 0; a < R.order; ++a)
        for (ElementId b = 0; b < R.order; ++b) {
            if (!I.members.test(R.m(a, b))) continue;
            if (f.is_prime && !I.members.test(a) && !I.members.test(b)) f.is_prime = false;
            if (I.members.test(b)) continue;
            if (R.regular(a)) {
                if (f.is_r) {
                    f.is_r = false;
                    f.wit_r = FlagWitness{a, b, true};
                }
                if (f.is_pr && !rad.members.test(b)) {
                    f.is_pr = false;
                    f.wit_pr = FlagWitness{a, b, true};
                }
            }
            if (f.is_n && !R.nil.test(a)) {
                f.is_n = false;
                f.wit_n = FlagWitness{a, b, true};
            }
        }

    // maximal iff R/I is a field: every coset outside I is invertible mod I
    f.is_maximal = true;
    for (ElementId a = 0; a < R.order && f.is_maximal; ++a) {
        if (I.members.test(a)) continue;
        bool invertible = false;
        for (ElementId b = 0; b < R.order && !invertible; ++b)
            invertible = I.members.test(R.sub(R.one, R.m(a, b)));
        if (!invertible) f.is_maximal = false;
    }

    auto implies = [](bool p, bool q) { return !p || q; };
    if (!implies(f.is_prime, f.is_semiprime) || !implies(f.is_semiprime, f.is_semi_r) ||
        !implies(f.is_r, f.is_semi_r) || !implies(f.is_r, f.is_pr) ||
        !implies(f.is_n, f.is_semi_n) || !implies(f.is_semi_n, f.is_semi_r))
        throw Error("classify_ideal: implication lattice violated on " + R.expr);
    return f;
}

bool char_crosscheck(const Ideal& I) {
    if (!I.is_proper()) throw UsageError("char_crosscheck: ideal must be proper");
    const RingTable& R = *I.ring;
    IdealFlags f = classify_ideal(I);
    Ideal rad = radical(I);
    bool containment = rad.members.subset_of(R.zdiv | I.members);

    auto kpow = [&](uint32_t k) {
        for (ElementId a = 0; a < R.order; ++a)
            if (R.regular(a) && I.members.test(R.pow(a, k)) && !I.members.test(a)) return false;
        return true;
    };
    bool k3 = kpow(3), kn = kpow(R.order);
    if (containment != f.is_semi_r || k3 != f.is_semi_r || kn != f.is_semi_r)
        throw Error("char_crosscheck: route disagreement on " + R.expr + " ideal {" +
                    format_elems(R, I.members) + "}");
    return containment;
}

bool ideal_is_semi_r(const Ideal& I) {
    if (!I.is_proper()) return false;
    const RingTable& R = *I.ring;
    for (ElementId a = 0; a < R.order; ++a)
        if (R.regular(a) && I.members.test(R.m(a, a)) && !I.members.test(a)) return false;
    return true;
}

bool ideal_is_r(const Ideal& I) {
    if (!I.is_proper()) return false;
    const RingTable& R = *I.ring;
    for (ElementId a = 0; a < R.order; ++a) {
        if (!R.regular(a)) continue;
        for (ElementId b = 0; b < R.order; ++b)
            if (I.members.test(R.m(a, b)) && !I.members.test(b)) return false;
    }
    return true;
}

std::string format_elems(const RingTable& R, const ElemSet& s) {
    std::string out;
    for (uint32_t i = 0; i < R.order; ++i) {
        if (!s.test(i)) continue;
        if (!out.empty()) out += ",";
        out += R.names[i];
    }
    return out;
}

}  // namespace ringlab
