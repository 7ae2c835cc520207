#include "ringlab/ring.hpp"

#include <algorithm>

namespace ringlab {

std::vector<RingViolation> verify_ring_axioms(const RingTable& R) {
    std::vector<RingViolation> out;
    const uint16_t n = R.order;
    auto bad = [&](const char* ax, ElementId x, ElementId y, ElementId z) {
        out.push_back({ax, {x, y, z}});
    };
    if (n == 0 || R.add.size() != size_t(n) * n || R.mul.size() != size_t(n) * n) {
        out.push_back({"table shape", {0, 0, 0}});
        return out;
    }
    for (ElementId x = 0; x < n; ++x) {
        if (R.a(0, x) != x) bad("additive identity at index 0", 0, x, 0);
        if (R.m(R.one, x) != x) bad("multiplicative identity", R.one, x, 0);
    }
    for (ElementId x = 0; x < n; ++x) {
        bool has_inv = false;
        for (ElementId y = 0; y < n && !has_inv; ++y) has_inv = R.a(x, y) == 0;
        if (!has_inv) bad("additive inverse", x, 0, 0);
    }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (R.a(x, y) != R.a(y, x)) bad("addition commutative", x, y, 0);
            if (R.m(x, y) != R.m(y, x)) bad("multiplication commutative", x, y, 0);
        }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z) {
                if (R.a(R.a(x, y), z) != R.a(x, R.a(y, z))) bad("addition associative", x, y, z);
                if (R.m(R.m(x, y), z) != R.m(x, R.m(y, z))) bad("multiplication associative", x, y, z);
                if (R.m(x, R.a(y, z)) != R.a(R.m(x, y), R.m(x, z))) bad("distributivity", x, y, z);
                if (out.size() > 32) return out;
            }
    return out;
}

RingPtr make_ring(RingTable t, bool verify) {
    if (t.order < 2) throw Error("ring must have order >= 2 (zero ring rejected)");
    if (verify || t.order <= 64) {
        auto v = verify_ring_axioms(t);
        if (!v.empty())
            throw Error("ring axiom violation: " + v.front().axiom + " at (" +
                        std::to_string(v.front().witness[0]) + "," +
                        std::to_string(v.front().witness[1]) + "," +
                        std::to_string(v.front().witness[2]) + ")");
    }
    const uint16_t n = t.order;
    t.neg.assign(n, 0);
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (t.a(x, y) == 0) t.neg[x] = y;

    t.units = ElemSet(n);
    t.zdiv = ElemSet(n);
    for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
            if (t.m(x, y) == t.one) t.units.set(x);
            if (y != 0 && t.m(x, y) == 0) t.zdiv.set(x);
        }
    }
    t.nil = ElemSet(n);
    for (ElementId x = 0; x < n; ++x) {
        ElementId p = x;
        for (uint16_t k = 1; k <= n; ++k) {
            if (p == 0) {
                t.nil.set(x);
                break;
            }
            p = t.m(p, x);
        }
    }
    t.flags.is_uz = (t.units | t.zdiv).full();
    t.flags.is_reduced = t.nil.count() == 1;
    t.flags.is_domain = t.zdiv.count() == 1;
    t.flags.is_field = t.units.count() == uint32_t(n) - 1;
    t.flags.is_boolean = true;
    for (ElementId x = 0; x < n; ++x)
        if (t.m(x, x) != x) t.flags.is_boolean = false;
    return std::make_shared<const RingTable>(std::move(t));
}

RingPtr build_zn(int n) {
    if (n < 2) throw Error("build_zn: modulus must be >= 2");
    if (n > 4096) throw CapacityError("build_zn: modulus exceeds hard cap 4096");
    RingTable t;
    t.order = static_cast<uint16_t>(n);
    t.add.resize(size_t(n) * n);
    t.mul.resize(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.add[size_t(x) * n + y] = static_cast<ElementId>((x + y) % n);
            t.mul[size_t(x) * n + y] = static_cast<ElementId>((x * y) % n);
        }
    t.one = 1;
    t.names.resize(n);
    for (int x = 0; x < n; ++x) t.names[x] = std::to_string(x);
    t.zn_modulus = n;
    t.expr = "Z" + std::to_string(n);
    return make_ring(std::move(t), n <= 64);
}

std::vector<ElementId> product_split(const std::vector<RingPtr>& factors, ElementId x) {
    std::vector<ElementId> t(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        t[i] = static_cast<ElementId>(x % factors[i]->order);
        x = static_cast<ElementId>(x / factors[i]->order);
    }
    return t;
}

ElementId product_join(const std::vector<RingPtr>& factors, const std::vector<ElementId>& t) {
    uint32_t x = 0;
    for (size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->order + t[i];
    return static_cast<ElementId>(x);
}

RingPtr build_product(const std::vector<RingPtr>& factors) {
    if (factors.size() < 2) throw UsageError("build_product: need at least 2 factors");
    uint64_t ord = 1;
    for (auto& f : factors) {
        ord *= f->order;
        if (ord > 4096) throw CapacityError("build_product: order exceeds hard cap 4096");
    }
    const uint16_t n = static_cast<uint16_t>(ord);
    RingTable t;
    t.order = n;
    t.add.resize(size_t(n) * n);
    t.mul.resize(size_t(n) * n);
    t.names.resize(n);
    for (ElementId x = 0; x < n; ++x) {
        auto tx = product_split(factors, x);
        std::string nm = "(";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) nm += ",";
            nm += factors[i]->names[tx[i]];
        }
        t.names[x] = nm + ")";
        for (ElementId y = 0; y < n; ++y) {
            auto ty = product_split(factors, y);
            std::vector<ElementId> sa(factors.size()), sm(factors.size());
            for (size_t i = 0; i < factors.size(); ++i) {
                sa[i] = factors[i]->a(tx[i], ty[i]);
                sm[i] = factors[i]->m(tx[i], ty[i]);
            }
            t.add[size_t(x) * n + y] = product_join(factors, sa);
            t.mul[size_t(x) * n + y] = product_join(factors, sm);
        }
    }
    std::vector<ElementId> ones(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) ones[i] = factors[i]->one;
    t.one = product_join(factors, ones);
    return make_ring(std::move(t), n <= 64);
}

const ElemSet& units(const RingTable& R) { return R.units; }
const ElemSet& zero_divisors(const RingTable& R) { return R.zdiv; }
RingFlags ring_flags(const RingTable& R) { return R.flags; }

ElemSet annihilator_set(const RingTable& R, ElementId a) {
    ElemSet s(R.order);
    for (ElementId b = 0; b < R.order; ++b)
        if (R.m(a, b) == 0) s.set(b);
    return s;
}

ElemSet nilradical_set(const RingTable& R) { return R.nil; }

}  // namespace ringlab
