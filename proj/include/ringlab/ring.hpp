#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/elemset.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

// Element of a table ring, identified by its index. Index 0 is always the
// additive identity.
using ElementId = uint16_t;

struct RingFlags {
    bool is_uz = false;
    bool is_reduced = false;
    bool is_domain = false;
    bool is_field = false;
    bool is_boolean = false;
};

struct RingViolation {
    std::string axiom;
    std::array<ElementId, 3> witness{0, 0, 0};
};

// A finite commutative ring with identity, given by its addition and
// multiplication tables. Immutable after construction; derived sets (units,
// zero divisors, nilradical) are precomputed and safe to share across threads.
struct RingTable {
    uint16_t order = 0;
    std::vector<ElementId> add;  // order*order, row-major
    std::vector<ElementId> mul;
    ElementId one = 0;
    std::vector<std::string> names;

    // filled by finalize()
    std::vector<ElementId> neg;
    ElemSet units;
    ElemSet zdiv;  // includes 0 whenever order >= 2
    ElemSet nil;
    RingFlags flags;

    int zn_modulus = 0;  // > 0 when the table was built as integers mod n
    std::string expr;    // construction expression when known

    ElementId a(ElementId x, ElementId y) const { return add[size_t(x) * order + y]; }
    ElementId m(ElementId x, ElementId y) const { return mul[size_t(x) * order + y]; }
    ElementId sub(ElementId x, ElementId y) const { return a(x, neg[y]); }

    bool regular(ElementId x) const { return !zdiv.test(x); }

    ElementId pow(ElementId x, uint32_t k) const {
        ElementId r = one;
        for (uint32_t i = 0; i < k; ++i) r = m(r, x);
        return r;
    }

    bool same_table(const RingTable& o) const {
        return order == o.order && one == o.one && add == o.add && mul == o.mul;
    }
};

using RingPtr = std::shared_ptr<const RingTable>;

// Checks every RingTable invariant; empty result means the table is a
// commutative unital ring with zero at index 0. Report-only, O(order^3).
std::vector<RingViolation> verify_ring_axioms(const RingTable& R);

// Computes caches and flags, verifying axioms first (mandatory for order <= 64,
// opt-out above via verify=false). Throws Error on violation or order < 2.
RingPtr make_ring(RingTable t, bool verify = true);

RingPtr build_zn(int n);
RingPtr build_product(const std::vector<RingPtr>& factors);

// Index/tuple conversions for rings built by build_product.
std::vector<ElementId> product_split(const std::vector<RingPtr>& factors, ElementId x);
ElementId product_join(const std::vector<RingPtr>& factors, const std::vector<ElementId>& t);

const ElemSet& units(const RingTable& R);
const ElemSet& zero_divisors(const RingTable& R);
RingFlags ring_flags(const RingTable& R);

// {b : ab = 0}; Ann(a) = {0} iff a is regular (iff a is a unit, R finite).
ElemSet annihilator_set(const RingTable& R, ElementId a);
// {a : a^k = 0 for some k <= order}
ElemSet nilradical_set(const RingTable& R);

}  // namespace ringlab
