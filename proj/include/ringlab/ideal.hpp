#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Ideal of a table ring: membership bitset plus a generator list that
// generates exactly the bitset.
struct Ideal {
    RingPtr ring;
    ElemSet members;
    std::vector<ElementId> gens;

    bool is_proper() const { return !members.test(ring->one); }
    bool is_zero() const { return members.count() == 1; }
    bool contains(ElementId x) const { return members.test(x); }
};

// Violating tuple for a failed classification flag; b is unused for the
// single-element ("semi") flags.
struct FlagWitness {
    ElementId a = 0;
    ElementId b = 0;
    bool pair = false;
};

struct IdealFlags {
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_semiprime = false;
    bool is_r = false;
    bool is_pr = false;
    bool is_n = false;
    bool is_semi_n = false;
    bool is_semi_r = false;
    std::optional<FlagWitness> wit_semiprime, wit_r, wit_pr, wit_n, wit_semi_n, wit_semi_r;
};

Ideal generate_ideal(RingPtr R, const std::vector<ElementId>& gens);
Ideal ideal_from_set(RingPtr R, ElemSet members);  // derives a minimal generator list

// Every ideal exactly once, sorted canonically (cardinality, then bitset).
// Throws CapacityError when the count exceeds 2^16.
std::vector<Ideal> all_ideals(RingPtr R);

enum class IdealArith { Sum, Product, Intersect };
Ideal ideal_arith(IdealArith mode, const Ideal& I, const Ideal& J);

// {a : a^k in I for some k <= order}
Ideal radical(const Ideal& I);
// {a : a*s in I for every s in S}; S must be nonempty
Ideal colon_ideal(const Ideal& I, const ElemSet& S);
// Z_I(R) = {r : r*s in I for some s outside I}; I must be proper
ElemSet z_upper(const Ideal& I);

Ideal annihilator_elem(RingPtr R, ElementId a);
Ideal nilradical(RingPtr R);

// All flags by direct quantifier scan; witnesses are the lexicographically
// first violations. Asserts the implication lattice (prime => semiprime =>
// semi_r, r => semi_r, r => pr, n => semi_n => semi_r) and throws on breach.
IdealFlags classify_ideal(const Ideal& I);

// Radical-containment route: sqrt(I) subset of zd(R) union I. Must agree with
// the definition-level scan and with the k-power form for k = 3 and k = order;
// a disagreement throws with a witness.
bool char_crosscheck(const Ideal& I);

// Single-flag scans without the full classification (false on improper ideals).
bool ideal_is_semi_r(const Ideal& I);
bool ideal_is_r(const Ideal& I);

std::string format_elems(const RingTable& R, const ElemSet& s);

}  // namespace ringlab
