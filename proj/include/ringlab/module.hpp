#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct ModuleViolation {
    std::string axiom;
    std::array<uint16_t, 3> witness{0, 0, 0};
};

// A finite module over a table ring: abelian-group table plus scalar action.
// Immutable after construction, like RingTable.
struct ModuleTable {
    RingPtr ring;
    uint16_t order = 0;
    std::vector<uint16_t> madd;  // order*order
    std::vector<uint16_t> act;   // ring->order * order, act[r][m]
    std::vector<uint16_t> mneg;
    std::vector<std::string> names;

    ElemSet torsion;  // T(M) as a SET; not a submodule in general
    ElemSet zm;       // Z(M) = {r : rm = 0 for some m != 0}
    ElemSet ann;      // Ann_R(M)

    int cyclic_modulus = 0;  // > 0 when built as Z_d over Z_n
    std::string expr;

    uint16_t a(uint16_t x, uint16_t y) const { return madd[size_t(x) * order + y]; }
    uint16_t s(ElementId r, uint16_t m) const { return act[size_t(r) * order + m]; }
    uint16_t sub(uint16_t x, uint16_t y) const { return a(x, mneg[y]); }

    // r acts injectively (hence bijectively) iff Ann_M(r) = 0
    bool scalar_regular(ElementId r) const { return !zm.test(r); }
};

using ModulePtr = std::shared_ptr<const ModuleTable>;

struct Submodule {
    ModulePtr mod;
    ElemSet members;
    std::vector<uint16_t> gens;

    bool is_proper() const { return members.count() != mod->order; }
    bool contains(uint16_t m) const { return members.test(m); }
};

struct SubmoduleFlags {
    bool is_proper = false;
    bool is_prime = false;
    bool is_semiprime = false;
    bool is_r = false;
    bool is_sr_intro = false;  // conclusion r in (N:M)
    bool is_sr_alt = false;    // conclusion m in N
    bool is_semi_r = false;
    bool satisfies_D = false;
    std::optional<FlagWitness> wit_semiprime, wit_r, wit_sr_intro, wit_sr_alt, wit_semi_r;
};

struct ModuleFlags {
    bool is_faithful = false;
    bool is_multiplication = false;
    bool is_torsion = false;
    bool is_torsion_free = false;
};

struct SelfModule {};
struct CyclicModule {
    int d;
};
struct ProductModule {
    std::vector<ModulePtr> factors;
};
using ModuleKind = std::variant<SelfModule, CyclicModule, ProductModule>;

ModulePtr build_module(RingPtr R, const ModuleKind& kind);
ModulePtr make_module(ModuleTable t, bool verify = true);
std::vector<ModuleViolation> verify_module_axioms(const ModuleTable& M);

Submodule generate_submodule(ModulePtr M, const std::vector<uint16_t>& gens);
Submodule submodule_from_set(ModulePtr M, ElemSet members);
std::vector<Submodule> all_submodules(ModulePtr M);

const ElemSet& torsion_set(const ModuleTable& M);

Submodule ann_scalar(ModulePtr M, ElementId r);  // (0 :_M r)
Ideal ann_element(ModulePtr M, uint16_t m);      // (0 :_R m)

Ideal colon_rm(const Submodule& N);                       // (N :_R M)
Submodule colon_mi(const Submodule& N, const Ideal& I);   // (N :_M I)
Submodule ideal_times_module(const Ideal& I, ModulePtr M);
Submodule ideal_times_submodule(const Ideal& I, const Submodule& N);

ModuleFlags module_flags(ModulePtr M);
bool is_pure(const Submodule& N);

// Intersection of all prime submodules containing N (M when none). When M is
// faithful multiplication the result is cross-checked against
// radical((N:M))*M and a mismatch throws.
Submodule m_rad(const Submodule& N);
std::vector<Submodule> prime_submodules(ModulePtr M);

SubmoduleFlags classify_submodule(const Submodule& N);
bool d_annihilator(const Submodule& N);

// Single-flag scans without the full classification (false on improper input).
bool submodule_is_semi_r(const Submodule& N);
bool submodule_is_r(const Submodule& N);

}  // namespace ringlab
