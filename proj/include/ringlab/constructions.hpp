#pragma once

#include <utility>
#include <vector>

#include "ringlab/module.hpp"

namespace ringlab {

struct RingHom {
    RingPtr src, dst;
    std::vector<ElementId> map;  // one dst element per src element

    bool is_identity() const { return src == dst || src->same_table(*dst); }
};
bool hom_valid(const RingHom& f);
bool hom_surjective(const RingHom& f);
bool hom_injective(const RingHom& f);
RingHom identity_hom(RingPtr R);

struct QuotientRing {
    RingPtr ring;
    std::vector<ElementId> proj;  // base index -> coset index
};
QuotientRing quotient_ring(RingPtr R, const Ideal& I);
Ideal push_ideal(const QuotientRing& Q, const Ideal& I);  // image of an ideal containing ker

struct Localization {
    RingPtr ring;
    std::vector<ElementId> canonical;  // r -> class of r/1
    ElemSet saturated;                 // multiplicative closure of S with 1
};
Localization localization(RingPtr R, const ElemSet& S);
Ideal localize_ideal(const Localization& L, const Ideal& I);  // S^-1 I

struct ModLocalization {
    ModulePtr mod;  // over L.ring
    std::vector<uint16_t> canonical;
};
ModLocalization localize_module(const Localization& L, ModulePtr M);
Submodule localize_submodule(const Localization& L, const ModLocalization& LM, const Submodule& N);

// R(+)M on pairs (r,m), index r*|M| + m.
RingPtr idealization(RingPtr R, ModulePtr M);
inline ElementId idz_index(const ModuleTable& M, ElementId r, uint16_t m) {
    return static_cast<ElementId>(r * M.order + m);
}
// I(+)N; requires IM subset of N (the ideal criterion) and throws otherwise.
Ideal ideal_idealization(RingPtr RM, const Ideal& I, const Submodule& N);

// Amalgamation R1 join^f J: subring {(a, f(a)+j)} of R1 x R2.
struct AmalgRing {
    RingPtr ring;
    RingPtr r1, r2;
    RingHom f;
    Ideal j;                                            // ideal of r2
    std::vector<std::pair<ElementId, ElementId>> elems; // (a, s) per index
    RingPtr sub;                                        // f(R1)+J as a ring table
    std::vector<ElementId> sub_embed;                   // sub index -> r2 index
    ElementId pair_index(ElementId a, ElementId s) const;  // throws if not in carrier
    ElementId sub_index(ElementId r2_elem) const;          // throws if outside f(R1)+J
};
AmalgRing amalgamation(RingPtr R1, RingPtr R2, const RingHom& f, const Ideal& J);

Ideal transfer_join(const AmalgRing& A, const Ideal& I);       // I join^f J
Ideal transfer_bar(const AmalgRing& A, const Ideal& K_of_sub); // bar K^f

// Z(J) inside the subring f(R1)+J: elements annihilating some nonzero j in J.
ElemSet z_of_ideal(const RingTable& S, const Ideal& J);

// Module duplication M join J over the duplication ring R join J.
struct DupModule {
    ModulePtr mod;  // over A.ring
    ModulePtr base;
    std::vector<std::pair<uint16_t, uint16_t>> elems;  // (m, m')
    Submodule jm;                                      // JM inside base
    uint16_t pair_index(uint16_t m, uint16_t mp) const;
};
DupModule dup_module(const AmalgRing& A, ModulePtr M);
Submodule dup_transfer_njoin(const DupModule& D, const Submodule& N);  // N join J
Submodule dup_transfer_bar(const DupModule& D, const Submodule& N);    // bar N

struct ModuleHom {
    ModulePtr src, dst;
    RingHom f;  // scalar hom: phi(r m) = f(r) phi(m)
    std::vector<uint16_t> map;
};
bool module_hom_valid(const ModuleHom& phi);

// M1 join^phi J M2 = {(m1, phi(m1)+m2) : m2 in J M2} over R1 join^f J.
struct AmalgModule {
    ModulePtr mod;
    ModulePtr m1, m2;
    ModuleHom phi;
    Submodule jm2;  // J M2 inside M2
    std::vector<std::pair<uint16_t, uint16_t>> elems;
    uint16_t pair_index(uint16_t x1, uint16_t x2) const;
};
AmalgModule amalg_module(const AmalgRing& A, ModulePtr M1, ModulePtr M2, const ModuleHom& phi);
Submodule amalg_transfer_n1(const AmalgModule& D, const Submodule& N1);
Submodule amalg_transfer_bar2(const AmalgModule& D, const Submodule& N2);

// Enumerations (deterministic order). Caps: homs 32/32, subrings 16, module homs 16.
std::vector<RingHom> enumerate_homs(RingPtr R1, RingPtr R2);
std::vector<ModuleHom> enumerate_module_homs(ModulePtr M1, ModulePtr M2, const RingHom& f);

struct SubringInfo {
    RingPtr table;
    std::vector<ElementId> embed;  // subring index -> parent index
    bool essential = false;        // every nonzero ideal of the parent meets it
};
std::vector<SubringInfo> enumerate_subrings(RingPtr S);

// Pull an ideal of the parent back into a subring table (intersection).
Ideal restrict_ideal(const SubringInfo& sub, const Ideal& J);

}  // namespace ringlab
