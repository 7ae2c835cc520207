#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/symbolic.hpp"

namespace ringlab {

// Element literal: a natural number or a tuple of literals.
struct ElemLit {
    bool is_tuple = false;
    long long value = 0;
    std::vector<ElemLit> parts;

    bool operator==(const ElemLit&) const;
};

// Module expression: self | Z<d> | ZZ | products of those.
struct ModExpr {
    enum class Kind { Self, Cyclic, Free, Prod } kind = Kind::Self;
    int d = 0;
    std::vector<ModExpr> factors;

    bool operator==(const ModExpr&) const;
};

// Ring expression grammar:
//   expr := "Z" nat | "ZZ" | expr "x" expr | "quot(" expr "," gens ")"
//         | "idz(" expr "," modexpr ")" | "dup(" expr "," gens ")"
//         | "amal(" expr "," expr "," hom "," gens ")" | "loc(" expr "," elems ")"
//         | "polyfix:" ident
//   gens := "<" ">" | "<" elem ("," elem)* ">"
//   elem := nat | "(" elem ("," elem)* ")"
//   hom  := "id" | "hom#" nat
//   modexpr := mfac ("x" mfac)* ; mfac := "self" | "Z" nat | "ZZ"
// "x" is left-associative and flattened; whitespace is insignificant between
// tokens.
struct RingExpr {
    enum class Kind { ZMod, ZZ, Prod, Quot, Idz, Dup, Amal, Loc, PolyFix } kind = Kind::ZMod;
    int n = 0;                       // ZMod
    std::vector<RingExpr> children;  // Prod factors; base (and second base for Amal)
    ModExpr mod;                     // Idz
    std::vector<ElemLit> gens;       // Quot/Dup/Amal/Loc
    std::string hom;                 // Amal: "id" or "hom#<k>"
    std::string ident;               // PolyFix

    bool operator==(const RingExpr&) const;
};

RingExpr parse_ring_expr(const std::string& text);
ModExpr parse_mod_expr(const std::string& text);
std::vector<ElemLit> parse_gens(const std::string& text);
std::string format_canonical(const RingExpr& e);
std::string format_canonical(const ModExpr& e);
std::string format_elem(const ElemLit& e);

// Elaborated finite ring plus the compositional literal resolver and whatever
// construction context the expression produced.
struct ElabRing {
    RingPtr table;
    std::function<ElementId(const ElemLit&)> resolve;
    // populated per construction kind
    std::vector<RingPtr> factors;                 // Prod
    std::shared_ptr<AmalgRing> amalg;             // Dup/Amal
    std::shared_ptr<QuotientRing> quot;           // Quot
    std::shared_ptr<Localization> loc;            // Loc
    RingPtr idz_base;                             // Idz
    ModulePtr idz_mod;                            // Idz
};

using ElabResult = std::variant<ElabRing, SymRing>;

// cap = maximum table order (capacity error above it)
ElabResult elaborate(const RingExpr& e, uint32_t cap = 4096);
ElabRing elaborate_table(const RingExpr& e, uint32_t cap = 4096);  // throws if symbolic

// Modules over an elaborated table ring ("self", "Z<d>", products).
struct ElabModule {
    ModulePtr table;
    std::function<uint16_t(const ElemLit&)> resolve;
};
ElabModule elaborate_module(const ElabRing& ring, const ModExpr& e, uint32_t cap = 4096);

// Symbolic modules over ZZ: invariant factors from the module expression
// (Free -> 0, Cyclic d -> d).
FGZModule elaborate_sym_module(const ModExpr& e);

}  // namespace ringlab
