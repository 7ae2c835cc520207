#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Integer polynomials (Z[x]) -- just enough for the fixed fixture oracles.
// ---------------------------------------------------------------------------
struct Poly {
    std::vector<long long> c;  // c[i] is the coefficient of x^i

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long eval(long long x) const;
    std::string str() const;  // "2+x", "x^2", ...
};
Poly poly(std::initializer_list<long long> coeffs);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
bool poly_divisible_by_monic(const Poly& f, const Poly& g);

// Fixed ideal-membership oracles over Z[x].
struct PolyIdeal {
    enum class Kind { EvalMod, MonicDiv } kind;
    long long m = 0, c = 0;  // EvalMod: f in I iff f(c) = 0 (mod m)
    Poly g;                  // MonicDiv: f in I iff g | f
    std::string label;
};
bool poly_membership(const PolyIdeal& I, const Poly& f);

// ---------------------------------------------------------------------------
// Symbolic rings: finite products of Z and Z_m, Z(+)Z_k, and the Z[x] carrier.
// ---------------------------------------------------------------------------
struct SymRing {
    std::vector<long long> factors;  // 0 = Z, m >= 2 = Z_m
    long long idz_k = 0;             // > 0: the ring is Z(+)Z_k
    std::string polyfix;             // nonempty: fixed Z[x] carrier tag
    std::string expr;

    bool is_poly() const { return !polyfix.empty(); }
    bool is_idz() const { return idz_k > 0; }
    bool has_free_factor() const {
        for (long long f : factors)
            if (f == 0) return true;
        return false;
    }
};

using SymElem = std::vector<long long>;
std::string sym_elem_str(const SymRing& R, const SymElem& a);

// Ideal data per factor: Z factor -> n >= 0 meaning nZ (n = 1 is the whole
// factor); Z_m factor -> a divisor d of m meaning dZ_m (d = m is the zero
// ideal). For Z(+)Z_k carriers only nZ(+)Z_k shapes are supported.
struct SymIdeal {
    SymRing ring;
    std::vector<long long> comp;
    std::string label;

    bool is_proper() const;
};
SymIdeal sym_ideal(SymRing R, std::vector<long long> comp, std::string label = "");
bool sym_membership(const SymIdeal& I, const SymElem& a);
bool sym_elem_regular(const SymRing& R, const SymElem& a);

struct SymIdealFlags {
    bool is_proper = false;
    bool is_semiprime = false;
    bool is_r = false;
    bool is_semi_r = false;
    std::optional<SymElem> wit_semiprime, wit_r_a, wit_semi_r;
    std::optional<SymElem> wit_r_b;  // second element of the r-ideal violation
    std::string mode = "exact";
};
// Exact componentwise feasibility decision; throws on poly carriers.
SymIdealFlags sym_classify(const SymIdeal& I);

// Bounded counterexample search (components range over [-h, h], torsion
// residues in full). Returns a semi-r violating element if one exists at that
// height; absence proves nothing.
std::optional<SymElem> sym_bounded_semi_r_violation(const SymIdeal& I, int height);

// The closed-form trichotomy for products of Z factors: some component is 0,
// or every proper component is semiprime (whole components allowed).
bool cchar_trichotomy(const SymIdeal& I);

// ---------------------------------------------------------------------------
// Finitely generated Z-modules with lattice-normal-form submodules.
// ---------------------------------------------------------------------------
struct FGZModule {
    std::vector<long long> inv;  // invariant factors; 0 = free Z factor
    std::string expr;

    bool torsion_free() const {
        for (long long m : inv)
            if (m != 0) return false;
        return true;
    }
    bool all_torsion() const {
        for (long long m : inv)
            if (m == 0) return false;
        return true;
    }
};

struct LatticeSubmodule {
    FGZModule mod;
    std::vector<std::vector<long long>> gens;  // generator columns
    std::vector<std::vector<long long>> hnf;   // canonical columns
    std::vector<int> pivot;                    // pivot row of each column, increasing
    std::string label;
};
LatticeSubmodule make_lattice_submodule(FGZModule M, std::vector<std::vector<long long>> gens,
                                        std::string label = "");
bool lattice_membership(const LatticeSubmodule& N, std::vector<long long> v);
bool lattice_is_proper(const LatticeSubmodule& N);
// Per-row ideal data when the submodule is a product of per-factor subgroups.
std::optional<std::vector<long long>> lattice_product_form(const LatticeSubmodule& N);

struct SymModWitness {
    long long r = 0;
    std::vector<long long> m;
};
struct SymSubFlags {
    bool is_proper = false;
    bool is_semiprime = false;
    bool is_r = false;
    bool is_sr_intro = false;
    bool is_sr_alt = false;
    bool is_semi_r = false;
    bool satisfies_D = false;
    bool d_exact = false;  // D decided by a closed-form rule (vs bounded search)
    std::optional<SymModWitness> wit_semiprime, wit_r, wit_sr_intro, wit_sr_alt, wit_semi_r;
    std::string mode = "exact";
};
// Exact for product-form submodules; throws otherwise (bounded search is
// separate and never feeds a proved verdict).
SymSubFlags sym_classify_submodule(const LatticeSubmodule& N);

std::optional<SymModWitness> sym_bounded_submodule_violation(const LatticeSubmodule& N,
                                                             const std::string& flag, int height);

// small number theory helpers
std::vector<std::pair<long long, int>> factorize(long long n);
bool squarefree(long long n);

}  // namespace ringlab
