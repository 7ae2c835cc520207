#include "ringlab/symbolic.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

long long Poly::eval(long long x) const {
    long long v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

std::string Poly::str() const {
    if (c.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::string term;
        if (i == 0)
            term = std::to_string(c[i]);
        else {
            if (c[i] == 1)
                term = "";
            else if (c[i] == -1)
                term = "-";
            else
                term = std::to_string(c[i]);
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && c[i] > 0) out += "+";
        out += term;
    }
    return out;
}

Poly poly(std::initializer_list<long long> coeffs) {
    Poly p{coeffs};
    p.normalize();
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t k = 0; k < b.c.size(); ++k) r.c[i + k] += a.c[i] * b.c[k];
    r.normalize();
    return r;
}

bool poly_divisible_by_monic(const Poly& f, const Poly& g) {
    if (g.is_zero() || g.c.back() != 1) throw Error("poly division needs a monic divisor");
    Poly rem = f;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        long long lead = rem.c.back();
        int shift = rem.degree() - g.degree();
        for (int i = 0; i <= g.degree(); ++i) rem.c[i + shift] -= lead * g.c[i];
        rem.normalize();
    }
    return rem.is_zero();
}

bool poly_membership(const PolyIdeal& I, const Poly& f) {
    switch (I.kind) {
        case PolyIdeal::Kind::EvalMod: {
            long long v = f.eval(I.c) % I.m;
            return v == 0;
        }
        case PolyIdeal::Kind::MonicDiv:
            return poly_divisible_by_monic(f, I.g);
    }
    return false;
}

// ---------------------------------------------------------------------------
// number helpers
// ---------------------------------------------------------------------------

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool squarefree(long long n) {
    for (auto& [p, e] : factorize(n))
        if (e >= 2) return false;
    return true;
}

namespace {

long long sqrt_cover(long long n) {
    // smallest positive x with n | x^2
    long long x = 1;
    for (auto& [p, e] : factorize(n))
        for (int i = 0; i < (e + 1) / 2; ++i) x *= p;
    return x;
}

long long lmod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// symbolic rings and ideals
// ---------------------------------------------------------------------------

std::string sym_elem_str(const SymRing& R, const SymElem& a) {
    if (a.size() == 1) return std::to_string(a[0]);
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    (void)R;
    return out + ")";
}

SymIdeal sym_ideal(SymRing R, std::vector<long long> comp, std::string label) {
    if (R.is_poly()) throw UsageError("sym_ideal: poly carriers use fixed oracles");
    if (comp.size() != R.factors.size()) throw UsageError("sym_ideal: component count mismatch");
    for (size_t i = 0; i < comp.size(); ++i) {
        long long m = R.factors[i];
        if (m == 0) {
            comp[i] = std::abs(comp[i]);
        } else {
            long long d = std::gcd(comp[i], m);
            comp[i] = d == 0 ? m : d;
        }
    }
    return SymIdeal{std::move(R), std::move(comp), std::move(label)};
}

bool SymIdeal::is_proper() const {
    if (ring.is_idz()) return comp[0] != 1;
    for (size_t i = 0; i < comp.size(); ++i) {
        long long v = comp[i];
        if (ring.factors[i] == 0) {
            if (v != 1) return true;
        } else if (v != 1)
            return true;
    }
    return false;
}

bool sym_membership(const SymIdeal& I, const SymElem& a) {
    const SymRing& R = I.ring;
    if (R.is_idz()) {
        if (a.size() != 2) throw UsageError("sym_membership: idealization elements are pairs");
        return I.comp[0] == 0 ? a[0] == 0 : a[0] % I.comp[0] == 0;
    }
    if (a.size() != R.factors.size()) throw UsageError("sym_membership: element shape mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        long long v = R.factors[i] == 0 ? a[i] : lmod(a[i], R.factors[i]);
        long long n = I.comp[i];
        if (R.factors[i] == 0) {
            if (n == 0 ? v != 0 : v % n != 0) return false;
        } else {
            if (v % n != 0) return false;
        }
    }
    return true;
}

bool sym_elem_regular(const SymRing& R, const SymElem& a) {
    if (R.is_idz()) return std::gcd(a[0], R.idz_k) == 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (R.factors[i] == 0) {
            if (a[i] == 0) return false;
        } else {
            if (std::gcd(lmod(a[i], R.factors[i]), R.factors[i]) != 1) return false;
        }
    }
    return true;
}

SymIdealFlags sym_classify(const SymIdeal& I) {
    const SymRing& R = I.ring;
    if (R.is_poly()) throw UsageError("sym_classify: exact mode refused on poly carriers");
    SymIdealFlags f;
    f.is_proper = I.is_proper();
    if (!f.is_proper) return f;

    if (R.is_idz()) {
        long long n = I.comp[0], k = R.idz_k;
        // semiprime: a^2 in nZ forcing a in nZ, no regularity hypothesis
        f.is_semiprime = n == 0 || squarefree(n);
        if (!f.is_semiprime) f.wit_semiprime = SymElem{sqrt_cover(n), 0};
        // semi r: a regular means gcd(a,k)=1; squares of regular elements land
        // in nZ only when rad(n) is coprime to k
        long long rad = 1;
        for (auto& [p, e] : factorize(n)) rad *= p;
        if (n == 0 || std::gcd(rad, k) > 1)
            f.is_semi_r = true;
        else {
            f.is_semi_r = squarefree(n);
            if (!f.is_semi_r) f.wit_semi_r = SymElem{sqrt_cover(n), 0};
        }
        // r-ideal: need every prime of n to divide k
        if (n == 0)
            f.is_r = true;
        else {
            long long coprime_part = 1;
            for (auto& [p, e] : factorize(n))
                if (k % p != 0)
                    for (int i = 0; i < e; ++i) coprime_part *= p;
            f.is_r = coprime_part == 1;
            if (!f.is_r) {
                f.wit_r_a = SymElem{coprime_part, 0};
                f.wit_r_b = SymElem{n / coprime_part, 0};
            }
        }
        return f;
    }

    const size_t k = R.factors.size();
    // per-factor feasibility for the semi-r hypothesis (regular, square in I)
    std::vector<long long> stay(k, 0);  // a feasible value, or -1 if none exists
    std::vector<long long> escape(k, 0);  // a feasible value outside I_i, or 0 if none
    for (size_t i = 0; i < k; ++i) {
        long long m = R.factors[i], v = I.comp[i];
        if (m == 0) {
            if (v == 0)
                stay[i] = -1;  // nonzero a with a^2 = 0 is impossible in Z
            else if (v == 1)
                stay[i] = 1;
            else {
                long long s = sqrt_cover(v);
                stay[i] = s;                          // minimal feasible value
                if (s % v != 0) escape[i] = s;        // escapes iff v is not squarefree
            }
        } else {
            // units u with u^2 in dZ_m exist only when d = 1
            stay[i] = v == 1 ? 1 : -1;
        }
    }
    bool all_feasible = true;
    for (size_t i = 0; i < k; ++i)
        if (stay[i] == -1) all_feasible = false;
    int esc = -1;
    for (size_t i = 0; i < k && esc < 0; ++i)
        if (escape[i] != 0) esc = static_cast<int>(i);
    f.is_semi_r = !(all_feasible && esc >= 0);
    if (!f.is_semi_r) {
        SymElem w(k);
        for (size_t i = 0; i < k; ++i) w[i] = stay[i];
        f.wit_semi_r = std::move(w);
    }

    // semiprime: no regularity, every factor escapes independently
    f.is_semiprime = true;
    for (size_t i = 0; i < k && f.is_semiprime; ++i) {
        long long m = R.factors[i], v = I.comp[i];
        long long d = m == 0 ? v : v;
        if (d >= 2 && !squarefree(d)) {
            f.is_semiprime = false;
            SymElem w(k, 0);
            w[i] = sqrt_cover(d);
            f.wit_semiprime = std::move(w);
        }
    }

    // r-ideal: a regular, ab in I, b outside I. Z_m factors cannot escape;
    // a Z factor with 2 <= n escapes via (n, 1).
    f.is_r = true;
    for (size_t i = 0; i < k && f.is_r; ++i) {
        if (R.factors[i] != 0) continue;
        long long n = I.comp[i];
        if (n >= 2) {
            f.is_r = false;
            SymElem a(k, 1), b(k, 0);
            for (size_t t = 0; t < k; ++t)
                if (R.factors[t] != 0) a[t] = 1;
            a[i] = n;
            b[i] = 1;
            f.wit_r_a = std::move(a);
            f.wit_r_b = std::move(b);
        }
    }
    return f;
}

std::optional<SymElem> sym_bounded_semi_r_violation(const SymIdeal& I, int height) {
    const SymRing& R = I.ring;
    if (R.is_poly()) throw UsageError("bounded search: poly carriers use fixture oracles");
    // coordinate value order: 0, 1, -1, 2, -2, ...
    auto values_for = [&](size_t i) {
        std::vector<long long> out;
        if (R.is_idz() && i == 1) {
            for (long long v = 0; v < R.idz_k; ++v) out.push_back(v);
            return out;
        }
        long long m = R.is_idz() ? 0 : R.factors[i];
        if (m == 0) {
            out.push_back(0);
            for (int v = 1; v <= height; ++v) {
                out.push_back(v);
                out.push_back(-v);
            }
        } else {
            for (long long v = 0; v < m; ++v) out.push_back(v);
        }
        return out;
    };
    size_t dims = R.is_idz() ? 2 : R.factors.size();
    SymElem cur(dims, 0);
    std::optional<SymElem> found;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (found) return;
        if (i == dims) {
            if (!sym_elem_regular(R, cur)) return;
            SymElem sq(dims);
            if (R.is_idz()) {
                sq[0] = cur[0] * cur[0];
                sq[1] = lmod(2 * cur[0] * cur[1], R.idz_k);
            } else {
                for (size_t t = 0; t < dims; ++t)
                    sq[t] = R.factors[t] == 0 ? cur[t] * cur[t]
                                              : lmod(cur[t] * cur[t], R.factors[t]);
            }
            if (sym_membership(I, sq) && !sym_membership(I, cur)) found = cur;
            return;
        }
        for (long long v : values_for(i)) {
            cur[i] = v;
            rec(i + 1);
            if (found) return;
        }
        cur[i] = 0;
    };
    rec(0);
    return found;
}

bool cchar_trichotomy(const SymIdeal& I) {
    for (long long m : I.ring.factors)
        if (m != 0) throw UsageError("cchar_trichotomy: requires a product of Z factors");
    for (long long n : I.comp)
        if (n == 0) return true;
    for (long long n : I.comp)
        if (n != 1 && !squarefree(n)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// lattice submodules
// ---------------------------------------------------------------------------

namespace {

void reduce_col(std::vector<long long>& target, const std::vector<long long>& by, long long q) {
    for (size_t i = 0; i < target.size(); ++i) target[i] -= q * by[i];
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

LatticeSubmodule make_lattice_submodule(FGZModule M, std::vector<std::vector<long long>> gens,
                                        std::string label) {
    const size_t k = M.inv.size();
    std::vector<std::vector<long long>> work;
    for (auto& g : gens) {
        if (g.size() != k) throw UsageError("lattice submodule: generator dimension mismatch");
        work.push_back(g);
    }
    for (size_t r = 0; r < k; ++r)
        if (M.inv[r] != 0) {
            std::vector<long long> rel(k, 0);
            rel[r] = M.inv[r];
            work.push_back(std::move(rel));
        }

    LatticeSubmodule N;
    N.mod = std::move(M);
    N.gens = std::move(gens);
    N.label = std::move(label);
    for (size_t r = 0; r < k; ++r) {
        // combine the columns with a nonzero entry at row r into one pivot
        std::vector<std::vector<long long>> rest;
        std::vector<long long> pivotcol;
        for (auto& col : work) {
            if (col[r] == 0) {
                rest.push_back(std::move(col));
                continue;
            }
            if (pivotcol.empty()) {
                pivotcol = std::move(col);
                continue;
            }
            // extended gcd combination
            long long a = pivotcol[r], b = col[r];
            long long x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
            while (bb != 0) {
                long long q = aa / bb;
                std::swap(aa -= q * bb, bb);
                std::swap(x0 -= q * x1, x1);
                std::swap(y0 -= q * y1, y1);
            }
            long long g = aa;  // g = x0*a + y0*b
            std::vector<long long> np(k), nc(k);
            for (size_t t = 0; t < k; ++t) {
                np[t] = x0 * pivotcol[t] + y0 * col[t];
                nc[t] = (b / g) * pivotcol[t] - (a / g) * col[t];
            }
            pivotcol = std::move(np);
            rest.push_back(std::move(nc));
        }
        work = std::move(rest);
        if (pivotcol.empty()) continue;
        if (pivotcol[r] < 0)
            for (auto& v : pivotcol) v = -v;
        for (size_t c = 0; c < N.hnf.size(); ++c) {
            long long q = floordiv(N.hnf[c][r], pivotcol[r]);
            if (q != 0) reduce_col(N.hnf[c], pivotcol, q);
        }
        N.pivot.push_back(static_cast<int>(r));
        N.hnf.push_back(std::move(pivotcol));
    }
    return N;
}

bool lattice_membership(const LatticeSubmodule& N, std::vector<long long> v) {
    const size_t k = N.mod.inv.size();
    if (v.size() != k) throw UsageError("lattice_membership: dimension mismatch");
    for (size_t c = 0; c < N.hnf.size(); ++c) {
        int r = N.pivot[c];
        long long p = N.hnf[c][r];
        if (v[r] % p != 0) return false;
        reduce_col(v, N.hnf[c], v[r] / p);
    }
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

bool lattice_is_proper(const LatticeSubmodule& N) {
    const size_t k = N.mod.inv.size();
    for (size_t r = 0; r < k; ++r) {
        std::vector<long long> e(k, 0);
        e[r] = 1;
        if (!lattice_membership(N, e)) return true;
    }
    return false;
}

std::optional<std::vector<long long>> lattice_product_form(const LatticeSubmodule& N) {
    const size_t k = N.mod.inv.size();
    std::vector<long long> rows(k, -1);  // -1 = no pivot yet
    for (size_t c = 0; c < N.hnf.size(); ++c) {
        int nz = 0;
        for (long long x : N.hnf[c])
            if (x != 0) ++nz;
        if (nz != 1) return std::nullopt;
        rows[N.pivot[c]] = N.hnf[c][N.pivot[c]];
    }
    std::vector<long long> out(k);
    for (size_t r = 0; r < k; ++r) {
        if (N.mod.inv[r] == 0)
            out[r] = rows[r] < 0 ? 0 : rows[r];  // 0 encodes the zero subgroup of Z
        else
            out[r] = rows[r] < 0 ? N.mod.inv[r] : rows[r];
    }
    return out;
}

SymSubFlags sym_classify_submodule(const LatticeSubmodule& N) {
    auto pf = lattice_product_form(N);
    if (!pf) throw UsageError("sym_classify_submodule: exact mode needs a product-form submodule");
    const auto& inv = N.mod.inv;
    const auto& comp = *pf;
    const size_t k = inv.size();

    SymSubFlags f;
    f.is_proper = lattice_is_proper(N);
    if (!f.is_proper) return f;

    std::vector<long long> torsion_mods;
    for (size_t r = 0; r < k; ++r)
        if (inv[r] != 0) torsion_mods.push_back(inv[r]);
    auto coprime_to_torsion = [&](long long p) {
        for (long long m : torsion_mods)
            if (m % p == 0) return false;
        return true;
    };

    // semiprime: every component subgroup must be squarefree-or-trivial
    f.is_semiprime = true;
    for (size_t r = 0; r < k && f.is_semiprime; ++r) {
        long long v = comp[r];
        bool zero_subgroup_of_z = inv[r] == 0 && v == 0;
        if (zero_subgroup_of_z || v == 1 || squarefree(v)) continue;
        f.is_semiprime = false;
        long long p = 0;
        for (auto& [q, e] : factorize(v))
            if (e >= 2) {
                p = q;
                break;
            }
        SymModWitness w;
        w.r = p;
        w.m.assign(k, 0);
        w.m[r] = v / (p * p);
        f.wit_semiprime = std::move(w);
    }

    // semi r: a violation needs a free row with p^2 | n for a prime p acting
    // injectively, i.e. coprime to every torsion invariant
    f.is_semi_r = true;
    for (size_t r = 0; r < k && f.is_semi_r; ++r) {
        if (inv[r] != 0 || comp[r] < 2) continue;
        for (auto& [p, e] : factorize(comp[r])) {
            if (e >= 2 && coprime_to_torsion(p)) {
                f.is_semi_r = false;
                SymModWitness w;
                w.r = p;
                w.m.assign(k, 0);
                w.m[r] = comp[r] / (p * p);
                f.wit_semi_r = std::move(w);
                break;
            }
        }
    }

    // r-submodule: same shape with a single factor of p extracted
    f.is_r = true;
    for (size_t r = 0; r < k && f.is_r; ++r) {
        if (inv[r] != 0 || comp[r] < 2) continue;
        for (auto& [p, e] : factorize(comp[r])) {
            if (coprime_to_torsion(p)) {
                f.is_r = false;
                SymModWitness w;
                w.r = p;
                w.m.assign(k, 0);
                w.m[r] = comp[r] / p;
                f.wit_r = std::move(w);
                break;
            }
        }
    }

    // (N:M) = L Z with L = 0 when a free row carries the zero subgroup
    long long colon = 1;
    for (size_t r = 0; r < k; ++r) {
        if (inv[r] == 0 && comp[r] == 0) {
            colon = 0;
            break;
        }
        colon = std::lcm(colon, comp[r]);
    }

    // sr (conclusion r in (N:M)): violated whenever some free row has a
    // nonzero proper-or-whole subgroup; reuse the r-witness when it applies
    bool has_free_nonzero = false;
    size_t free_nonzero_row = 0;
    for (size_t r = 0; r < k; ++r)
        if (inv[r] == 0 && comp[r] >= 1) {
            has_free_nonzero = true;
            free_nonzero_row = r;
            break;
        }
    f.is_sr_intro = !has_free_nonzero;
    if (!f.is_sr_intro) {
        if (f.wit_r && (colon == 0 || f.wit_r->r % colon != 0))
            f.wit_sr_intro = f.wit_r;
        else {
            SymModWitness w;
            w.r = 1;
            w.m.assign(k, 0);
            w.m[free_nonzero_row] = comp[free_nonzero_row];
            f.wit_sr_intro = std::move(w);
        }
    }

    // sr (conclusion m in N): r = 0 satisfies the hypotheses for any m with a
    // nonzero free coordinate, so only all-torsion modules survive
    bool has_free_row = !N.mod.all_torsion();
    f.is_sr_alt = !has_free_row;
    if (!f.is_sr_alt) {
        size_t freerow = 0;
        for (size_t r = 0; r < k; ++r)
            if (inv[r] == 0) {
                freerow = r;
                break;
            }
        SymModWitness w;
        w.r = 0;
        w.m.assign(k, 0);
        size_t escrow = k;
        for (size_t r = 0; r < k; ++r) {
            long long v = comp[r];
            bool whole = (inv[r] != 0 && v == 1) || (inv[r] == 0 && v == 1);
            if (!whole) {
                escrow = r;
                break;
            }
        }
        // escrow exists because N is proper
        w.m[escrow] = 1;
        if (inv[escrow] != 0 || escrow != freerow) w.m[freerow] = std::max<long long>(comp[freerow], 1);
        if (inv[escrow] == 0 && comp[escrow] == 0) w.m[escrow] = 1;
        f.wit_sr_alt = std::move(w);
    }

    // D-annihilator: exact on all-torsion (injective scalars are invertible)
    // and on torsion-free (K meets T(M) = 0 trivially) carriers
    if (N.mod.all_torsion() || N.mod.torsion_free()) {
        f.satisfies_D = true;
        f.d_exact = true;
    } else {
        f.satisfies_D = !sym_bounded_submodule_violation(N, "D", 6).has_value();
        f.d_exact = false;
    }
    return f;
}

std::optional<SymModWitness> sym_bounded_submodule_violation(const LatticeSubmodule& N,
                                                             const std::string& flag, int height) {
    const auto& inv = N.mod.inv;
    const size_t k = inv.size();
    std::vector<long long> torsion_mods;
    for (long long m : inv)
        if (m != 0) torsion_mods.push_back(m);
    auto ann_m_zero = [&](long long r) {
        if (r == 0) return false;
        for (long long m : torsion_mods)
            if (std::gcd(lmod(r, m), m) != 1) return false;
        return true;
    };
    auto ann_r_zero = [&](const std::vector<long long>& m) {
        for (size_t i = 0; i < k; ++i)
            if (inv[i] == 0 && m[i] != 0) return true;
        return false;
    };
    auto scaled = [&](long long r, std::vector<long long> m) {
        for (size_t i = 0; i < k; ++i) m[i] = inv[i] == 0 ? r * m[i] : lmod(r * m[i], inv[i]);
        return m;
    };

    std::vector<std::vector<long long>> coords(k);
    for (size_t i = 0; i < k; ++i) {
        if (inv[i] == 0) {
            coords[i].push_back(0);
            for (int v = 1; v <= height; ++v) {
                coords[i].push_back(v);
                coords[i].push_back(-v);
            }
        } else {
            for (long long v = 0; v < inv[i]; ++v) coords[i].push_back(v);
        }
    }
    std::vector<long long> rvals;
    rvals.push_back(0);
    for (int v = 1; v <= height; ++v) {
        rvals.push_back(v);
        rvals.push_back(-v);
    }

    std::optional<SymModWitness> found;
    std::vector<long long> cur(k, 0);
    std::function<void(size_t, long long)> rec = [&](size_t i, long long r) {
        if (found) return;
        if (i == k) {
            if (flag == "semiprime") {
                if (lattice_membership(N, scaled(r * r, cur)) &&
                    !lattice_membership(N, scaled(r, cur)))
                    found = SymModWitness{r, cur};
            } else if (flag == "semi_r") {
                if (ann_m_zero(r) && ann_r_zero(cur) &&
                    lattice_membership(N, scaled(r * r, cur)) &&
                    !lattice_membership(N, scaled(r, cur)))
                    found = SymModWitness{r, cur};
            } else if (flag == "r") {
                if (ann_m_zero(r) && lattice_membership(N, scaled(r, cur)) &&
                    !lattice_membership(N, cur))
                    found = SymModWitness{r, cur};
            } else if (flag == "sr_intro") {
                if (ann_r_zero(cur) && lattice_membership(N, scaled(r, cur))) {
                    // r in (N:M) iff r*e_i in N for all i
                    bool in_colon = true;
                    for (size_t t = 0; t < k && in_colon; ++t) {
                        std::vector<long long> e(k, 0);
                        e[t] = 1;
                        in_colon = lattice_membership(N, scaled(r, e));
                    }
                    if (!in_colon) found = SymModWitness{r, cur};
                }
            } else if (flag == "sr_alt") {
                if (ann_r_zero(cur) && lattice_membership(N, scaled(r, cur)) &&
                    !lattice_membership(N, cur))
                    found = SymModWitness{r, cur};
            } else if (flag == "D") {
                // K ranges over cyclic submodules generated by cur
                if (ann_m_zero(r)) {
                    bool rk_in = true;
                    for (int mult = -height; mult <= height && rk_in; ++mult)
                        rk_in = lattice_membership(N, scaled(r * mult, cur));
                    if (rk_in) {
                        bool k_in = lattice_membership(N, cur);
                        bool torsion_trivial = true;
                        // cur generates K; K meets T(M) nontrivially iff some
                        // multiple has zero free part and nonzero torsion part
                        for (int mult = 1; mult <= height && torsion_trivial; ++mult) {
                            auto v = scaled(mult, cur);
                            bool free_zero = true, tors_zero = true;
                            for (size_t t = 0; t < k; ++t) {
                                if (inv[t] == 0 && v[t] != 0) free_zero = false;
                                if (inv[t] != 0 && v[t] != 0) tors_zero = false;
                            }
                            if (free_zero && !tors_zero) torsion_trivial = false;
                        }
                        if (!k_in && !torsion_trivial) found = SymModWitness{r, cur};
                    }
                }
            }
            return;
        }
        for (long long v : coords[i]) {
            cur[i] = v;
            rec(i + 1, r);
            if (found) return;
        }
        cur[i] = 0;
    };
    for (long long r : rvals) {
        rec(0, r);
        if (found) break;
    }
    return found;
}

}  // namespace ringlab
