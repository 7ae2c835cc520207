// JSON views over classification results, shared by the CLI and the python
// bindings.
#pragma once

#include <json.hpp>

#include "ringlab/dsl.hpp"
#include "ringlab/harness.hpp"

namespace ringlab::views {

using nlohmann::json;

inline std::string wit_str(const std::optional<FlagWitness>& w, const RingTable& R) {
    if (!w) return "";
    if (w->pair) return "(" + R.names[w->a] + "," + R.names[w->b] + ")";
    return R.names[w->a];
}

inline json ideal_flags_json(const IdealFlags& f, const RingTable& R) {
    json j;
    j["proper"] = f.is_proper;
    j["prime"] = f.is_prime;
    j["maximal"] = f.is_maximal;
    j["semiprime"] = f.is_semiprime;
    j["r"] = f.is_r;
    j["pr"] = f.is_pr;
    j["n"] = f.is_n;
    j["semi_n"] = f.is_semi_n;
    j["semi_r"] = f.is_semi_r;
    json w;
    if (f.wit_semiprime) w["semiprime"] = wit_str(f.wit_semiprime, R);
    if (f.wit_r) w["r"] = wit_str(f.wit_r, R);
    if (f.wit_pr) w["pr"] = wit_str(f.wit_pr, R);
    if (f.wit_n) w["n"] = wit_str(f.wit_n, R);
    if (f.wit_semi_n) w["semi_n"] = wit_str(f.wit_semi_n, R);
    if (f.wit_semi_r) w["semi_r"] = wit_str(f.wit_semi_r, R);
    j["witnesses"] = std::move(w);
    return j;
}

inline json sym_ideal_flags_json(const SymIdealFlags& f, const SymRing& R) {
    json j;
    j["proper"] = f.is_proper;
    j["semiprime"] = f.is_semiprime;
    j["r"] = f.is_r;
    j["semi_r"] = f.is_semi_r;
    j["mode"] = f.mode;
    json w;
    if (f.wit_semiprime) w["semiprime"] = sym_elem_str(R, *f.wit_semiprime);
    if (f.wit_semi_r) w["semi_r"] = sym_elem_str(R, *f.wit_semi_r);
    if (f.wit_r_a) w["r"] = sym_elem_str(R, *f.wit_r_a) + "*" + sym_elem_str(R, *f.wit_r_b);
    j["witnesses"] = std::move(w);
    return j;
}

inline json sub_flags_json(const SubmoduleFlags& f, const ModuleTable& M) {
    json j;
    j["proper"] = f.is_proper;
    j["prime"] = f.is_prime;
    j["semiprime"] = f.is_semiprime;
    j["r"] = f.is_r;
    j["sr"] = f.is_sr_intro;
    j["sr_alt"] = f.is_sr_alt;
    j["semi_r"] = f.is_semi_r;
    j["d_annihilator"] = f.satisfies_D;
    auto wstr = [&](const FlagWitness& w) {
        return "(" + M.ring->names[w.a] + "," + M.names[w.b] + ")";
    };
    json w;
    if (f.wit_semiprime) w["semiprime"] = wstr(*f.wit_semiprime);
    if (f.wit_r) w["r"] = wstr(*f.wit_r);
    if (f.wit_sr_intro) w["sr"] = wstr(*f.wit_sr_intro);
    if (f.wit_sr_alt) w["sr_alt"] = wstr(*f.wit_sr_alt);
    if (f.wit_semi_r) w["semi_r"] = wstr(*f.wit_semi_r);
    j["witnesses"] = std::move(w);
    return j;
}

inline json sym_sub_flags_json(const SymSubFlags& f) {
    json j;
    j["proper"] = f.is_proper;
    j["semiprime"] = f.is_semiprime;
    j["r"] = f.is_r;
    j["sr"] = f.is_sr_intro;
    j["sr_alt"] = f.is_sr_alt;
    j["semi_r"] = f.is_semi_r;
    j["d_annihilator"] = f.satisfies_D;
    j["mode"] = f.mode;
    auto wstr = [](const SymModWitness& w) {
        std::string out = "(" + std::to_string(w.r) + ",(";
        for (size_t i = 0; i < w.m.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(w.m[i]);
        }
        return out + "))";
    };
    json w;
    if (f.wit_semiprime) w["semiprime"] = wstr(*f.wit_semiprime);
    if (f.wit_r) w["r"] = wstr(*f.wit_r);
    if (f.wit_sr_intro) w["sr"] = wstr(*f.wit_sr_intro);
    if (f.wit_sr_alt) w["sr_alt"] = wstr(*f.wit_sr_alt);
    if (f.wit_semi_r) w["semi_r"] = wstr(*f.wit_semi_r);
    j["witnesses"] = std::move(w);
    return j;
}

// builds the symbolic ideal named by generator literals
inline SymIdeal sym_ideal_from_gens(const SymRing& R, const std::vector<ElemLit>& gens) {
    if (R.is_poly()) throw Error("symbolic polynomial ideals are fixture-only");
    auto lit_int = [](const ElemLit& l) {
        if (l.is_tuple) throw Error("expected an integer literal");
        return l.value;
    };
    if (R.is_idz()) {
        long long n = 0;
        long long second = 0;
        for (auto& g : gens) {
            if (!g.is_tuple || g.parts.size() != 2)
                throw Error("idealization generators are pairs (a,m)");
            n = std::gcd(n, lit_int(g.parts[0]));
            second = std::gcd(second, lit_int(g.parts[1]));
        }
        long long k = R.idz_k;
        long long d = std::gcd(std::gcd(second, n), k);
        if (d == 0) d = k;
        if (d != 1)
            throw Error("symbolic idealization supports I(+)M ideals only; add a generator "
                        "like (0,1)");
        return sym_ideal(R, {n});
    }
    std::vector<long long> comp(R.factors.size(), 0);
    for (auto& g : gens) {
        if (R.factors.size() == 1) {
            comp[0] = std::gcd(comp[0], lit_int(g));
            continue;
        }
        if (!g.is_tuple || g.parts.size() != R.factors.size())
            throw Error("generator arity must match the number of factors");
        for (size_t i = 0; i < comp.size(); ++i) comp[i] = std::gcd(comp[i], lit_int(g.parts[i]));
    }
    return sym_ideal(R, comp);
}

}  // namespace ringlab::views
