#include "ringlab/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace ringlab {

bool ElemLit::operator==(const ElemLit& o) const {
    return is_tuple == o.is_tuple && value == o.value && parts == o.parts;
}

bool ModExpr::operator==(const ModExpr& o) const {
    return kind == o.kind && d == o.d && factors == o.factors;
}

bool RingExpr::operator==(const RingExpr& o) const {
    return kind == o.kind && n == o.n && children == o.children && mod == o.mod &&
           gens == o.gens && hom == o.hom && ident == o.ident;
}

// ---------------------------------------------------------------------------
// lexer / parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw ParseError(pos, expected,
                         "parse error at offset " + std::to_string(pos) + ": expected " + expected);
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("'") + c + "'");
        ++pos;
    }
    bool try_char(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("a natural number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000) fail("a smaller number");
            ++pos;
        }
        return v;
    }
    // word = letter (letter | digit | '_')*
    std::string word() {
        skip_ws();
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("an identifier");
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string peek_word() {
        size_t save = pos;
        skip_ws();
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) {
            pos = save;
            return "";
        }
        size_t start = pos;
        size_t p = pos;
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
        std::string w = s.substr(start, p - start);
        pos = save;
        return w;
    }
};

RingExpr parse_expr(Lexer& lx);

ElemLit parse_elem(Lexer& lx) {
    ElemLit e;
    if (lx.try_char('(')) {
        e.is_tuple = true;
        e.parts.push_back(parse_elem(lx));
        while (lx.try_char(',')) e.parts.push_back(parse_elem(lx));
        lx.expect(')');
        return e;
    }
    e.value = lx.nat();
    return e;
}

std::vector<ElemLit> parse_gens_body(Lexer& lx) {
    std::vector<ElemLit> out;
    lx.expect('<');
    if (lx.try_char('>')) return out;
    out.push_back(parse_elem(lx));
    while (lx.try_char(',')) out.push_back(parse_elem(lx));
    lx.expect('>');
    return out;
}

ModExpr parse_mod_primary(Lexer& lx) {
    std::string w = lx.word();
    ModExpr m;
    if (w == "self") {
        m.kind = ModExpr::Kind::Self;
        return m;
    }
    if (w == "ZZ") {
        m.kind = ModExpr::Kind::Free;
        return m;
    }
    if (w.size() > 1 && w[0] == 'Z' &&
        std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
        m.kind = ModExpr::Kind::Cyclic;
        m.d = std::stoi(w.substr(1));
        return m;
    }
    lx.fail("'self', 'ZZ' or 'Z<n>'");
}

ModExpr parse_mod(Lexer& lx) {
    ModExpr first = parse_mod_primary(lx);
    std::vector<ModExpr> factors{first};
    while (lx.peek_word() == "x") {
        lx.word();
        factors.push_back(parse_mod_primary(lx));
    }
    if (factors.size() == 1) return first;
    ModExpr p;
    p.kind = ModExpr::Kind::Prod;
    p.factors = std::move(factors);
    return p;
}

RingExpr parse_primary(Lexer& lx) {
    RingExpr e;
    std::string w = lx.word();
    if (w == "ZZ") {
        e.kind = RingExpr::Kind::ZZ;
        return e;
    }
    if (w.size() > 1 && w[0] == 'Z' &&
        std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
        e.kind = RingExpr::Kind::ZMod;
        e.n = std::stoi(w.substr(1));
        return e;
    }
    if (w == "quot" || w == "dup" || w == "loc") {
        e.kind = w == "quot"  ? RingExpr::Kind::Quot
                 : w == "dup" ? RingExpr::Kind::Dup
                              : RingExpr::Kind::Loc;
        lx.expect('(');
        e.children.push_back(parse_expr(lx));
        lx.expect(',');
        e.gens = parse_gens_body(lx);
        lx.expect(')');
        return e;
    }
    if (w == "idz") {
        e.kind = RingExpr::Kind::Idz;
        lx.expect('(');
        e.children.push_back(parse_expr(lx));
        lx.expect(',');
        e.mod = parse_mod(lx);
        lx.expect(')');
        return e;
    }
    if (w == "amal") {
        e.kind = RingExpr::Kind::Amal;
        lx.expect('(');
        e.children.push_back(parse_expr(lx));
        lx.expect(',');
        e.children.push_back(parse_expr(lx));
        lx.expect(',');
        std::string h = lx.word();
        if (h == "hom") {
            lx.expect('#');
            h += "#" + std::to_string(lx.nat());
        } else if (h != "id")
            lx.fail("'id' or 'hom#<k>'");
        e.hom = h;
        lx.expect(',');
        e.gens = parse_gens_body(lx);
        lx.expect(')');
        return e;
    }
    if (w == "polyfix") {
        lx.expect(':');
        e.kind = RingExpr::Kind::PolyFix;
        e.ident = lx.word();
        return e;
    }
    lx.fail("a ring expression");
}

RingExpr parse_expr(Lexer& lx) {
    RingExpr first = parse_primary(lx);
    std::vector<RingExpr> factors{std::move(first)};
    while (lx.peek_word() == "x") {
        lx.word();
        factors.push_back(parse_primary(lx));
    }
    if (factors.size() == 1) return std::move(factors[0]);
    RingExpr p;
    p.kind = RingExpr::Kind::Prod;
    for (auto& f : factors) {
        if (f.kind == RingExpr::Kind::Prod)
            for (auto& g : f.children) p.children.push_back(std::move(g));
        else
            p.children.push_back(std::move(f));
    }
    return p;
}

}  // namespace

RingExpr parse_ring_expr(const std::string& text) {
    Lexer lx{text};
    RingExpr e = parse_expr(lx);
    if (!lx.eof()) lx.fail("end of input");
    return e;
}

ModExpr parse_mod_expr(const std::string& text) {
    Lexer lx{text};
    ModExpr e = parse_mod(lx);
    if (!lx.eof()) lx.fail("end of input");
    return e;
}

std::vector<ElemLit> parse_gens(const std::string& text) {
    Lexer lx{text};
    auto g = parse_gens_body(lx);
    if (!lx.eof()) lx.fail("end of input");
    return g;
}

// ---------------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------------

std::string format_elem(const ElemLit& e) {
    if (!e.is_tuple) return std::to_string(e.value);
    std::string out = "(";
    for (size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += ",";
        out += format_elem(e.parts[i]);
    }
    return out + ")";
}

namespace {
std::string format_gens(const std::vector<ElemLit>& gens) {
    std::string out = "<";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += format_elem(gens[i]);
    }
    return out + ">";
}
}  // namespace

std::string format_canonical(const ModExpr& e) {
    switch (e.kind) {
        case ModExpr::Kind::Self:
            return "self";
        case ModExpr::Kind::Free:
            return "ZZ";
        case ModExpr::Kind::Cyclic:
            return "Z" + std::to_string(e.d);
        case ModExpr::Kind::Prod: {
            std::string out;
            for (size_t i = 0; i < e.factors.size(); ++i) {
                if (i) out += " x ";
                out += format_canonical(e.factors[i]);
            }
            return out;
        }
    }
    return "";
}

std::string format_canonical(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::ZMod:
            return "Z" + std::to_string(e.n);
        case RingExpr::Kind::ZZ:
            return "ZZ";
        case RingExpr::Kind::Prod: {
            std::string out;
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " x ";
                out += format_canonical(e.children[i]);
            }
            return out;
        }
        case RingExpr::Kind::Quot:
            return "quot(" + format_canonical(e.children[0]) + ", " + format_gens(e.gens) + ")";
        case RingExpr::Kind::Idz:
            return "idz(" + format_canonical(e.children[0]) + ", " + format_canonical(e.mod) + ")";
        case RingExpr::Kind::Dup:
            return "dup(" + format_canonical(e.children[0]) + ", " + format_gens(e.gens) + ")";
        case RingExpr::Kind::Amal:
            return "amal(" + format_canonical(e.children[0]) + ", " +
                   format_canonical(e.children[1]) + ", " + e.hom + ", " + format_gens(e.gens) +
                   ")";
        case RingExpr::Kind::Loc:
            return "loc(" + format_canonical(e.children[0]) + ", " + format_gens(e.gens) + ")";
        case RingExpr::Kind::PolyFix:
            return "polyfix:" + e.ident;
    }
    return "";
}

// ---------------------------------------------------------------------------
// elaboration
// ---------------------------------------------------------------------------

namespace {

bool expr_is_symbolic(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::ZZ:
        case RingExpr::Kind::PolyFix:
            return true;
        case RingExpr::Kind::Prod:
            for (auto& c : e.children)
                if (expr_is_symbolic(c)) return true;
            return false;
        case RingExpr::Kind::Idz:
            return expr_is_symbolic(e.children[0]);
        default:
            return false;
    }
}

SymRing elaborate_symbolic(const RingExpr& e) {
    SymRing R;
    R.expr = format_canonical(e);
    switch (e.kind) {
        case RingExpr::Kind::ZZ:
            R.factors = {0};
            return R;
        case RingExpr::Kind::PolyFix:
            if (e.ident != "zx")
                throw Error("elaborate: unknown polynomial fixture carrier '" + e.ident + "'");
            R.polyfix = e.ident;
            return R;
        case RingExpr::Kind::Prod:
            for (auto& c : e.children) {
                if (c.kind == RingExpr::Kind::ZZ)
                    R.factors.push_back(0);
                else if (c.kind == RingExpr::Kind::ZMod) {
                    if (c.n < 2) throw Error("elaborate: Z<n> needs n >= 2");
                    R.factors.push_back(c.n);
                } else
                    throw Error(
                        "elaborate: symbolic products may only mix ZZ and Z<n> factors");
            }
            return R;
        case RingExpr::Kind::Idz: {
            if (e.children[0].kind != RingExpr::Kind::ZZ)
                throw Error("elaborate: symbolic idealization supports a ZZ base only");
            if (e.mod.kind != ModExpr::Kind::Cyclic)
                throw Error("elaborate: symbolic idealization needs a cyclic module Z<k>");
            R.factors = {0};
            R.idz_k = e.mod.d;
            return R;
        }
        default:
            throw Error("elaborate: construction not supported on symbolic carriers");
    }
}

ElementId resolve_int(RingPtr R, const ElemLit& lit, const char* what) {
    if (lit.is_tuple) throw Error(std::string("element literal: expected an integer for ") + what);
    if (lit.value < 0 || lit.value >= R->order)
        throw Error("element literal " + std::to_string(lit.value) + " out of range for " +
                    R->expr);
    return static_cast<ElementId>(lit.value);
}

}  // namespace

ElabResult elaborate(const RingExpr& e, uint32_t cap) {
    if (expr_is_symbolic(e)) return elaborate_symbolic(e);
    return elaborate_table(e, cap);
}

ElabRing elaborate_table(const RingExpr& e, uint32_t cap) {
    auto check_cap = [&](uint32_t order) {
        if (order > cap)
            throw CapacityError("elaborate: order " + std::to_string(order) +
                                " exceeds cap " + std::to_string(cap));
    };
    switch (e.kind) {
        case RingExpr::Kind::ZMod: {
            if (e.n < 2) throw Error("elaborate: Z<n> needs n >= 2 (zero ring rejected)");
            check_cap(static_cast<uint32_t>(e.n));
            ElabRing out;
            out.table = build_zn(e.n);
            RingPtr R = out.table;
            out.resolve = [R](const ElemLit& l) { return resolve_int(R, l, "Z<n>"); };
            return out;
        }
        case RingExpr::Kind::Prod: {
            std::vector<ElabRing> subs;
            uint64_t order = 1;
            for (auto& c : e.children) {
                subs.push_back(elaborate_table(c, cap));
                order *= subs.back().table->order;
                check_cap(static_cast<uint32_t>(std::min<uint64_t>(order, UINT32_MAX)));
            }
            std::vector<RingPtr> factors;
            for (auto& s : subs) factors.push_back(s.table);
            ElabRing out;
            out.table = build_product(factors);
            out.factors = factors;
            {
                RingTable patched = *out.table;
                patched.expr = format_canonical(e);
                out.table = std::make_shared<const RingTable>(std::move(patched));
            }
            std::vector<std::function<ElementId(const ElemLit&)>> res;
            for (auto& s : subs) res.push_back(s.resolve);
            auto fs = factors;
            out.resolve = [fs, res](const ElemLit& l) -> ElementId {
                if (!l.is_tuple || l.parts.size() != fs.size())
                    throw Error("element literal: expected a tuple of arity " +
                                std::to_string(fs.size()));
                std::vector<ElementId> t(fs.size());
                for (size_t i = 0; i < fs.size(); ++i) t[i] = res[i](l.parts[i]);
                return product_join(fs, t);
            };
            return out;
        }
        case RingExpr::Kind::Quot: {
            ElabRing base = elaborate_table(e.children[0], cap);
            std::vector<ElementId> gens;
            for (auto& g : e.gens) gens.push_back(base.resolve(g));
            Ideal I = generate_ideal(base.table, gens);
            auto q = std::make_shared<QuotientRing>(quotient_ring(base.table, I));
            ElabRing out;
            out.table = q->ring;
            {
                RingTable patched = *out.table;
                patched.expr = format_canonical(e);
                out.table = std::make_shared<const RingTable>(std::move(patched));
                q->ring = out.table;
            }
            out.quot = q;
            auto baseres = base.resolve;
            out.resolve = [q, baseres](const ElemLit& l) { return q->proj[baseres(l)]; };
            return out;
        }
        case RingExpr::Kind::Idz: {
            ElabRing base = elaborate_table(e.children[0], cap);
            ElabModule mod = elaborate_module(base, e.mod, cap);
            check_cap(uint32_t(base.table->order) * mod.table->order);
            ElabRing out;
            out.table = idealization(base.table, mod.table);
            {
                RingTable patched = *out.table;
                patched.expr = format_canonical(e);
                out.table = std::make_shared<const RingTable>(std::move(patched));
            }
            out.idz_base = base.table;
            out.idz_mod = mod.table;
            auto rres = base.resolve;
            auto mres = mod.resolve;
            auto M = mod.table;
            out.resolve = [rres, mres, M](const ElemLit& l) -> ElementId {
                if (!l.is_tuple || l.parts.size() != 2)
                    throw Error("element literal: idealization elements are pairs (r,m)");
                return idz_index(*M, rres(l.parts[0]), mres(l.parts[1]));
            };
            return out;
        }
        case RingExpr::Kind::Dup:
        case RingExpr::Kind::Amal: {
            bool dup = e.kind == RingExpr::Kind::Dup;
            ElabRing r1 = elaborate_table(e.children[0], cap);
            ElabRing r2 = dup ? r1 : elaborate_table(e.children[1], cap);
            RingHom f;
            std::string hom = dup ? "id" : e.hom;
            if (hom == "id") {
                if (!r1.table->same_table(*r2.table))
                    throw Error("elaborate: hom 'id' needs identical rings");
                f = identity_hom(r1.table);
                f.dst = r2.table;
            } else {
                size_t k = std::stoul(hom.substr(4));
                auto homs = enumerate_homs(r1.table, r2.table);
                if (k >= homs.size())
                    throw Error("elaborate: hom#" + std::to_string(k) + " out of range (" +
                                std::to_string(homs.size()) + " homs)");
                f = homs[k];
            }
            std::vector<ElementId> gens;
            for (auto& g : e.gens) gens.push_back(r2.resolve(g));
            Ideal J = generate_ideal(r2.table, gens);
            check_cap(uint32_t(r1.table->order) * J.members.count());
            auto A = std::make_shared<AmalgRing>(amalgamation(r1.table, r2.table, f, J));
            ElabRing out;
            out.table = A->ring;
            {
                RingTable patched = *out.table;
                patched.expr = format_canonical(e);
                out.table = std::make_shared<const RingTable>(std::move(patched));
                A->ring = out.table;
            }
            out.amalg = A;
            auto res1 = r1.resolve;
            auto res2 = r2.resolve;
            out.resolve = [A, res1, res2](const ElemLit& l) -> ElementId {
                if (!l.is_tuple || l.parts.size() != 2)
                    throw Error("element literal: amalgamation elements are pairs (a,b)");
                return A->pair_index(res1(l.parts[0]), res2(l.parts[1]));
            };
            return out;
        }
        case RingExpr::Kind::Loc: {
            ElabRing base = elaborate_table(e.children[0], cap);
            ElemSet S(base.table->order);
            for (auto& g : e.gens) S.set(base.resolve(g));
            auto L = std::make_shared<Localization>(localization(base.table, S));
            ElabRing out;
            out.table = L->ring;
            {
                RingTable patched = *out.table;
                patched.expr = format_canonical(e);
                out.table = std::make_shared<const RingTable>(std::move(patched));
                L->ring = out.table;
            }
            out.loc = L;
            auto baseres = base.resolve;
            out.resolve = [L, baseres](const ElemLit& l) { return L->canonical[baseres(l)]; };
            return out;
        }
        default:
            throw Error("elaborate: expression requires the symbolic tier");
    }
}

ElabModule elaborate_module(const ElabRing& ring, const ModExpr& e, uint32_t cap) {
    switch (e.kind) {
        case ModExpr::Kind::Self: {
            ElabModule out;
            out.table = build_module(ring.table, SelfModule{});
            auto rres = ring.resolve;
            out.resolve = [rres](const ElemLit& l) { return rres(l); };
            return out;
        }
        case ModExpr::Kind::Cyclic: {
            ElabModule out;
            out.table = build_module(ring.table, CyclicModule{e.d});
            auto M = out.table;
            out.resolve = [M](const ElemLit& l) -> uint16_t {
                if (l.is_tuple) throw Error("element literal: expected an integer for Z<d>");
                if (l.value < 0 || l.value >= M->order)
                    throw Error("module literal out of range");
                return static_cast<uint16_t>(l.value);
            };
            return out;
        }
        case ModExpr::Kind::Free:
            throw Error("elaborate_module: ZZ factors need the symbolic tier");
        case ModExpr::Kind::Prod: {
            std::vector<ElabModule> subs;
            uint64_t order = 1;
            for (auto& c : e.factors) {
                subs.push_back(elaborate_module(ring, c, cap));
                order *= subs.back().table->order;
                if (order > cap) throw CapacityError("elaborate_module: order exceeds cap");
            }
            std::vector<ModulePtr> factors;
            for (auto& s : subs) factors.push_back(s.table);
            ElabModule out;
            out.table = build_module(ring.table, ProductModule{factors});
            std::vector<std::function<uint16_t(const ElemLit&)>> res;
            for (auto& s : subs) res.push_back(s.resolve);
            auto fs = factors;
            out.resolve = [fs, res](const ElemLit& l) -> uint16_t {
                if (!l.is_tuple || l.parts.size() != fs.size())
                    throw Error("module literal: expected a tuple of arity " +
                                std::to_string(fs.size()));
                uint32_t x = 0;
                for (size_t i = 0; i < fs.size(); ++i) x = x * fs[i]->order + res[i](l.parts[i]);
                return static_cast<uint16_t>(x);
            };
            return out;
        }
    }
    throw Error("elaborate_module: unsupported module expression");
}

FGZModule elaborate_sym_module(const ModExpr& e) {
    FGZModule M;
    M.expr = format_canonical(e);
    auto push = [&](const ModExpr& f) {
        switch (f.kind) {
            case ModExpr::Kind::Free:
                M.inv.push_back(0);
                break;
            case ModExpr::Kind::Cyclic:
                M.inv.push_back(f.d);
                break;
            case ModExpr::Kind::Self:
                M.inv.push_back(0);  // Z over Z
                break;
            default:
                throw Error("symbolic module: nested products unsupported");
        }
    };
    if (e.kind == ModExpr::Kind::Prod)
        for (auto& f : e.factors) push(f);
    else
        push(e);
    return M;
}

}  // namespace ringlab
