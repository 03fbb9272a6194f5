#include "hopfx/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "hopfx/tensorops.hpp"
#include "hopfx/twist.hpp"

namespace hopfx {
namespace {

using Table = std::vector<std::vector<uint32_t>>;
using Word = std::vector<int>;  // opaque element encoding for closure builds

struct BuiltGroup {
    Table table;
    std::vector<std::string> labels;
    std::vector<uint32_t> gen_index;  // where each generator landed
};

// join a generator word into a power-compressed label, e.g. r,r,s -> r^2*s
std::string compress_word(const std::vector<std::string>& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size();) {
        size_t run = i;
        while (run < w.size() && w[run] == w[i]) ++run;
        if (out.tellp() > 0) out << "*";
        out << w[i];
        if (run - i > 1) out << "^" << (run - i);
        i = run;
    }
    return out.str();
}

// BFS closure of the generators; element 0 is the identity, labels are the
// discovery words
BuiltGroup close_group(const Word& identity,
                       const std::vector<std::pair<Word, std::string>>& gens,
                       const std::function<Word(const Word&, const Word&)>& mul) {
    std::vector<Word> elems{identity};
    std::vector<std::vector<std::string>> words{{}};
    auto find = [&elems](const Word& w) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == w) return int(i);
        return -1;
    };
    std::queue<size_t> work;
    work.push(0);
    while (!work.empty()) {
        size_t cur = work.front();
        work.pop();
        for (const auto& [g, gname] : gens) {
            Word w = mul(elems[cur], g);
            if (find(w) < 0) {
                elems.push_back(w);
                auto word = words[cur];
                word.push_back(gname);
                words.push_back(std::move(word));
                work.push(elems.size() - 1);
            }
        }
    }
    BuiltGroup out;
    const uint32_t n = uint32_t(elems.size());
    out.table.assign(n, std::vector<uint32_t>(n));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            int k = find(mul(elems[i], elems[j]));
            if (k < 0) throw std::logic_error("generator closure is not closed");
            out.table[i][j] = uint32_t(k);
        }
    for (const auto& w : words) out.labels.push_back(compress_word(w));
    for (const auto& [g, gname] : gens) out.gen_index.push_back(uint32_t(find(g)));
    return out;
}

// identity index of a validated group table
uint32_t validate_group_table(const Table& t) {
    const size_t n = t.size();
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : t) {
        if (row.size() != n) throw std::invalid_argument("group table is not square");
        for (uint32_t v : row)
            if (v >= n) throw std::invalid_argument("group table entry out of range");
    }
    int e = -1;
    for (size_t i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (size_t j = 0; j < n; ++j)
            if (t[i][j] != j || t[j][i] != j) {
                ok = false;
                break;
            }
        if (ok) e = int(i);
    }
    if (e < 0) throw std::invalid_argument("group table has no identity");
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n; ++j)
            if (t[i][j] == uint32_t(e)) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) throw std::invalid_argument("group table element has no inverse");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]])
                    throw std::invalid_argument("group table is not associative");
    return uint32_t(e);
}

unsigned element_order(const Table& t, uint32_t e, uint32_t i) {
    unsigned n = 1;
    uint32_t cur = i;
    while (cur != e) {
        cur = t[cur][i];
        ++n;
    }
    return n;
}

// all n-th roots of unity that exist in f
std::vector<Scalar> roots_of_unity_in(const FieldSpec& f, unsigned n) {
    std::vector<Scalar> out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        auto z = field_root_of_unity(f, d);
        if (!z) continue;
        Scalar p = Scalar::one(f);
        for (unsigned i = 0; i < d; ++i) {
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            p = p * *z;
        }
    }
    return out;
}

CatalogEntry group_entry(const std::string& name, const BuiltGroup& g, const FieldSpec& f,
                         const char* exp_basis = "lcm of group element orders") {
    CatalogEntry e;
    e.name = name;
    e.family = "group";
    e.algebra = group_algebra(g.table, f, name);
    e.algebra.basis_labels = g.labels;
    unsigned long ge = group_exponent_from_table(g.table);
    e.group_exponent = ge;
    e.exponent = ExpectedExponent{false, ge, exp_basis};
    bool order_invertible = !Scalar::integer(f, long(g.table.size())).is_zero();
    e.semisimple = order_invertible;
    e.semisimple_basis = "group order invertible in the field";
    e.cosemisimple = true;
    e.cosemisimple_basis = "functions on a finite group are a semisimple algebra";
    e.algebra.semisimple_flag = e.semisimple;
    e.algebra.cosemisimple_flag = e.cosemisimple;
    return e;
}

}  // namespace

namespace {

Word perm_compose(const Word& a, const Word& b) {
    Word c(a.size());
    for (size_t x = 0; x < a.size(); ++x) c[x] = a[size_t(b[x])];
    return c;
}

BuiltGroup built_s3() {
    return close_group(Word{0, 1, 2}, {{Word{1, 2, 0}, "r"}, {Word{1, 0, 2}, "s"}}, perm_compose);
}

BuiltGroup built_d4() {
    // square-vertex permutations: a quarter turn and a reflection
    return close_group(Word{0, 1, 2, 3}, {{Word{1, 2, 3, 0}, "r"}, {Word{3, 2, 1, 0}, "s"}},
                       perm_compose);
}

BuiltGroup built_q8() {
    // elements (axis, sign) with the quaternion axis/sign rules
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto mul = [](const Word& a, const Word& b) {
        return Word{ax[a[0]][b[0]], (a[1] + b[1] + sg[a[0]][b[0]]) % 2};
    };
    return close_group(Word{0, 0}, {{Word{1, 0}, "i"}, {Word{2, 0}, "j"}}, mul);
}

BuiltGroup built_cyclic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclic group needs positive order");
    auto mul = [n](const Word& a, const Word& b) { return Word{int((unsigned(a[0]) + unsigned(b[0])) % n)}; };
    std::vector<std::pair<Word, std::string>> gens;
    if (n > 1) gens.push_back({Word{1}, "g"});
    return close_group(Word{0}, gens, mul);
}

BuiltGroup built_klein() {
    auto mul = [](const Word& a, const Word& b) { return Word{a[0] ^ b[0], a[1] ^ b[1]}; };
    return close_group(Word{0, 0}, {{Word{1, 0}, "a"}, {Word{0, 1}, "b"}}, mul);
}

}  // namespace

std::vector<std::vector<uint32_t>> cyclic_group_table(unsigned n) { return built_cyclic(n).table; }
std::vector<std::vector<uint32_t>> klein_group_table() { return built_klein().table; }
std::vector<std::vector<uint32_t>> symmetric3_table() { return built_s3().table; }
std::vector<std::vector<uint32_t>> dihedral4_table() { return built_d4().table; }
std::vector<std::vector<uint32_t>> quaternion_table() { return built_q8().table; }

unsigned long group_exponent_from_table(const std::vector<std::vector<uint32_t>>& table) {
    uint32_t e = validate_group_table(table);
    unsigned long ge = 1;
    for (uint32_t i = 0; i < table.size(); ++i) ge = std::lcm(ge, (unsigned long)element_order(table, e, i));
    return ge;
}

HopfAlgebra group_algebra(const std::vector<std::vector<uint32_t>>& table, const FieldSpec& f,
                          const std::string& name) {
    uint32_t e = validate_group_table(table);
    const uint32_t n = uint32_t(table.size());
    Scalar one = Scalar::one(f);
    HopfAlgebra h;
    h.name = name;
    h.field = f;
    h.dim = n;
    for (uint32_t i = 0; i < n; ++i) h.basis_labels.push_back("g" + std::to_string(i));
    h.mult.resize(size_t(n) * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) h.mult[size_t(i) * n + j] = {{table[i][j], one}};
    h.unit = h.zero_vec();
    h.unit[e] = one;
    h.comult.resize(n);
    h.counit.assign(n, one);
    ExactMatrix s(f, n, n);
    for (uint32_t i = 0; i < n; ++i) {
        h.comult[i] = {{i, i, one}};
        for (uint32_t k = 0; k < n; ++k)
            if (table[i][k] == e) s.at(k, i) = one;
    }
    set_antipode(h, std::move(s));
    for (uint32_t i = 0; i < n; ++i) h.known_grouplikes.push_back(h.basis_vec(i));
    return h;
}

std::vector<Vec> group_characters(const std::vector<std::vector<uint32_t>>& table,
                                  const FieldSpec& f) {
    uint32_t e = validate_group_table(table);
    const uint32_t n = uint32_t(table.size());
    std::vector<uint32_t> inv(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t k = 0; k < n; ++k)
            if (table[i][k] == e) inv[i] = k;

    // commutator subgroup: close {[a,b]} under multiplication
    std::vector<bool> in_n(n, false);
    in_n[e] = true;
    bool grew = true;
    std::vector<uint32_t> members{e};
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            uint32_t c = table[table[a][b]][table[inv[a]][inv[b]]];
            if (!in_n[c]) {
                in_n[c] = true;
                members.push_back(c);
            }
        }
    while (grew) {
        grew = false;
        std::vector<uint32_t> cur = members;
        for (uint32_t a : cur)
            for (uint32_t b : cur) {
                uint32_t c = table[a][b];
                if (!in_n[c]) {
                    in_n[c] = true;
                    members.push_back(c);
                    grew = true;
                }
            }
    }

    // cosets gN, labeled by their smallest member
    std::vector<uint32_t> coset_label(n);
    for (uint32_t g = 0; g < n; ++g) {
        uint32_t best = n;
        for (uint32_t m : members) best = std::min(best, table[g][m]);
        coset_label[g] = best;
    }
    std::vector<uint32_t> reps;
    for (uint32_t g = 0; g < n; ++g)
        if (coset_label[g] == g) reps.push_back(g);
    auto coset_id = [&](uint32_t g) {
        uint32_t l = coset_label[g];
        return uint32_t(std::find(reps.begin(), reps.end(), l) - reps.begin());
    };
    const uint32_t na = uint32_t(reps.size());
    std::vector<std::vector<uint32_t>> at(na, std::vector<uint32_t>(na));
    for (uint32_t i = 0; i < na; ++i)
        for (uint32_t j = 0; j < na; ++j) at[i][j] = coset_id(table[reps[i]][reps[j]]);
    uint32_t ae = coset_id(e);

    // greedy generating set of the abelianization
    std::vector<uint32_t> gens;
    std::vector<bool> generated(na, false);
    generated[ae] = true;
    uint32_t covered = 1;
    for (uint32_t c = 0; c < na && covered < na; ++c) {
        if (generated[c]) continue;
        gens.push_back(c);
        // regenerate closure
        std::fill(generated.begin(), generated.end(), false);
        generated[ae] = true;
        covered = 1;
        bool more = true;
        while (more) {
            more = false;
            for (uint32_t x = 0; x < na; ++x) {
                if (!generated[x]) continue;
                for (uint32_t g : gens) {
                    uint32_t y = at[x][g];
                    if (!generated[y]) {
                        generated[y] = true;
                        ++covered;
                        more = true;
                    }
                }
            }
        }
    }

    std::vector<unsigned> gord;
    std::vector<std::vector<Scalar>> gvals;  // candidate values per generator
    for (uint32_t g : gens) {
        unsigned m = element_order(at, ae, g);
        gord.push_back(m);
        gvals.push_back(roots_of_unity_in(f, m));
    }

    // enumerate consistent value assignments on the abelianization
    std::vector<std::vector<Scalar>> chars;
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<std::optional<Scalar>> vals(na);
        vals[ae] = Scalar::one(f);
        std::queue<uint32_t> bfs;
        bfs.push(ae);
        while (!bfs.empty()) {
            uint32_t cur = bfs.front();
            bfs.pop();
            for (size_t i = 0; i < gens.size(); ++i) {
                uint32_t nxt = at[cur][gens[i]];
                if (!vals[nxt]) {
                    vals[nxt] = *vals[cur] * gvals[i][pick[i]];
                    bfs.push(nxt);
                }
            }
        }
        bool ok = true;
        for (uint32_t a = 0; a < na && ok; ++a)
            for (size_t i = 0; i < gens.size() && ok; ++i)
                if (!vals[a] || *vals[at[a][gens[i]]] != *vals[a] * gvals[i][pick[i]]) ok = false;
        if (ok) {
            std::vector<Scalar> flat(na);
            for (uint32_t a = 0; a < na; ++a) flat[a] = *vals[a];
            if (std::find(chars.begin(), chars.end(), flat) == chars.end())
                chars.push_back(std::move(flat));
        }
        bool rolled_over = true;
        for (size_t pos = gens.size(); pos-- > 0;) {
            if (++pick[pos] < gvals[pos].size()) {
                rolled_over = false;
                break;
            }
            pick[pos] = 0;
        }
        if (rolled_over || gens.empty()) break;
    }

    // lift through the quotient map
    std::vector<Vec> out;
    for (const auto& c : chars) {
        Vec v(n);
        for (uint32_t g = 0; g < n; ++g) v[g] = c[coset_id(g)];
        out.push_back(std::move(v));
    }
    return out;
}

HopfAlgebra dual_group_algebra(const std::vector<std::vector<uint32_t>>& table, const FieldSpec& f,
                               const std::string& name) {
    HopfAlgebra d = dual(group_algebra(table, f, name));
    d.name = name;
    for (uint32_t i = 0; i < d.dim; ++i) d.basis_labels[i] = "d" + std::to_string(i);
    d.known_grouplikes = group_characters(table, f);
    for (const auto& g : d.known_grouplikes)
        if (!is_grouplike(d, g)) throw std::logic_error("group character is not grouplike in k^G");
    return d;
}

HopfAlgebra taft_algebra(unsigned n, const FieldSpec& f) {
    if (n < 2) throw std::invalid_argument("taft algebra needs n >= 2");
    auto qroot = field_root_of_unity(f, n);
    if (!qroot)
        throw std::invalid_argument("field has no primitive root of unity of order " +
                                    std::to_string(n));
    Scalar q = *qroot;
    Scalar one = Scalar::one(f);
    const uint32_t d = n * n;
    auto idx = [n](unsigned i, unsigned j) { return uint32_t(i * n + j); };

    HopfAlgebra h;
    h.name = "taft" + std::to_string(n);
    h.field = f;
    h.dim = d;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::string l;
            if (i == 0 && j == 0) l = "1";
            if (i > 0) l += "g" + (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) l += std::string(i > 0 ? "*" : "") + "x" + (j > 1 ? "^" + std::to_string(j) : "");
            h.basis_labels.push_back(l);
        }
    // (g^a x^b)(g^c x^e) = q^{bc} g^{a+c} x^{b+e}, zero once x powers overflow
    h.mult.resize(size_t(d) * d);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned e = 0; e < n; ++e) {
                    if (b + e >= n) continue;
                    h.mult[size_t(idx(a, b)) * d + idx(c, e)] = {
                        {idx((a + c) % n, b + e), q.pow(long(b) * long(c))}};
                }
    h.unit = h.zero_vec();
    h.unit[idx(0, 0)] = one;
    h.counit.assign(d, Scalar::zero(f));
    for (unsigned a = 0; a < n; ++a) h.counit[idx(a, 0)] = one;
    // coproducts of the basis monomials, expanded from the generators:
    // Delta(g) = g (x) g and Delta(x) = x (x) 1 + g (x) x
    Sp2 dg, dx;
    sp2_add(dg, idx(1, 0), idx(1, 0), one);
    sp2_add(dx, idx(0, 1), idx(0, 0), one);
    sp2_add(dx, idx(1, 0), idx(0, 1), one);
    h.comult.resize(d);
    std::vector<Sp2> gpow(n), xpow(n);
    gpow[0] = sp2_unit(h);
    xpow[0] = sp2_unit(h);
    for (unsigned k = 1; k < n; ++k) {
        gpow[k] = sp2_mult(h, gpow[k - 1], dg);
        xpow[k] = sp2_mult(h, xpow[k - 1], dx);
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            Sp2 prod = sp2_mult(h, gpow[a], xpow[b]);
            SparsePair row;
            for (const auto& [k, v] : prod)
                if (!v.is_zero()) row.push_back({k.first, k.second, v});
            h.comult[idx(a, b)] = std::move(row);
        }
    set_antipode(h, solve_antipode(h));
    for (unsigned a = 0; a < n; ++a) h.known_grouplikes.push_back(h.basis_vec(idx(a, 0)));
    h.semisimple_flag = false;   // x spans a nilpotent ideal killing every integral's counit
    h.cosemisimple_flag = false; // dual contains the transpose skew-primitive
    AxiomReport rep = verify_hopf(h);
    if (!rep.all()) throw std::logic_error("taft construction failed verification: " + rep.detail);
    return h;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "trivial",    "z2", "z3", "z4", "z5", "z6", "z7", "z8",
        "klein",      "s3", "d4", "q8", "s3_dual",
        "sweedler_q", "sweedler_f3", "sweedler_f5", "taft3",
        "d4_twisted", "q8_twisted",
        "z2_tensor_z3", "sweedler_tensor_z2"};
    return names;
}

CatalogEntry preset(const std::string& name) {
    FieldSpec q = FieldSpec::rationals();
    CatalogEntry e;

    if (name == "trivial") {
        e = group_entry(name, built_cyclic(1), q);
    } else if (name.size() == 2 && name[0] == 'z' && name[1] >= '2' && name[1] <= '8') {
        e = group_entry(name, built_cyclic(unsigned(name[1] - '0')), q);
    } else if (name == "klein") {
        e = group_entry(name, built_klein(), q);
    } else if (name == "s3") {
        e = group_entry(name, built_s3(), q);
    } else if (name == "d4") {
        e = group_entry(name, built_d4(), q);
    } else if (name == "q8") {
        e = group_entry(name, built_q8(), q);
    } else if (name == "s3_dual") {
        BuiltGroup g = built_s3();
        e.name = name;
        e.family = "dual";
        e.algebra = dual_group_algebra(g.table, q, name);
        unsigned long ge = group_exponent_from_table(g.table);
        e.group_exponent = ge;
        e.exponent = ExpectedExponent{false, ge, "duality preserves the exponent; group oracle"};
        e.semisimple = true;
        e.semisimple_basis = "functions on a finite group are a semisimple algebra";
        e.cosemisimple = true;
        e.cosemisimple_basis = "dual of a group algebra with invertible group order";
        e.algebra.semisimple_flag = true;
        e.algebra.cosemisimple_flag = true;
    } else if (name == "sweedler_q" || name == "sweedler_f3" || name == "sweedler_f5") {
        FieldSpec f = name == "sweedler_q" ? q
                      : name == "sweedler_f3" ? FieldSpec::prime_field(3)
                                              : FieldSpec::prime_field(5);
        e.name = name;
        e.family = "pointed";
        e.algebra = taft_algebra(2, f);
        e.algebra.name = name;
        if (name == "sweedler_q") {
            e.exponent = ExpectedExponent{true, 0, "skew-primitive element rides a grouplike of finite order"};
        } else {
            unsigned long p = f.param;
            e.exponent = ExpectedExponent{false, 2 * p, "Drinfeld element order a*p^b = 2*" + std::to_string(p)};
        }
        e.semisimple = false;
        e.semisimple_basis = "the nilpotent generator annihilates every two-sided integral's counit";
        e.cosemisimple = false;
        e.cosemisimple_basis = "dual carries the transposed skew-primitive";
    } else if (name == "taft3") {
        e.name = name;
        e.family = "pointed";
        e.algebra = taft_algebra(3, FieldSpec::cyclotomic(3));
        e.algebra.name = name;
        e.exponent = ExpectedExponent{true, 0, "skew-primitive element rides a grouplike of finite order"};
        e.semisimple = false;
        e.semisimple_basis = "the nilpotent generator annihilates every two-sided integral's counit";
        e.cosemisimple = false;
        e.cosemisimple_basis = "dual carries the transposed skew-primitive";
    } else if (name == "d4_twisted") {
        BuiltGroup g = built_d4();
        HopfAlgebra h = group_algebra(g.table, q, name);
        h.basis_labels = g.labels;
        // A = {1, r^2, s, r^2 s}; a non-symmetric bicharacter on its character
        // group (the symplectic/alternating one commutes with conjugation and
        // would leave the coproduct alone)
        uint32_t ri = g.gen_index[0], si = g.gen_index[1];
        std::vector<Vec> gens = {h.basis_vec(g.table[ri][ri]), h.basis_vec(si)};
        Scalar one = Scalar::one(q);
        std::vector<std::vector<Scalar>> beta(4, std::vector<Scalar>(4, one));
        for (size_t x = 0; x < 4; ++x)
            for (size_t y = 0; y < 4; ++y)
                if (((x % 2) * (y / 2)) % 2) beta[x][y] = -one;
        Twist t = bicharacter_twist(h, gens, beta);
        e.name = name;
        e.family = "twist";
        e.algebra = apply_twist(h, t.j);
        e.algebra.name = name;
        e.algebra.semisimple_flag = true;
        e.algebra.cosemisimple_flag = true;
        e.exponent = ExpectedExponent{false, 4, "twisting preserves the exponent; untwisted group oracle"};
        e.group_exponent = group_exponent_from_table(g.table);
        e.semisimple = true;
        e.semisimple_basis = "algebra structure identical to the group algebra";
        e.cosemisimple = true;
        e.cosemisimple_basis = "semisimple in characteristic zero forces S^2 = id";
    } else if (name == "q8_twisted") {
        FieldSpec f = FieldSpec::cyclotomic(4);
        BuiltGroup g = built_q8();
        HopfAlgebra h = group_algebra(g.table, f, name);
        h.basis_labels = g.labels;
        // A = <i>, cyclic of order four; a normalized 2-cocycle that is not a
        // bicharacter (every bicharacter twist of this subgroup is vacuous)
        std::vector<Vec> gens = {h.basis_vec(g.gen_index[0])};
        Scalar zeta = Scalar::zeta(f);
        std::vector<Scalar> v = {Scalar::one(f), Scalar::one(f), Scalar::one(f), zeta};
        std::vector<std::vector<Scalar>> beta(4, std::vector<Scalar>(4));
        for (size_t a = 0; a < 4; ++a)
            for (size_t b = 0; b < 4; ++b) beta[a][b] = v[a] * v[b] * v[(a + b) % 4].inverse();
        Twist t = bicharacter_twist(h, gens, beta);
        e.name = name;
        e.family = "twist";
        e.algebra = apply_twist(h, t.j);
        e.algebra.name = name;
        e.algebra.semisimple_flag = true;
        e.algebra.cosemisimple_flag = true;
        e.exponent = ExpectedExponent{false, 4, "twisting preserves the exponent; untwisted group oracle"};
        e.group_exponent = group_exponent_from_table(g.table);
        e.semisimple = true;
        e.semisimple_basis = "algebra structure identical to the group algebra";
        e.cosemisimple = true;
        e.cosemisimple_basis = "semisimple in characteristic zero forces S^2 = id";
    } else if (name == "z2_tensor_z3") {
        CatalogEntry a = preset("z2"), b = preset("z3");
        e.name = name;
        e.family = "group";
        e.algebra = tensor_product(a.algebra, b.algebra);
        e.algebra.name = name;
        e.exponent = ExpectedExponent{false, std::lcm(a.exponent->value, b.exponent->value),
                                      "lcm of tensor factor exponents"};
        e.group_exponent = e.exponent->value;
        e.semisimple = true;
        e.semisimple_basis = "tensor product of semisimple group algebras";
        e.cosemisimple = true;
        e.cosemisimple_basis = "tensor product of cosemisimple group algebras";
    } else if (name == "sweedler_tensor_z2") {
        FieldSpec f3 = FieldSpec::prime_field(3);
        CatalogEntry a = preset("sweedler_f3");
        HopfAlgebra z2f3 = group_algebra(cyclic_group_table(2), f3, "z2@f3");
        z2f3.semisimple_flag = true;
        z2f3.cosemisimple_flag = true;
        e.name = name;
        e.family = "pointed";
        e.algebra = tensor_product(a.algebra, z2f3);
        e.algebra.name = name;
        e.exponent = ExpectedExponent{false, std::lcm(a.exponent->value, 2ul),
                                      "lcm of tensor factor exponents"};
        e.semisimple = false;
        e.semisimple_basis = "tensor factor with nilpotent generator stays nonsemisimple";
        e.cosemisimple = false;
        e.cosemisimple_basis = "dual inherits the transposed skew-primitive";
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }

    AxiomReport rep = verify_hopf(e.algebra);
    if (!rep.all()) throw std::logic_error("preset fails verification: " + rep.detail);
    return e;
}

}  // namespace hopfx
