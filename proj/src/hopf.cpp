#include "hopfx/hopf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfx {

namespace {

void add_row_into(Vec& acc, const SparseVec& row, const Scalar& coeff) {
    for (const auto& e : row) acc[e.idx].addmul(coeff, e.c);
}

}  // namespace

Vec HopfAlgebra::basis_vec(uint32_t i) const {
    Vec v = zero_vec();
    v[i] = Scalar::one(field);
    return v;
}

void set_antipode(HopfAlgebra& h, ExactMatrix s) {
    auto inv = matrix_inverse(s);
    if (!inv) throw std::runtime_error("antipode matrix is singular");
    h.antipode = std::move(s);
    h.antipode_inv = std::move(*inv);
}

ExactMatrix solve_antipode(const HopfAlgebra& h) {
    const FieldSpec& f = h.field;
    const size_t n = h.dim;
    // operators f: H -> H flattened column-major: flat[a*n + s] = f(e_a)_s
    auto convolve_with_id = [&](const std::vector<Scalar>& flat) {
        std::vector<Scalar> out(n * n, Scalar::zero(f));
        for (uint32_t x = 0; x < n; ++x)
            for (const auto& e : h.comult[x]) {
                // gamma . f(e_a) . e_b
                const size_t base = size_t(e.a) * n;
                for (uint32_t s = 0; s < n; ++s) {
                    const Scalar& c = flat[base + s];
                    if (c.is_zero()) continue;
                    Scalar w = e.c * c;
                    for (const auto& r : h.row(s, e.b)) out[size_t(x) * n + r.idx].addmul(w, r.c);
                }
            }
        return out;
    };
    // unit of the convolution algebra: x -> eps(x) 1
    std::vector<Scalar> conv_unit(n * n, Scalar::zero(f));
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t k = 0; k < n; ++k) conv_unit[size_t(x) * n + k] = h.counit[x] * h.unit[k];

    Polynomial m = krylov_annihilator(f, conv_unit, convolve_with_id);
    if (m.coeff(0).is_zero()) throw std::runtime_error("identity map is not convolution-invertible");

    // id^{-1} = -c0^{-1} (c1 + c2 id + ... + cd id^{d-1}), powers streamed
    Scalar scale = -m.coeff(0).inverse();
    std::vector<Scalar> acc(n * n, Scalar::zero(f));
    std::vector<Scalar> pw = conv_unit;
    for (size_t k = 1; k < m.coeffs().size(); ++k) {
        if (k > 1) pw = convolve_with_id(pw);
        const Scalar& ck = m.coeffs()[k];
        if (ck.is_zero()) continue;
        Scalar w = scale * ck;
        for (size_t i = 0; i < acc.size(); ++i)
            if (!pw[i].is_zero()) acc[i].addmul(w, pw[i]);
    }
    ExactMatrix s(f, n, n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t idx = 0; idx < n; ++idx) s.at(idx, a) = acc[size_t(a) * n + idx];
    return s;
}

Vec multiply(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    if (a.size() != h.dim || b.size() != h.dim) throw std::invalid_argument("element dimension mismatch");
    Vec acc = h.zero_vec();
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (uint32_t j = 0; j < h.dim; ++j) {
            if (b[j].is_zero()) continue;
            add_row_into(acc, h.row(i, j), a[i] * b[j]);
        }
    }
    return acc;
}

Tensor2 comultiply(const HopfAlgebra& h, const Vec& a) {
    Tensor2 t(h.field, h.dim, h.dim);
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& e : h.comult[i]) t.at(e.a, e.b).addmul(a[i], e.c);
    }
    return t;
}

Scalar counit_of(const HopfAlgebra& h, const Vec& a) {
    Scalar s = Scalar::zero(h.field);
    for (uint32_t i = 0; i < h.dim; ++i)
        if (!a[i].is_zero()) s.addmul(a[i], h.counit[i]);
    return s;
}

Vec apply_antipode_power(const HopfAlgebra& h, const Vec& a, long k) {
    Vec v = a;
    const ExactMatrix& m = k >= 0 ? h.antipode : h.antipode_inv;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) v = m.apply(v);
    return v;
}

bool is_unit_vec(const HopfAlgebra& h, const Vec& a) { return a == h.unit; }

ExactMatrix regular_rep_left(const HopfAlgebra& h, const Vec& a) {
    ExactMatrix m(h.field, h.dim, h.dim);
    for (uint32_t j = 0; j < h.dim; ++j) {
        Vec col = h.zero_vec();
        for (uint32_t i = 0; i < h.dim; ++i)
            if (!a[i].is_zero()) add_row_into(col, h.row(i, j), a[i]);
        for (uint32_t i = 0; i < h.dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Polynomial element_minimal_polynomial(const HopfAlgebra& h, const Vec& a) {
    // the annihilator of 1 under left multiplication by a is the minimal
    // polynomial of a itself, and the regular representation is faithful,
    // so this equals the minimal polynomial of L_a
    return krylov_annihilator(h.field, h.unit, [&](const Vec& v) { return multiply(h, a, v); });
}

std::optional<Vec> element_inverse(const HopfAlgebra& h, const Vec& a) {
    Polynomial m = element_minimal_polynomial(h, a);
    Scalar c0 = m.coeff(0);
    if (c0.is_zero()) return std::nullopt;
    // a^{-1} = -c0^{-1} (c1 + c2 a + ... + cn a^{n-1})
    Scalar scale = -c0.inverse();
    Vec acc = h.zero_vec();
    Vec pw = h.unit;
    for (size_t k = 1; k < m.coeffs().size(); ++k) {
        if (k > 1) pw = multiply(h, a, pw);
        const Scalar& ck = m.coeffs()[k];
        if (ck.is_zero()) continue;
        Scalar f = scale * ck;
        for (uint32_t i = 0; i < h.dim; ++i) acc[i].addmul(f, pw[i]);
    }
    return acc;
}

std::optional<unsigned long> element_order(const HopfAlgebra& h, const Vec& a, unsigned long cap) {
    Vec pw = a;
    for (unsigned long k = 1; k <= cap; ++k) {
        if (k > 1) pw = multiply(h, a, pw);
        if (is_unit_vec(h, pw)) return k;
    }
    return std::nullopt;
}

namespace {

struct Triple {
    uint32_t a, b, c;
    bool operator<(const Triple& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

using TripleMap = std::map<Triple, Scalar>;

void triple_add(TripleMap& m, const Triple& t, const Scalar& v) {
    auto it = m.find(t);
    if (it == m.end())
        m.emplace(t, v);
    else
        it->second += v;
}

bool triple_equal(const TripleMap& x, const TripleMap& y) {
    // maps may carry explicit zeros from cancellation
    for (const auto& [t, v] : x) {
        if (v.is_zero()) continue;
        auto it = y.find(t);
        if (it == y.end() || !(it->second == v)) return false;
    }
    for (const auto& [t, v] : y) {
        if (v.is_zero()) continue;
        auto it = x.find(t);
        if (it == x.end() || !(it->second == v)) return false;
    }
    return true;
}

// Dense scratch that tracks which indices were written, so clearing between
// uses costs only the touched entries (the verification loops run millions of
// small accumulations over high-dimensional algebras).
struct Scratch {
    Vec v;
    std::vector<uint32_t> touched;
    explicit Scratch(const HopfAlgebra& h) : v(h.zero_vec()) {}
    void add(uint32_t idx, const Scalar& c) {
        if (v[idx].is_zero()) touched.push_back(idx);
        v[idx] += c;
    }
    void addmul(uint32_t idx, const Scalar& a, const Scalar& b) {
        if (v[idx].is_zero()) touched.push_back(idx);
        v[idx].addmul(a, b);
    }
    void add_row(const SparseVec& row, const Scalar& coeff) {
        for (const auto& e : row) addmul(e.idx, coeff, e.c);
    }
    void clear() {
        for (uint32_t t : touched) v[t] = Scalar::zero(v[t].field());
        touched.clear();
    }
};

bool scratch_equal(const Scratch& a, const Scratch& b) {
    for (uint32_t t : a.touched)
        if (!(a.v[t] == b.v[t])) return false;
    for (uint32_t t : b.touched)
        if (!(a.v[t] == b.v[t])) return false;
    return true;
}

// sparse product of e_i . g where g is given as a sparse vector
SparseVec sparse_mult_basis(const HopfAlgebra& h, uint32_t i, const SparseVec& g, Scratch& s) {
    s.clear();
    for (const auto& t : g) s.add_row(h.row(i, t.idx), t.c);
    SparseVec out;
    std::vector<uint32_t> idxs(s.touched);
    std::sort(idxs.begin(), idxs.end());
    for (uint32_t t : idxs)
        if (!s.v[t].is_zero()) out.push_back({t, s.v[t]});
    return out;
}

SparseVec sparsify(const Vec& v) {
    SparseVec out;
    for (uint32_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i, v[i]});
    return out;
}

using PairMap = std::map<std::pair<uint32_t, uint32_t>, Scalar>;

void pair_add(PairMap& m, uint32_t a, uint32_t b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = m.find(key);
    if (it == m.end())
        m.emplace(key, c);
    else
        it->second += c;
}

bool pair_equal(const PairMap& x, const PairMap& y) {
    for (const auto& [k, v] : x) {
        if (v.is_zero()) continue;
        auto it = y.find(k);
        if (it == y.end() || !(it->second == v)) return false;
    }
    for (const auto& [k, v] : y) {
        if (v.is_zero()) continue;
        auto it = x.find(k);
        if (it == x.end() || !(it->second == v)) return false;
    }
    return true;
}

// Delta of a sparse element
PairMap sparse_comult(const HopfAlgebra& h, const SparseVec& v) {
    PairMap m;
    for (const auto& t : v)
        for (const auto& e : h.comult[t.idx]) pair_add(m, e.a, e.b, t.c * e.c);
    return m;
}

// product of two coproducts given as pair maps, in H (x) H
PairMap pair_mult(const HopfAlgebra& h, const PairMap& x, const PairMap& y) {
    PairMap m;
    for (const auto& [kx, cx] : x) {
        if (cx.is_zero()) continue;
        for (const auto& [ky, cy] : y) {
            if (cy.is_zero()) continue;
            Scalar c = cx * cy;
            for (const auto& e1 : h.row(kx.first, ky.first))
                for (const auto& e2 : h.row(kx.second, ky.second)) pair_add(m, e1.idx, e2.idx, c * e1.c * e2.c);
        }
    }
    return m;
}

}  // namespace

AxiomReport verify_hopf(const HopfAlgebra& h) {
    AxiomReport rep;
    const FieldSpec& f = h.field;
    auto fail = [&](const std::string& what) {
        if (rep.detail.empty()) rep.detail = what;
    };

    // --- unit ---
    rep.unital = true;
    for (uint32_t i = 0; i < h.dim && rep.unital; ++i) {
        Vec left = multiply(h, h.unit, h.basis_vec(i));
        Vec right = multiply(h, h.basis_vec(i), h.unit);
        if (left != h.basis_vec(i) || right != h.basis_vec(i)) {
            rep.unital = false;
            fail("unit law fails at basis " + std::to_string(i));
        }
    }

    // --- associativity ---
    rep.associative = true;
    bool exhaustive = h.dim <= 64 || h.generator_hints.empty();
    {
        Scratch s1(h), s2(h), sg(h);
        if (exhaustive) {
            for (uint32_t i = 0; i < h.dim && rep.associative; ++i)
                for (uint32_t j = 0; j < h.dim && rep.associative; ++j)
                    for (uint32_t k = 0; k < h.dim; ++k) {
                        s1.clear();
                        s2.clear();
                        for (const auto& e : h.row(i, j)) s1.add_row(h.row(e.idx, k), e.c);
                        for (const auto& e : h.row(j, k)) s2.add_row(h.row(i, e.idx), e.c);
                        if (!scratch_equal(s1, s2)) {
                            rep.associative = false;
                            fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
                            break;
                        }
                    }
        } else {
            // (e_i e_j) g = e_i (e_j g) for algebra generators g: the set of c
            // with (xy)c = x(yc) for all x, y is a subspace closed under
            // multiplication and containing 1, so generators suffice
            for (const Vec& gv : h.generator_hints) {
                if (!rep.associative) break;
                SparseVec g = sparsify(gv);
                // mg[m] = e_m . g, shared across all (i, j)
                std::vector<SparseVec> mg(h.dim);
                for (uint32_t m = 0; m < h.dim; ++m) mg[m] = sparse_mult_basis(h, m, g, sg);
                for (uint32_t i = 0; i < h.dim && rep.associative; ++i)
                    for (uint32_t j = 0; j < h.dim; ++j) {
                        s1.clear();
                        s2.clear();
                        for (const auto& e : h.row(i, j)) s1.add_row(mg[e.idx], e.c);
                        for (const auto& t : mg[j]) s2.add_row(h.row(i, t.idx), t.c);
                        if (!scratch_equal(s1, s2)) {
                            rep.associative = false;
                            fail("associativity (generator form) fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                            break;
                        }
                    }
            }
        }
    }

    // --- coassociativity ---
    rep.coassociative = true;
    for (uint32_t i = 0; i < h.dim && rep.coassociative; ++i) {
        TripleMap lhs, rhs;
        for (const auto& e : h.comult[i]) {
            for (const auto& e2 : h.comult[e.a]) triple_add(lhs, {e2.a, e2.b, e.b}, e.c * e2.c);
            for (const auto& e2 : h.comult[e.b]) triple_add(rhs, {e.a, e2.a, e2.b}, e.c * e2.c);
        }
        if (!triple_equal(lhs, rhs)) {
            rep.coassociative = false;
            fail("coassociativity fails at basis " + std::to_string(i));
        }
    }

    // --- counit ---
    rep.counital = true;
    for (uint32_t i = 0; i < h.dim && rep.counital; ++i) {
        Vec left = h.zero_vec(), right = h.zero_vec();
        for (const auto& e : h.comult[i]) {
            left[e.b].addmul(e.c, h.counit[e.a]);
            right[e.a].addmul(e.c, h.counit[e.b]);
        }
        if (left != h.basis_vec(i) || right != h.basis_vec(i)) {
            rep.counital = false;
            fail("counit law fails at basis " + std::to_string(i));
        }
    }

    // --- bialgebra compatibility ---
    rep.bialgebra = true;
    {
        // Delta(1) = 1 (x) 1 and eps(1) = 1
        Tensor2 d1 = comultiply(h, h.unit);
        Tensor2 expect(f, h.dim, h.dim);
        for (uint32_t a = 0; a < h.dim; ++a)
            for (uint32_t b = 0; b < h.dim; ++b) expect.at(a, b) = h.unit[a] * h.unit[b];
        if (d1 != expect || !counit_of(h, h.unit).is_one()) {
            rep.bialgebra = false;
            fail("Delta or eps fails on the unit");
        }
        // eps multiplicative on all pairs
        for (uint32_t i = 0; i < h.dim && rep.bialgebra; ++i)
            for (uint32_t j = 0; j < h.dim; ++j) {
                Scalar lhs = Scalar::zero(f);
                for (const auto& e : h.row(i, j)) lhs = lhs + e.c * h.counit[e.idx];
                if (!(lhs == h.counit[i] * h.counit[j])) {
                    rep.bialgebra = false;
                    fail("eps not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    break;
                }
            }
        // Delta multiplicative: all pairs when small; (all, generators) otherwise,
        // which suffices because {b : Delta(ab) = Delta(a)Delta(b) for all a} is a
        // subspace closed under multiplication and containing 1
        if (exhaustive && size_t(h.dim) * h.dim <= (size_t(1) << 16)) {
            // residual Delta(e_i)Delta(e_j) - Delta(e_i e_j) accumulated in a
            // dense scratch over H (x) H; dense coproducts (twisted algebras,
            // doubles) make the map-based route far too slow here
            const size_t nn = size_t(h.dim) * h.dim;
            Vec res(nn, Scalar::zero(f));
            std::vector<uint32_t> touched;
            for (uint32_t i = 0; i < h.dim && rep.bialgebra; ++i)
                for (uint32_t j = 0; j < h.dim; ++j) {
                    for (const auto& p : h.comult[i])
                        for (const auto& q : h.comult[j]) {
                            Scalar c = p.c * q.c;
                            for (const auto& e1 : h.row(p.a, q.a)) {
                                Scalar w = c * e1.c;
                                for (const auto& e2 : h.row(p.b, q.b)) {
                                    Scalar& slot = res[size_t(e1.idx) * h.dim + e2.idx];
                                    if (slot.is_zero()) touched.push_back(uint32_t(e1.idx * h.dim + e2.idx));
                                    slot.addmul(w, e2.c);
                                }
                            }
                        }
                    for (const auto& e : h.row(i, j))
                        for (const auto& p : h.comult[e.idx]) {
                            Scalar& slot = res[size_t(p.a) * h.dim + p.b];
                            if (slot.is_zero()) touched.push_back(uint32_t(p.a * h.dim + p.b));
                            slot.submul(e.c, p.c);
                        }
                    bool zero = true;
                    for (uint32_t t : touched) {
                        if (!res[t].is_zero()) zero = false;
                        res[t] = Scalar::zero(f);
                    }
                    touched.clear();
                    if (!zero) {
                        rep.bialgebra = false;
                        fail("Delta not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                        break;
                    }
                }
        } else if (exhaustive) {
            for (uint32_t i = 0; i < h.dim && rep.bialgebra; ++i)
                for (uint32_t j = 0; j < h.dim; ++j) {
                    PairMap lhs;
                    for (const auto& e : h.row(i, j))
                        for (const auto& p : h.comult[e.idx]) pair_add(lhs, p.a, p.b, e.c * p.c);
                    PairMap di = sparse_comult(h, {{i, Scalar::one(f)}});
                    PairMap dj = sparse_comult(h, {{j, Scalar::one(f)}});
                    if (!pair_equal(lhs, pair_mult(h, di, dj))) {
                        rep.bialgebra = false;
                        fail("Delta not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                        break;
                    }
                }
        } else {
            Scratch sg(h);
            for (const Vec& gv : h.generator_hints) {
                if (!rep.bialgebra) break;
                SparseVec g = sparsify(gv);
                PairMap dg = sparse_comult(h, g);
                for (uint32_t i = 0; i < h.dim; ++i) {
                    PairMap lhs = sparse_comult(h, sparse_mult_basis(h, i, g, sg));
                    PairMap di = sparse_comult(h, {{i, Scalar::one(f)}});
                    if (!pair_equal(lhs, pair_mult(h, di, dg))) {
                        rep.bialgebra = false;
                        fail("Delta not multiplicative (generator form) at basis " + std::to_string(i));
                        break;
                    }
                }
            }
        }
    }

    // --- antipode invertibility ---
    {
        Echelon e = rref(h.antipode);
        rep.antipode_invertible = e.rank() == h.dim;
        if (!rep.antipode_invertible) fail("antipode matrix is singular");
    }

    // --- antipode axiom ---
    rep.antipode_axiom = true;
    {
        // sparse columns of S, shared across the basis loop
        std::vector<SparseVec> s_col(h.dim);
        for (uint32_t a = 0; a < h.dim; ++a)
            for (uint32_t s = 0; s < h.dim; ++s)
                if (!h.antipode.at(s, a).is_zero()) s_col[a].push_back({s, h.antipode.at(s, a)});
        for (uint32_t i = 0; i < h.dim && rep.antipode_axiom; ++i) {
            Vec lhs = h.zero_vec(), rhs = h.zero_vec();
            for (const auto& e : h.comult[i]) {
                // S(e_a) e_b and e_a S(e_b)
                for (const auto& t : s_col[e.a]) add_row_into(lhs, h.row(t.idx, e.b), e.c * t.c);
                for (const auto& t : s_col[e.b]) add_row_into(rhs, h.row(e.a, t.idx), e.c * t.c);
            }
            Vec expect = h.zero_vec();
            for (uint32_t k = 0; k < h.dim; ++k) expect[k] = h.counit[i] * h.unit[k];
            if (lhs != expect || rhs != expect) {
                rep.antipode_axiom = false;
                fail("antipode axiom fails at basis " + std::to_string(i));
            }
        }
    }

    return rep;
}

HopfAlgebra dual(const HopfAlgebra& h) {
    HopfAlgebra d;
    d.name = "dual(" + h.name + ")";
    d.field = h.field;
    d.dim = h.dim;
    for (const auto& l : h.basis_labels) d.basis_labels.push_back(l + "*");
    const FieldSpec& f = h.field;
    // multiplication of H* is the transpose of comultiplication
    std::vector<std::map<uint32_t, Scalar>> rows(size_t(h.dim) * h.dim);
    for (uint32_t m = 0; m < h.dim; ++m)
        for (const auto& e : h.comult[m]) {
            auto& row = rows[size_t(e.a) * h.dim + e.b];
            auto it = row.find(m);
            if (it == row.end())
                row.emplace(m, e.c);
            else
                it->second += e.c;
        }
    d.mult.resize(size_t(h.dim) * h.dim);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, v] : rows[r])
            if (!v.is_zero()) d.mult[r].push_back({k, v});
    // comultiplication of H* is the transpose of multiplication
    d.comult.resize(h.dim);
    {
        std::vector<std::map<std::pair<uint32_t, uint32_t>, Scalar>> cm(h.dim);
        for (uint32_t i = 0; i < h.dim; ++i)
            for (uint32_t j = 0; j < h.dim; ++j)
                for (const auto& e : h.row(i, j)) {
                    auto& m = cm[e.idx];
                    auto key = std::make_pair(i, j);
                    auto it = m.find(key);
                    if (it == m.end())
                        m.emplace(key, e.c);
                    else
                        it->second += e.c;
                }
        for (uint32_t m = 0; m < h.dim; ++m)
            for (const auto& [key, v] : cm[m])
                if (!v.is_zero()) d.comult[m].push_back({key.first, key.second, v});
    }
    d.unit = h.counit;
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    d.antipode_inv = h.antipode_inv.transpose();
    if (h.semisimple_flag) d.cosemisimple_flag = h.semisimple_flag;
    if (h.cosemisimple_flag) d.semisimple_flag = h.cosemisimple_flag;
    return d;
}

HopfAlgebra opposite(const HopfAlgebra& h) {
    HopfAlgebra o = h;
    o.name = "op(" + h.name + ")";
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t j = 0; j < h.dim; ++j) o.mult[size_t(i) * h.dim + j] = h.row(j, i);
    o.antipode = h.antipode_inv;
    o.antipode_inv = h.antipode;
    return o;
}

HopfAlgebra coopposite(const HopfAlgebra& h) {
    HopfAlgebra o = h;
    o.name = "cop(" + h.name + ")";
    for (uint32_t i = 0; i < h.dim; ++i) {
        SparsePair flipped;
        for (const auto& e : h.comult[i]) flipped.push_back({e.b, e.a, e.c});
        std::sort(flipped.begin(), flipped.end(),
                  [](const PairEntry& x, const PairEntry& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
        o.comult[i] = std::move(flipped);
    }
    o.antipode = h.antipode_inv;
    o.antipode_inv = h.antipode;
    return o;
}

HopfAlgebra tensor_product(const HopfAlgebra& h1, const HopfAlgebra& h2) {
    if (!(h1.field == h2.field)) throw std::invalid_argument("tensor_product: field mismatch");
    const FieldSpec& f = h1.field;
    HopfAlgebra t;
    t.name = h1.name + "(x)" + h2.name;
    t.field = f;
    t.dim = h1.dim * h2.dim;
    auto idx = [&](uint32_t i, uint32_t j) { return i * h2.dim + j; };
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j)
            t.basis_labels.push_back(h1.basis_labels[i] + "(x)" + h2.basis_labels[j]);
    t.mult.resize(size_t(t.dim) * t.dim);
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j)
            for (uint32_t k = 0; k < h1.dim; ++k)
                for (uint32_t l = 0; l < h2.dim; ++l) {
                    SparseVec& row = t.mult[size_t(idx(i, j)) * t.dim + idx(k, l)];
                    for (const auto& e1 : h1.row(i, k))
                        for (const auto& e2 : h2.row(j, l)) row.push_back({idx(e1.idx, e2.idx), e1.c * e2.c});
                    std::sort(row.begin(), row.end(),
                              [](const SparseEntry& x, const SparseEntry& y) { return x.idx < y.idx; });
                }
    t.unit.assign(t.dim, Scalar::zero(f));
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j) t.unit[idx(i, j)] = h1.unit[i] * h2.unit[j];
    t.comult.resize(t.dim);
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j) {
            SparsePair& cp = t.comult[idx(i, j)];
            for (const auto& e1 : h1.comult[i])
                for (const auto& e2 : h2.comult[j])
                    cp.push_back({idx(e1.a, e2.a), idx(e1.b, e2.b), e1.c * e2.c});
            std::sort(cp.begin(), cp.end(),
                      [](const PairEntry& x, const PairEntry& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
        }
    t.counit.assign(t.dim, Scalar::zero(f));
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j) t.counit[idx(i, j)] = h1.counit[i] * h2.counit[j];
    t.antipode = ExactMatrix(f, t.dim, t.dim);
    t.antipode_inv = ExactMatrix(f, t.dim, t.dim);
    for (uint32_t i = 0; i < h1.dim; ++i)
        for (uint32_t j = 0; j < h2.dim; ++j)
            for (uint32_t k = 0; k < h1.dim; ++k)
                for (uint32_t l = 0; l < h2.dim; ++l) {
                    t.antipode.at(idx(i, j), idx(k, l)) = h1.antipode.at(i, k) * h2.antipode.at(j, l);
                    t.antipode_inv.at(idx(i, j), idx(k, l)) = h1.antipode_inv.at(i, k) * h2.antipode_inv.at(j, l);
                }
    for (const Vec& g1 : h1.known_grouplikes)
        for (const Vec& g2 : h2.known_grouplikes) {
            Vec g(t.dim, Scalar::zero(f));
            for (uint32_t i = 0; i < h1.dim; ++i)
                for (uint32_t j = 0; j < h2.dim; ++j) g[idx(i, j)] = g1[i] * g2[j];
            t.known_grouplikes.push_back(std::move(g));
        }
    if (h1.semisimple_flag && h2.semisimple_flag) t.semisimple_flag = *h1.semisimple_flag && *h2.semisimple_flag;
    if (h1.cosemisimple_flag && h2.cosemisimple_flag)
        t.cosemisimple_flag = *h1.cosemisimple_flag && *h2.cosemisimple_flag;
    return t;
}

HopfAlgebra base_change(const HopfAlgebra& h, const FieldSpec& target) {
    HopfAlgebra r;
    r.name = h.name + "@" + target.str();
    r.field = target;
    r.dim = h.dim;
    r.basis_labels = h.basis_labels;
    r.mult.resize(h.mult.size());
    for (size_t i = 0; i < h.mult.size(); ++i)
        for (const auto& e : h.mult[i]) r.mult[i].push_back({e.idx, e.c.embed_into(target)});
    for (const auto& s : h.unit) r.unit.push_back(s.embed_into(target));
    r.comult.resize(h.dim);
    for (uint32_t i = 0; i < h.dim; ++i)
        for (const auto& e : h.comult[i]) r.comult[i].push_back({e.a, e.b, e.c.embed_into(target)});
    for (const auto& s : h.counit) r.counit.push_back(s.embed_into(target));
    r.antipode = ExactMatrix(target, h.dim, h.dim);
    r.antipode_inv = ExactMatrix(target, h.dim, h.dim);
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t j = 0; j < h.dim; ++j) {
            r.antipode.at(i, j) = h.antipode.at(i, j).embed_into(target);
            r.antipode_inv.at(i, j) = h.antipode_inv.at(i, j).embed_into(target);
        }
    for (const auto& g : h.known_grouplikes) {
        Vec v;
        for (const auto& s : g) v.push_back(s.embed_into(target));
        r.known_grouplikes.push_back(std::move(v));
    }
    r.semisimple_flag = h.semisimple_flag;
    r.cosemisimple_flag = h.cosemisimple_flag;
    return r;
}

ExactMatrix sweedler_power_map(const HopfAlgebra& h, unsigned long n) {
    if (n == 0) throw std::invalid_argument("sweedler_power_map: n must be positive");
    const FieldSpec& f = h.field;
    ExactMatrix fn = ExactMatrix::identity(f, h.dim);
    ExactMatrix t = h.antipode_inv * h.antipode_inv;  // S^{-2}
    ExactMatrix tpow = ExactMatrix::identity(f, h.dim);
    for (unsigned long step = 2; step <= n; ++step) {
        tpow = tpow * t;  // S^{-2(step-1)}
        ExactMatrix next(f, h.dim, h.dim);
        for (uint32_t i = 0; i < h.dim; ++i) {
            Vec acc = h.zero_vec();
            for (const auto& e : h.comult[i]) {
                Vec left(h.dim, Scalar::zero(f));
                for (uint32_t s = 0; s < h.dim; ++s) left[s] = fn.at(s, e.a);
                Vec right(h.dim, Scalar::zero(f));
                for (uint32_t s = 0; s < h.dim; ++s) right[s] = tpow.at(s, e.b);
                Vec prod = multiply(h, left, right);
                for (uint32_t s = 0; s < h.dim; ++s) acc[s].addmul(e.c, prod[s]);
            }
            for (uint32_t s = 0; s < h.dim; ++s) next.at(s, i) = acc[s];
        }
        fn = std::move(next);
    }
    return fn;
}

ExactMatrix counit_unit_map(const HopfAlgebra& h) {
    ExactMatrix m(h.field, h.dim, h.dim);
    for (uint32_t j = 0; j < h.dim; ++j)
        for (uint32_t i = 0; i < h.dim; ++i) m.at(i, j) = h.counit[j] * h.unit[i];
    return m;
}

Vec find_integral(const HopfAlgebra& h) {
    const FieldSpec& f = h.field;
    // solve e_j . L = eps(e_j) L for all j: rows indexed by (j, k)
    ExactMatrix sys(f, size_t(h.dim) * h.dim, h.dim);
    for (uint32_t j = 0; j < h.dim; ++j) {
        for (uint32_t i = 0; i < h.dim; ++i) {
            for (const auto& e : h.row(j, i))
                sys.at(size_t(j) * h.dim + e.idx, i) = sys.at(size_t(j) * h.dim + e.idx, i) + e.c;
            sys.at(size_t(j) * h.dim + i, i) = sys.at(size_t(j) * h.dim + i, i) - h.counit[j];
        }
    }
    auto basis = kernel_basis(sys);
    if (basis.size() != 1) throw std::runtime_error("left integral space is not 1-dimensional");
    return basis[0];
}

bool is_semisimple(const HopfAlgebra& h) { return !counit_of(h, find_integral(h)).is_zero(); }

bool is_cosemisimple(const HopfAlgebra& h) { return is_semisimple(dual(h)); }

bool is_grouplike(const HopfAlgebra& h, const Vec& g) {
    if (!counit_of(h, g).is_one()) return false;
    Tensor2 d = comultiply(h, g);
    for (uint32_t a = 0; a < h.dim; ++a)
        for (uint32_t b = 0; b < h.dim; ++b)
            if (!(d.at(a, b) == g[a] * g[b])) return false;
    return true;
}

SkewPrimitiveSpace skew_primitive_space(const HopfAlgebra& h, const Vec& g) {
    if (!is_grouplike(h, g)) throw std::invalid_argument("skew_primitive_space: g is not grouplike");
    const FieldSpec& f = h.field;
    // kernel of x -> Delta(x) - x (x) 1 - g (x) x
    ExactMatrix sys(f, size_t(h.dim) * h.dim, h.dim);
    for (uint32_t i = 0; i < h.dim; ++i) {
        for (const auto& e : h.comult[i])
            sys.at(size_t(e.a) * h.dim + e.b, i) = sys.at(size_t(e.a) * h.dim + e.b, i) + e.c;
        // minus e_i (x) 1
        for (uint32_t b = 0; b < h.dim; ++b)
            if (!h.unit[b].is_zero())
                sys.at(size_t(i) * h.dim + b, i) = sys.at(size_t(i) * h.dim + b, i) - h.unit[b];
        // minus g (x) e_i
        for (uint32_t a = 0; a < h.dim; ++a)
            if (!g[a].is_zero()) sys.at(size_t(a) * h.dim + i, i) = sys.at(size_t(a) * h.dim + i, i) - g[a];
    }
    SkewPrimitiveSpace out;
    out.basis = kernel_basis(sys);
    // span of the powers of g
    std::vector<Vec> powers;
    {
        std::vector<Vec> rows;
        Vec p = h.unit;
        for (uint32_t k = 0; k <= h.dim; ++k) {
            rows.push_back(p);
            p = multiply(h, g, p);
        }
        // reduce rows to a spanning set via rref of the stacked matrix
        ExactMatrix stacked(f, rows.size(), h.dim);
        for (size_t r = 0; r < rows.size(); ++r)
            for (uint32_t c = 0; c < h.dim; ++c) stacked.at(r, c) = rows[r][c];
        Echelon e = rref(stacked);
        for (size_t r = 0; r < e.rank(); ++r) {
            Vec v(h.dim, Scalar::zero(f));
            for (uint32_t c = 0; c < h.dim; ++c) v[c] = e.mat.at(r, c);
            powers.push_back(std::move(v));
        }
    }
    // x in k[g]? append to the echelon of powers and see whether rank grows
    for (const Vec& x : out.basis) {
        ExactMatrix stacked(f, powers.size() + 1, h.dim);
        for (size_t r = 0; r < powers.size(); ++r)
            for (uint32_t c = 0; c < h.dim; ++c) stacked.at(r, c) = powers[r][c];
        for (uint32_t c = 0; c < h.dim; ++c) stacked.at(powers.size(), c) = x[c];
        if (rref(stacked).rank() > powers.size()) {
            out.nontrivial = true;
            out.witness = x;
            break;
        }
    }
    return out;
}

}  // namespace hopfx
