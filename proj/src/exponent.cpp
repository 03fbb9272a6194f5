#include "hopfx/exponent.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "hopfx/matrix.hpp"

namespace hopfx {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ExactMatrix eps_one_matrix(const HopfAlgebra& h) {
    ExactMatrix e(h.field, h.dim, h.dim);
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t k = 0; k < h.dim; ++k) e.at(k, i) = h.counit[i] * h.unit[k];
    return e;
}

bool is_squarefree(const Polynomial& m) {
    return poly_gcd(m, m.derivative()).degree() == 0;
}

bool characteristic_zero(const HopfAlgebra& h) { return h.field.characteristic() == 0; }

// u^e with the lazy double's product
Vec lazy_power(LazyDouble& ld, const Vec& u, unsigned long e) {
    Vec acc = ld.unit_vec();
    Vec base = u;
    while (e) {
        if (e & 1) acc = ld.multiply(acc, base);
        e >>= 1;
        if (e) base = ld.multiply(base, base);
    }
    return acc;
}

// multiplicative order of x modulo an irreducible factor over F_p; the order
// divides p^deg - 1, so the divisor path is exact whenever that bound fits
unsigned long irreducible_factor_order(const Polynomial& f, unsigned p) {
    int deg = f.degree();
    unsigned long bound = 1;
    bool fits = true;
    for (int i = 0; i < deg; ++i) {
        if (bound > (1UL << 40) / p) {
            fits = false;
            break;
        }
        bound *= p;
    }
    if (fits) {
        OrderSearch os = order_mod_poly(f, 1, bound - 1);
        if (os.found) return os.n;
        throw std::logic_error("x has no order modulo an irreducible factor");
    }
    OrderSearch os = order_mod_poly(f, 1UL << 22);
    if (!os.found) throw std::runtime_error("factor order search exceeded its bound");
    return os.n;
}

// minimal polynomial of the Drinfeld element of D(h), computed lazily
Polynomial lazy_u_minpoly(LazyDouble& ld, const Vec& u) {
    return krylov_annihilator(ld.field(), ld.unit_vec(), [&](const Vec& v) { return ld.multiply(v, u); });
}

InfinityCertificate skew_certificate(const Vec& g, const Vec& x) {
    InfinityCertificate c;
    c.kind = "skew-primitive";
    c.grouplike = g;
    c.element = x;
    return c;
}

}  // namespace

unsigned long default_cap(const HopfAlgebra& h) {
    if (is_semisimple(h) && is_cosemisimple(h)) return (unsigned long)h.dim * h.dim * h.dim;
    return 4096;
}

ExponentResult exponent_direct(const HopfAlgebra& h, unsigned long cap) {
    auto t0 = Clock::now();
    ExponentResult res;
    res.method = "direct";
    const FieldSpec& f = h.field;

    ExactMatrix target = eps_one_matrix(h);
    ExactMatrix fn = ExactMatrix::identity(f, h.dim);  // f_1
    ExactMatrix s2inv = h.antipode_inv * h.antipode_inv;
    ExactMatrix p = ExactMatrix::identity(f, h.dim);  // (S^{-2})^{n-1}

    for (unsigned long n = 1; n <= cap; ++n) {
        if (n > 1) {
            p = p * s2inv;
            ExactMatrix next(f, h.dim, h.dim);
            for (uint32_t x = 0; x < h.dim; ++x) {
                Vec col(h.dim, Scalar::zero(f));
                for (const auto& e : h.comult[x]) {
                    Vec fa(h.dim, Scalar::zero(f));
                    for (uint32_t k = 0; k < h.dim; ++k) fa[k] = fn.at(k, e.a);
                    Vec pb(h.dim, Scalar::zero(f));
                    for (uint32_t k = 0; k < h.dim; ++k) pb[k] = p.at(k, e.b);
                    Vec prod = multiply(h, fa, pb);
                    for (uint32_t k = 0; k < h.dim; ++k) col[k].addmul(e.c, prod[k]);
                }
                for (uint32_t k = 0; k < h.dim; ++k) next.at(k, x) = col[k];
            }
            fn = std::move(next);
        }
        if (fn == target) {
            res.status = ExpStatus::Finite;
            res.value = n;
            res.elapsed_ms = ms_since(t0);
            return res;
        }
    }
    res.status = ExpStatus::Unknown;
    res.cap = cap;
    res.elapsed_ms = ms_since(t0);
    return res;
}

ExponentResult exponent_via_u(const HopfAlgebra& h, unsigned long cap) {
    auto t0 = Clock::now();
    ExponentResult res;
    res.method = "u";

    DrinfeldDouble d = build_double(h);
    ExactMatrix lu = regular_rep_left(d.algebra, d.u);
    Polynomial m = minimal_polynomial(lu);

    OrderCertificate cert;
    cert.minpoly = m;
    cert.squarefree = is_squarefree(m);
    cert.cap = cap;

    std::optional<unsigned long> hints;
    if (is_semisimple(h) && is_cosemisimple(h)) hints = (unsigned long)h.dim * h.dim * h.dim;
    OrderSearch os = order_mod_poly(m, cap, hints);
    if (os.found) {
        cert.order = os.n;
        res.status = ExpStatus::Finite;
        res.value = os.n;
    } else {
        res.status = ExpStatus::Unknown;
        res.cap = cap;
    }
    res.order_certificate = std::move(cert);
    res.elapsed_ms = ms_since(t0);
    return res;
}

ExponentResult exponent_via_r_product(const HopfAlgebra& h, unsigned long cap) {
    auto t0 = Clock::now();
    ExponentResult res;
    res.method = "rproduct";

    DrinfeldDouble d = build_double(h);
    const HopfAlgebra& alg = d.algebra;
    Sp2 r = sp2_from_tensor2(d.r_matrix);
    Sp2 unit2 = sp2_unit(alg);
    ExactMatrix s2 = alg.antipode * alg.antipode;
    ExactMatrix p = ExactMatrix::identity(alg.field, alg.dim);

    Sp2 q = r;
    for (unsigned long n = 1; n <= cap; ++n) {
        if (n > 1) {
            p = p * s2;
            q = sp2_mult(alg, q, sp2_apply_leg2(p, r));
        }
        if (sp2_equal(q, unit2)) {
            res.status = ExpStatus::Finite;
            res.value = n;
            res.elapsed_ms = ms_since(t0);
            return res;
        }
    }
    res.status = ExpStatus::Unknown;
    res.cap = cap;
    res.elapsed_ms = ms_since(t0);
    return res;
}

ExponentResult exponent_via_r21r(const HopfAlgebra& h, unsigned long cap) {
    auto t0 = Clock::now();
    ExponentResult res;
    res.method = "r21r";

    DrinfeldDouble d = build_double(h);
    const HopfAlgebra& alg = d.algebra;
    Sp2 r = sp2_from_tensor2(d.r_matrix);
    Sp2 w = sp2_mult(alg, sp2_flip(r), r);
    Sp2 unit2 = sp2_unit(alg);

    Sp2 p = w;
    for (unsigned long n = 1; n <= cap; ++n) {
        if (n > 1) p = sp2_mult(alg, p, w);
        if (sp2_equal(p, unit2)) {
            res.status = ExpStatus::Finite;
            res.value = n;
            res.elapsed_ms = ms_since(t0);
            return res;
        }
    }
    res.status = ExpStatus::Unknown;
    res.cap = cap;
    res.elapsed_ms = ms_since(t0);
    return res;
}

ExponentResult decide_exponent(const HopfAlgebra& h, unsigned long cap) {
    auto t0 = Clock::now();
    ExponentResult res;
    res.method = "decide";

    // skew-primitive scan over the known grouplikes and the unit
    // (characteristic 0 only: the pointed-subalgebra argument fails mod p)
    if (characteristic_zero(h)) {
        std::vector<Vec> gs = h.known_grouplikes;
        gs.push_back(h.unit);
        for (const Vec& g : gs) {
            if (!is_grouplike(h, g)) continue;
            SkewPrimitiveSpace sps = skew_primitive_space(h, g);
            if (sps.nontrivial && sps.witness) {
                res.certificates.push_back(skew_certificate(g, *sps.witness));
                break;
            }
        }
    }

    LazyDouble ld(h);
    const Vec& u = ld.drinfeld_u();
    Polynomial m = lazy_u_minpoly(ld, u);
    bool sf = is_squarefree(m);

    OrderCertificate cert;
    cert.minpoly = m;
    cert.squarefree = sf;
    cert.cap = cap;

    if (characteristic_zero(h)) {
        if (!sf) {
            InfinityCertificate c;
            c.kind = "u-minpoly-not-squarefree";
            c.u_minpoly = m;
            c.repeated_factor = poly_gcd(m, m.derivative());
            res.certificates.push_back(std::move(c));
        }
        std::optional<unsigned long> order;
        if (sf) {
            std::optional<unsigned long> hints;
            if (is_semisimple(h) && is_cosemisimple(h)) hints = (unsigned long)h.dim * h.dim * h.dim;
            OrderSearch os = order_mod_poly(m, cap, hints);
            if (os.found) order = os.n;
        }
        if (!res.certificates.empty()) {
            if (order) throw std::logic_error("contradictory exponent certificates: infinite evidence plus a finite order");
            res.status = ExpStatus::Infinite;
        } else if (order) {
            if (sweedler_power_map(h, unsigned(*order)) != eps_one_matrix(h))
                throw std::logic_error("u order does not match the Sweedler power map");
            cert.order = order;
            res.status = ExpStatus::Finite;
            res.value = *order;
        } else {
            res.status = ExpStatus::Unknown;
            res.cap = cap;
        }
    } else {
        // characteristic p: the exponent is always finite with order a * p^b
        unsigned p = h.field.characteristic();
        if (m.coeff(0).is_zero()) throw std::logic_error("Drinfeld element is not invertible");
        auto factors = factor_prime_field(m);
        unsigned long a = 1;
        unsigned maxmult = 1;
        for (const auto& [fac, mult] : factors) {
            a = std::lcm(a, irreducible_factor_order(fac, p));
            maxmult = std::max(maxmult, mult);
        }
        unsigned b = 0;
        unsigned long pb = 1;
        while (pb < maxmult) {
            pb *= p;
            ++b;
        }
        unsigned long order = a * pb;
        Vec up = lazy_power(ld, u, order);
        if (up != ld.unit_vec()) throw std::logic_error("a p^b does not annihilate u");
        if (sweedler_power_map(h, unsigned(order)) != eps_one_matrix(h))
            throw std::logic_error("u order does not match the Sweedler power map");
        cert.order = order;
        cert.char_p_ab = std::make_pair(a, b);
        res.status = ExpStatus::Finite;
        res.value = order;
    }
    res.order_certificate = std::move(cert);
    res.elapsed_ms = ms_since(t0);
    return res;
}

SpectrumReport classify_u_spectrum(const HopfAlgebra& h) {
    SpectrumReport rep;
    DrinfeldDouble d = build_double(h);
    const HopfAlgebra& alg = d.algebra;

    rep.u_minpoly = minimal_polynomial(regular_rep_left(alg, d.u));
    rep.u_squarefree = is_squarefree(rep.u_minpoly);

    unsigned long dim3 = (unsigned long)h.dim * h.dim * h.dim;
    Polynomial spu = squarefree_part(rep.u_minpoly);
    OrderSearch osu = order_mod_poly(spu, 2 * dim3);
    rep.u_bound_ok = osu.found;
    if (osu.found) {
        rep.u_root_order = osu.n;
        for (unsigned long q : divisors_of(osu.n)) {
            Polynomial g = poly_gcd(spu, Polynomial::x_pow_minus_one(alg.field, q));
            rep.root_orders.emplace_back(q, unsigned(g.degree()));
        }
    }

    CentralPair cp = central_element_z(d);
    rep.z_minpoly = element_minimal_polynomial(alg, cp.z);
    Polynomial spz = squarefree_part(rep.z_minpoly);
    OrderSearch osz = order_mod_poly(spz, dim3);
    rep.z_bound_ok = osz.found;
    return rep;
}

bool replay_skew_primitive(const HopfAlgebra& h, const InfinityCertificate& c) {
    if (c.kind != "skew-primitive") return false;
    if (!is_grouplike(h, c.grouplike)) return false;
    const FieldSpec& f = h.field;
    // Delta(x) = x (x) 1 + g (x) x, checked directly
    Tensor2 lhs = comultiply(h, c.element);
    Tensor2 rhs(f, h.dim, h.dim);
    for (uint32_t a = 0; a < h.dim; ++a)
        for (uint32_t b = 0; b < h.dim; ++b)
            rhs.at(a, b) = c.element[a] * h.unit[b] + c.grouplike[a] * c.element[b];
    if (lhs != rhs) return false;
    // x outside the span of the powers of g
    std::vector<Vec> rows;
    Vec p = h.unit;
    for (uint32_t k = 0; k <= h.dim; ++k) {
        rows.push_back(p);
        p = multiply(h, c.grouplike, p);
    }
    ExactMatrix stacked(f, rows.size() + 1, h.dim);
    for (size_t r = 0; r < rows.size(); ++r)
        for (uint32_t col = 0; col < h.dim; ++col) stacked.at(r, col) = rows[r][col];
    for (uint32_t col = 0; col < h.dim; ++col) stacked.at(rows.size(), col) = c.element[col];
    ExactMatrix powers_only(f, rows.size(), h.dim);
    for (size_t r = 0; r < rows.size(); ++r)
        for (uint32_t col = 0; col < h.dim; ++col) powers_only.at(r, col) = rows[r][col];
    return rref(stacked).rank() > rref(powers_only).rank();
}

bool replay_nonsquarefree(const HopfAlgebra& h, const InfinityCertificate& c) {
    if (c.kind != "u-minpoly-not-squarefree") return false;
    LazyDouble ld(h);
    const Vec& u = ld.drinfeld_u();
    Polynomial m = lazy_u_minpoly(ld, u);
    if (m != c.u_minpoly) return false;
    Polynomial g = poly_gcd(m, m.derivative());
    return g.degree() > 0 && g == c.repeated_factor;
}

}  // namespace hopfx
