#include "hopfx/tensorops.hpp"

namespace hopfx {

void sp2_add(Sp2& t, uint32_t a, uint32_t b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = PairKey{a, b};
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(key, c);
    else
        it->second += c;
}

Sp2 sp2_outer(const Vec& x, const Vec& y) {
    Sp2 t;
    for (uint32_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (uint32_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            t.emplace(PairKey{a, b}, x[a] * y[b]);
        }
    }
    return t;
}

Sp2 sp2_unit(const HopfAlgebra& h) { return sp2_outer(h.unit, h.unit); }

Sp2 sp2_flip(const Sp2& t) {
    Sp2 r;
    for (const auto& [k, v] : t)
        if (!v.is_zero()) r.emplace(PairKey{k.second, k.first}, v);
    return r;
}

Sp2 sp2_from_tensor2(const Tensor2& t) {
    Sp2 r;
    for (uint32_t a = 0; a < t.d1; ++a)
        for (uint32_t b = 0; b < t.d2; ++b)
            if (!t.at(a, b).is_zero()) r.emplace(PairKey{a, b}, t.at(a, b));
    return r;
}

Tensor2 sp2_to_tensor2(const FieldSpec& f, uint32_t d1, uint32_t d2, const Sp2& t) {
    Tensor2 r(f, d1, d2);
    for (const auto& [k, v] : t) r.at(k.first, k.second) = r.at(k.first, k.second) + v;
    return r;
}

Sp2 sp2_comult(const HopfAlgebra& h, const Vec& v) {
    Sp2 t;
    for (uint32_t i = 0; i < h.dim; ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& e : h.comult[i]) sp2_add(t, e.a, e.b, v[i] * e.c);
    }
    return t;
}

Sp2 sp2_mult(const HopfAlgebra& h, const Sp2& x, const Sp2& y) {
    Sp2 t;
    for (const auto& [kx, cx] : x) {
        if (cx.is_zero()) continue;
        for (const auto& [ky, cy] : y) {
            if (cy.is_zero()) continue;
            Scalar c = cx * cy;
            for (const auto& e1 : h.row(kx.first, ky.first))
                for (const auto& e2 : h.row(kx.second, ky.second)) sp2_add(t, e1.idx, e2.idx, c * e1.c * e2.c);
        }
    }
    return t;
}

Sp2 sp2_apply_leg1(const ExactMatrix& m, const Sp2& t) {
    Sp2 r;
    for (const auto& [k, v] : t) {
        if (v.is_zero()) continue;
        for (uint32_t s = 0; s < m.rows(); ++s) {
            const Scalar& c = m.at(s, k.first);
            if (!c.is_zero()) sp2_add(r, s, k.second, c * v);
        }
    }
    return r;
}

Sp2 sp2_apply_leg2(const ExactMatrix& m, const Sp2& t) {
    Sp2 r;
    for (const auto& [k, v] : t) {
        if (v.is_zero()) continue;
        for (uint32_t s = 0; s < m.rows(); ++s) {
            const Scalar& c = m.at(s, k.second);
            if (!c.is_zero()) sp2_add(r, k.first, s, c * v);
        }
    }
    return r;
}

bool sp2_equal(const Sp2& x, const Sp2& y) {
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

bool sp2_is_zero(const Sp2& x) {
    for (const auto& [k, v] : x)
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace hopfx
