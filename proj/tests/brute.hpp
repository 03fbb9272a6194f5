#pragma once
#include <map>
#include <vector>

#include "hopfx/hopf.hpp"

namespace hopfx::testutil {

// Power map computed from the definition with no recursion: expand the n-fold
// coproduct as an explicit sum over index tuples, twist leg k by S^{-2(k-1)},
// multiply the legs left to right.  Exponential in n; oracle use only.
inline ExactMatrix brute_sweedler_power(const HopfAlgebra& h, unsigned n) {
    using Key = std::vector<uint32_t>;
    ExactMatrix out(h.field, h.dim, h.dim);
    std::vector<ExactMatrix> spow;
    spow.push_back(ExactMatrix::identity(h.field, h.dim));
    ExactMatrix sinv2 = h.antipode_inv * h.antipode_inv;
    for (unsigned k = 1; k < n; ++k) spow.push_back(spow.back() * sinv2);
    for (uint32_t i = 0; i < h.dim; ++i) {
        std::map<Key, Scalar> cur;
        cur.emplace(Key{i}, Scalar::one(h.field));
        for (unsigned step = 1; step < n; ++step) {
            std::map<Key, Scalar> next;
            for (const auto& [key, coef] : cur) {
                for (const auto& e : h.comult[key.back()]) {
                    Key nk(key.begin(), key.end() - 1);
                    nk.push_back(e.a);
                    nk.push_back(e.b);
                    auto it = next.find(nk);
                    if (it == next.end())
                        next.emplace(std::move(nk), coef * e.c);
                    else
                        it->second = it->second + coef * e.c;
                }
            }
            cur = std::move(next);
        }
        Vec acc = h.zero_vec();
        for (const auto& [key, coef] : cur) {
            if (coef.is_zero()) continue;
            Vec prod = h.unit;
            for (unsigned k = 0; k < key.size(); ++k) {
                Vec leg = h.zero_vec();
                for (uint32_t s = 0; s < h.dim; ++s) leg[s] = spow[k].at(s, key[k]);
                prod = multiply(h, prod, leg);
            }
            for (uint32_t s = 0; s < h.dim; ++s) acc[s] = acc[s] + coef * prod[s];
        }
        for (uint32_t s = 0; s < h.dim; ++s) out.at(s, i) = acc[s];
    }
    return out;
}

}  // namespace hopfx::testutil
