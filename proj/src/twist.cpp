#include "hopfx/twist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hopfx {
namespace {

// elements of H (x) H (x) H keyed by packed basis triples
using T3 = std::map<uint64_t, Scalar>;

uint64_t pack3(uint32_t a, uint32_t b, uint32_t c, uint32_t n) {
    return (uint64_t(a) * n + b) * n + c;
}

void t3_add(T3& t, uint64_t key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(key, c);
    else
        it->second += c;
}

bool t3_equal(const T3& x, const T3& y) {
    for (const auto& [k, v] : x) {
        if (v.is_zero()) continue;
        auto it = y.find(k);
        if (it == y.end() ? !v.is_zero() : it->second != v) return false;
    }
    for (const auto& [k, v] : y) {
        if (v.is_zero()) continue;
        if (x.find(k) == x.end()) return false;
    }
    return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::optional<Tensor2> tensor_square_inverse(const HopfAlgebra& h, const Tensor2& j) {
    const uint32_t d = h.dim;
    const size_t n2 = size_t(d) * d;
    ExactMatrix lj(h.field, n2, n2);
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = 0; b < d; ++b) {
            const Scalar& v = j.at(a, b);
            if (v.is_zero()) continue;
            for (uint32_t c = 0; c < d; ++c)
                for (const auto& pe : h.row(a, c))
                    for (uint32_t e = 0; e < d; ++e)
                        for (const auto& qe : h.row(b, e)) {
                            Scalar& slot = lj.at(size_t(pe.idx) * d + qe.idx, size_t(c) * d + e);
                            slot.addmul(v, pe.c * qe.c);
                        }
        }
    auto inv = matrix_inverse(lj);
    if (!inv) return std::nullopt;
    std::vector<Scalar> one2(n2, Scalar::zero(h.field));
    for (uint32_t u = 0; u < d; ++u)
        for (uint32_t w = 0; w < d; ++w) one2[size_t(u) * d + w] = h.unit[u] * h.unit[w];
    std::vector<Scalar> sol = inv->apply(one2);
    Tensor2 out(h.field, d, d);
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = 0; b < d; ++b) out.at(a, b) = sol[size_t(a) * d + b];
    // a right inverse of j is two-sided in a finite-dimensional algebra;
    // check both products anyway since everything downstream leans on it
    Sp2 sj = sp2_from_tensor2(j), so = sp2_from_tensor2(out), u2 = sp2_unit(h);
    if (!sp2_equal(sp2_mult(h, sj, so), u2) || !sp2_equal(sp2_mult(h, so, sj), u2))
        return std::nullopt;
    return out;
}

TwistReport verify_twist(const HopfAlgebra& h, const Tensor2& j) {
    TwistReport rep;
    const uint32_t d = h.dim;
    if (j.d1 != d || j.d2 != d) {
        rep.detail = "twist tensor shape does not match the algebra";
        return rep;
    }
    auto fail = [&rep](const std::string& msg) {
        if (rep.detail.empty()) rep.detail = msg;
    };

    rep.invertible = tensor_square_inverse(h, j).has_value();
    if (!rep.invertible) fail("twist is not invertible in H (x) H");

    // counit normalization: (eps (x) I)(J) = (I (x) eps)(J) = 1
    Vec left = h.zero_vec(), right = h.zero_vec();
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = 0; b < d; ++b) {
            const Scalar& v = j.at(a, b);
            if (v.is_zero()) continue;
            left[b].addmul(v, h.counit[a]);
            right[a].addmul(v, h.counit[b]);
        }
    rep.counital = (left == h.unit) && (right == h.unit);
    if (!rep.counital) fail("twist fails the counit normalization");

    // cocycle identity: (Delta (x) I)(J) . J12 = (I (x) Delta)(J) . J23
    T3 lead_l, lead_r;
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = 0; b < d; ++b) {
            const Scalar& v = j.at(a, b);
            if (v.is_zero()) continue;
            for (const auto& e : h.comult[a]) t3_add(lead_l, pack3(e.a, e.b, b, d), v * e.c);
            for (const auto& e : h.comult[b]) t3_add(lead_r, pack3(a, e.a, e.b, d), v * e.c);
        }
    T3 lhs, rhs;
    for (const auto& [k1, v1] : lead_l) {
        if (v1.is_zero()) continue;
        uint32_t x = uint32_t(k1 / (uint64_t(d) * d)), y = uint32_t((k1 / d) % d),
                 z = uint32_t(k1 % d);
        for (uint32_t c = 0; c < d; ++c)
            for (uint32_t e = 0; e < d; ++e) {
                const Scalar& v2 = j.at(c, e);
                if (v2.is_zero()) continue;
                for (uint32_t u = 0; u < d; ++u) {
                    if (h.unit[u].is_zero()) continue;
                    Scalar base = v1 * v2 * h.unit[u];
                    for (const auto& p : h.row(x, c))
                        for (const auto& q : h.row(y, e))
                            for (const auto& r : h.row(z, u))
                                t3_add(lhs, pack3(p.idx, q.idx, r.idx, d), base * p.c * q.c * r.c);
                }
            }
    }
    for (const auto& [k1, v1] : lead_r) {
        if (v1.is_zero()) continue;
        uint32_t x = uint32_t(k1 / (uint64_t(d) * d)), y = uint32_t((k1 / d) % d),
                 z = uint32_t(k1 % d);
        for (uint32_t c = 0; c < d; ++c)
            for (uint32_t e = 0; e < d; ++e) {
                const Scalar& v2 = j.at(c, e);
                if (v2.is_zero()) continue;
                for (uint32_t u = 0; u < d; ++u) {
                    if (h.unit[u].is_zero()) continue;
                    Scalar base = v1 * v2 * h.unit[u];
                    for (const auto& p : h.row(x, u))
                        for (const auto& q : h.row(y, c))
                            for (const auto& r : h.row(z, e))
                                t3_add(rhs, pack3(p.idx, q.idx, r.idx, d), base * p.c * q.c * r.c);
                }
            }
    }
    rep.cocycle = t3_equal(lhs, rhs);
    if (!rep.cocycle) fail("twist fails the cocycle identity");
    return rep;
}

HopfAlgebra apply_twist(const HopfAlgebra& h, const Tensor2& j) {
    TwistReport rep = verify_twist(h, j);
    if (!rep.all()) throw std::invalid_argument("cannot twist: " + rep.detail);
    auto jinv = tensor_square_inverse(h, j);
    if (!jinv) throw std::invalid_argument("cannot twist: twist is not invertible in H (x) H");

    HopfAlgebra out = h;
    out.name = h.name + "^J";
    Sp2 sj = sp2_from_tensor2(j), sjinv = sp2_from_tensor2(*jinv);
    for (uint32_t x = 0; x < h.dim; ++x) {
        Sp2 dx;
        for (const auto& e : h.comult[x]) sp2_add(dx, e.a, e.b, e.c);
        Sp2 tw = sp2_mult(h, sp2_mult(h, sjinv, dx), sj);
        SparsePair row;
        for (const auto& [k, v] : tw)
            if (!v.is_zero()) row.push_back({k.first, k.second, v});
        out.comult[x] = row;
    }
    out.cosemisimple_flag.reset();  // coalgebra changed; the algebra side is untouched
    set_antipode(out, solve_antipode(out));
    out.known_grouplikes.clear();
    for (const auto& g : h.known_grouplikes)
        if (is_grouplike(out, g)) out.known_grouplikes.push_back(g);
    AxiomReport ar = verify_hopf(out);
    if (!ar.all()) throw std::runtime_error("twisted algebra fails verification: " + ar.detail);
    return out;
}

Tensor2 twist_r_matrix(const HopfAlgebra& h, const Tensor2& r, const Tensor2& j) {
    if (r.d1 != h.dim || r.d2 != h.dim || j.d1 != h.dim || j.d2 != h.dim)
        throw std::invalid_argument("tensor shape does not match the algebra");
    auto jinv = tensor_square_inverse(h, j);
    if (!jinv) throw std::invalid_argument("twist is not invertible in H (x) H");
    Sp2 j21inv = sp2_flip(sp2_from_tensor2(*jinv));
    Sp2 prod = sp2_mult(h, sp2_mult(h, j21inv, sp2_from_tensor2(r)), sp2_from_tensor2(j));
    return sp2_to_tensor2(h.field, h.dim, h.dim, prod);
}

std::optional<Scalar> field_root_of_unity(const FieldSpec& f, unsigned n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return Scalar::one(f);
    switch (f.kind) {
        case FieldKind::Rationals:
            return n == 2 ? std::optional<Scalar>(Scalar::integer(f, -1)) : std::nullopt;
        case FieldKind::Cyclotomic: {
            unsigned m = f.param;
            if (m % n == 0) return Scalar::zeta(f).pow(long(m / n));
            // odd conductor: -zeta generates the 2m-th roots
            if (m % 2 == 1 && (2 * m) % n == 0)
                return (Scalar::integer(f, -1) * Scalar::zeta(f)).pow(long(2 * m / n));
            return n == 2 ? std::optional<Scalar>(Scalar::integer(f, -1)) : std::nullopt;
        }
        case FieldKind::PrimeField: {
            unsigned p = f.param;
            if ((p - 1) % n != 0) return std::nullopt;
            unsigned long q = (p - 1) / n;
            auto primes = prime_factors(n);
            for (unsigned long x = 2; x < p; ++x) {
                Scalar y = Scalar::integer(f, long(x)).pow(long(q));
                bool primitive = true;
                for (unsigned r : primes)
                    if (y.pow(long(n / r)).is_one()) {
                        primitive = false;
                        break;
                    }
                if (primitive) return y;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Twist bicharacter_twist(const HopfAlgebra& h, const std::vector<Vec>& grouplike_gens,
                        const std::vector<std::vector<Scalar>>& table) {
    if (grouplike_gens.empty())
        throw std::invalid_argument("twist construction needs at least one grouplike generator");
    for (const auto& g : grouplike_gens)
        if (!is_grouplike(h, g))
            throw std::invalid_argument("twist generator is not grouplike");

    // close the generators into a subgroup A (grouplikes are linearly
    // independent, so |A| <= dim and the closure terminates)
    std::vector<Vec> elems{h.unit};
    auto find_elem = [&elems](const Vec& v) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == v) return int(i);
        return -1;
    };
    std::queue<size_t> work;
    work.push(0);
    while (!work.empty()) {
        size_t cur = work.front();
        work.pop();
        for (const auto& g : grouplike_gens) {
            Vec w = multiply(h, elems[cur], g);
            if (find_elem(w) < 0) {
                elems.push_back(w);
                if (elems.size() > h.dim)
                    throw std::invalid_argument(
                        "grouplike generators do not close into a subgroup within the algebra");
                work.push(elems.size() - 1);
            }
        }
    }
    const size_t na = elems.size();

    std::vector<std::vector<size_t>> ta(na, std::vector<size_t>(na));
    for (size_t i = 0; i < na; ++i)
        for (size_t k = 0; k < na; ++k) {
            int idx = find_elem(multiply(h, elems[i], elems[k]));
            if (idx < 0)
                throw std::invalid_argument(
                    "grouplike generators do not close into a subgroup within the algebra");
            ta[i][k] = size_t(idx);
        }
    for (size_t i = 0; i < na; ++i)
        for (size_t k = 0; k < i; ++k)
            if (ta[i][k] != ta[k][i])
                throw std::invalid_argument("twist generators span a nonabelian subgroup");

    std::vector<size_t> inv(na);
    for (size_t i = 0; i < na; ++i) {
        bool found = false;
        for (size_t k = 0; k < na; ++k)
            if (ta[i][k] == 0) {
                inv[i] = k;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("twisting subgroup element has no inverse");
    }
    auto order_of = [&ta](size_t i) {
        unsigned n = 1;
        size_t cur = i;
        while (cur != 0) {
            cur = ta[cur][i];
            ++n;
        }
        return n;
    };
    unsigned expo = 1;
    for (size_t i = 0; i < na; ++i) expo = unsigned(std::lcm(expo, order_of(i)));

    auto ze = field_root_of_unity(h.field, expo);
    if (!ze)
        throw std::invalid_argument("field has no primitive root of unity of order " +
                                    std::to_string(expo));
    Scalar na_scalar = Scalar::integer(h.field, long(na));
    if (na_scalar.is_zero())
        throw std::invalid_argument("twisting subgroup order vanishes in the field");
    Scalar na_inv = na_scalar.inverse();

    const size_t ngen = grouplike_gens.size();
    std::vector<size_t> gidx(ngen);
    std::vector<unsigned> gord(ngen);
    for (size_t i = 0; i < ngen; ++i) {
        gidx[i] = size_t(find_elem(grouplike_gens[i]));
        gord[i] = order_of(gidx[i]);
    }

    // characters of A, enumerated as exponent tuples over the generators in
    // lexicographic order; tuples that are inconsistent on relations or
    // duplicate an earlier character are dropped
    std::vector<std::vector<Scalar>> chars;  // chars[c][element]
    std::vector<unsigned> tup(ngen, 0);
    while (true) {
        std::vector<Scalar> genval(ngen);
        for (size_t i = 0; i < ngen; ++i) genval[i] = ze->pow(long((expo / gord[i]) * tup[i]));
        std::vector<std::optional<Scalar>> vals(na);
        vals[0] = Scalar::one(h.field);
        std::queue<size_t> bfs;
        bfs.push(0);
        while (!bfs.empty()) {
            size_t cur = bfs.front();
            bfs.pop();
            for (size_t i = 0; i < ngen; ++i) {
                size_t nxt = ta[cur][gidx[i]];
                if (!vals[nxt]) {
                    vals[nxt] = *vals[cur] * genval[i];
                    bfs.push(nxt);
                }
            }
        }
        bool ok = true;
        for (size_t a = 0; a < na && ok; ++a)
            for (size_t i = 0; i < ngen && ok; ++i)
                if (*vals[ta[a][gidx[i]]] != *vals[a] * genval[i]) ok = false;
        if (ok) {
            std::vector<Scalar> flat(na);
            for (size_t a = 0; a < na; ++a) flat[a] = *vals[a];
            bool dup = false;
            for (const auto& c : chars)
                if (c == flat) {
                    dup = true;
                    break;
                }
            if (!dup) chars.push_back(std::move(flat));
        }
        bool rolled_over = true;
        for (size_t pos = ngen; pos-- > 0;) {
            if (++tup[pos] < gord[pos]) {
                rolled_over = false;
                break;
            }
            tup[pos] = 0;
        }
        if (rolled_over) break;
    }
    if (chars.size() != na)
        throw std::invalid_argument("character group of the twisting subgroup is incomplete "
                                    "(field lacks roots of unity)");

    // pointwise product table of the character group; index 0 is trivial
    auto char_index = [&chars, na](const std::vector<Scalar>& v) -> size_t {
        for (size_t c = 0; c < chars.size(); ++c)
            if (chars[c] == v) return c;
        return na;
    };
    std::vector<std::vector<size_t>> cprod(na, std::vector<size_t>(na));
    for (size_t x = 0; x < na; ++x)
        for (size_t y = 0; y < na; ++y) {
            std::vector<Scalar> v(na);
            for (size_t a = 0; a < na; ++a) v[a] = chars[x][a] * chars[y][a];
            size_t idx = char_index(v);
            if (idx == na) throw std::logic_error("character group is not closed under products");
            cprod[x][y] = idx;
        }

    if (table.size() != na)
        throw std::invalid_argument("twist table size does not match the character count");
    for (const auto& rowv : table)
        if (rowv.size() != na)
            throw std::invalid_argument("twist table size does not match the character count");
    for (size_t x = 0; x < na; ++x)
        for (size_t y = 0; y < na; ++y)
            if (table[x][y].is_zero())
                throw std::invalid_argument("twist table entries must be nonzero");
    for (size_t x = 0; x < na; ++x)
        if (!table[0][x].is_one() || !table[x][0].is_one())
            throw std::invalid_argument("twist table is not normalized at the trivial character");
    for (size_t x = 0; x < na; ++x)
        for (size_t y = 0; y < na; ++y)
            for (size_t z = 0; z < na; ++z)
                if (table[x][y] * table[cprod[x][y]][z] != table[y][z] * table[x][cprod[y][z]])
                    throw std::invalid_argument("twist table is not a normalized 2-cocycle");

    // orthogonal idempotents e_chi = |A|^{-1} sum_a chi(a^{-1}) a
    std::vector<Vec> idem(na, h.zero_vec());
    for (size_t c = 0; c < na; ++c)
        for (size_t a = 0; a < na; ++a) {
            Scalar coeff = na_inv * chars[c][inv[a]];
            for (uint32_t p = 0; p < h.dim; ++p)
                idem[c][p].addmul(coeff, elems[a][p]);
        }

    Tensor2 j(h.field, h.dim, h.dim), jinv(h.field, h.dim, h.dim);
    for (size_t x = 0; x < na; ++x)
        for (size_t y = 0; y < na; ++y) {
            Scalar binv = table[x][y].inverse();
            for (uint32_t p = 0; p < h.dim; ++p) {
                if (idem[x][p].is_zero()) continue;
                for (uint32_t q = 0; q < h.dim; ++q) {
                    j.at(p, q).addmul(table[x][y] * idem[x][p], idem[y][q]);
                    jinv.at(p, q).addmul(binv * idem[x][p], idem[y][q]);
                }
            }
        }

    Sp2 u2 = sp2_unit(h);
    if (!sp2_equal(sp2_mult(h, sp2_from_tensor2(j), sp2_from_tensor2(jinv)), u2))
        throw std::logic_error("constructed twist inverse is wrong");
    TwistReport rep = verify_twist(h, j);
    if (!rep.all()) throw std::logic_error("constructed twist fails verification: " + rep.detail);
    return Twist{h, std::move(j), std::move(jinv)};
}

}  // namespace hopfx
