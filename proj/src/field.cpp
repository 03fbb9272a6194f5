#include "hopfx/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfx {

namespace {

// --- small rational-polynomial helpers used only for cyclotomic internals ---
// Polynomials are vector<mpq_class>, low degree first, no trailing zeros.

using QPoly = std::vector<mpq_class>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qp_trim(r);
    return r;
}

// Exact division; remainder must vanish (callers rely on it).
QPoly qp_divexact(QPoly num, const QPoly& den) {
    QPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        qp_trim(num);
    }
    if (!num.empty()) throw std::logic_error("qp_divexact: nonzero remainder");
    qp_trim(q);
    return q;
}

QPoly qp_rem(QPoly num, const QPoly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        qp_trim(num);
    }
    return num;
}

// Extended gcd, returns (g, s) with s*a = g mod m.  Enough for inverses
// against an irreducible modulus.
std::pair<QPoly, QPoly> qp_gcd_ext(QPoly a, QPoly m) {
    QPoly r0 = std::move(m), r1 = std::move(a);
    QPoly s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
        QPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            qp_trim(rem);
        }
        QPoly s2 = s0;
        {
            QPoly qs1 = qp_mul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size(), mpq_class(0));
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            qp_trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {r0, s0};
}

std::mutex g_cyc_mutex;
std::map<unsigned, CycBasis> g_cyc_cache;

QPoly cyclotomic_poly(unsigned n);

QPoly x_pow_minus_one(unsigned n) {
    QPoly p(n + 1, mpq_class(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

QPoly cyclotomic_poly(unsigned n) {
    QPoly num = x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = qp_divexact(num, cyclotomic_poly(d));
    }
    return num;
}

long mod_reduce(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mod_mul(long a, long b, long p) { return (long)((__int128)a * b % p); }

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("not invertible mod p");
    return mod_reduce(t, p);
}

mpq_class parse_rational_text(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar string");
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), t.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(unsigned n) {
    if (n < 1 || n > 64) throw std::invalid_argument("cyclotomic conductor must be in [1,64]");
    return {FieldKind::Cyclotomic, n};
}

FieldSpec FieldSpec::prime_field(unsigned p) {
    if (p < 2 || p >= (1u << 30) || !is_prime_u(p))
        throw std::invalid_argument("prime field characteristic must be a prime < 2^30");
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Cyclotomic: return "Q(z_" + std::to_string(param) + ")";
        case FieldKind::PrimeField: return "F_" + std::to_string(param);
    }
    return "?";
}

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; (unsigned long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const CycBasis& cyclotomic_basis(unsigned n) {
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    auto it = g_cyc_cache.find(n);
    if (it != g_cyc_cache.end()) return it->second;
    CycBasis b;
    b.n = n;
    b.modulus = cyclotomic_poly(n);
    b.degree = (unsigned)b.modulus.size() - 1;
    if (b.degree != euler_phi(n)) throw std::logic_error("cyclotomic degree mismatch");
    return g_cyc_cache.emplace(n, std::move(b)).first->second;
}

namespace {

// Reduce an arbitrary-length coefficient vector into the power basis of z_n.
std::vector<mpq_class> cyc_reduce(std::vector<mpq_class> v, unsigned n) {
    const CycBasis& b = cyclotomic_basis(n);
    for (size_t i = v.size(); i-- > b.degree;) {
        if (v[i] == 0) continue;
        mpq_class c = v[i];
        size_t shift = i - b.degree;
        for (size_t j = 0; j <= b.degree; ++j) v[shift + j] -= c * b.modulus[j];
    }
    v.resize(b.degree, mpq_class(0));
    return v;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s(f);
    if (f.kind == FieldKind::Cyclotomic) s.cyc_.assign(cyclotomic_basis(f.param).degree, mpq_class(0));
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return integer(f, 1); }

Scalar Scalar::integer(const FieldSpec& f, long v) {
    Scalar s = zero(f);
    switch (f.kind) {
        case FieldKind::Rationals: s.rat_ = v; break;
        case FieldKind::Cyclotomic:
            if (!s.cyc_.empty()) s.cyc_[0] = v;
            break;
        case FieldKind::PrimeField: s.res_ = mod_reduce(v, (long)f.param); break;
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& v) {
    Scalar s = zero(f);
    switch (f.kind) {
        case FieldKind::Rationals: s.rat_ = v; break;
        case FieldKind::Cyclotomic:
            if (!s.cyc_.empty()) s.cyc_[0] = v;
            break;
        case FieldKind::PrimeField: {
            long p = (long)f.param;
            mpz_class num = v.get_num() % p;
            mpz_class den = v.get_den() % p;
            long dn = mod_reduce(den.get_si(), p);
            if (dn == 0) throw std::invalid_argument("denominator not invertible in " + f.str());
            long nm = mod_reduce(num.get_si(), p);
            s.res_ = mod_mul(nm, mod_inv(dn, p), p);
            break;
        }
    }
    return s;
}

Scalar Scalar::zeta(const FieldSpec& f) {
    if (f.kind != FieldKind::Cyclotomic) throw std::invalid_argument("zeta: not a cyclotomic field");
    Scalar s = zero(f);
    std::vector<mpq_class> v(2, mpq_class(0));
    v[1] = 1;
    s.cyc_ = cyc_reduce(std::move(v), f.param);
    return s;
}

bool Scalar::is_zero() const {
    switch (f_.kind) {
        case FieldKind::Rationals: return rat_ == 0;
        case FieldKind::Cyclotomic:
            for (const auto& c : cyc_)
                if (c != 0) return false;
            return true;
        case FieldKind::PrimeField: return res_ == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (f_.kind) {
        case FieldKind::Rationals: return rat_ == 1;
        case FieldKind::Cyclotomic:
            if (cyc_.empty() || cyc_[0] != 1) return false;
            for (size_t i = 1; i < cyc_.size(); ++i)
                if (cyc_[i] != 0) return false;
            return true;
        case FieldKind::PrimeField: return res_ == 1 || f_.param == 1;
    }
    return false;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(f_ == o.f_)) throw std::invalid_argument("scalar field mismatch: " + f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    switch (f_.kind) {
        case FieldKind::Rationals: r.rat_ += o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyc_.size(); ++i) r.cyc_[i] += o.cyc_[i];
            break;
        case FieldKind::PrimeField: r.res_ = mod_reduce(res_ + o.res_, (long)f_.param); break;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    switch (f_.kind) {
        case FieldKind::Rationals: r.rat_ -= o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyc_.size(); ++i) r.cyc_[i] -= o.cyc_[i];
            break;
        case FieldKind::PrimeField: r.res_ = mod_reduce(res_ - o.res_, (long)f_.param); break;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r = zero(f_);
    switch (f_.kind) {
        case FieldKind::Rationals: r.rat_ = rat_ * o.rat_; break;
        case FieldKind::Cyclotomic: {
            if (cyc_.empty()) break;
            std::vector<mpq_class> prod(2 * cyc_.size() - 1, mpq_class(0));
            for (size_t i = 0; i < cyc_.size(); ++i) {
                if (cyc_[i] == 0) continue;
                for (size_t j = 0; j < o.cyc_.size(); ++j) prod[i + j] += cyc_[i] * o.cyc_[j];
            }
            r.cyc_ = cyc_reduce(std::move(prod), f_.param);
            break;
        }
        case FieldKind::PrimeField: r.res_ = mod_mul(res_, o.res_, (long)f_.param); break;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (f_.kind) {
        case FieldKind::Rationals: r.rat_ = -rat_; break;
        case FieldKind::Cyclotomic:
            for (auto& c : r.cyc_) c = -c;
            break;
        case FieldKind::PrimeField: r.res_ = mod_reduce(-res_, (long)f_.param); break;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    switch (f_.kind) {
        case FieldKind::Rationals: rat_ += o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyc_.size(); ++i) cyc_[i] += o.cyc_[i];
            break;
        case FieldKind::PrimeField: res_ = mod_reduce(res_ + o.res_, (long)f_.param); break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    switch (f_.kind) {
        case FieldKind::Rationals: rat_ -= o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyc_.size(); ++i) cyc_[i] -= o.cyc_[i];
            break;
        case FieldKind::PrimeField: res_ = mod_reduce(res_ - o.res_, (long)f_.param); break;
    }
    return *this;
}

namespace {

// accumulate sign * (a * b) into acc for one cyclotomic field, convolving into
// a reused buffer and folding powers >= degree through the modulus
void cyc_accmul(std::vector<mpq_class>& acc, const std::vector<mpq_class>& a,
                const std::vector<mpq_class>& b, unsigned n, int sign) {
    const CycBasis& bas = cyclotomic_basis(n);
    thread_local std::vector<mpq_class> prod;
    size_t need = a.size() + b.size() - 1;
    if (prod.size() < need) prod.resize(need);
    for (size_t i = 0; i < need; ++i) prod[i] = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    for (size_t i = need; i-- > bas.degree;) {
        if (prod[i] == 0) continue;
        mpq_class c = prod[i];
        size_t shift = i - bas.degree;
        for (size_t j = 0; j <= bas.degree; ++j) prod[shift + j] -= c * bas.modulus[j];
    }
    if (sign > 0)
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += prod[i];
    else
        for (size_t i = 0; i < acc.size(); ++i) acc[i] -= prod[i];
}

}  // namespace

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    check_same_field(a);
    a.check_same_field(b);
    switch (f_.kind) {
        case FieldKind::Rationals: rat_ += a.rat_ * b.rat_; break;
        case FieldKind::Cyclotomic: cyc_accmul(cyc_, a.cyc_, b.cyc_, f_.param, +1); break;
        case FieldKind::PrimeField:
            res_ = mod_reduce(res_ + mod_mul(a.res_, b.res_, (long)f_.param), (long)f_.param);
            break;
    }
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    check_same_field(a);
    a.check_same_field(b);
    switch (f_.kind) {
        case FieldKind::Rationals: rat_ -= a.rat_ * b.rat_; break;
        case FieldKind::Cyclotomic: cyc_accmul(cyc_, a.cyc_, b.cyc_, f_.param, -1); break;
        case FieldKind::PrimeField:
            res_ = mod_reduce(res_ - mod_mul(a.res_, b.res_, (long)f_.param), (long)f_.param);
            break;
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("scalar inverse of zero");
    Scalar r = zero(f_);
    switch (f_.kind) {
        case FieldKind::Rationals: r.rat_ = 1 / rat_; break;
        case FieldKind::Cyclotomic: {
            QPoly a(cyc_.begin(), cyc_.end());
            qp_trim(a);
            auto [g, s] = qp_gcd_ext(a, cyclotomic_basis(f_.param).modulus);
            if (g.size() != 1) throw std::logic_error("cyclotomic inverse: modulus not coprime");
            QPoly inv = s;
            for (auto& c : inv) c /= g[0];
            inv = qp_rem(std::move(inv), cyclotomic_basis(f_.param).modulus);
            inv.resize(cyclotomic_basis(f_.param).degree, mpq_class(0));
            r.cyc_.assign(inv.begin(), inv.end());
            break;
        }
        case FieldKind::PrimeField: r.res_ = mod_inv(res_, (long)f_.param); break;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(f_);
    Scalar base = *this;
    unsigned long n = (unsigned long)e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    switch (f_.kind) {
        case FieldKind::Rationals: return rat_ == o.rat_;
        case FieldKind::Cyclotomic: return cyc_ == o.cyc_;
        case FieldKind::PrimeField: return res_ == o.res_;
    }
    return false;
}

const mpq_class& Scalar::rat_value() const {
    if (f_.kind != FieldKind::Rationals) throw std::logic_error("rat_value: wrong field kind");
    return rat_;
}

const std::vector<mpq_class>& Scalar::cyc_coeffs() const {
    if (f_.kind != FieldKind::Cyclotomic) throw std::logic_error("cyc_coeffs: wrong field kind");
    return cyc_;
}

long Scalar::residue() const {
    if (f_.kind != FieldKind::PrimeField) throw std::logic_error("residue: wrong field kind");
    return res_;
}

std::string Scalar::str() const {
    switch (f_.kind) {
        case FieldKind::Rationals: return rat_.get_str();
        case FieldKind::PrimeField: return std::to_string(res_) + " mod " + std::to_string(f_.param);
        case FieldKind::Cyclotomic: break;
    }
    // cyclotomic: highest power first, unit coefficients elided
    std::string out;
    for (size_t idx = cyc_.size(); idx-- > 0;) {
        const mpq_class& c = cyc_[idx];
        if (c == 0) continue;
        mpq_class a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (idx == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += (idx == 1) ? "z" : "z^" + std::to_string(idx);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// One signed term of the cyclotomic grammar: [coef][*]z[^k] | coef
void parse_cyc_term(const std::string& term, std::vector<mpq_class>& acc, bool negate) {
    std::string t = term;
    size_t zpos = t.find('z');
    mpq_class coef;
    unsigned long power = 0;
    if (zpos == std::string::npos) {
        coef = parse_rational_text(t);
    } else {
        std::string head = t.substr(0, zpos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        coef = head.empty() ? mpq_class(1) : parse_rational_text(head);
        std::string tail = t.substr(zpos + 1);
        if (tail.empty()) {
            power = 1;
        } else {
            if (tail[0] != '^') throw std::invalid_argument("malformed cyclotomic term: '" + term + "'");
            std::string num = tail.substr(1);
            if (num.empty() || num.size() > 5 || num.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed power in term: '" + term + "'");
            power = std::stoul(num);
        }
    }
    if (negate) coef = -coef;
    if (acc.size() < power + 1) acc.resize(power + 1, mpq_class(0));
    acc[power] += coef;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace((unsigned char)c) || f.kind == FieldKind::PrimeField) t += c;
    switch (f.kind) {
        case FieldKind::Rationals: {
            Scalar s = zero(f);
            s.rat_ = parse_rational_text(t);
            return s;
        }
        case FieldKind::PrimeField: {
            std::string body = t;
            size_t mpos = body.find(" mod ");
            if (mpos != std::string::npos) {
                std::string ptext = body.substr(mpos + 5);
                std::string pclean;
                for (char c : ptext)
                    if (!isspace((unsigned char)c)) pclean += c;
                if (pclean != std::to_string(f.param))
                    throw std::invalid_argument("modulus mismatch in '" + text + "' for " + f.str());
                body = body.substr(0, mpos);
            }
            return from_mpq(f, parse_rational_text(body));
        }
        case FieldKind::Cyclotomic: {
            if (t.empty()) throw std::invalid_argument("empty scalar string");
            std::vector<mpq_class> acc;
            size_t start = 0;
            bool neg = false;
            if (t[0] == '-') {
                neg = true;
                start = 1;
            } else if (t[0] == '+') {
                start = 1;
            }
            size_t pos = start;
            while (pos <= t.size()) {
                if (pos == t.size() || ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != '^' && t[pos - 1] != '/' &&
                                        t[pos - 1] != '*' && pos > start)) {
                    parse_cyc_term(t.substr(start, pos - start), acc, neg);
                    if (pos == t.size()) break;
                    neg = (t[pos] == '-');
                    start = pos + 1;
                }
                ++pos;
            }
            Scalar s = zero(f);
            acc.resize(std::max(acc.size(), (size_t)cyclotomic_basis(f.param).degree), mpq_class(0));
            auto red = cyc_reduce(std::move(acc), f.param);
            s.cyc_.assign(red.begin(), red.end());
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::embed_into(const FieldSpec& target) const {
    if (f_ == target) return *this;
    if (f_.kind == FieldKind::Rationals && target.kind == FieldKind::Cyclotomic) return from_mpq(target, rat_);
    if (f_.kind == FieldKind::Cyclotomic && target.kind == FieldKind::Cyclotomic && target.param % f_.param == 0) {
        unsigned step = target.param / f_.param;
        std::vector<mpq_class> v;
        for (size_t k = 0; k < cyc_.size(); ++k) {
            if (cyc_[k] == 0) continue;
            size_t e = step * k;
            if (v.size() < e + 1) v.resize(e + 1, mpq_class(0));
            v[e] += cyc_[k];
        }
        v.resize(std::max(v.size(), (size_t)cyclotomic_basis(target.param).degree), mpq_class(0));
        Scalar s = zero(target);
        auto red = cyc_reduce(std::move(v), target.param);
        s.cyc_.assign(red.begin(), red.end());
        return s;
    }
    throw std::invalid_argument("unsupported field embedding: " + f_.str() + " -> " + target.str());
}

}  // namespace hopfx
