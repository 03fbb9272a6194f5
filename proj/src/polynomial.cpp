#include "hopfx/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfx {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::one(const FieldSpec& f) {
    Polynomial p(f);
    p.c_.push_back(Scalar::one(f));
    return p;
}

Polynomial Polynomial::x(const FieldSpec& f) {
    Polynomial p(f);
    p.c_ = {Scalar::zero(f), Scalar::one(f)};
    return p;
}

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p(c.field());
    p.c_.push_back(c);
    p.trim();
    return p;
}

Polynomial Polynomial::from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs) {
    Polynomial p(f);
    for (const auto& s : coeffs)
        if (!(s.field() == f)) throw std::invalid_argument("coefficient field mismatch");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::x_pow_minus_one(const FieldSpec& f, unsigned long n) {
    Polynomial p(f);
    p.c_.assign(n + 1, Scalar::zero(f));
    p.c_[0] = -Scalar::one(f);
    p.c_[n] = Scalar::one(f);
    p.trim();  // n = 0 collapses to zero
    return p;
}

bool Polynomial::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Polynomial::coeff(size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(f_); }

Scalar Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!(f_ == o.f_)) throw std::invalid_argument("polynomial field mismatch");
    Polynomial r(f_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(f_);
    r.c_.reserve(c_.size());
    for (const auto& s : c_) r.c_.push_back(-s);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!(f_ == o.f_)) throw std::invalid_argument("polynomial field mismatch");
    if (c_.empty() || o.c_.empty()) return zero(f_);
    Polynomial r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j].addmul(c_[i], o.c_[j]);
        }
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Scalar& s) const {
    Polynomial r(f_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (!(f_ == d.f_)) throw std::invalid_argument("polynomial field mismatch");
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial q(f_), r = *this;
    if (r.c_.size() < d.c_.size()) return {q, r};
    q.c_.assign(r.c_.size() - d.c_.size() + 1, Scalar::zero(f_));
    Scalar lead_inv = d.c_.back().inverse();
    while (r.c_.size() >= d.c_.size() && !r.c_.empty()) {
        Scalar c = r.c_.back() * lead_inv;
        size_t shift = r.c_.size() - d.c_.size();
        q.c_[shift] = q.c_[shift] + c;
        for (size_t j = 0; j < d.c_.size(); ++j) r.c_[shift + j] = r.c_[shift + j] - c * d.c_[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * c_.back().inverse();
}

Polynomial Polynomial::derivative() const {
    Polynomial r(f_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Scalar::integer(f_, (long)i));
    r.trim();
    return r;
}

Scalar Polynomial::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(f_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

bool Polynomial::divides(const Polynomial& g) const {
    if (is_zero()) return g.is_zero();
    return g.divmod(*this).second.is_zero();
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    auto coeff_text = [&](const Scalar& s) -> std::string {
        if (f_.kind == FieldKind::PrimeField) return std::to_string(s.residue());
        return s.str();
    };
    std::string out;
    for (size_t idx = c_.size(); idx-- > 0;) {
        const Scalar& s = c_[idx];
        if (s.is_zero()) continue;
        std::string cs = coeff_text(s);
        bool negative = !cs.empty() && cs[0] == '-';
        bool composite = cs.find(' ') != std::string::npos;
        std::string mag = (negative && !composite) ? cs.substr(1) : cs;
        std::string joiner;
        if (out.empty()) {
            if (negative && !composite) joiner = "-";
        } else {
            joiner = (negative && !composite) ? " - " : " + ";
        }
        out += joiner;
        if (idx == 0) {
            out += composite ? "(" + mag + ")" : mag;
        } else {
            if (composite)
                out += "(" + mag + ")*";
            else if (mag != "1")
                out += mag + "*";
            out += (idx == 1) ? "x" : "x^" + std::to_string(idx);
        }
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial poly_pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& m) {
    if (e < 0) throw std::invalid_argument("poly_pow_mod: negative exponent");
    if (m.degree() <= 0) return Polynomial::zero(base.field());
    Polynomial acc = Polynomial::one(base.field());
    Polynomial b = base % m;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % m;
    }
    return acc;
}

namespace {

// f must have all exponents divisible by p; over F_p the coefficientwise
// p-th root is the identity, so this just decimates indices.
Polynomial pth_root(const Polynomial& f, unsigned p) {
    std::vector<Scalar> out;
    const auto& c = f.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i % p == 0) {
            out.push_back(c[i]);
        } else if (!c[i].is_zero()) {
            throw std::logic_error("pth_root: exponent not divisible by p");
        }
    }
    return Polynomial::from_coeffs(f.field(), std::move(out));
}

}  // namespace

Polynomial squarefree_part(const Polynomial& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    Polynomial f = f_in.monic();
    if (f.degree() == 0) return f;
    unsigned p = f.field().characteristic();
    Polynomial df = f.derivative();
    if (p == 0) return (f / poly_gcd(f, df)).monic();
    if (df.is_zero()) return squarefree_part(pth_root(f, p));
    Polynomial g = poly_gcd(f, df);
    Polynomial w = (f / g).monic();  // distinct factors with multiplicity prime to p
    // strip those factors out of g; what is left is a perfect p-th power
    Polynomial y = g;
    while (true) {
        Polynomial h = poly_gcd(y, w);
        if (h.degree() == 0) break;
        y = (y / h).monic();
    }
    if (y.degree() == 0) return w;
    return (w * squarefree_part(pth_root(y, p))).monic();
}

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> low, high;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

constexpr long kScreenPrime = (1L << 61) - 1;

long screen_mod_mul(long a, long b) { return (long)((__int128)a * b % kScreenPrime); }

long screen_mod_inv(long a) {
    long t = 0, nt = 1, r = kScreenPrime, nr = a % kScreenPrime;
    if (nr < 0) nr += kScreenPrime;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("screen prime divides denominator");
    return t < 0 ? t + kScreenPrime : t;
}

// Image of a rational in F_kScreenPrime; throws domain_error if the
// denominator dies, in which case the caller skips the pre-screen.
long screen_of_mpq(const mpq_class& v) {
    mpz_class num = v.get_num() % kScreenPrime;
    mpz_class den = v.get_den() % kScreenPrime;
    long n = num.get_si();
    if (n < 0) n += kScreenPrime;
    long d = den.get_si();
    if (d == 0) throw std::domain_error("screen prime divides denominator");
    return screen_mod_mul(n, screen_mod_inv(d));
}

bool is_one_poly(const Polynomial& r) { return r.degree() == 0 && r.coeff(0).is_one(); }

}  // namespace

OrderSearch order_mod_poly(const Polynomial& m, unsigned long cap,
                           std::optional<unsigned long> divisor_hints) {
    if (!m.is_monic()) throw std::invalid_argument("order_mod_poly: modulus must be monic");
    if (m.degree() == 0) return {true, 1};
    if (m.coeff(0).is_zero()) throw std::invalid_argument("order_mod_poly: x is not invertible (m(0) = 0)");
    const FieldSpec& f = m.field();
    Polynomial x = Polynomial::x(f);

    if (divisor_hints) {
        for (unsigned long d : divisors_of(*divisor_hints)) {
            if (is_one_poly(poly_pow_mod(x, mpz_class((unsigned long)d), m))) return {true, d};
        }
        // the hint missed; fall through to the incremental sweep
    }

    // Optional modular pre-screen over Q: run the sweep in a word-size prime
    // field and confirm candidate hits exactly.
    if (f.kind == FieldKind::Rationals && m.degree() >= 1) {
        bool screen_ok = true;
        std::vector<long> ms;
        ms.reserve(m.degree() + 1);
        try {
            for (int i = 0; i <= m.degree(); ++i) ms.push_back(screen_of_mpq(m.coeff(i).rat_value()));
        } catch (const std::domain_error&) {
            screen_ok = false;
        }
        if (screen_ok) {
            size_t deg = (size_t)m.degree();
            std::vector<long> r(deg, 0);
            if (deg == 1) {
                // x = -m0 in the quotient
                r[0] = (kScreenPrime - ms[0]) % kScreenPrime;
            } else {
                r[1] = 1;
            }
            for (unsigned long n = 1; n <= cap; ++n) {
                if (n > 1) {
                    // r *= x, reduce by the monic modulus
                    long top = r[deg - 1];
                    for (size_t i = deg - 1; i > 0; --i) r[i] = r[i - 1];
                    r[0] = 0;
                    if (top != 0)
                        for (size_t i = 0; i < deg; ++i)
                            r[i] = (r[i] - screen_mod_mul(top, ms[i]) % kScreenPrime + kScreenPrime) % kScreenPrime;
                }
                bool cand = r[0] == 1;
                for (size_t i = 1; cand && i < deg; ++i) cand = r[i] == 0;
                if (cand && is_one_poly(poly_pow_mod(x, mpz_class(n), m))) return {true, n};
            }
            return {false, cap};
        }
    }

    // exact incremental sweep
    Polynomial r = x % m;
    for (unsigned long n = 1; n <= cap; ++n) {
        if (n > 1) r = (r * x) % m;
        if (is_one_poly(r)) return {true, n};
    }
    return {false, cap};
}

namespace {

// ---- deterministic factorization over F_p ----

// Enumerate monic nonconstant polynomials over F_p in a fixed order:
// by degree, then lexicographically in the low coefficients.
Polynomial nth_monic_poly(const FieldSpec& f, unsigned long long index) {
    unsigned long long p = f.param;
    unsigned degree = 1;
    unsigned long long count = p;  // monic polys of this degree
    while (index >= count) {
        index -= count;
        ++degree;
        count *= p;
    }
    std::vector<Scalar> c(degree + 1, Scalar::zero(f));
    c[degree] = Scalar::one(f);
    for (unsigned i = 0; i < degree && index > 0; ++i) {
        c[i] = Scalar::integer(f, (long)(index % p));
        index /= p;
    }
    return Polynomial::from_coeffs(f, std::move(c));
}

void edf_split(const Polynomial& g, unsigned d, std::vector<Polynomial>& out) {
    if ((unsigned)g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldSpec& f = g.field();
    unsigned long p = f.param;
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    for (unsigned long long idx = 0;; ++idx) {
        Polynomial a = nth_monic_poly(f, idx);
        Polynomial shared = poly_gcd(a % g, g);
        if (shared.degree() > 0 && shared.degree() < g.degree()) {
            edf_split(shared, d, out);
            edf_split((g / shared).monic(), d, out);
            return;
        }
        Polynomial t;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            Polynomial acc = a % g;
            Polynomial term = acc;
            for (unsigned i = 1; i < d; ++i) {
                term = (term * term) % g;
                acc = acc + term;
            }
            t = acc;
        } else {
            mpz_class e = (pd - 1) / 2;
            t = poly_pow_mod(a, e, g) - Polynomial::one(f);
        }
        Polynomial s = poly_gcd(t, g);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            edf_split(s, d, out);
            edf_split((g / s).monic(), d, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> factor_prime_field(const Polynomial& f_in) {
    const FieldSpec& f = f_in.field();
    if (f.kind != FieldKind::PrimeField) throw std::invalid_argument("factor_prime_field: wrong field kind");
    if (f_in.is_zero()) throw std::invalid_argument("factor_prime_field: zero polynomial");
    Polynomial target = f_in.monic();
    std::vector<Polynomial> irreducibles;
    Polynomial s = squarefree_part(target);
    // distinct-degree stage on the squarefree part
    Polynomial rest = s;
    Polynomial h = Polynomial::x(f) % rest;
    unsigned d = 0;
    while (rest.degree() > 0 && 2 * (d + 1) <= (unsigned)rest.degree()) {
        ++d;
        h = poly_pow_mod(h, mpz_class((unsigned long)f.param), rest);
        Polynomial g = poly_gcd(h - Polynomial::x(f), rest);
        if (g.degree() > 0) {
            edf_split(g, d, irreducibles);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0) irreducibles.push_back(rest);

    std::sort(irreducibles.begin(), irreducibles.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            long ra = a.coeff((size_t)i).residue(), rb = b.coeff((size_t)i).residue();
            if (ra != rb) return ra < rb;
        }
        return false;
    });

    std::vector<std::pair<Polynomial, unsigned>> result;
    Polynomial check = Polynomial::one(f);
    for (const auto& g : irreducibles) {
        unsigned mult = 0;
        Polynomial t = target;
        while (true) {
            auto [q, r] = t.divmod(g);
            if (!r.is_zero()) break;
            ++mult;
            t = q;
        }
        if (mult == 0) throw std::logic_error("factor_prime_field: lost a factor");
        result.push_back({g, mult});
        for (unsigned i = 0; i < mult; ++i) check = check * g;
    }
    if (check != target) throw std::logic_error("factor_prime_field: product check failed");
    return result;
}

}  // namespace hopfx
