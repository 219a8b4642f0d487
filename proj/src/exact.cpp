#include "spectra/exact.hpp"

#include <cmath>
#include <utility>

namespace spectra {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
    mpq_t tmp;
    mpq_init(tmp);
    if (s.empty() || mpq_set_str(tmp, s.c_str(), 10) != 0) {
        mpq_clear(tmp);
        throw ParseError("not a rational: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        throw ParseError("zero denominator: '" + s + "'");
    }
    Rat r(tmp);
    mpq_clear(tmp);
    r.canonicalize();
    return r;
}

bool is_perfect_square(const Int& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

Int isqrt_exact(const Int& z) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    Rat root(isqrt_exact(num), isqrt_exact(den));
    root.canonicalize();
    return root;
}

QuadValue::QuadValue(Rat a_, Rat b_, Int rad_)
    : a(std::move(a_)), b(std::move(b_)), rad(std::move(rad_)) {
    if (rad < 0) throw Error("negative radicand");
    normalize();
}

void QuadValue::normalize() {
    if (b == 0 || rad == 0) {
        b = 0;
        rad = 0;
        return;
    }
    // Pull square factors out of the radicand so equal values compare equal.
    Int square_part = 1;
    Int rest = rad;
    for (Int d = 2; d * d <= rest; ++d) {
        Int dd = d * d;
        while (rest % dd == 0) {
            rest /= dd;
            square_part *= d;
        }
    }
    if (square_part != 1) {
        b *= Rat(square_part);
        rad = rest;
    }
    if (rad == 1) {
        a += b;
        b = 0;
        rad = 0;
    }
}

int QuadValue::sign() const {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * rad.
    Rat diff = a * a - b * b * Rat(rad);
    const int sd = sgn(diff);
    return sd == 0 ? 0 : sa * sd;
}

double QuadValue::to_double() const {
    return a.get_d() + b.get_d() * std::sqrt(rad.get_d());
}

QuadValue QuadValue::operator-() const {
    QuadValue r;
    r.a = -a;
    r.b = -b;
    r.rad = rad;
    return r;
}

QuadValue QuadValue::operator+(const QuadValue& o) const {
    if (!is_rational() && !o.is_rational() && rad != o.rad) {
        throw Error("mixed radicands in quadratic arithmetic");
    }
    QuadValue r;
    r.a = a + o.a;
    r.b = b + o.b;
    r.rad = is_rational() ? o.rad : rad;
    if (r.b == 0) r.rad = 0;
    return r;
}

QuadValue QuadValue::operator-(const QuadValue& o) const { return *this + (-o); }

QuadValue QuadValue::operator*(const QuadValue& o) const {
    if (!is_rational() && !o.is_rational() && rad != o.rad) {
        throw Error("mixed radicands in quadratic arithmetic");
    }
    const Int& r0 = is_rational() ? o.rad : rad;
    QuadValue r;
    r.a = a * o.a + b * o.b * Rat(r0);
    r.b = a * o.b + b * o.a;
    r.rad = r.b == 0 ? Int(0) : r0;
    return r;
}

std::string QuadValue::str() const {
    if (is_rational()) return rat_str(a);
    std::string s = rat_str(a);
    s += (sgn(b) < 0) ? " - " : " + ";
    Rat babs = abs(b);
    if (babs != 1) {
        s += rat_str(babs);
        s += "*";
    }
    s += "sqrt(" + rad.get_str() + ")";
    return s;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    IntMatrix r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    IntMatrix r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(n_);
    Int acc;
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) {
                // r(i,j) += a(i,k) * o(k,j), accumulated in place.
                mpz_addmul(r.at(i, j).get_mpz_t(), aik.get_mpz_t(), o.at(k, j).get_mpz_t());
            }
        }
    }
    return r;
}

IntMatrix& IntMatrix::operator*=(const Int& scalar) {
    for (auto& v : a_) v *= scalar;
    return *this;
}

IntMatrix IntMatrix::pow(unsigned long long e) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        base = base * base;
        e >>= 1ULL;
    }
    return result;
}

}  // namespace spectra
