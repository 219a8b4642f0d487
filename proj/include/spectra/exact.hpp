#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

// Exact arithmetic used throughout: arbitrary-precision integers for walk
// counts and matrix powers, rationals for certificate and bound algebra.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx here has no long long constructors; LP64 makes the casts lossless.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_perfect_square(const Int& z);
Int isqrt_exact(const Int& z);

// sqrt(r) when r is the square of a rational, otherwise nullopt.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

// A real quadratic value a + b*sqrt(rad) with rational a, b and a
// non-negative integer radicand. rad == 0 and b == 0 for plain rationals;
// normalize() keeps rad square-free so equality is structural.
struct QuadValue {
    Rat a;
    Rat b;
    Int rad;

    QuadValue() : a(0), b(0), rad(0) {}
    QuadValue(long long v) : a(rat(v)), b(0), rad(0) {}  // NOLINT(google-explicit-constructor)
    QuadValue(Rat v) : a(std::move(v)), b(0), rad(0) {}  // NOLINT(google-explicit-constructor)
    QuadValue(Rat a_, Rat b_, Int rad_);

    bool is_rational() const { return b == 0; }
    int sign() const;
    double to_double() const;

    QuadValue operator-() const;
    QuadValue operator+(const QuadValue& o) const;
    QuadValue operator-(const QuadValue& o) const;
    QuadValue operator*(const QuadValue& o) const;

    bool operator==(const QuadValue& o) const = default;

    std::string str() const;

  private:
    void normalize();
};

inline QuadValue quad_sqrt(const Int& rad) { return QuadValue(rat(0), rat(1), rad); }

// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static IntMatrix identity(int n);

    int size() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Int trace() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix& operator*=(const Int& scalar);
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix pow(unsigned long long e) const;

  private:
    int n_ = 0;
    std::vector<Int> a_;
};

}  // namespace spectra
