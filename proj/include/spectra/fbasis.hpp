#pragma once

#include <vector>

#include "spectra/exact.hpp"
#include "spectra/multigraph.hpp"

namespace spectra {

// The degree-parametrized polynomial family
//   F_0 = 1,  F_1 = x,  F_2 = x^2 - k,
//   F_i = x F_{i-1} - (k-1) F_{i-2}   for i >= 3.
// F_i is monic of degree i, and F_i(k) = k (k-1)^(i-1) for i >= 1. Evaluated
// at the adjacency matrix of a connected k-regular multigraph, its entries
// count non-backtracking walks.
struct FPolynomial {
    long long k = 0;
    int i = 0;
    std::vector<Rat> monomial_coeffs;  // c_0..c_i, exact
};

// A polynomial expressed as sum f_i * F_i^{(k)}; the F_i have strictly
// increasing degree, so the coefficients are unique.
struct FBasisExpansion {
    long long k = 0;
    std::vector<Rat> coeffs;  // f_0..f_s
};

FPolynomial f_poly(long long k, int i);

// F_i^{(k)}(x) by the three-term recurrence, for any numeric kind supporting
// ring arithmetic and construction from long long (Rat, double, QuadValue).
template <class T>
T f_eval_scalar(long long k, int i, const T& x) {
    if (i == 0) return T(1);
    if (i == 1) return x;
    T prev = x;                      // F_1
    T cur = x * x - T(k);            // F_2
    for (int j = 3; j <= i; ++j) {
        T next = x * cur - T(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// F_i^{(k)}(A) by the matrix recurrence; entries are non-negative and count
// the non-backtracking walks of length i. Throws NotRegular / NotConnected.
IntMatrix f_eval_matrix(const Multigraph& g, int i);

// Brute-force walk enumeration over explicit edge instances: parallel edges
// and loops are distinct instances, and a walk may not repeat the same
// instance in immediate succession. Guarded by the cap n*k^i <= 10^7
// enumerated extensions (SizeCapExceeded).
IntMatrix nb_walk_oracle(const Multigraph& g, int i);

// True iff f_eval_matrix agrees with nb_walk_oracle exactly for every
// 1 <= i <= i_max.
bool verify_nb_theorem(const Multigraph& g, int i_max);

// Change of basis from monomial coefficients c_0..c_d to the F-basis, by
// eliminating the leading term with the (monic) F_deg from the top down.
FBasisExpansion expand_in_f_basis(const std::vector<Rat>& monomial_coeffs, long long k);

// Back to monomial coefficients (sum of f_i * F_i).
std::vector<Rat> expansion_to_monomial(const FBasisExpansion& f);

template <class T>
T eval_expansion(const FBasisExpansion& f, const T& x) {
    T sum(0);
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        sum = sum + T(f.coeffs[i]) * f_eval_scalar(f.k, static_cast<int>(i), x);
    }
    return sum;
}

// k_i = k(k-1)^(i-1) for i >= 1 and k_0 = 1: the number of non-backtracking
// walks of length i leaving any vertex.
Int nb_walk_budget(long long k, int i);

}  // namespace spectra
