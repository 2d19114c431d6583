#pragma once

#include <map>
#include <vector>

#include "hypertrees/chains.hpp"
#include "hypertrees/cycle_index.hpp"

namespace hypertrees {

/// Per conjugacy class and t-exponent, the polynomial in the chain length k
/// interpolating the fixed large-chain counts. Coefficients ascending in
/// degree; exact rationals.
struct KPolynomial {
    int n = 1;
    ChainVariant variant = ChainVariant::Plain;
    bool weighted = false;
    std::map<std::pair<Partition, int>, std::vector<Rational>> polys;
    int degree_bound = 0;  // verified upper bound on every polynomial degree
};

/// Newton interpolation through (x_i, y_i); returns ascending coefficients.
std::vector<Rational> interpolate_polynomial(const std::vector<std::pair<int, Rational>>& pts);
Rational eval_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

/// Samples k = 1..n+1 (k = 0 too for the plain variant), interpolates, then
/// re-checks the fit at k = n+2. A mismatch there or a degree above n-1
/// (n-2 for plain) is a hard error: polynomiality is a theorem, so failure
/// means a counting bug.
KPolynomial character_polynomial(int n, ChainVariant variant, bool weighted, PosetCache& cache);

/// Exact evaluation at k0, assembled as the degree-n slice of a cycle index
/// at the given truncation.
CycleIndex evaluate_at(const KPolynomial& kp, int k0, int truncation);

/// Degree-n slice sum_lambda count(spec, sigma_lambda) p_lambda / z_lambda
/// for a directly countable spec.
CycleIndex cycle_index_from_counts(const ChainSpec& spec, int truncation, PosetCache& cache);

/// Sum of counted slices for sizes 1..truncation at fixed k.
CycleIndex enumerated_series(ChainVariant variant, int k, bool weighted, int truncation,
                             PosetCache& cache);

/// Sum of interpolated slices evaluated at k0 for sizes 1..truncation.
CycleIndex interpolated_series(ChainVariant variant, int k0, bool weighted, int truncation,
                               PosetCache& cache);

}  // namespace hypertrees
