#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypertrees/chains.hpp"
#include "hypertrees/linalg.hpp"
#include "hypertrees/partitions.hpp"
#include "hypertrees/poset.hpp"

namespace hypertrees {

/// Augmented chain complex of the order complex of a finite poset's proper
/// part. Degree m holds strict (m+1)-chains; degree -1 holds the
/// augmentation generator e. Boundary of a chain is the alternating sum of
/// its facets, facet i with sign (-1)^i (sign_reversed flips to (-1)^(m-i)).
struct ChainComplex {
    // bases[m+1] = basis of degree m; each basis element is an increasing
    // tuple of element ids. bases[0] holds the single empty tuple (e).
    std::vector<std::vector<std::vector<int>>> bases;
    // boundary[m+1] = matrix of d_m : C_m -> C_{m-1}, sparse columns.
    std::vector<SparseIntMatrix> boundary;

    int top_degree() const { return static_cast<int>(bases.size()) - 2; }
    int dim(int m) const {
        int i = m + 1;
        if (i < 0 || i >= static_cast<int>(bases.size())) return 0;
        return static_cast<int>(bases[i].size());
    }
};

/// Order data for an induced subposet: the ids 0..size-1 index elements, and
/// less(i, j) is the strict order.
struct PosetSlice {
    int size = 0;
    std::vector<std::vector<std::uint64_t>> up;  // reflexive bitset rows
    bool less(int i, int j) const {
        if (i == j) return false;
        return (up[i][static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
    }
};

ChainComplex build_chain_complex(const PosetSlice& slice, bool sign_reversed = false);

/// Complex of the proper part of HT_n (minimum removed; the formal top is
/// never an element). 2 <= n <= max_n.
ChainComplex build_chain_complex(int n, PosetCache& cache, bool sign_reversed = false);

/// degree -> dimension of reduced rational homology (zero dims omitted).
std::map<int, int> homology_dimensions(const ChainComplex& cc);

/// True iff d_{m-1} . d_m = 0 for all m (used by tests).
bool boundary_squares_to_zero(const ChainComplex& cc);

/// Character of the symmetric group on the unique nonzero reduced homology
/// group of HT_n^, computed as the alternating sum of fixed strict chains
/// with the global sign calibrated so that lambda = 1^n gives +(n-1)^(n-2).
std::int64_t lefschetz_character(int n, const Partition& lambda, PosetCache& cache);

/// Trace of the class representative on the homology space itself, computed
/// from kernel/image bases by exact rational elimination (independent of the
/// trace-by-fixed-chains route). Degree selects which H_m; use n-3.
Rational homology_trace_from_matrices(int n, int degree, const Partition& lambda,
                                      PosetCache& cache);

/// Whitney homology dimensions of HT_n^: for each rank r >= 1 the sum over
/// elements x of rank r of dim H~_{r-2} of the order complex of (0^, x).
std::map<int, int> whitney_dimensions(int n, PosetCache& cache);

}  // namespace hypertrees
