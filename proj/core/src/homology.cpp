#include "hypertrees/homology.hpp"

#include <algorithm>
#include <map>

namespace hypertrees {

namespace {

void extend_chains(const PosetSlice& slice, std::vector<int>& chain,
                   std::vector<std::vector<std::vector<int>>>& bases, int max_len) {
    if (!chain.empty()) {
        int len = static_cast<int>(chain.size());
        if (static_cast<int>(bases.size()) <= len) bases.resize(len + 1);
        bases[len].push_back(chain);
        if (len == max_len) return;
    }
    int last = chain.empty() ? -1 : chain.back();
    for (int next = 0; next < slice.size; ++next) {
        if (last >= 0 && !slice.less(last, next)) continue;
        chain.push_back(next);
        extend_chains(slice, chain, bases, max_len);
        chain.pop_back();
    }
}

}  // namespace

ChainComplex build_chain_complex(const PosetSlice& slice, bool sign_reversed) {
    ChainComplex cc;
    // bases[0] = degree -1 = the augmentation generator (one empty tuple)
    cc.bases.assign(1, {std::vector<int>{}});
    std::vector<int> chain;
    extend_chains(slice, chain, cc.bases, slice.size);

    cc.boundary.resize(cc.bases.size());
    for (std::size_t d = 1; d < cc.bases.size(); ++d) {
        // d_m : C_m -> C_{m-1} with m = d-1; facet i of (a_0 < ... < a_m)
        // drops a_i and carries sign (-1)^i.
        std::map<std::vector<int>, int> index;
        for (std::size_t r = 0; r < cc.bases[d - 1].size(); ++r)
            index[cc.bases[d - 1][r]] = static_cast<int>(r);
        SparseIntMatrix& mat = cc.boundary[d];
        mat.rows = static_cast<int>(cc.bases[d - 1].size());
        mat.cols = static_cast<int>(cc.bases[d].size());
        mat.columns.resize(mat.cols);
        int m = static_cast<int>(d) - 1;
        for (int c = 0; c < mat.cols; ++c) {
            const std::vector<int>& tuple = cc.bases[d][c];
            for (int i = 0; i <= m; ++i) {
                std::vector<int> facet;
                facet.reserve(m);
                for (int j = 0; j <= m; ++j)
                    if (j != i) facet.push_back(tuple[j]);
                int sign = ((sign_reversed ? m - i : i) % 2 == 0) ? 1 : -1;
                mat.columns[c].emplace_back(index.at(facet), sign);
            }
        }
    }
    return cc;
}

namespace {

PosetSlice proper_part_slice(const FixedSubposet& sub, std::vector<int>* ids_out) {
    PosetSlice slice;
    std::vector<int> ids;
    for (int i = 0; i < sub.size(); ++i)
        if (i != sub.min_index) ids.push_back(i);
    slice.size = static_cast<int>(ids.size());
    int words = (slice.size + 63) / 64;
    slice.up.assign(slice.size, std::vector<std::uint64_t>(words, 0));
    for (int a = 0; a < slice.size; ++a)
        for (int b = 0; b < slice.size; ++b)
            if (sub.leq(ids[a], ids[b]))
                slice.up[a][static_cast<std::size_t>(b) >> 6] |= 1ull << (b & 63);
    if (ids_out) *ids_out = std::move(ids);
    return slice;
}

}  // namespace

ChainComplex build_chain_complex(int n, PosetCache& cache, bool sign_reversed) {
    if (n < 2) throw DomainError("build_chain_complex: n >= 2 required");
    const FixedSubposet& sub = cache.fixed(n, 1, Partition(n, 1));
    PosetSlice slice = proper_part_slice(sub, nullptr);
    return build_chain_complex(slice, sign_reversed);
}

std::map<int, int> homology_dimensions(const ChainComplex& cc) {
    int count = static_cast<int>(cc.boundary.size());
    std::vector<int> ranks(count + 1, 0);  // ranks[d] = rank of boundary[d]
    for (int d = 1; d < count; ++d) ranks[d] = sparse_rank(cc.boundary[d]);
    std::map<int, int> dims;
    for (int m = -1; m <= cc.top_degree(); ++m) {
        int d = m + 1;
        int rank_out = d >= 1 && d < count ? ranks[d] : 0;
        int rank_in = d + 1 < count ? ranks[d + 1] : 0;
        int h = cc.dim(m) - rank_out - rank_in;
        if (h != 0) dims[m] = h;
    }
    return dims;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
    for (std::size_t d = 2; d < cc.boundary.size(); ++d) {
        const SparseIntMatrix& high = cc.boundary[d];
        const SparseIntMatrix& low = cc.boundary[d - 1];
        for (int c = 0; c < high.cols; ++c) {
            std::map<int, long long> acc;
            for (const auto& [mid, s1] : high.columns[c])
                for (const auto& [row, s2] : low.columns[mid]) acc[row] += 1ll * s1 * s2;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

std::int64_t lefschetz_character(int n, const Partition& lambda, PosetCache& cache) {
    // Alternating sum of sigma-fixed strict chains over all degrees,
    // including the augmentation in degree -1; the global sign makes the
    // identity class come out to +(n-1)^(n-2).
    Perm sigma = representative_of(lambda);
    std::int64_t sum = 0;
    int max_m = std::max(n - 3, -1);
    for (int m = -1; m <= max_m; ++m) {
        std::int64_t fixed = count_strict_chains(n, m, sigma, cache);
        bool even = ((m % 2) + 2) % 2 == 0;
        sum = checked_add(sum, even ? fixed : -fixed);
    }
    bool flip = (((n - 3) % 2) + 2) % 2 == 1;
    return flip ? -sum : sum;
}

Rational homology_trace_from_matrices(int n, int degree, const Partition& lambda,
                                      PosetCache& cache) {
    const FixedSubposet& sub = cache.fixed(n, 1, Partition(n, 1));  // full poset
    std::vector<int> ids;
    PosetSlice slice = proper_part_slice(sub, &ids);
    ChainComplex cc = build_chain_complex(slice, false);

    int d = degree + 1;
    if (d < 0 || d >= static_cast<int>(cc.bases.size())) return 0;
    int dim = cc.dim(degree);
    if (dim == 0) return 0;

    // dense matrices of d_degree and d_{degree+1}
    auto dense = [&](int which) -> RationalMatrix {
        if (which < 1 || which >= static_cast<int>(cc.boundary.size()))
            return RationalMatrix{};
        const SparseIntMatrix& m = cc.boundary[which];
        RationalMatrix out(m.rows, std::vector<Rational>(m.cols, Rational(0)));
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [r, v] : m.columns[c]) out[r][c] = v;
        return out;
    };

    RationalMatrix d_out = dense(d);  // C_degree -> C_{degree-1}
    std::vector<std::vector<Rational>> kernel =
        d_out.empty() ? std::vector<std::vector<Rational>>() : kernel_basis(d_out);
    if (d_out.empty()) {
        kernel.resize(dim);
        for (int i = 0; i < dim; ++i) {
            kernel[i].assign(dim, Rational(0));
            kernel[i][i] = 1;
        }
    }

    std::vector<std::vector<Rational>> image;
    if (d + 1 < static_cast<int>(cc.boundary.size())) {
        const SparseIntMatrix& m = cc.boundary[d + 1];
        for (int c = 0; c < m.cols; ++c) {
            std::vector<Rational> col(dim, Rational(0));
            for (const auto& [r, v] : m.columns[c]) col[r] = v;
            image.push_back(std::move(col));
        }
    }

    // span basis: image columns first (reduced), then kernel vectors that
    // extend it; the latter represent the homology classes.
    std::vector<std::vector<Rational>> span;
    RationalMatrix reducer;
    auto try_add = [&](const std::vector<Rational>& v) -> bool {
        RationalMatrix test = reducer;
        test.push_back(v);
        RationalMatrix work = test;
        if (static_cast<int>(rref(work).size()) > static_cast<int>(reducer.size())) {
            reducer = std::move(test);
            span.push_back(v);
            return true;
        }
        return false;
    };
    for (const auto& col : image) try_add(col);
    std::vector<int> rep_positions;
    for (const auto& vec : kernel) {
        if (try_add(vec)) rep_positions.push_back(static_cast<int>(span.size()) - 1);
    }

    // permutation action on basis chains (no signs: the order is preserved)
    Perm sigma = representative_of(lambda);
    std::vector<int> elem_image(slice.size);
    {
        std::vector<Hypertree> proper;
        proper.reserve(slice.size);
        for (int id : ids) proper.push_back(sub.elems[id]);
        std::map<Hypertree, int> where;
        for (int i = 0; i < slice.size; ++i) where[proper[i]] = i;
        for (int i = 0; i < slice.size; ++i)
            elem_image[i] = where.at(apply_permutation(proper[i], sigma));
    }
    std::map<std::vector<int>, int> chain_index;
    for (std::size_t c = 0; c < cc.bases[d].size(); ++c)
        chain_index[cc.bases[d][c]] = static_cast<int>(c);
    std::vector<int> slice_rank(slice.size);
    for (int i = 0; i < slice.size; ++i) slice_rank[i] = sub.elems[ids[i]].rank();
    auto permute_chain = [&](const std::vector<int>& chain) {
        // basis chains are ordered by the poset; ranks are strict along a
        // chain, so sorting by rank restores that order after the action
        std::vector<int> out;
        out.reserve(chain.size());
        for (int e : chain) out.push_back(elem_image[e]);
        std::sort(out.begin(), out.end(),
                  [&](int a, int b) { return slice_rank[a] < slice_rank[b]; });
        return out;
    };

    Rational trace = 0;
    for (std::size_t idx = 0; idx < rep_positions.size(); ++idx) {
        const std::vector<Rational>& rep = span[rep_positions[idx]];
        // apply sigma to the representative
        std::vector<Rational> moved(dim, Rational(0));
        for (int c = 0; c < dim; ++c) {
            if (rep[c] == 0) continue;
            moved[chain_index.at(permute_chain(cc.bases[d][c]))] += rep[c];
        }
        std::vector<Rational> coords = solve_in_span(span, moved);
        trace += coords[rep_positions[idx]];
    }
    return trace;
}

std::map<int, int> whitney_dimensions(int n, PosetCache& cache) {
    const HypertreePoset& poset = cache.poset(n, 1);
    std::map<int, int> result;
    for (int x = 0; x < poset.size(); ++x) {
        int r = poset.rank(x);
        if (r < 1) continue;
        // order complex of the open interval (0^, x)
        std::vector<int> ids;
        for (int y = 0; y < poset.size(); ++y)
            if (y != poset.minimum() && y != x && poset.leq(y, x)) ids.push_back(y);
        PosetSlice slice;
        slice.size = static_cast<int>(ids.size());
        int words = (slice.size + 63) / 64;
        slice.up.assign(slice.size, std::vector<std::uint64_t>(words, 0));
        for (int a = 0; a < slice.size; ++a)
            for (int b = 0; b < slice.size; ++b)
                if (poset.leq(ids[a], ids[b]))
                    slice.up[a][static_cast<std::size_t>(b) >> 6] |= 1ull << (b & 63);
        ChainComplex cc = build_chain_complex(slice, false);
        auto dims = homology_dimensions(cc);
        auto it = dims.find(r - 2);
        if (it != dims.end()) result[r] += it->second;
    }
    return result;
}

}  // namespace hypertrees
