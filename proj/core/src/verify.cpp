#include "hypertrees/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "hypertrees/homology.hpp"
#include "hypertrees/kpolynomial.hpp"
#include "hypertrees/parallel.hpp"

namespace hypertrees {

std::string report_json_line(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.name;
    j["scope"] = r.scope;
    j["max_degree"] = r.max_degree;
    j["status"] = r.pass ? "pass" : "fail";
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (!r.pass) j["first_diff"] = r.first_diff;
    return j.dump();
}

namespace {

// Memoizes the enumerated/interpolated chain series shared across identities.
struct Ctx {
    PosetCache& cache;
    VerifyOptions opt;
    std::mutex mu;
    std::map<std::tuple<int, int, int, int>, CycleIndex> enum_memo;
    std::map<std::tuple<int, int, int, int>, CycleIndex> interp_memo;

    Ctx(PosetCache& c, const VerifyOptions& o) : cache(c), opt(o) {}

    CycleIndex enumerated(ChainVariant v, int k, bool weighted, int trunc) {
        std::tuple<int, int, int, int> key{static_cast<int>(v), k, weighted, trunc};
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = enum_memo.find(key);
            if (it != enum_memo.end()) return it->second;
        }
        CycleIndex s = enumerated_series(v, k, weighted, trunc, cache);
        std::lock_guard<std::mutex> lock(mu);
        return enum_memo.emplace(key, std::move(s)).first->second;
    }

    CycleIndex interpolated(ChainVariant v, int k0, bool weighted, int trunc) {
        std::tuple<int, int, int, int> key{static_cast<int>(v), k0, weighted, trunc};
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = interp_memo.find(key);
            if (it != interp_memo.end()) return it->second;
        }
        CycleIndex s = interpolated_series(v, k0, weighted, trunc, cache);
        std::lock_guard<std::mutex> lock(mu);
        return interp_memo.emplace(key, std::move(s)).first->second;
    }
};

VerificationReport compare(const std::string& name, const std::string& scope, int degree,
                           const CycleIndex& lhs, const CycleIndex& rhs) {
    VerificationReport r;
    r.name = name;
    r.scope = scope;
    r.max_degree = degree;
    r.pass = lhs == rhs;
    r.lhs = to_text(lhs);
    r.rhs = to_text(rhs);
    if (!r.pass) r.first_diff = CycleIndex::first_difference(lhs, rhs);
    return r;
}

VerificationReport compare_values(const std::string& name, const std::string& scope,
                                  int degree, const std::string& lhs, const std::string& rhs,
                                  bool pass, const std::string& diff) {
    VerificationReport r;
    r.name = name;
    r.scope = scope;
    r.max_degree = degree;
    r.pass = pass;
    r.lhs = lhs;
    r.rhs = rhs;
    if (!pass) r.first_diff = diff;
    return r;
}

using Reports = std::vector<VerificationReport>;

// (1) dissymmetry for chains: C_k + C^pa_k = C^p_k + C^a_k
Reports dissymmetry_counts(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        CycleIndex lhs = ctx.enumerated(ChainVariant::Plain, k, false, n) +
                         ctx.enumerated(ChainVariant::MinEdgePointedRooted, k, false, n);
        CycleIndex rhs = ctx.enumerated(ChainVariant::MinRooted, k, false, n) +
                         ctx.enumerated(ChainVariant::MinEdgePointed, k, false, n);
        out.push_back(compare("dissymmetry-counts", "k=" + std::to_string(k), n, lhs, rhs));
    }
    return out;
}

// (2) rooted chains split at the root: C^p_k = p1 (Comm . C^c_k) + p1
Reports rooted_chain_split(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex p1 = CycleIndex::p(n, 1);
    CycleIndex comm = named_series(SeriesTag::Comm, n);
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        CycleIndex hollow = ctx.enumerated(ChainVariant::HollowMin, k, false, n - 1);
        CycleIndex rhs = p1 * plethysm(comm, hollow.retruncated(n)) + p1;
        CycleIndex lhs = ctx.enumerated(ChainVariant::MinRooted, k, false, n);
        out.push_back(compare("rooted-chain-split", "k=" + std::to_string(k), n, lhs, rhs));
    }
    return out;
}

// (3) hollow chains graft rooted chains on their vertices:
//     C^c_k = C^cm_k . C^p_k
Reports hollow_chain_graft(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        CycleIndex lhs = ctx.enumerated(ChainVariant::HollowMin, k, false, n);
        CycleIndex head = ctx.enumerated(ChainVariant::HollowMinSingleEdge, k, false, n);
        CycleIndex rooted = ctx.enumerated(ChainVariant::MinRooted, k, false, n);
        out.push_back(compare("hollow-chain-graft", "k=" + std::to_string(k), n, lhs,
                              plethysm(head, rooted)));
    }
    return out;
}

// (4) single-edge-minimum hollow chains drop to shorter chains:
//     C^cm_k = Comm . C^c_{k-1}
Reports hollow_single_edge_shift(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex comm = named_series(SeriesTag::Comm, n);
    for (int k = 2; k <= std::max(2, ctx.opt.kmax); ++k) {
        CycleIndex lhs = ctx.enumerated(ChainVariant::HollowMinSingleEdge, k, false, n);
        CycleIndex inner = ctx.enumerated(ChainVariant::HollowMin, k - 1, false, n);
        out.push_back(compare("hollow-single-edge-shift", "k=" + std::to_string(k), n, lhs,
                              plethysm(comm, inner)));
    }
    return out;
}

// (5) edge-pointed chains: C^a_k = (C_{k-1} - p1) . C^p_k
Reports edge_pointed_split(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex p1 = CycleIndex::p(n, 1);
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        CycleIndex lhs = ctx.enumerated(ChainVariant::MinEdgePointed, k, false, n);
        CycleIndex outer = ctx.enumerated(ChainVariant::Plain, k - 1, false, n) - p1;
        CycleIndex rooted = ctx.enumerated(ChainVariant::MinRooted, k, false, n);
        out.push_back(compare("edge-pointed-split", "k=" + std::to_string(k), n, lhs,
                              plethysm(outer, rooted)));
    }
    return out;
}

// (6) edge-pointed rooted chains: C^pa_k = (C^p_{k-1} - p1) . C^p_k
Reports edge_pointed_rooted_split(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex p1 = CycleIndex::p(n, 1);
    for (int k = 1; k <= std::max(2, ctx.opt.kmax); ++k) {
        CycleIndex lhs = ctx.enumerated(ChainVariant::MinEdgePointedRooted, k, false, n);
        CycleIndex prev = k >= 2 ? ctx.enumerated(ChainVariant::MinRooted, k - 1, false, n)
                                 : ctx.interpolated(ChainVariant::MinRooted, 0, false, n);
        CycleIndex rooted = ctx.enumerated(ChainVariant::MinRooted, k, false, n);
        std::string scope = "k=" + std::to_string(k) + (k == 1 ? " (interpolated k-1)" : "");
        out.push_back(
            compare("edge-pointed-rooted-split", scope, n, lhs, plethysm(prev - p1, rooted)));
    }
    return out;
}

// (7) rooting differentiates: p1 dC_k/dp1 = C^p_k
Reports rooted_derivative(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex p1 = CycleIndex::p(n, 1);
    for (int k = 0; k <= ctx.opt.kmax; ++k) {
        CycleIndex lhs = p1 * partial_p1(ctx.enumerated(ChainVariant::Plain, k, false, n));
        CycleIndex rhs = k >= 1 ? ctx.enumerated(ChainVariant::MinRooted, k, false, n)
                                : ctx.interpolated(ChainVariant::MinRooted, 0, false, n);
        std::string scope = "k=" + std::to_string(k) + (k == 0 ? " (interpolated rhs)" : "");
        out.push_back(compare("rooted-derivative", scope, n, lhs, rhs));
    }
    return out;
}

// (8) the weighted recursions
Reports weighted_recursions(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    CycleIndex p1 = CycleIndex::p(n, 1);
    CycleIndex comm = named_series(SeriesTag::Comm, n);
    CycleIndex p1_over_t = p1.scaled(1, -1);
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        CycleIndex rooted_t = ctx.enumerated(ChainVariant::MinRooted, k, true, n);
        CycleIndex hollow_t = ctx.enumerated(ChainVariant::HollowMin, k, true, n - 1);
        // t C^p_{k,t} = p1 (1 + Comm . (t C^c_{k,t}))
        out.push_back(compare(
            "weighted-recursions", "rooted-split k=" + std::to_string(k), n,
            rooted_t.scaled(1, +1),
            p1 * (CycleIndex::constant(n, 1) +
                  plethysm(comm, hollow_t.retruncated(n).scaled(1, +1)))));

        // C^c_{k,t} = C^cm_{k,t} . (t C^p_{k,t})
        CycleIndex hollow_full = ctx.enumerated(ChainVariant::HollowMin, k, true, n);
        CycleIndex head_t = ctx.enumerated(ChainVariant::HollowMinSingleEdge, k, true, n);
        out.push_back(compare("weighted-recursions", "hollow-graft k=" + std::to_string(k), n,
                              hollow_full, plethysm(head_t, rooted_t.scaled(1, +1))));

        // C^a_{k,t} = (C_{k-1,t} - p1/t) . (t C^p_{k,t})
        CycleIndex ep_t = ctx.enumerated(ChainVariant::MinEdgePointed, k, true, n);
        CycleIndex plain_prev = ctx.enumerated(ChainVariant::Plain, k - 1, true, n);
        out.push_back(compare("weighted-recursions", "edge-pointed k=" + std::to_string(k), n,
                              ep_t, plethysm(plain_prev - p1_over_t, rooted_t.scaled(1, +1))));

        if (k >= 2) {
            // t C^cm_{k,t} = Comm . (t C^c_{k-1,t})
            CycleIndex inner = ctx.enumerated(ChainVariant::HollowMin, k - 1, true, n);
            out.push_back(compare("weighted-recursions",
                                  "hollow-shift k=" + std::to_string(k), n,
                                  head_t.scaled(1, +1), plethysm(comm, inner.scaled(1, +1))));

            // C^pa_{k,t} = (C^p_{k-1,t} - p1/t) . (t C^p_{k,t})
            CycleIndex epr_t = ctx.enumerated(ChainVariant::MinEdgePointedRooted, k, true, n);
            CycleIndex rooted_prev = ctx.enumerated(ChainVariant::MinRooted, k - 1, true, n);
            out.push_back(
                compare("weighted-recursions", "edge-pointed-rooted k=" + std::to_string(k), n,
                        epr_t, plethysm(rooted_prev - p1_over_t, rooted_t.scaled(1, +1))));
        }
    }
    return out;
}

// (9) max-pointed recursions and the k=1 coincidence with min-pointed
Reports max_pointed_recursions(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    out.push_back(compare("max-pointed-recursions", "k=1 coincidence edge-pointed", n,
                          ctx.enumerated(ChainVariant::MaxEdgePointed, 1, true, n),
                          ctx.enumerated(ChainVariant::MinEdgePointed, 1, true, n)));
    out.push_back(compare("max-pointed-recursions", "k=1 coincidence edge-pointed-rooted", n,
                          ctx.enumerated(ChainVariant::MaxEdgePointedRooted, 1, true, n),
                          ctx.enumerated(ChainVariant::MinEdgePointedRooted, 1, true, n)));
    for (int k = 2; k <= std::max(2, ctx.opt.kmax); ++k) {
        CycleIndex rooted_t = ctx.enumerated(ChainVariant::MinRooted, k, true, n);
        out.push_back(
            compare("max-pointed-recursions", "max-edge-pointed k=" + std::to_string(k), n,
                    ctx.enumerated(ChainVariant::MaxEdgePointed, k, true, n),
                    plethysm(ctx.enumerated(ChainVariant::MaxEdgePointed, k - 1, true, n),
                             rooted_t.scaled(1, +1))));
        out.push_back(compare(
            "max-pointed-recursions", "max-edge-pointed-rooted k=" + std::to_string(k), n,
            ctx.enumerated(ChainVariant::MaxEdgePointedRooted, k, true, n),
            plethysm(ctx.enumerated(ChainVariant::MaxEdgePointedRooted, k - 1, true, n),
                     rooted_t.scaled(1, +1))));
    }
    return out;
}

// (10) the homology character theorem (unweighted k = -1)
Reports homology_character(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    // Comm . SigmaPreLie + p1 (SigmaPreLie + 1) - p1; the trailing -p1 is
    // what the derivation yields and makes the degree-1 slice come out as
    // the counted value p1 (it cancels against the +1 product term).
    CycleIndex p1 = CycleIndex::p(n, 1);
    CycleIndex formula = plethysm(named_series(SeriesTag::Comm, n),
                                  named_series(SeriesTag::SigmaPreLie, n)) +
                         p1 * named_series(SeriesTag::SigmaPreLie, n);
    CycleIndex interp = ctx.interpolated(ChainVariant::Plain, -1, false, n);
    out.push_back(compare("homology-character", "interpolated vs Comm.SigmaPreLie form", n,
                          interp, formula));

    CycleIndex sigma_m = suspension(named_series(SeriesTag::M, n), false);
    out.push_back(
        compare("homology-character", "p1 - SigmaM form", n, interp, p1 - sigma_m));

    CycleIndex rooted_interp = ctx.interpolated(ChainVariant::MinRooted, -1, false, n);
    CycleIndex rooted_formula = p1 * (named_series(SeriesTag::SigmaPreLie, n) +
                                      CycleIndex::constant(n, 1));
    out.push_back(compare("homology-character", "rooted: p1 (SigmaPreLie + 1)", n,
                          rooted_interp, rooted_formula));

    // per-class agreement with the Lefschetz trace, single global sign (-1)^n
    for (int size = 2; size <= n; ++size) {
        bool pass = true;
        std::string diff;
        std::ostringstream lhs_os, rhs_os;
        for (const Partition& lambda : partitions_of(size)) {
            LaurentRational value =
                extract_character(interp.homogeneous_part(size), lambda);
            Rational expected(lefschetz_character(size, lambda, ctx.cache));
            if (size % 2 == 1) expected = -expected;
            Rational got = value.at(0);
            lhs_os << partition_label(lambda) << ":" << got << " ";
            rhs_os << partition_label(lambda) << ":" << expected << " ";
            if (got != expected) {
                pass = false;
                if (diff.empty()) {
                    std::ostringstream os;
                    os << "class " << partition_label(lambda) << ": " << got << " vs "
                       << expected;
                    diff = os.str();
                }
            }
        }
        out.push_back(compare_values("homology-character",
                                     "lefschetz n=" + std::to_string(size) +
                                         " (sign (-1)^n)",
                                     size, lhs_os.str(), rhs_os.str(), pass, diff));
    }
    return out;
}

// (11) the weighted k = -1 theorem: four pointing variants vs HAL forms
Reports whitney_character(Ctx& ctx) {
    Reports out;
    int n = std::min(ctx.opt.weighted_degree, ctx.opt.nmax);
    CycleIndex p1 = CycleIndex::p(n, 1);
    CycleIndex p1_over_t = p1.scaled(1, -1);
    CycleIndex comm = named_series(SeriesTag::Comm, n);
    CycleIndex perm = named_series(SeriesTag::Perm, n);

    out.push_back(compare("whitney-character", "plain k=-1 vs HAL + p1/t", n,
                          ctx.interpolated(ChainVariant::Plain, -1, true, n),
                          hal_series(SeriesTag::HAL, n, HalMethod::ClosedForm) + p1_over_t));
    out.push_back(compare("whitney-character", "rooted k=-1 vs HALp + p1/t", n,
                          ctx.interpolated(ChainVariant::MinRooted, -1, true, n),
                          hal_series(SeriesTag::HALp, n, HalMethod::ClosedForm) + p1_over_t));
    out.push_back(compare("whitney-character", "max-edge-pointed k=-1 vs HALA", n,
                          ctx.interpolated(ChainVariant::MaxEdgePointed, -1, true, n),
                          hal_series(SeriesTag::HALA, n, HalMethod::ClosedForm)));
    out.push_back(compare("whitney-character", "max-edge-pointed-rooted k=-1 vs HALpA", n,
                          ctx.interpolated(ChainVariant::MaxEdgePointedRooted, -1, true, n),
                          hal_series(SeriesTag::HALpA, n, HalMethod::ClosedForm)));

    // weighted k = 0 closed forms
    out.push_back(compare("whitney-character", "plain k=0 weighted", n,
                          ctx.enumerated(ChainVariant::Plain, 0, true, n),
                          comm - p1 + p1_over_t));
    out.push_back(compare("whitney-character", "rooted k=0 weighted (interpolated)", n,
                          ctx.interpolated(ChainVariant::MinRooted, 0, true, n),
                          perm - p1 + p1_over_t));
    out.push_back(compare("whitney-character", "max-edge-pointed k=0 (interpolated)", n,
                          ctx.interpolated(ChainVariant::MaxEdgePointed, 0, true, n),
                          comm - p1));
    out.push_back(compare("whitney-character", "max-edge-pointed-rooted k=0 (interpolated)",
                          n, ctx.interpolated(ChainVariant::MaxEdgePointedRooted, 0, true, n),
                          perm - p1));
    return out;
}

// (12) the exponential-generating-function layer
Reports egf_identities(Ctx& ctx) {
    Reports out;
    int deg = ctx.opt.algebra_degree;

    auto egf_str = [](const std::vector<LaurentRational>& v) {
        std::ostringstream os;
        for (std::size_t i = 1; i < v.size(); ++i)
            os << "x^" << i << ":[" << v[i].str() << "] ";
        return os.str();
    };

    {  // egf(Comm) = e^x - 1
        auto lhs = egf(named_series(SeriesTag::Comm, deg));
        bool pass = true;
        std::string diff;
        for (int n = 1; n <= deg; ++n)
            if (lhs[n].at(0) != 1) {
                pass = false;
                diff = "x^" + std::to_string(n);
                break;
            }
        out.push_back(compare_values("egf-identities", "Comm egf = e^x - 1", deg,
                                     egf_str(lhs), "all 1", pass, diff));
    }
    {  // egf(SigmaPreLie) = sum (-1)^(n-1) n^(n-1) x^n / n!
        auto lhs = egf(named_series(SeriesTag::SigmaPreLie, deg));
        bool pass = true;
        std::string diff;
        std::ostringstream rhs_os;
        for (int n = 1; n <= deg; ++n) {
            Rational expect((n % 2 == 1 ? 1 : -1));
            for (int i = 0; i < n - 1; ++i) expect *= n;
            rhs_os << "x^" << n << ":[" << expect << "] ";
            if (lhs[n].at(0) != expect) {
                pass = false;
                if (diff.empty()) diff = "x^" + std::to_string(n);
            }
        }
        out.push_back(compare_values("egf-identities", "SigmaPreLie egf (suspended W)", deg,
                                     egf_str(lhs), rhs_os.str(), pass, diff));
    }
    {  // e^(SigmaW) - x - 1 = sum_{n>=2} (-1)^(n-1) (n-1)^(n-1) x^n / n!
        CycleIndex e_series = named_series(SeriesTag::E, deg);
        CycleIndex sp = named_series(SeriesTag::SigmaPreLie, deg);
        auto lhs = egf(plethysm(e_series, sp) - CycleIndex::p(deg, 1) -
                       CycleIndex::constant(deg, 1));
        bool pass = true;
        std::string diff;
        std::ostringstream rhs_os;
        for (int n = 2; n <= deg; ++n) {
            Rational expect((n % 2 == 0 ? -1 : 1));
            for (int i = 0; i < n - 1; ++i) expect *= (n - 1);
            rhs_os << "x^" << n << ":[" << expect << "] ";
            if (lhs[n].at(0) != expect) {
                pass = false;
                if (diff.empty()) diff = "x^" + std::to_string(n);
            }
        }
        out.push_back(compare_values("egf-identities", "exp(SigmaW) - x - 1 coefficients",
                                     deg, egf_str(lhs), rhs_os.str(), pass, diff));
    }
    {  // (C_{-1} - x)' = SigmaW at the egf level
        CycleIndex formula = CycleIndex::p(deg, 1) -
                             suspension(named_series(SeriesTag::M, deg), false);
        auto minus_x = egf(formula - CycleIndex::p(deg, 1));
        auto sw = egf(named_series(SeriesTag::SigmaPreLie, deg));
        bool pass = true;
        std::string diff;
        for (int n = 1; n + 1 <= deg; ++n) {
            // derivative of an egf shifts coefficients down by one
            if (minus_x[n + 1].at(0) != sw[n].at(0)) {
                pass = false;
                diff = "x^" + std::to_string(n);
                break;
            }
        }
        out.push_back(compare_values("egf-identities", "(C_{-1} - x)' = SigmaW", deg,
                                     egf_str(minus_x), egf_str(sw), pass, diff));
    }
    {  // C^a_0 egf has coefficients (n-1)^2; C^pa_0 has n(n-1)
        int n = ctx.opt.nmax;
        auto a0 = egf(ctx.interpolated(ChainVariant::MinEdgePointed, 0, false, n));
        auto pa0 = egf(ctx.interpolated(ChainVariant::MinEdgePointedRooted, 0, false, n));
        bool pass = true;
        std::string diff;
        for (int size = 2; size <= n; ++size) {
            if (a0[size].at(0) != Rational((size - 1)) * (size - 1)) {
                pass = false;
                diff = "edge-pointed x^" + std::to_string(size);
                break;
            }
            if (pa0[size].at(0) != Rational(size) * (size - 1)) {
                pass = false;
                diff = "edge-pointed-rooted x^" + std::to_string(size);
                break;
            }
        }
        out.push_back(compare_values("egf-identities",
                                     "k=0 pointed egfs: (n-1)^2 and n(n-1)", n,
                                     egf_str(a0), egf_str(pa0), pass, diff));
    }
    return out;
}

// (13) Whitney homology dimensions vs the weighted k = -1 t-coefficients
Reports whitney_dimensions_check(Ctx& ctx) {
    Reports out;
    int hi = std::min(ctx.opt.nmax, 5);
    for (int n = 3; n <= hi; ++n) {
        std::map<int, int> wh = whitney_dimensions(n, ctx.cache);
        CycleIndex slice = ctx.interpolated(ChainVariant::Plain, -1, true, n);
        LaurentRational diag = extract_character(slice.homogeneous_part(n), Partition(n, 1));
        bool pass = diag.at(0) == 1;  // rank 0: the trivial piece
        std::string diff = pass ? "" : "t^0 coefficient is not 1";
        std::ostringstream lhs_os, rhs_os;
        lhs_os << "t-coefficients: " << diag.str();
        rhs_os << "whitney dims:";
        for (const auto& [r, d] : wh) rhs_os << " rank" << r << "=" << d;
        for (int r = 1; r <= n - 2; ++r) {
            Rational expected((r % 2 == 0 ? 1 : -1));
            auto it = wh.find(r);
            expected *= it == wh.end() ? 0 : it->second;
            if (diag.at(r) != expected) {
                pass = false;
                if (diff.empty()) diff = "t^" + std::to_string(r);
            }
        }
        out.push_back(compare_values("whitney-dimensions", "n=" + std::to_string(n), n,
                                     lhs_os.str(), rhs_os.str(), pass, diff));
    }
    return out;
}

// (14) plethystic inverse pairs
Reports plethystic_inverses(Ctx& ctx) {
    Reports out;
    int deg = ctx.opt.algebra_degree;
    CycleIndex p1 = CycleIndex::p(deg, 1);
    CycleIndex comm = named_series(SeriesTag::Comm, deg);
    CycleIndex perm = named_series(SeriesTag::Perm, deg);
    CycleIndex sigma_lie = named_series(SeriesTag::SigmaLie, deg);
    CycleIndex sigma_prelie = named_series(SeriesTag::SigmaPreLie, deg);
    CycleIndex swt = named_series(SeriesTag::SigmaWt, deg);
    CycleIndex swt_def = p1 + (perm - p1).scaled(1, +1);

    out.push_back(compare("plethystic-inverses", "Comm . SigmaLie", deg,
                          plethysm(comm, sigma_lie), p1));
    out.push_back(compare("plethystic-inverses", "SigmaLie . Comm", deg,
                          plethysm(sigma_lie, comm), p1));
    out.push_back(compare("plethystic-inverses", "SigmaPreLie . Perm", deg,
                          plethysm(sigma_prelie, perm), p1));
    out.push_back(compare("plethystic-inverses", "Perm . SigmaPreLie", deg,
                          plethysm(perm, sigma_prelie), p1));
    out.push_back(compare("plethystic-inverses", "inverse(Perm) = SigmaPreLie", deg,
                          named_series(SeriesTag::SigmaW, deg), sigma_prelie));
    out.push_back(compare("plethystic-inverses", "(t Perm - t p1 + p1) . SigmaW_t", deg,
                          plethysm(swt_def, swt), p1));
    out.push_back(compare("plethystic-inverses", "SigmaW_t . (t Perm - t p1 + p1)", deg,
                          plethysm(swt, swt_def), p1));
    out.push_back(compare("plethystic-inverses", "involution on SigmaLie", deg,
                          plethystic_inverse(plethystic_inverse(sigma_lie)), sigma_lie));
    out.push_back(compare("plethystic-inverses", "involution on SigmaW_t", deg,
                          plethystic_inverse(plethystic_inverse(swt)), swt));
    return out;
}

// (15) HAL fixed-point vs closed-form
Reports hal_methods(Ctx& ctx) {
    Reports out;
    int deg = ctx.opt.hal_degree;
    for (SeriesTag tag : {SeriesTag::HALpA, SeriesTag::HALA, SeriesTag::HALp, SeriesTag::HAL})
        out.push_back(compare("hal-methods", series_name(tag), deg,
                              hal_series(tag, deg, HalMethod::FixedPoint),
                              hal_series(tag, deg, HalMethod::ClosedForm)));
    return out;
}

// (16) multiplied-form identities avoiding series division
Reports suspension_product_identities(Ctx& ctx) {
    Reports out;
    int deg = ctx.opt.hal_degree;
    CycleIndex p1 = CycleIndex::p(deg, 1);
    CycleIndex one = CycleIndex::constant(deg, 1);
    CycleIndex comm = named_series(SeriesTag::Comm, deg);
    CycleIndex sp = named_series(SeriesTag::SigmaPreLie, deg);
    CycleIndex swt = named_series(SeriesTag::SigmaWt, deg);

    out.push_back(compare("suspension-product-identities",
                          "SigmaPreLie (1 + Comm . SigmaPreLie) = p1", deg,
                          sp * (one + plethysm(comm, sp)), p1));
    out.push_back(compare("suspension-product-identities",
                          "t SigmaW_t (Comm . SigmaW_t) = p1 - SigmaW_t", deg,
                          (swt * plethysm(comm, swt)).scaled(1, +1), p1 - swt));
    {
        CycleIndex sigma_m = suspension(named_series(SeriesTag::M, deg), false);
        CycleIndex lhs = (sigma_m - one) * sp + p1 * (one - sp + sp * sp);
        out.push_back(compare("suspension-product-identities",
                              "(SigmaM - 1) SigmaPreLie + p1 (1 - SigmaPreLie + SigmaPreLie^2)",
                              deg, lhs, CycleIndex::zero(deg)));
    }
    {
        CycleIndex lie = suspension(named_series(SeriesTag::SigmaLie, deg), false);
        CycleIndex lhs = suspension(lie, true);
        CycleIndex rhs = plethysm(named_series(SeriesTag::SigmaLie, deg),
                                  p1.scaled(1, +1))
                             .scaled(1, -1);
        out.push_back(compare("suspension-product-identities",
                              "Sigma_t Lie = (1/t) SigmaLie . (t p1)", deg, lhs, rhs));
    }
    return out;
}

// (17) t = 1 degeneration of the weighted series
Reports weighted_degeneration(Ctx& ctx) {
    Reports out;
    int n = ctx.opt.nmax;
    for (int k = 1; k <= ctx.opt.kmax; ++k) {
        for (ChainVariant v : {ChainVariant::Plain, ChainVariant::MinRooted,
                               ChainVariant::MinEdgePointed, ChainVariant::MaxEdgePointed}) {
            CycleIndex weighted = ctx.enumerated(v, k, true, n);
            CycleIndex plain = ctx.enumerated(v, k, false, n);
            out.push_back(compare("weighted-degeneration",
                                  variant_name(v) + " k=" + std::to_string(k), n,
                                  weighted.at_t1(), plain));
        }
    }
    return out;
}

// (18) the k = 0 representation identifications per class
Reports representation_identification(Ctx& ctx) {
    Reports out;
    int nmax = ctx.opt.nmax;
    for (int n = 2; n <= nmax; ++n) {
        CycleIndex a0 = ctx.interpolated(ChainVariant::MinEdgePointed, 0, false, n)
                            .homogeneous_part(n);
        CycleIndex pa0 = ctx.interpolated(ChainVariant::MinEdgePointedRooted, 0, false, n)
                             .homogeneous_part(n);
        bool pass = true;
        std::string diff;
        std::ostringstream lhs_os, rhs_os;
        for (const Partition& lambda : partitions_of(n)) {
            Rational f(fixed_points_of(lambda));
            Rational a_expect = (f - 1) * (f - 1);
            Rational pa_expect = f * (f - 1);
            Rational a_got = extract_character(a0, lambda).at(0);
            Rational pa_got = extract_character(pa0, lambda).at(0);
            lhs_os << partition_label(lambda) << ":" << a_got << "," << pa_got << " ";
            rhs_os << partition_label(lambda) << ":" << a_expect << "," << pa_expect << " ";
            if (a_got != a_expect || pa_got != pa_expect) {
                pass = false;
                if (diff.empty()) diff = "class " + partition_label(lambda);
            }
        }
        out.push_back(compare_values("representation-identification",
                                     "n=" + std::to_string(n) +
                                         " (f-1)^2 and f(f-1) per class",
                                     n, lhs_os.str(), rhs_os.str(), pass, diff));
    }
    return out;
}

using IdentityFn = Reports (*)(Ctx&);

const std::vector<std::pair<std::string, IdentityFn>>& registry() {
    static const std::vector<std::pair<std::string, IdentityFn>> reg = {
        {"dissymmetry-counts", dissymmetry_counts},
        {"rooted-chain-split", rooted_chain_split},
        {"hollow-chain-graft", hollow_chain_graft},
        {"hollow-single-edge-shift", hollow_single_edge_shift},
        {"edge-pointed-split", edge_pointed_split},
        {"edge-pointed-rooted-split", edge_pointed_rooted_split},
        {"rooted-derivative", rooted_derivative},
        {"weighted-recursions", weighted_recursions},
        {"max-pointed-recursions", max_pointed_recursions},
        {"homology-character", homology_character},
        {"whitney-character", whitney_character},
        {"egf-identities", egf_identities},
        {"whitney-dimensions", whitney_dimensions_check},
        {"plethystic-inverses", plethystic_inverses},
        {"hal-methods", hal_methods},
        {"suspension-product-identities", suspension_product_identities},
        {"weighted-degeneration", weighted_degeneration},
        {"representation-identification", representation_identification},
    };
    return reg;
}

}  // namespace

std::vector<std::string> ledger_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<VerificationReport> verify_identity(const std::string& name,
                                                const VerifyOptions& opt, PosetCache& cache) {
    for (const auto& [reg_name, fn] : registry()) {
        if (reg_name == name) {
            Ctx ctx(cache, opt);
            return fn(ctx);
        }
    }
    throw DomainError("unknown identity: " + name);
}

std::vector<VerificationReport> run_ledger(const std::vector<std::string>& only,
                                           const VerifyOptions& opt, PosetCache& cache) {
    std::vector<std::pair<std::string, IdentityFn>> selected;
    if (only.empty()) {
        selected = registry();
    } else {
        for (const std::string& name : only) {
            bool found = false;
            for (const auto& entry : registry())
                if (entry.first == name) {
                    selected.push_back(entry);
                    found = true;
                }
            if (!found) throw DomainError("unknown identity: " + name);
        }
    }

    Ctx ctx(cache, opt);
    std::vector<Reports> partial(selected.size());
    parallel_for(
        static_cast<int>(selected.size()),
        [&](int i) { partial[i] = selected[i].second(ctx); }, opt.threads);

    std::vector<VerificationReport> all;
    for (const Reports& reports : partial)
        for (const VerificationReport& r : reports) all.push_back(r);
    return all;
}

}  // namespace hypertrees
