#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypertrees/poset.hpp"

namespace hypertrees {

/// Outcome of checking one identity instance. Failures carry the first
/// differing monomial.
struct VerificationReport {
    std::string name;        // registered identity name
    std::string scope;       // e.g. "k=2, degree<=5"
    int max_degree = 0;      // truncation or n-range compared
    bool pass = false;
    std::string lhs;         // printed series or counts
    std::string rhs;
    std::string first_diff;  // empty on pass
};

std::string report_json_line(const VerificationReport& r);

struct VerifyOptions {
    int nmax = 5;        // max species degree for enumerated identities
    int kmax = 3;        // chain lengths sampled where a k-range applies
    int algebra_degree = 7;
    int hal_degree = 6;
    int weighted_degree = 4;  // degree for the weighted k=-1 closed forms
    int threads = 0;          // 0 = hardware default
};

/// Registered identity names, in ledger order.
std::vector<std::string> ledger_names();

/// Run one identity (all its instances). Unknown name -> DomainError.
std::vector<VerificationReport> verify_identity(const std::string& name,
                                                const VerifyOptions& opt, PosetCache& cache);

/// Run the whole ledger (or the named subset), deterministically ordered.
std::vector<VerificationReport> run_ledger(const std::vector<std::string>& only,
                                           const VerifyOptions& opt, PosetCache& cache);

}  // namespace hypertrees
