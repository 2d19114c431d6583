#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypertrees/laurent.hpp"
#include "hypertrees/numeric.hpp"
#include "hypertrees/partitions.hpp"

namespace hypertrees {

/// Truncated cycle index: a symmetric function in power sums p_1..p_N whose
/// coefficients are rationals times Laurent monomials in the weight t.
/// Monomial key = (partition, t-exponent); deg p_i = i; terms of p-degree
/// above the truncation are discarded by every operation. t-exponents below
/// -1 are rejected (the floor comes from the weight grading).
class CycleIndex {
public:
    using Key = std::pair<Partition, int>;

    explicit CycleIndex(int truncation) : trunc_(truncation) {}

    static CycleIndex zero(int truncation) { return CycleIndex(truncation); }
    static CycleIndex constant(int truncation, const Rational& c);
    static CycleIndex p(int truncation, int i);  // p_i
    static CycleIndex monomial(int truncation, Partition lambda, int tpow, Rational c);

    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coefficient(const Partition& lambda, int tpow = 0) const;

    void add_term(Partition lambda, int tpow, const Rational& c);

    CycleIndex& operator+=(const CycleIndex& o);
    CycleIndex& operator-=(const CycleIndex& o);
    friend CycleIndex operator+(CycleIndex a, const CycleIndex& b) { a += b; return a; }
    friend CycleIndex operator-(CycleIndex a, const CycleIndex& b) { a -= b; return a; }
    friend CycleIndex operator*(const CycleIndex& a, const CycleIndex& b);

    CycleIndex scaled(const Rational& c, int tshift = 0) const;

    friend bool operator==(const CycleIndex& a, const CycleIndex& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    /// Keep only terms of the given p-degree.
    CycleIndex homogeneous_part(int degree) const;
    /// Same terms at a different truncation (higher terms dropped).
    CycleIndex retruncated(int new_truncation) const;
    /// Largest p-degree with a nonzero term (0 if none).
    int max_degree() const;
    /// Substitute t = 1 (collapse the weight grading).
    CycleIndex at_t1() const;

    /// First key where the two differ, for failure reports.
    static std::string first_difference(const CycleIndex& a, const CycleIndex& b);

    std::string str() const;

private:
    int trunc_;
    std::map<Key, Rational> terms_;
};

/// Adams operation: p_j -> p_{jk}, t -> t^k. Ring homomorphism over Q.
CycleIndex adams(const CycleIndex& g, int k);

/// Plethystic substitution f . g; left-linear, constants pass through.
/// Throws DomainError if g has a constant term.
CycleIndex plethysm(const CycleIndex& f, const CycleIndex& g);

/// Suspension. With t_graded: c t^j p_lambda -> (-1)^(len+1) c t^(j+|lambda|-1)
/// p_lambda. Without: only the sign twist (the t = 1 suspension).
CycleIndex suspension(const CycleIndex& f, bool t_graded);

/// Formal partial derivative in p_1.
CycleIndex partial_p1(const CycleIndex& f);

/// The g with f . g = g . f = p1 up to truncation. Requires the degree-1
/// part of f to be exactly p1 and no constant term.
CycleIndex plethystic_inverse(const CycleIndex& f);

/// Character of the class lambda: z_lambda times the coefficient of
/// p_lambda, as a Laurent polynomial in t.
LaurentRational extract_character(const CycleIndex& z, const Partition& lambda);

/// Exponential generating function: p1 -> x, p_k -> 0 (k >= 2), t kept.
/// Returns, for each degree n, n! times the coefficient of p1^n.
std::vector<LaurentRational> egf(const CycleIndex& z);

// --- named series ----------------------------------------------------------

enum class SeriesTag {
    Comm,         // nonempty sets
    Perm,         // pointed sets: p1 (1 + Comm)
    E,            // sets: 1 + Comm
    X,            // singleton: p1
    PreLie,       // labelled rooted trees (fixed point of Z = p1 (1 + Comm.Z))
    SigmaPreLie,  // suspension of PreLie
    SigmaLie,     // plethystic inverse of Comm
    SigmaW,       // plethystic inverse of Perm (equals SigmaPreLie)
    SigmaWt,      // plethystic inverse of t Perm - t p1 + p1
    M,            // anticyclic extension of PreLie: Sigma M = p1 - C_{-1}
    HALpA,
    HALA,
    HALp,
    HAL,
};

enum class HalMethod { FixedPoint, ClosedForm };

CycleIndex named_series(SeriesTag tag, int truncation);
CycleIndex hal_series(SeriesTag tag, int truncation, HalMethod method);

/// CLI-facing names: Comm, Perm, E, X, PreLie, SigmaPreLie, SigmaLie,
/// SigmaW, SigmaW_t, M, HALpA, HALA, HALp, HAL.
SeriesTag series_tag_from_name(const std::string& name);
std::string series_name(SeriesTag tag);
std::vector<std::string> all_series_names();

// --- text / JSON codec ------------------------------------------------------

/// Canonical printing: monomials sorted by total degree, then partition,
/// then t-power; "1/2*t^1*p1*p2", coefficients exact. Round-trip exact.
std::string to_text(const CycleIndex& z);
CycleIndex from_text(const std::string& text, int truncation);

/// JSON: array of {"partition": [...], "tpow": j, "num": "a", "den": "b"}.
std::string to_json(const CycleIndex& z);
CycleIndex from_json(const std::string& json_text, int truncation);

}  // namespace hypertrees
