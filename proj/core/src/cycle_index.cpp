#include "hypertrees/cycle_index.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hypertrees {

namespace {

int degree_of(const Partition& lambda) {
    int d = 0;
    for (int part : lambda) d += part;
    return d;
}

Partition merged(const Partition& a, const Partition& b) {
    Partition out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

}  // namespace

CycleIndex CycleIndex::constant(int truncation, const Rational& c) {
    CycleIndex z(truncation);
    z.add_term({}, 0, c);
    return z;
}

CycleIndex CycleIndex::p(int truncation, int i) {
    CycleIndex z(truncation);
    z.add_term({i}, 0, 1);
    return z;
}

CycleIndex CycleIndex::monomial(int truncation, Partition lambda, int tpow, Rational c) {
    CycleIndex z(truncation);
    z.add_term(std::move(lambda), tpow, c);
    return z;
}

Rational CycleIndex::coefficient(const Partition& lambda, int tpow) const {
    auto it = terms_.find({lambda, tpow});
    return it == terms_.end() ? Rational(0) : it->second;
}

void CycleIndex::add_term(Partition lambda, int tpow, const Rational& c) {
    if (c == 0) return;
    if (degree_of(lambda) > trunc_) return;
    if (tpow < -1) throw DomainError("t-exponent below the supported floor (-1)");
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    Key key{std::move(lambda), tpow};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CycleIndex& CycleIndex::operator+=(const CycleIndex& o) {
    if (o.trunc_ != trunc_) throw DomainError("cycle index truncation mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

CycleIndex& CycleIndex::operator-=(const CycleIndex& o) {
    if (o.trunc_ != trunc_) throw DomainError("cycle index truncation mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

CycleIndex operator*(const CycleIndex& a, const CycleIndex& b) {
    if (a.trunc_ != b.trunc_) throw DomainError("cycle index truncation mismatch");
    CycleIndex out(a.trunc_);
    for (const auto& [ka, ca] : a.terms_) {
        int da = degree_of(ka.first);
        for (const auto& [kb, cb] : b.terms_) {
            if (da + degree_of(kb.first) > a.trunc_) continue;
            out.add_term(merged(ka.first, kb.first), ka.second + kb.second, ca * cb);
        }
    }
    return out;
}

CycleIndex CycleIndex::scaled(const Rational& c, int tshift) const {
    CycleIndex out(trunc_);
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second + tshift, v * c);
    return out;
}

CycleIndex CycleIndex::homogeneous_part(int degree) const {
    CycleIndex out(trunc_);
    for (const auto& [key, v] : terms_)
        if (degree_of(key.first) == degree) out.add_term(key.first, key.second, v);
    return out;
}

CycleIndex CycleIndex::retruncated(int new_truncation) const {
    CycleIndex out(new_truncation);
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v);
    return out;
}

int CycleIndex::max_degree() const {
    int d = 0;
    for (const auto& [key, v] : terms_) d = std::max(d, degree_of(key.first));
    return d;
}

CycleIndex CycleIndex::at_t1() const {
    CycleIndex out(trunc_);
    for (const auto& [key, v] : terms_) out.add_term(key.first, 0, v);
    return out;
}

std::string CycleIndex::first_difference(const CycleIndex& a, const CycleIndex& b) {
    for (const auto& [key, v] : a.terms_) {
        Rational other = b.coefficient(key.first, key.second);
        if (other != v) {
            std::ostringstream os;
            os << "p_(";
            for (std::size_t i = 0; i < key.first.size(); ++i)
                os << (i ? "," : "") << key.first[i];
            os << ") t^" << key.second << ": " << v << " vs " << other;
            return os.str();
        }
    }
    for (const auto& [key, v] : b.terms_) {
        if (a.coefficient(key.first, key.second) == v) continue;
        std::ostringstream os;
        os << "p_(";
        for (std::size_t i = 0; i < key.first.size(); ++i)
            os << (i ? "," : "") << key.first[i];
        os << ") t^" << key.second << ": " << a.coefficient(key.first, key.second) << " vs "
           << v;
        return os.str();
    }
    return "";
}

std::string CycleIndex::str() const { return to_text(*this); }

CycleIndex adams(const CycleIndex& g, int k) {
    CycleIndex out(g.truncation());
    for (const auto& [key, c] : g.terms()) {
        Partition scaled_parts = key.first;
        for (int& part : scaled_parts) part *= k;
        out.add_term(std::move(scaled_parts), key.second * k, c);
    }
    return out;
}

CycleIndex plethysm(const CycleIndex& f, const CycleIndex& g) {
    if (f.truncation() != g.truncation())
        throw DomainError("cycle index truncation mismatch");
    if (g.coefficient({}, 0) != 0 || [&] {
            for (const auto& [key, c] : g.terms())
                if (key.first.empty()) return true;
            return false;
        }())
        throw DomainError("plethysm: inner series must have no constant term");

    int trunc = f.truncation();
    std::map<int, CycleIndex> adams_cache;
    auto adams_of = [&](int k) -> const CycleIndex& {
        auto it = adams_cache.find(k);
        if (it == adams_cache.end()) it = adams_cache.emplace(k, adams(g, k)).first;
        return it->second;
    };

    CycleIndex out(trunc);
    for (const auto& [key, c] : f.terms()) {
        const Partition& lambda = key.first;
        if (degree_of(lambda) > trunc) continue;
        CycleIndex prod = CycleIndex::constant(trunc, 1);
        // inner structures on a j-cycle repeat j times: p-degree multiplies,
        // so a partition of total d needs only terms up to trunc anyway
        for (int part : lambda) {
            prod = prod * adams_of(part);
            if (prod.is_zero()) break;
        }
        out += prod.scaled(c, key.second);
    }
    return out;
}

CycleIndex suspension(const CycleIndex& f, bool t_graded) {
    CycleIndex out(f.truncation());
    for (const auto& [key, c] : f.terms()) {
        int len = static_cast<int>(key.first.size());
        Rational sign = (len % 2 == 0) ? Rational(-1) : Rational(1);
        int tpow = t_graded ? key.second + degree_of(key.first) - 1 : key.second;
        out.add_term(key.first, tpow, c * sign);
    }
    return out;
}

CycleIndex partial_p1(const CycleIndex& f) {
    CycleIndex out(f.truncation());
    for (const auto& [key, c] : f.terms()) {
        int ones = 0;
        for (int part : key.first)
            if (part == 1) ++ones;
        if (ones == 0) continue;
        Partition reduced = key.first;
        reduced.erase(std::find(reduced.begin(), reduced.end(), 1));
        out.add_term(std::move(reduced), key.second, c * ones);
    }
    return out;
}

CycleIndex plethystic_inverse(const CycleIndex& f) {
    int trunc = f.truncation();
    CycleIndex p1 = CycleIndex::p(trunc, 1);
    CycleIndex tail = f - p1;  // must start in p-degree >= 2
    for (const auto& [key, c] : tail.terms()) {
        int d = degree_of(key.first);
        if (d <= 1)
            throw DomainError("plethystic_inverse: series must be p1 + higher-degree terms");
    }
    CycleIndex g = p1;
    for (int iter = 0; iter < trunc; ++iter) g = p1 - plethysm(tail, g);
    return g;
}

LaurentRational extract_character(const CycleIndex& z, const Partition& lambda) {
    Rational zl(z_of(lambda));
    LaurentRational out;
    for (const auto& [key, c] : z.terms())
        if (key.first == lambda) out.add(key.second, c * zl);
    return out;
}

std::vector<LaurentRational> egf(const CycleIndex& z) {
    std::vector<LaurentRational> out(z.truncation() + 1);
    for (const auto& [key, c] : z.terms()) {
        bool all_ones = true;
        for (int part : key.first)
            if (part != 1) all_ones = false;
        if (!all_ones) continue;
        int n = static_cast<int>(key.first.size());
        out[n].add(key.second, c * Rational(factorial(n)));
    }
    return out;
}

// --- named series -----------------------------------------------------------

namespace {

CycleIndex comm_series(int trunc) {
    CycleIndex z(trunc);
    for (int n = 1; n <= trunc; ++n)
        for (const Partition& lambda : partitions_of(n))
            z.add_term(lambda, 0, Rational(1, z_of(lambda)));
    return z;
}

CycleIndex prelie_series(int trunc) {
    CycleIndex comm = comm_series(trunc);
    CycleIndex one = CycleIndex::constant(trunc, 1);
    CycleIndex p1 = CycleIndex::p(trunc, 1);
    CycleIndex z = p1;
    for (int iter = 0; iter < trunc; ++iter) z = p1 * (one + plethysm(comm, z));
    return z;
}

// The k = -1 cycle index: Comm . SigmaPreLie + p1 SigmaPreLie.
// (Equivalently Comm . SigmaPreLie + p1 (SigmaPreLie + 1) - p1; the two
// p1-terms cancel, and the anticyclic M series must vanish in degree 1.)
CycleIndex c_minus_one_formula(int trunc) {
    CycleIndex comm = comm_series(trunc);
    CycleIndex sp = suspension(prelie_series(trunc), false);
    CycleIndex p1 = CycleIndex::p(trunc, 1);
    return plethysm(comm, sp) + p1 * (sp + CycleIndex::constant(trunc, 1)) - p1;
}

CycleIndex sigma_w_t_series(int trunc) {
    CycleIndex p1 = CycleIndex::p(trunc, 1);
    CycleIndex perm = p1 * (CycleIndex::constant(trunc, 1) + comm_series(trunc));
    return plethystic_inverse(p1 + (perm - p1).scaled(1, +1));
}

}  // namespace

CycleIndex named_series(SeriesTag tag, int trunc) {
    switch (tag) {
        case SeriesTag::X:
            return CycleIndex::p(trunc, 1);
        case SeriesTag::E:
            return CycleIndex::constant(trunc, 1) + comm_series(trunc);
        case SeriesTag::Comm:
            return comm_series(trunc);
        case SeriesTag::Perm:
            return CycleIndex::p(trunc, 1) *
                   (CycleIndex::constant(trunc, 1) + comm_series(trunc));
        case SeriesTag::PreLie:
            return prelie_series(trunc);
        case SeriesTag::SigmaPreLie:
            return suspension(prelie_series(trunc), false);
        case SeriesTag::SigmaLie:
            return plethystic_inverse(comm_series(trunc));
        case SeriesTag::SigmaW:
            return plethystic_inverse(named_series(SeriesTag::Perm, trunc));
        case SeriesTag::SigmaWt:
            return sigma_w_t_series(trunc);
        case SeriesTag::M: {
            CycleIndex sigma_m = CycleIndex::p(trunc, 1) - c_minus_one_formula(trunc);
            return suspension(sigma_m, false);
        }
        case SeriesTag::HALpA:
        case SeriesTag::HALA:
        case SeriesTag::HALp:
        case SeriesTag::HAL:
            return hal_series(tag, trunc, HalMethod::ClosedForm);
    }
    throw DomainError("unknown series tag");
}

CycleIndex hal_series(SeriesTag tag, int trunc, HalMethod method) {
    CycleIndex p1 = CycleIndex::p(trunc, 1);
    CycleIndex comm = comm_series(trunc);

    if (method == HalMethod::ClosedForm) {
        CycleIndex swt = sigma_w_t_series(trunc);
        switch (tag) {
            case SeriesTag::HALpA:
                return (p1 - swt).scaled(1, -1);
            case SeriesTag::HALA:
                return plethysm(comm - p1, swt);
            case SeriesTag::HALp: {
                // substitution argument t * (Comm . SigmaW_t) avoids the
                // series quotient (p1 - SigmaW_t) / SigmaW_t
                CycleIndex arg = plethysm(comm, swt).scaled(1, +1);
                CycleIndex sigma_lie = plethystic_inverse(comm);
                return (p1 * plethysm(sigma_lie, arg)).scaled(1, -1);
            }
            case SeriesTag::HAL:
                return hal_series(SeriesTag::HALp, trunc, method) +
                       hal_series(SeriesTag::HALA, trunc, method) -
                       hal_series(SeriesTag::HALpA, trunc, method);
            default:
                throw DomainError("hal_series: not a HAL tag");
        }
    }

    // fixed-point route: solve the defining functional equations degree by
    // degree; each iteration pins one more degree because the recursion
    // raises p-degree.
    CycleIndex hal_pa(trunc);
    // p1 / (1 + t p1) as the truncated geometric series
    CycleIndex geo(trunc);
    for (int m = 0; m * 1 + 1 <= trunc; ++m) {
        Partition lambda(static_cast<std::size_t>(m) + 1, 1);
        geo.add_term(std::move(lambda), m, (m % 2 == 0) ? Rational(1) : Rational(-1));
    }
    for (int iter = 0; iter < trunc; ++iter) {
        CycleIndex inner = p1 - hal_pa.scaled(1, +1);
        hal_pa = p1 * plethysm(geo, plethysm(comm, inner));
    }
    switch (tag) {
        case SeriesTag::HALpA:
            return hal_pa;
        case SeriesTag::HALA:
            return plethysm(comm - p1, p1 - hal_pa.scaled(1, +1));
        case SeriesTag::HALp: {
            CycleIndex lie = suspension(plethystic_inverse(comm), false);
            CycleIndex sigma_t_lie = suspension(lie, true);
            return p1 * plethysm(sigma_t_lie, plethysm(comm, p1 - hal_pa.scaled(1, +1)));
        }
        case SeriesTag::HAL:
            return hal_series(SeriesTag::HALp, trunc, method) +
                   hal_series(SeriesTag::HALA, trunc, method) -
                   hal_series(SeriesTag::HALpA, trunc, method);
        default:
            throw DomainError("hal_series: not a HAL tag");
    }
}

SeriesTag series_tag_from_name(const std::string& name) {
    if (name == "Comm") return SeriesTag::Comm;
    if (name == "Perm") return SeriesTag::Perm;
    if (name == "E") return SeriesTag::E;
    if (name == "X") return SeriesTag::X;
    if (name == "PreLie") return SeriesTag::PreLie;
    if (name == "SigmaPreLie") return SeriesTag::SigmaPreLie;
    if (name == "SigmaLie") return SeriesTag::SigmaLie;
    if (name == "SigmaW") return SeriesTag::SigmaW;
    if (name == "SigmaW_t") return SeriesTag::SigmaWt;
    if (name == "M") return SeriesTag::M;
    if (name == "HALpA") return SeriesTag::HALpA;
    if (name == "HALA") return SeriesTag::HALA;
    if (name == "HALp") return SeriesTag::HALp;
    if (name == "HAL") return SeriesTag::HAL;
    throw DomainError("unknown series name: " + name);
}

std::string series_name(SeriesTag tag) {
    switch (tag) {
        case SeriesTag::Comm: return "Comm";
        case SeriesTag::Perm: return "Perm";
        case SeriesTag::E: return "E";
        case SeriesTag::X: return "X";
        case SeriesTag::PreLie: return "PreLie";
        case SeriesTag::SigmaPreLie: return "SigmaPreLie";
        case SeriesTag::SigmaLie: return "SigmaLie";
        case SeriesTag::SigmaW: return "SigmaW";
        case SeriesTag::SigmaWt: return "SigmaW_t";
        case SeriesTag::M: return "M";
        case SeriesTag::HALpA: return "HALpA";
        case SeriesTag::HALA: return "HALA";
        case SeriesTag::HALp: return "HALp";
        case SeriesTag::HAL: return "HAL";
    }
    return "?";
}

std::vector<std::string> all_series_names() {
    return {"Comm", "Perm", "E", "X", "PreLie", "SigmaPreLie", "SigmaLie",
            "SigmaW", "SigmaW_t", "M", "HALpA", "HALA", "HALp", "HAL"};
}

// --- codec ------------------------------------------------------------------

namespace {

struct TermView {
    int degree;
    const Partition* lambda;
    int tpow;
    const Rational* coeff;
};

std::vector<TermView> sorted_terms(const CycleIndex& z) {
    std::vector<TermView> terms;
    terms.reserve(z.terms().size());
    for (const auto& [key, c] : z.terms())
        terms.push_back({degree_of(key.first), &key.first, key.second, &c});
    std::sort(terms.begin(), terms.end(), [](const TermView& a, const TermView& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (*a.lambda != *b.lambda) return *a.lambda < *b.lambda;
        return a.tpow < b.tpow;
    });
    return terms;
}

std::string partition_factor(const Partition& lambda) {
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    std::ostringstream os;
    bool first = true;
    for (const auto& [part, m] : mult) {
        if (!first) os << '*';
        first = false;
        os << 'p' << part;
        if (m > 1) os << '^' << m;
    }
    return os.str();
}

}  // namespace

std::string to_text(const CycleIndex& z) {
    if (z.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const TermView& tv : sorted_terms(z)) {
        if (!first) os << " + ";
        first = false;
        os << *tv.coeff;
        if (tv.tpow != 0) os << "*t^" << tv.tpow;
        if (!tv.lambda->empty()) os << '*' << partition_factor(*tv.lambda);
    }
    return os.str();
}

CycleIndex from_text(const std::string& text, int truncation) {
    CycleIndex z(truncation);
    if (text == "0") return z;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;

        std::istringstream ts(term);
        std::string piece;
        Rational coeff;
        Partition lambda;
        int tpow = 0;
        bool first_piece = true;
        while (std::getline(ts, piece, '*')) {
            if (first_piece) {
                coeff = Rational(piece);
                first_piece = false;
            } else if (piece.size() > 2 && piece[0] == 't' && piece[1] == '^') {
                tpow = std::stoi(piece.substr(2));
            } else if (!piece.empty() && piece[0] == 'p') {
                std::size_t caret = piece.find('^');
                int part = std::stoi(piece.substr(1, caret == std::string::npos
                                                         ? std::string::npos
                                                         : caret - 1));
                int mult = caret == std::string::npos ? 1 : std::stoi(piece.substr(caret + 1));
                for (int i = 0; i < mult; ++i) lambda.push_back(part);
            } else {
                throw DomainError("cannot parse series term: " + term);
            }
        }
        if (first_piece) throw DomainError("empty series term");
        z.add_term(std::move(lambda), tpow, coeff);
    }
    return z;
}

namespace {

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw ResourceLimitError("coefficient too large for JSON export");
    return v.convert_to<std::int64_t>();
}

}  // namespace

std::string to_json(const CycleIndex& z) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TermView& tv : sorted_terms(z)) {
        nlohmann::json item;
        item["partition"] = *tv.lambda;
        item["tpow"] = tv.tpow;
        item["num"] = to_i64(BigInt(boost::multiprecision::numerator(*tv.coeff)));
        item["den"] = to_i64(BigInt(boost::multiprecision::denominator(*tv.coeff)));
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

CycleIndex from_json(const std::string& json_text, int truncation) {
    CycleIndex z(truncation);
    nlohmann::json arr = nlohmann::json::parse(json_text);
    for (const auto& item : arr) {
        Partition lambda = item.at("partition").get<Partition>();
        int tpow = item.at("tpow").get<int>();
        Rational c(item.at("num").get<std::int64_t>(), item.at("den").get<std::int64_t>());
        z.add_term(std::move(lambda), tpow, c);
    }
    return z;
}

}  // namespace hypertrees
