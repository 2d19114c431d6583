// Command-line front end: enumeration, poset export, homology, Whitney
// dimensions, series printing, character tables, and the verification
// ledger. Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 resource ceiling.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypertrees/dissymmetry.hpp"
#include "hypertrees/enumerate.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/kpolynomial.hpp"
#include "hypertrees/verify.hpp"

namespace ht = hypertrees;

namespace {

struct Config {
    int n_max_homology = 5;   // homology / whitney / character-table / verify
    int n_max_enumerate = 6;  // enumerate / poset
    int truncation = 7;
    bool unsafe = false;

    void check_enumerate(int n) const {
        if (!unsafe && n > n_max_enumerate)
            throw ht::ResourceLimitError("n exceeds the default ceiling (use --unsafe)");
    }
    void check_homology(int n) const {
        if (!unsafe && n > n_max_homology)
            throw ht::ResourceLimitError("n exceeds the default ceiling (use --unsafe)");
    }
    int hard_bound() const { return unsafe ? 9 : 7; }
};

int run_enumerate(int n, const std::string& variant, const Config& cfg) {
    cfg.check_enumerate(n);
    std::size_t count = 0;
    if (variant == "plain") {
        for (const ht::Hypertree& t : ht::enumerate_hypertrees(n, 1, cfg.hard_bound())) {
            std::cout << ht::encode(t) << "\n";
            ++count;
        }
    } else {
        ht::PointedVariant pv;
        if (variant == "rooted") pv = ht::PointedVariant::Rooted;
        else if (variant == "edge-pointed") pv = ht::PointedVariant::EdgePointed;
        else if (variant == "edge-pointed-rooted") pv = ht::PointedVariant::EdgePointedRooted;
        else if (variant == "hollow") pv = ht::PointedVariant::Hollow;
        else throw CLI::ValidationError("--variant", "unknown variant " + variant);
        for (const ht::PointedHypertree& p : ht::enumerate_pointed(n, pv, cfg.hard_bound())) {
            std::cout << ht::encode(p) << "\n";
            ++count;
        }
    }
    std::cout << "count " << count << "\n";
    return 0;
}

int run_poset(int n, const std::string& out_prefix, const Config& cfg) {
    cfg.check_enumerate(n);
    ht::PosetCache cache(cfg.hard_bound());
    const ht::HypertreePoset& poset = cache.poset(n, 1);
    auto covers = poset.cover_relations();

    auto write_hasse = [&](std::ostream& os) {
        os << "childIndex,parentIndex\n";
        for (const auto& [child, parent] : covers) os << child << ',' << parent << "\n";
    };
    auto write_index = [&](std::ostream& os) {
        os << "index,hypertree\n";
        for (int i = 0; i < poset.size(); ++i)
            os << i << ',' << ht::encode(poset.element(i)) << "\n";
    };

    if (out_prefix.empty()) {
        write_hasse(std::cout);
        std::cout << "\n";
        write_index(std::cout);
    } else {
        std::ofstream hasse(out_prefix + ".hasse.csv");
        std::ofstream index(out_prefix + ".index.csv");
        if (!hasse || !index) throw std::runtime_error("cannot open output files");
        write_hasse(hasse);
        write_index(index);
        std::cout << "wrote " << out_prefix << ".hasse.csv and " << out_prefix
                  << ".index.csv\n";
    }
    return 0;
}

int run_homology(int n, const Config& cfg) {
    cfg.check_homology(n);
    ht::PosetCache cache(cfg.hard_bound());
    ht::ChainComplex cc = ht::build_chain_complex(n, cache);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [degree, dim] : ht::homology_dimensions(cc))
        j[std::to_string(degree)] = dim;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_whitney(int n, const Config& cfg) {
    cfg.check_homology(n);
    ht::PosetCache cache(cfg.hard_bound());
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [rank, dim] : ht::whitney_dimensions(n, cache))
        j[std::to_string(rank)] = dim;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_series(const std::string& name, int degree, const std::string& format) {
    ht::CycleIndex z = ht::named_series(ht::series_tag_from_name(name), degree);
    if (format == "json") std::cout << ht::to_json(z) << "\n";
    else std::cout << ht::to_text(z) << "\n";
    return 0;
}

int run_character_table(int n, const std::string& source, const Config& cfg) {
    cfg.check_homology(n);
    ht::PosetCache cache(cfg.hard_bound());
    std::cout << "class,value\n";
    if (source == "lefschetz") {
        for (const ht::Partition& lambda : ht::partitions_of(n))
            std::cout << ht::partition_label(lambda) << ','
                      << ht::lefschetz_character(n, lambda, cache) << "\n";
        return 0;
    }
    if (source != "formula")
        throw CLI::ValidationError("--source", "expected lefschetz or formula");
    // homology character from the closed form: (-1)^n times the k = -1
    // cycle index Comm . SigmaPreLie + p1 (SigmaPreLie + 1)
    ht::CycleIndex sp = ht::named_series(ht::SeriesTag::SigmaPreLie, n);
    ht::CycleIndex formula =
        ht::plethysm(ht::named_series(ht::SeriesTag::Comm, n), sp) +
        ht::CycleIndex::p(n, 1) * (sp + ht::CycleIndex::constant(n, 1));
    for (const ht::Partition& lambda : ht::partitions_of(n)) {
        ht::Rational v = ht::extract_character(formula.homogeneous_part(n), lambda).at(0);
        if (n % 2 == 1) v = -v;
        std::cout << ht::partition_label(lambda) << ',' << v << "\n";
    }
    return 0;
}

int run_verify(const std::vector<std::string>& only, int nmax, int kmax, int threads,
               const Config& cfg) {
    cfg.check_homology(nmax);
    ht::PosetCache cache(cfg.hard_bound());
    ht::VerifyOptions opt;
    opt.nmax = nmax;
    opt.kmax = kmax;
    opt.threads = threads;
    bool all_pass = true;
    for (const ht::VerificationReport& r : ht::run_ledger(only, opt, cache)) {
        std::cout << ht::report_json_line(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypertree poset toolkit: enumeration, homology, cycle indices"};
    app.require_subcommand(1);
    Config cfg;
    app.add_flag("--unsafe", cfg.unsafe, "lift the default size ceilings");

    int n = 3;
    std::string variant = "plain";
    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream hypertrees and a count");
    cmd_enumerate->add_option("n", n, "number of vertices")->required();
    cmd_enumerate->add_option("--variant", variant,
                              "plain|rooted|edge-pointed|edge-pointed-rooted|hollow");

    std::string out_prefix;
    auto* cmd_poset = app.add_subcommand("poset", "Hasse diagram CSV plus element index");
    cmd_poset->add_option("n", n, "number of vertices")->required();
    cmd_poset->add_option("--out", out_prefix, "file prefix (default: stream to stdout)");

    auto* cmd_homology = app.add_subcommand("homology", "reduced homology profile as JSON");
    cmd_homology->add_option("n", n, "number of vertices")->required();

    auto* cmd_whitney = app.add_subcommand("whitney", "Whitney homology dimensions as JSON");
    cmd_whitney->add_option("n", n, "number of vertices")->required();

    std::string series_name = "Comm";
    int degree = 7;
    std::string format = "plain";
    auto* cmd_series = app.add_subcommand("series", "print a named cycle index");
    cmd_series->add_option("name", series_name, "series name (e.g. Comm, PreLie, HAL)")
        ->required();
    cmd_series->add_option("--degree", degree, "truncation degree (default 7)");
    cmd_series->add_option("--format", format, "plain|json");

    std::string source = "lefschetz";
    auto* cmd_table = app.add_subcommand("character-table",
                                         "homology character per conjugacy class (CSV)");
    cmd_table->add_option("n", n, "number of vertices")->required();
    cmd_table->add_option("--source", source, "lefschetz|formula");

    std::vector<std::string> only;
    int nmax = 5;
    int kmax = 3;
    int threads = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run the identity ledger (JSON lines)");
    cmd_verify->add_option("--only", only, "run only the named identities");
    cmd_verify->add_option("--nmax", nmax, "max species degree (default 5)");
    cmd_verify->add_option("--kmax", kmax, "max sampled chain length (default 3)");
    cmd_verify->add_option("--threads", threads, "worker threads (default: env or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    try {
        if (cmd_enumerate->parsed()) return run_enumerate(n, variant, cfg);
        if (cmd_poset->parsed()) return run_poset(n, out_prefix, cfg);
        if (cmd_homology->parsed()) return run_homology(n, cfg);
        if (cmd_whitney->parsed()) return run_whitney(n, cfg);
        if (cmd_series->parsed()) return run_series(series_name, degree, format);
        if (cmd_table->parsed()) return run_character_table(n, source, cfg);
        if (cmd_verify->parsed()) return run_verify(only, nmax, kmax, threads, cfg);
    } catch (const ht::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
