// philab: classify rings, list corpora, run theorem suites, mine counterexamples.
//
// Exit codes: 0 pass, 1 definite violation, 2 inconclusive only, 3 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "philab/theoremlab/emit.hpp"

using namespace philab;

namespace {

constexpr int kExitUsage = 3;

struct Common {
    int deg_bound = 1;
    Int norm_bound = kDefaultNormBound;
    Int generator_bound = kDefaultGeneratorBound;
    Int exponent_bound = kDefaultExponentBound;
    std::size_t pair_budget = kDefaultPairBudget;
    std::size_t budget = kDefaultGaussianSamples;
    std::uint64_t seed = 42;
    unsigned workers = 0;
    std::string format = "json";
    std::string mutate;

    ClassifyOptions classify() const {
        ClassifyOptions o;
        o.deg_bound = deg_bound;
        o.norm_bound = norm_bound;
        o.generator_bound = generator_bound;
        o.exponent_bound = exponent_bound;
        o.pair_budget = pair_budget;
        o.gaussian_samples = budget;
        o.divided_samples = std::min<std::size_t>(budget, 1000);
        o.seed = seed;
        o.workers = workers;
        o.weaken_distributivity = mutate == "distributivity";
        return o;
    }
};

void add_common(CLI::App* app, Common& c, bool with_format = true) {
    app->add_option("--deg-bound", c.deg_bound, "polynomial degree bound")->check(CLI::Range(0, 8));
    app->add_option("--norm-bound", c.norm_bound, "norm bound for quadratic-order ideals")->check(CLI::PositiveNumber);
    app->add_option("--generator-bound", c.generator_bound, "generator bound for Z ideals")->check(CLI::PositiveNumber);
    app->add_option("--exponent-bound", c.exponent_bound, "exponent bound for Z_(p) ideals")->check(CLI::PositiveNumber);
    app->add_option("--pair-budget", c.pair_budget, "largest exhaustive Gaussian pair sweep")->check(CLI::PositiveNumber);
    app->add_option("--budget", c.budget, "sample budget")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--workers", c.workers, "worker threads (default: PHILAB_WORKERS or all cores)");
    if (with_format) app->add_option("--format", c.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    app->add_option("--mutate", c.mutate, "")->check(CLI::IsMember({"distributivity"}))->group("");
}

std::vector<std::string> load_specs(const std::string& file) {
    return file.empty() ? default_corpus_specs() : read_corpus_file(file);
}

int cmd_classify(const std::string& spec, const Common& c) {
    const auto ring = parse_ring(spec);
    const auto rep = classify(ring, c.classify());
    if (c.format == "markdown") {
        std::cout << to_markdown(rep);
    } else {
        auto j = to_json(rep);
        j["schema"] = kReportSchema;
        j["seed"] = c.seed;
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_corpus(const std::string& file) {
    const auto corpus = build_corpus(load_specs(file));
    for (const auto& e : corpus) {
        std::cout << e.spec << "\t" << ring_label(e.ring);
        if (const auto* f = std::get_if<RingPtr>(&e.ring)) std::cout << "\torder=" << (*f)->order();
        else std::cout << "\tinfinite";
        std::cout << "\n";
    }
    std::cout << corpus.size() << " rings\n";
    return 0;
}

std::vector<std::string> split_suites(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    if (out.size() == 1 && out[0] == "all") return suite_ids();
    return out;
}

int cmd_check(const std::vector<std::string>& suites_raw, const std::string& file, const std::string& output, const Common& c) {
    LabOptions opt;
    opt.classify = c.classify();
    opt.suites = split_suites(suites_raw);
    opt.workers = c.workers;
    validate_suites(opt.suites);
    const auto corpus = build_corpus(load_specs(file));
    const auto start = std::chrono::steady_clock::now();
    const auto lab = run_lab(corpus, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = c.format == "markdown" ? to_markdown(lab) : to_json(lab).dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        out << text;
    }
    std::cerr << "suites: " << lab.passed() << "/" << lab.suites.size() << " pass";
    for (const auto& s : lab.suites)
        if (s.status() != Status::Pass) std::cerr << "; " << s.id << " " << to_string(s.status());
    std::cerr << " (" << corpus.size() << " rings, " << secs << " s)\n";
    for (const auto& s : lab.suites)
        for (const auto& e : s.entries)
            if (e.status == Status::Fail) std::cerr << "FAIL " << s.id << " " << e.ring << ": " << e.detail << "\n";
    return lab.exit_code();
}

int cmd_search(const std::string& property, bool negate, const std::string& file, const Common& c) {
    const auto corpus = build_corpus(load_specs(file));
    const Truth want = negate ? Truth::False : Truth::True;
    std::size_t hits = 0;
    for (const auto& e : corpus) {
        const auto rep = classify(e.ring, c.classify());
        const auto it = rep.properties.find(property);
        if (it == rep.properties.end()) throw Error(ErrorCode::UnknownElement, "unknown property '" + property + "'");
        if (it->second.value != want) continue;
        ++hits;
        std::cout << e.spec << "\t" << to_string(it->second.value);
        if (!it->second.witness.empty()) std::cout << "\t" << it->second.witness;
        std::cout << "\n";
    }
    std::cout << hits << " of " << corpus.size() << " rings have " << property << " = " << to_string(want) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phi-lab: φ-rings, φ-Prüfer characterizations and their theorem suites"};
    app.require_subcommand(1);
    Common common;

    auto* classify_cmd = app.add_subcommand("classify", "classify one ring");
    std::string spec;
    classify_cmd->add_option("ringspec", spec, "e.g. Zn:8, trunc:2:2,2, divext:quad:-1:2")->required();
    add_common(classify_cmd, common);

    auto* corpus_cmd = app.add_subcommand("corpus", "list and validate a corpus");
    bool use_default = false;
    std::string file;
    auto* def = corpus_cmd->add_flag("--default", use_default, "the built-in corpus");
    corpus_cmd->add_option("--file", file, "one ring spec per line, '#' comments")->excludes(def);

    auto* check_cmd = app.add_subcommand("check", "run theorem suites over a corpus");
    std::vector<std::string> suites{"all"};
    std::string output;
    check_cmd->add_option("--suite", suites, "comma-separated suite ids or 'all'");
    check_cmd->add_option("--file", file, "corpus file (default: built-in corpus)");
    check_cmd->add_option("--output,-o", output, "write the report here instead of stdout");
    add_common(check_cmd, common);

    auto* search_cmd = app.add_subcommand("search", "list corpus rings by a property verdict");
    std::string property;
    bool negate = false;
    search_cmd->add_option("--property", property, "e.g. phi_prufer, gaussian_all_f")->required();
    search_cmd->add_flag("--negate", negate, "list rings where the property is false, with witnesses");
    search_cmd->add_option("--file", file, "corpus file (default: built-in corpus)");
    add_common(search_cmd, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(spec, common);
        if (*corpus_cmd) return cmd_corpus(file);
        if (*check_cmd) return cmd_check(suites, file, output, common);
        return cmd_search(property, negate, file, common);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::ParseError:
            case ErrorCode::UnknownElement:
            case ErrorCode::InvalidModulus:
            case ErrorCode::InvalidOrder:
            case ErrorCode::InvalidModule: return kExitUsage;
            case ErrorCode::InternalInconsistency: return 1;
            default: return 2;
        }
    }
}
