// Command line front end: construct / search / stream / verification
// workflows with scriptable text or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 nonexistence,
// 64 usage error, 70 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycsf/alpha.hpp"
#include "cycsf/constructor.hpp"
#include "cycsf/search.hpp"
#include "cycsf/stems.hpp"

using nlohmann::json;
using namespace cycsf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitNonexistence = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Options {
    std::string format = "text";
    std::string data_dir;  // overrides the embedded fixtures
};

AppendixTable resolve_appendix(const Options& opt) {
    std::string dir = opt.data_dir;
    if (dir.empty())
        if (const char* env = std::getenv("CYCSF_DATA_DIR")) dir = env;
    if (dir.empty()) return builtin_appendix();
    std::ifstream in(dir + "/appendix.txt");
    if (!in) throw std::runtime_error("cannot open " + dir + "/appendix.txt");
    return load_appendix(in);
}

json certificate_json(const SquarefreeCertificate& c) {
    json j{{"method", to_string(c.method)},
           {"tested_words", c.tested_words},
           {"verdict", c.verdict}};
    if (c.counterexample) {
        j["counterexample"] = {{"word", c.counterexample->input.str()},
                               {"square_start", c.counterexample->witness.start},
                               {"square_half", c.counterexample->witness.half}};
    }
    return j;
}

void emit(const Options& opt, const json& report) {
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // flat text rendering, stable key order
    std::function<void(const std::string&, const json&)> walk =
        [&](const std::string& prefix, const json& j) {
            if (j.is_object()) {
                for (auto it = j.begin(); it != j.end(); ++it)
                    walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
            } else if (j.is_array()) {
                std::size_t i = 0;
                for (const auto& v : j) walk(prefix + "[" + std::to_string(i++) + "]", v);
            } else {
                std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump())
                          << "\n";
            }
        };
    walk("", report);
}

int cmd_construct(const Options& opt, std::size_t n) {
    AppendixTable appendix = resolve_appendix(opt);
    json rep{{"command", "construct"}, {"n", n},
             {"appendix_checksum", appendix_checksum(appendix)}};
    try {
        CertifiedMorphism cm = construct(n, appendix);
        rep["images"] = {cm.morphism.image('0').str(), cm.morphism.image('1').str(),
                         cm.morphism.image('2').str()};
        json recipe{{"source", cm.recipe.source == ConstructionRecipe::Source::appendix
                                   ? "appendix"
                                   : "assembled"}};
        if (cm.recipe.source == ConstructionRecipe::Source::assembled) {
            recipe["q"] = cm.recipe.q;
            recipe["r"] = cm.recipe.r;
            recipe["x_length"] = cm.recipe.x_length;
            recipe["k"] = cm.recipe.k;
        }
        rep["recipe"] = recipe;
        rep["certificate"] = certificate_json(cm.certificate);
        emit(opt, rep);
        return kExitOk;
    } catch (const NonexistenceError& e) {
        rep["error"] = e.what();
        emit(opt, rep);
        return kExitNonexistence;
    }
}

int cmd_search(const Options& opt, std::size_t n, bool first, unsigned jobs,
               std::optional<std::uint64_t> budget) {
    auto outcome = search_seeds(n, first ? SearchMode::first : SearchMode::all, budget, jobs);
    json rep{{"command", "search"},
             {"n", n},
             {"nodes_explored", outcome.nodes_explored},
             {"symmetry_factor", outcome.symmetry_factor},
             {"exhaustive", outcome.exhaustive}};
    json sols = json::array();
    for (const auto& s : outcome.solutions) sols.push_back(s.str());
    rep["solutions"] = sols;
    emit(opt, rep);
    if (!outcome.exhaustive) return kExitVerificationFailure;
    if (outcome.solutions.empty()) return kExitNonexistence;
    return kExitOk;
}

int cmd_stream(const Options& opt, std::size_t n, std::size_t length,
               const std::string& cert_path) {
    StreamResult res = stream_stem_word(n, length);
    json rep{{"command", "stream"},
             {"n", n},
             {"length", res.emitted.size()},
             {"blocks", res.factorization.block_perms.size() + 1},
             {"stem", res.factorization.stem.str()},
             {"squarefree_confirmed", true}};
    if (!cert_path.empty()) {
        json cert{{"stem", res.factorization.stem.str()},
                  {"covered_length", res.factorization.covered_length}};
        json perms = json::array();
        for (const auto& p : res.factorization.block_perms) perms.push_back(p.str());
        cert["permutations"] = perms;
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot write " + cert_path);
        out << cert.dump(2) << "\n";
        rep["certificate_file"] = cert_path;
    }
    emit(opt, rep);
    return kExitOk;
}

int cmd_verify_morphism(const Options& opt, const std::vector<std::string>& images,
                        const std::string& seed) {
    Morphism m = seed.empty()
                     ? Morphism(Word::parse(images.at(0)), Word::parse(images.at(1)),
                                Word::parse(images.at(2)))
                     : Morphism::from_seed(Word::parse(seed));
    SquarefreeCertificate cert = m.uniform() ? berstel_test(m) : crochemore_test(m);
    json rep{{"command", "verify-morphism"},
             {"uniform", m.uniform()},
             {"cyclic_shift_form", m.cyclic_shift_form()},
             {"certificate", certificate_json(cert)}};
    emit(opt, rep);
    return cert.verdict ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_stem(const Options& opt, const std::string& stem_text,
                    const std::string& input_path) {
    Word stem = Word::parse(stem_text);
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open " + input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Word w = Word::parse(buf.str());
    json rep{{"command", "verify-stem"}, {"stem", stem.str()}, {"input_length", w.size()}};
    if (stem.empty() || w.size() % stem.size() != 0 || w.size() < 2 * stem.size()) {
        rep["decodes"] = false;
        rep["error"] = "input length is not a multiple (>= 2) of the stem length";
        emit(opt, rep);
        return kExitVerificationFailure;
    }
    if (w.prefix(stem.size()) != stem) {
        rep["decodes"] = false;
        rep["error"] = "input does not begin with the stem";
        emit(opt, rep);
        return kExitVerificationFailure;
    }
    auto f = decode_stem(w, stem.size());
    rep["decodes"] = f.has_value();
    if (f) {
        rep["blocks"] = f->block_perms.size() + 1;
        json perms = json::array();
        for (const auto& p : f->block_perms) perms.push_back(p.str());
        rep["permutations"] = perms;
    }
    emit(opt, rep);
    return f ? kExitOk : kExitVerificationFailure;
}

int cmd_check_alpha(const Options& opt) {
    json rep{{"command", "check-alpha"}};
    bool all = true;
    json qs = json::array();
    for (int q = 1; q <= 4; ++q) {
        AlphaReport r = verify_alpha_census(q);
        json items = json::array();
        for (const auto& c : r.items) {
            items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            all = all && c.pass;
        }
        bool iso = verify_shift_isolation(q);
        all = all && iso;
        qs.push_back({{"q", q}, {"items", items}, {"shift_isolation", iso}});
    }
    rep["alpha"] = qs;
    bool aa = verify_lemma_aa();
    all = all && aa;
    rep["lemma_aa"] = aa;
    rep["all_pass"] = all;
    emit(opt, rep);
    return all ? kExitOk : kExitVerificationFailure;
}

int cmd_check_appendix(const Options& opt, int ceiling) {
    AppendixTable appendix = resolve_appendix(opt);
    auto rep_data = cross_check_appendix(13, 122, ceiling, appendix);
    json rep{{"command", "check-appendix"},
             {"entries", rep_data.entries.size()},
             {"appendix_checksum", appendix_checksum(appendix)},
             {"all_pass", rep_data.all_pass()}};
    json failed = json::array();
    for (const auto& e : rep_data.entries)
        if (!e.certified || (e.searched && !e.regenerated)) failed.push_back(e.n);
    rep["failures"] = failed;
    emit(opt, rep);
    return rep_data.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_make_x(const Options& opt, std::size_t k) {
    BracketedX bx = make_x(k);
    json rep{{"command", "make-x"},
             {"k", k},
             {"r", bx.r.str()},
             {"x", bx.x.str()},
             {"r_length", bx.r.size()},
             {"x_length", bx.x.size()},
             {"squarefree", is_squarefree(bx.r)},
             {"avoids_010_212", avoids(bx.r, {Word("010"), Word("212")})}};
    emit(opt, rep);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-free cyclic shift morphisms over {0,1,2}: "
                 "construction, search, streaming, verification"};
    app.require_subcommand(1);
    // let --format / --data-dir appear after the subcommand name
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--data-dir", opt.data_dir, "fixture directory (default: embedded tables)");

    std::size_t n = 0, length = 0, k = 0;
    unsigned jobs = 1;
    int ceiling = 30;
    std::uint64_t budget_val = 0;
    bool first = false, all = false;
    std::string cert_path, stem_text, input_path, seed;
    std::vector<std::string> images;

    auto* c_construct = app.add_subcommand("construct", "build a certified n-uniform morphism");
    c_construct->add_option("--n", n, "image length")->required();

    auto* c_search = app.add_subcommand("search", "exhaustive seed search at length n");
    c_search->add_option("--n", n, "seed length")->required();
    c_search->add_flag("--first", first, "stop at the first solution");
    c_search->add_flag("--all", all, "collect all solutions (default)");
    c_search->add_option("--jobs", jobs, "worker count");
    auto* budget_opt = c_search->add_option("--budget", budget_val, "node budget");

    auto* c_stream = app.add_subcommand("stream", "emit a certified square-free stem word");
    c_stream->add_option("--n", n, "stem length")->required();
    c_stream->add_option("--length", length, "letters to emit")->required();
    c_stream->add_option("--certificate", cert_path, "write the permutation certificate here");

    auto* c_vm = app.add_subcommand("verify-morphism", "certify a ternary morphism square-free");
    c_vm->add_option("--images", images, "three letter images")->expected(3);
    c_vm->add_option("--seed", seed, "seed of a cyclic shift morphism");

    auto* c_vs = app.add_subcommand("verify-stem", "decode a stem factorization from a file");
    c_vs->add_option("--stem", stem_text, "stem word")->required();
    c_vs->add_option("--input", input_path, "file holding the word to decode")->required();

    app.add_subcommand("check-alpha", "run the full alpha-word property suite");

    auto* c_ca = app.add_subcommand("check-appendix", "certify and cross-check the seed table");
    c_ca->add_option("--search-ceiling", ceiling, "regenerate entries up to this n by search");

    auto* c_mx = app.add_subcommand("make-x", "build the bracketed word r = 2102012 x 2102012");
    c_mx->add_option("--k", k, "Thue-Morse factor length (>= 6)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_construct->parsed()) return cmd_construct(opt, n);
        if (c_search->parsed()) {
            std::optional<std::uint64_t> budget;
            if (budget_opt->count()) budget = budget_val;
            return cmd_search(opt, n, first && !all, jobs, budget);
        }
        if (c_stream->parsed()) return cmd_stream(opt, n, length, cert_path);
        if (c_vm->parsed()) {
            if (images.empty() && seed.empty())
                throw CLI::ValidationError("verify-morphism", "need --images or --seed");
            return cmd_verify_morphism(opt, images, seed);
        }
        if (c_vs->parsed()) return cmd_verify_stem(opt, stem_text, input_path);
        if (app.get_subcommand("check-alpha")->parsed()) return cmd_check_alpha(opt);
        if (c_ca->parsed()) return cmd_check_appendix(opt, ceiling);
        if (c_mx->parsed()) return cmd_make_x(opt, k);
        return kExitUsage;
    } catch (const NonexistenceError& e) {
        std::cerr << "nonexistence: " << e.what() << "\n";
        return kExitNonexistence;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
