#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bhsd/pipeline.hpp"
#include "bhsd/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

using namespace bhsd;

RecipeRecord find_record(const std::vector<RecipeRecord>& recs, const std::string& id) {
    if (id.empty()) {
        if (recs.size() == 1) return recs[0];
        throw std::invalid_argument("file has " + std::to_string(recs.size()) +
                                    " records; pick one with --id");
    }
    for (const auto& r : recs)
        if (r.id == id) return r;
    throw std::invalid_argument("no record with id '" + id + "'");
}

CodeArtifact make_artifact(const RecipeRecord& rec, const RealizedCode& realized) {
    CodeArtifact art;
    art.id = rec.id;
    art.code = realized.binary;
    CodeAnalyzer an(realized.binary);
    art.profile = profile_code(an);
    return art;
}

int cmd_build(const std::string& recipe_file, const std::string& id, std::string out_path) {
    const auto recs = load_recipe_file(recipe_file);
    const RecipeRecord rec = find_record(recs, id);
    const ConditionReport rep = check_conditions(rec.recipe);
    std::cout << "conditions: " << rep.summary() << "\n";
    if (!rep.ok()) return kExitMismatch;
    const RealizedCode realized = realize(rec);
    const CodeArtifact art = make_artifact(rec, realized);
    if (out_path.empty()) out_path = rec.id + ".code";
    write_artifact_file(out_path, art);
    std::cout << rec.id << ": wrote [" << art.code.length() << "," << art.code.dimension() << ","
              << art.profile.min_distance << "] artifact to " << out_path << "\n";
    return kExitOk;
}

void print_profile(const std::string& id, const BinaryCode& code, const WeightProfile& p) {
    std::cout << id << ": [" << code.length() << "," << code.dimension() << ","
              << p.min_distance << "] Type " << (p.type_two ? "II" : "I");
    if (p.family != Family::None) std::cout << ", " << family_name(p.family);
    if (p.beta) std::cout << ", beta=" << *p.beta;
    if (p.gamma) std::cout << ", gamma=" << *p.gamma;
    if (p.alpha) std::cout << ", alpha=" << *p.alpha;
    std::cout << "\n";
    for (const auto& [w, c] : p.counts) std::cout << "  A" << w << " = " << c << "\n";
}

int cmd_verify(const std::string& artifact_file) {
    const CodeArtifact art = read_artifact_file(artifact_file);
    CodeAnalyzer an(art.code);
    const WeightProfile fresh = profile_code(an);
    bool ok = art.code.is_self_dual();
    if (!ok) std::cout << "generator is not self-dual\n";
    auto mismatch = [&](const std::string& what, auto stored, auto computed) {
        std::cout << what << ": stored " << stored << ", recomputed " << computed << "\n";
        ok = false;
    };
    if (art.profile.min_distance && art.profile.min_distance != fresh.min_distance)
        mismatch("min_distance", art.profile.min_distance, fresh.min_distance);
    if (art.profile.family != Family::None && art.profile.family != fresh.family)
        mismatch("family", family_name(art.profile.family), family_name(fresh.family));
    if (art.profile.beta && art.profile.beta != fresh.beta)
        mismatch("beta", *art.profile.beta, fresh.beta.value_or(-1));
    if (art.profile.gamma && art.profile.gamma != fresh.gamma)
        mismatch("gamma", *art.profile.gamma, fresh.gamma.value_or(-1));
    if (art.profile.alpha && art.profile.alpha != fresh.alpha)
        mismatch("alpha", *art.profile.alpha, fresh.alpha.value_or(-1));
    for (const auto& [w, c] : art.profile.counts) {
        const long long computed = an.count_weight(w);
        if (computed != c) mismatch("A" + std::to_string(w), c, computed);
    }
    std::cout << (ok ? "verify: ok\n" : "verify: MISMATCH\n");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_analyze(const std::string& artifact_file, const std::vector<int>& weights, bool i16,
                bool design, int design_w, int design_t, int trials, uint64_t seed, int threads) {
    const CodeArtifact art = read_artifact_file(artifact_file);
    CodeAnalyzer an(art.code);
    WeightProfile p = profile_code(an);
    for (int w : weights) p.counts[w] = an.count_weight(w);
    print_profile(art.id.empty() ? artifact_file : art.id, art.code, p);
    if (i16) {
        const PairDistanceInvariant inv = i16_invariant(an, threads);
        std::cout << "  I16 = " << inv.i16 << " (" << inv.word_count << " words, "
                  << inv.pair_count << " pairs)\n";
    }
    if (design) {
        const auto lambda = design_lambda(an, design_w, design_t, trials, seed);
        if (lambda)
            std::cout << "  design lambda(" << design_t << "-subset, w=" << design_w
                      << ") = " << *lambda << " on " << trials << " trials\n";
        else {
            std::cout << "  not a " << design_t << "-design at weight " << design_w
                      << " (count varies)\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int cmd_extend(const std::string& recipe_file, const std::string& id, const std::string& c_sym,
               const std::string& x_str, std::string out_path) {
    const auto recs = load_recipe_file(recipe_file);
    RecipeRecord rec = find_record(recs, id);
    const Ring ext_ring = rec.recipe.ring == Ring::F4U ? Ring::F2U : rec.recipe.ring;
    const Vec cv = vec_from_string(ext_ring, c_sym);
    if (cv.size() != 1) throw std::invalid_argument("--c must be a single symbol");
    rec.ext_c = cv.at(0);
    rec.ext_x = vec_from_string(ext_ring, x_str);
    rec.expect = {};
    rec.id += "+ext";
    const RealizedCode realized = realize(rec);
    const CodeArtifact art = make_artifact(rec, realized);
    if (out_path.empty()) out_path = rec.id + ".code";
    write_artifact_file(out_path, art);
    print_profile(rec.id, art.code, art.profile);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_neighbor(const std::string& artifact_file, const std::string& x_str,
                 std::string out_path) {
    const CodeArtifact art = read_artifact_file(artifact_file);
    const auto x = expand_neighbor_x(x_str, art.code.length());
    const NeighborResult nb = neighbor(art.code, x);
    if (nb.x_was_in_code) std::cout << "note: x already lies in the code; neighbor equals it\n";
    CodeArtifact out;
    out.id = art.id + "+nb";
    out.code = nb.code;
    CodeAnalyzer an(nb.code);
    out.profile = profile_code(an);
    if (out_path.empty()) out_path = out.id + ".code";
    write_artifact_file(out_path, out);
    print_profile(out.id, out.code, out.profile);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_search(SearchConfig cfg, const std::string& manifest, int workers,
               const std::string& hit_log) {
    if (!manifest.empty()) cfg = load_search_manifest(manifest);
    const auto hits = dedupe_hits(run_search(cfg, workers));
    std::ofstream log;
    if (!hit_log.empty()) {
        log.open(hit_log, std::ios::app);
        if (!log) throw std::invalid_argument("cannot open hit log: " + hit_log);
    }
    for (const auto& hit : hits) {
        std::cout << serialize_record(hit.record) << "\n";
        if (log) log << serialize_record(hit.record) << "\n";
    }
    std::cout << "# " << hits.size() << " distinct hits\n";
    return kExitOk;
}

int cmd_reproduce(const std::string& what, const std::string& fixtures, bool slow, int threads) {
    std::vector<std::string> names;
    if (what == "all")
        names = {"table1", "table2", "table3",    "table4", "table5",
                 "table6", "table7", "example4_1", "table8"};
    else
        names = {what};
    int failed = 0, low_conf_missed = 0, total = 0;
    for (const auto& name : names) {
        const std::string path = fixtures + "/" + name + ".recipes";
        const auto recs = load_recipe_file(path);
        int pass = 0;
        for (const auto& rec : recs) {
            ++total;
            const RowCheck rc = verify_record(rec, slow, threads);
            if (rc.pass) {
                ++pass;
                std::cout << name << " " << rc.id << ": ok " << rc.detail << "\n";
            } else if (rc.low_confidence) {
                ++low_conf_missed;
                std::cout << name << " " << rc.id << ": MISMATCH (low-confidence transcription)"
                          << rc.detail << "\n";
            } else {
                ++failed;
                std::cout << name << " " << rc.id << ": MISMATCH" << rc.detail << "\n";
            }
        }
        std::cout << name << ": " << pass << "/" << recs.size() << " rows pass\n";
    }
    std::cout << "total: " << (total - failed - low_conf_missed) << "/" << total << " rows pass";
    if (low_conf_missed)
        std::cout << " (" << low_conf_missed << " low-confidence rows missed, not fatal)";
    std::cout << "\n";
    return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual code constructions from a Baumert-Hall array"};
    app.require_subcommand(1);

    std::string recipe_file, artifact_file, id, out_path, x_str, c_sym;
    std::string fixtures = "fixtures", manifest, hit_log, what;
    std::vector<int> weights;
    bool slow = false, i16 = false, design = false;
    int threads = 0, workers = 1, trials = 100, design_w = 16, design_t = 3;
    uint64_t seed = 0;
    bool seed_set = false;

    auto* build = app.add_subcommand("build", "Build a recipe into a code artifact");
    build->add_option("recipe", recipe_file, "recipe file")->required();
    build->add_option("--id", id, "record id (required for multi-record files)");
    build->add_option("-o,--out", out_path, "artifact output path");

    auto* verify = app.add_subcommand("verify", "Recompute and check a code artifact");
    verify->add_option("artifact", artifact_file, "artifact file")->required();

    auto* analyze = app.add_subcommand("analyze", "Profile a code artifact");
    analyze->add_option("artifact", artifact_file, "artifact file")->required();
    analyze->add_option("--weights", weights, "extra A_w weights to count")->delimiter(',');
    analyze->add_flag("--i16", i16, "pairwise-distance invariant over the weight-16 words");
    analyze->add_flag("--design", design, "constant-coverage design check");
    analyze->add_option("--design-weight", design_w, "design check word weight");
    analyze->add_option("--design-t", design_t, "design check subset size");
    analyze->add_option("--trials", trials, "design check trials");
    analyze->add_option("--seed", seed, "design check RNG seed");
    analyze->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* extend = app.add_subcommand("extend", "Building-up extension of a recipe's code");
    extend->add_option("recipe", recipe_file, "recipe file of the base code")->required();
    extend->add_option("--id", id, "base record id");
    extend->add_option("--c", c_sym, "unit c with c^2 = 1")->required();
    extend->add_option("--X", x_str, "extension vector over the extension ring")->required();
    extend->add_option("-o,--out", out_path, "artifact output path");

    auto* nb = app.add_subcommand("neighbor", "Neighbor of a self-dual code artifact");
    nb->add_option("artifact", artifact_file, "artifact file")->required();
    nb->add_option("--x", x_str, "binary x vector (full length, or lower half)")->required();
    nb->add_option("-o,--out", out_path, "artifact output path");

    SearchConfig cfg;
    cfg.lambda_candidates.clear();
    std::string ring_name_s = "F4U", variant_s = "theorem31", lambdas = "1", mode_s = "random";
    std::string family_s;
    auto* search = app.add_subcommand("search", "Scan recipe space for extremal codes");
    search->add_option("--manifest", manifest, "search manifest file (overrides flags)");
    search->add_option("--ring", ring_name_s, "F2 | F2U | F4U");
    search->add_option("--variant", variant_s, "theorem31 | amicable | symmetric");
    search->add_option("--lambda", lambdas, "comma-separated lambda digits");
    search->add_option("--n", cfg.n, "circulant block size");
    search->add_option("--mode", mode_s, "random | exhaustive");
    search->add_option("--seed", seed, "RNG seed (required for random mode)");
    search->add_option("--budget", cfg.budget, "max candidates");
    search->add_option("--ranges", cfg.ranges, "sub-seed ranges (partitioning granularity)");
    search->add_option("--target-length", cfg.target.length, "binary code length");
    search->add_option("--target-d", cfg.target.min_distance, "minimum distance");
    search->add_option("--target-family", family_s, "required enumerator family");
    search->add_option("--workers", workers, "worker threads");
    search->add_option("--hit-log", hit_log, "append hits to this recipe file");
    search->add_flag("--i16-fingerprint", cfg.i16_fingerprint,
                     "fingerprint length-80 hits by pairwise-distance invariant");

    auto* rep = app.add_subcommand("reproduce", "Rebuild published tables and check them");
    rep->add_option("table", what, "table1..table8 | example4_1 | all")->required();
    rep->add_option("--fixtures", fixtures, "fixture directory");
    rep->add_flag("--slow", slow, "also check the heavy invariants");
    rep->add_option("--threads", threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (build->parsed()) return cmd_build(recipe_file, id, out_path);
        if (verify->parsed()) return cmd_verify(artifact_file);
        if (analyze->parsed())
            return cmd_analyze(artifact_file, weights, i16, design, design_w, design_t, trials,
                               seed, threads);
        if (extend->parsed()) return cmd_extend(recipe_file, id, c_sym, x_str, out_path);
        if (nb->parsed()) return cmd_neighbor(artifact_file, x_str, out_path);
        if (search->parsed()) {
            seed_set = search->count("--seed") > 0;
            if (manifest.empty()) {
                cfg.ring = ring_from_name(ring_name_s);
                cfg.variant = variant_from_name(variant_s);
                std::istringstream ls(lambdas);
                std::string tok;
                while (std::getline(ls, tok, ','))
                    if (!tok.empty()) cfg.lambda_candidates.push_back(hex_decode(tok[0], cfg.ring));
                if (!family_s.empty()) cfg.target.family = family_from_name(family_s);
                if (mode_s == "random")
                    cfg.mode = SearchMode::Random;
                else if (mode_s == "exhaustive")
                    cfg.mode = SearchMode::Exhaustive;
                else
                    throw std::invalid_argument("--mode must be random or exhaustive");
                if (cfg.mode == SearchMode::Random && !seed_set)
                    throw std::invalid_argument("random mode requires an explicit --seed");
                cfg.seed = seed;
            }
            return cmd_search(cfg, manifest, workers, hit_log);
        }
        if (rep->parsed()) return cmd_reproduce(what, fixtures, slow, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitInputError;
}
