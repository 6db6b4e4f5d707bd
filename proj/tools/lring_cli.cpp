// lring: generate and cache the universal polynomials Q_n, P_n, P_{n,m},
// print them in canonical text or JSON form, and run the verification
// suites over the built-in lambda-ring and lambda-module instances.
//
// Exit codes: 0 all checks pass, 1 check failure or corrupted data,
// 2 usage or cap errors.

#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "lring/lring.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"exact lambda-ring computer algebra: universal polynomials and axiom checks"};
    app.require_subcommand(1);
    app.fallthrough();

    lring::RunConfig cfg;
    std::string output = "text";
    app.add_option("--cache-dir", cfg.cache_dir,
                   "directory for the universal polynomial cache")
        ->envname("LRING_CACHE_DIR");
    app.add_option("--seed", cfg.seed, "seed for the deterministic sample sets");
    app.add_option("--newton-cap", cfg.newton_cap, "largest n for Q_n");
    app.add_option("--product-cap", cfg.product_cap, "largest n for P_n");
    app.add_option("--composition-cap", cfg.composition_cap, "largest nm for P_{n,m}");
    app.add_option("--output", output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--force", cfg.force, "override the feasibility caps");

    auto* gen = app.add_subcommand("gen", "generate one universal polynomial and print it");
    std::string kind;
    unsigned gen_n = 0;
    long long gen_m = -1;
    gen->add_option("kind", kind, "q | p | pnm")
        ->required()
        ->check(CLI::IsMember({"q", "p", "pnm"}));
    gen->add_option("n", gen_n, "index n")->required();
    gen->add_option("m", gen_m, "index m (pnm only)");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite;
    check->add_option("suite", suite, "universal | lambda | module | all")
        ->required()
        ->check(CLI::IsMember({"universal", "lambda", "module", "all"}));
    check->add_option("--ring", cfg.ring_filter,
                      "restrict to one ring descriptor (binomial-int | line-group-ring:Z/2xZ/3)");
    check->add_option("--module", cfg.module_filter, "restrict to one module descriptor (adams)");

    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the cache directory");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action, "list | clear")
        ->required()
        ->check(CLI::IsMember({"list", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<lring::UniversalCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
    lring::UniversalContext ctx(cfg.universal_options(), cache ? &*cache : nullptr);

    if (gen->parsed()) {
        if (kind == "pnm" && gen_m < 1) {
            std::cerr << "gen pnm requires two indices: n m\n";
            return 2;
        }
        const lring::UniversalPoly& u =
            kind == "q"   ? ctx.q(gen_n)
            : kind == "p" ? ctx.p(gen_n)
                          : ctx.pnm(gen_n, static_cast<unsigned>(gen_m));
        if (output == "json")
            std::cout << lring::universal_to_json(u).dump(1) << "\n";
        else
            std::cout << u.body.to_text() << "\n";
        return 0;
    }

    if (check->parsed()) {
        auto reports = lring::run_suite(suite, ctx, cfg);
        if (output == "json")
            std::cout << lring::report_document(cfg, suite, reports).dump(2) << "\n";
        else
            std::cout << lring::report_text(cfg, suite, reports);
        return lring::all_pass(reports) ? 0 : 1;
    }

    // cache subcommand
    if (!cache) {
        std::cerr << "cache " << cache_action
                  << " requires --cache-dir or LRING_CACHE_DIR\n";
        return 2;
    }
    if (cache_action == "list") {
        for (const auto& key : cache->list()) std::cout << key << "\n";
    } else {
        std::cout << "removed " << cache->clear() << " entries\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lring::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lring::RouteMismatch& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const lring::CorruptCache& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
