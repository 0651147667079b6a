// howe4: enumerate superspecial Howe curves of genus 4 in small odd
// characteristic and classify their isomorphism classes.

#include "howe/prng.hpp"
#include "howe/serialize.hpp"
#include "howe/worker_pool.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace howe;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<u32> primes_in(u32 lo, u32 hi) {
    std::vector<u32> ps;
    for (u32 n = std::max(lo, 2u); n <= hi; ++n)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

int run_catalog(u32 p) {
    FieldCtxPtr ctx = make_base_field(p);
    RunHeader h{"catalog", p, global_seed(), false};
    std::cout << header_line(h, ctx) << "\n";
    for (const auto& en : build_catalog(ctx)) std::cout << catalog_line(en) << "\n";
    return 0;
}

int run_enumerate(u32 p, bool ordered, bool early, unsigned jobs,
                  const std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOptions opt;
    opt.ordered_pairs = ordered;
    opt.early_stop = early;
    opt.jobs = jobs;
    auto tuples = enumerate_howe(p, opt);
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error("enumerate: cannot open output file " + out);
    RunHeader h{"howe_params", p, global_seed(), ordered};
    write_params_file(os, h, tuples);
    std::cerr << "enumerate p=" << p << ": " << tuples.size() << " tuples in "
              << seconds_since(t0) << " s\n";
    return 0;
}

int run_classify(const std::string& in, const std::string& out, unsigned jobs) {
    std::ifstream is(in, std::ios::binary);
    if (!is) throw Error("classify: cannot open input file " + in);
    auto [h, tuples] = read_params_file(is);
    set_global_seed(h.seed);
    auto t0 = std::chrono::steady_clock::now();
    auto records = parallel_map<CurveRecord>(
        tuples.size(), jobs, [&](std::size_t i) { return build_record(tuples[i]); });
    IsoClassification cls = classify(records);
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error("classify: cannot open output file " + out);
    RunHeader ch{"classification", h.p, h.seed, h.ordered_pairs};
    write_classification_file(os, ch, cls);
    std::cerr << "classify p=" << h.p << ": " << cls.num_classes() << " classes of "
              << tuples.size() << " curves in " << seconds_since(t0) << " s\n";
    return 0;
}

int run_table(u32 pmin, u32 pmax, unsigned jobs) {
    std::cout << "p\tcardH\tn\tt_search\tt_classify\n";
    for (u32 p : primes_in(std::max(pmin, 5u), pmax)) {
        auto t0 = std::chrono::steady_clock::now();
        SearchOptions opt;
        opt.jobs = jobs;
        auto tuples = enumerate_howe(p, opt);
        double t_search = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto records = parallel_map<CurveRecord>(
            tuples.size(), jobs,
            [&](std::size_t i) { return build_record(tuples[i]); });
        IsoClassification cls = classify(records);
        double t_classify = seconds_since(t0);
        std::cout << p << "\t" << tuples.size() << "\t" << cls.num_classes() << "\t"
                  << t_search << "\t" << t_classify << "\n";
        std::cout.flush();
    }
    return 0;
}

int run_exists(u32 pmin, u32 pmax) {
    for (u32 p : primes_in(std::max(pmin, 5u), pmax)) {
        SearchOptions opt;
        opt.early_stop = true;
        auto w = enumerate_howe(p, opt);
        if (w.empty())
            std::cout << p << "\tnone\n";
        else
            std::cout << p << "\t" << params_line(w.front()) << "\n";
        std::cout.flush();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superspecial Howe curve enumeration and classification"};
    app.require_subcommand(1);

    u32 p = 0, pmin = 5, pmax = 0;
    u64 seed = 0;
    unsigned jobs = 1;
    bool ordered = false, early = false;
    std::string in_file, out_file;

    auto* cat = app.add_subcommand("catalog", "supersingular curve catalog as JSON lines");
    cat->add_option("--p", p, "prime p > 3")->required();

    auto* enu = app.add_subcommand("enumerate", "list superspecial Howe curve parameters");
    enu->add_option("--p", p, "prime p > 3")->required();
    enu->add_flag("--ordered-pairs", ordered, "iterate ordered Weierstrass pairs");
    enu->add_flag("--early-stop", early, "stop after the first witness");
    enu->add_option("--seed", seed, "seed for the randomized factorization steps");
    enu->add_option("--jobs", jobs, "worker threads");
    enu->add_option("--out", out_file, "output file (JSON lines)")->required();

    auto* cls = app.add_subcommand("classify", "isomorphism classes of an enumeration");
    cls->add_option("--in", in_file, "input file from enumerate")->required();
    cls->add_option("--out", out_file, "output file (JSON lines)")->required();
    cls->add_option("--jobs", jobs, "worker threads");

    auto* tab = app.add_subcommand("table", "curve and class counts per prime (TSV)");
    tab->add_option("--p-min", pmin, "first prime")->required();
    tab->add_option("--p-max", pmax, "last prime")->required();
    tab->add_option("--jobs", jobs, "worker threads");
    tab->add_option("--seed", seed, "seed for the randomized factorization steps");

    auto* exi = app.add_subcommand("exists", "one witness per prime in the range");
    exi->add_option("--p-min", pmin, "first prime")->required();
    exi->add_option("--p-max", pmax, "last prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_global_seed(seed);
        if (app.got_subcommand(cat)) return run_catalog(p);
        if (app.got_subcommand(enu)) return run_enumerate(p, ordered, early, jobs, out_file);
        if (app.got_subcommand(cls)) return run_classify(in_file, out_file, jobs);
        if (app.got_subcommand(tab)) return run_table(pmin, pmax, jobs);
        if (app.got_subcommand(exi)) return run_exists(pmin, pmax);
    } catch (const CompositeOrSmallPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
