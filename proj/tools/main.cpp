#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nadrc/csv.hpp"
#include "nadrc/runner.hpp"
#include "nadrc/scenario.hpp"
#include "nadrc/svg.hpp"
#include "nadrc/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string slug(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out.empty() ? "unnamed" : out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* variant_name(nadrc::AdrcVariant v) {
    return v == nadrc::AdrcVariant::Nested ? "nested" : "conventional";
}

struct OutputOptions {
    std::string out_dir = ".";
    std::string format = "both";

    bool want_csv() const { return format == "csv" || format == "both"; }
    bool want_svg() const { return format == "svg" || format == "both"; }

    fs::path file(const std::string& stem, const char* ext) const {
        fs::create_directories(out_dir);
        return fs::path(out_dir) / (stem + ext);
    }
};

void add_output_flags(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--out-dir", out.out_dir, "Directory for generated files")
        ->capture_default_str();
    sub->add_option("--format", out.format, "Artifact format")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();
}

void emit_run(const nadrc::RunResult& res, const std::string& stem, const OutputOptions& out) {
    if (out.want_csv()) {
        const auto p = out.file(stem, ".csv");
        nadrc::export_csv(res, p.string());
        std::cout << "  wrote " << p.string() << "\n";
    }
    if (out.want_svg()) {
        const auto p = out.file(stem, ".svg");
        nadrc::export_svg(res, p.string());
        std::cout << "  wrote " << p.string() << "\n";
    }
}

void print_metrics(const nadrc::RunResult& res) {
    std::printf("  samples %zu, horizon %g s\n", res.trace.samples(), res.scenario.horizon);
    std::printf("  ITAE %.9g  ISU %.9g  ITAE(e3) %.9g", res.metrics.itae, res.metrics.isu,
                res.metrics.itae_e3);
    if (res.scenario.variant == nadrc::AdrcVariant::Nested)
        std::printf("  ITAE(zeta3) %.9g", res.metrics.itae_zeta3);
    std::printf("\n");
}

int cmd_run(const std::string& file, const OutputOptions& out, const std::uint64_t* seed) {
    nadrc::Scenario s = nadrc::parse_scenario(read_file(file));
    if (seed) s.noise.seed = *seed;
    const nadrc::RunResult res = nadrc::run_scenario(s);
    std::printf("run: %s [%s]%s\n", s.name.c_str(), variant_name(s.variant),
                s.noise.enabled ? " +noise" : "");
    print_metrics(res);
    std::string stem = slug(s.name) + "-" + variant_name(s.variant);
    if (s.noise.enabled) stem += "-noisy";
    emit_run(res, stem, out);
    return 0;
}

int cmd_compare(const std::string& file, const OutputOptions& out, const std::uint64_t* seed) {
    nadrc::Scenario s = nadrc::parse_scenario(read_file(file));
    if (seed) s.noise.seed = *seed;
    const nadrc::CompareResult cmp = nadrc::compare_variants(s);

    std::printf("compare: %s (seed %llu)\n", s.name.c_str(),
                static_cast<unsigned long long>(s.noise.seed));
    std::printf("  %-14s %12s %12s %12s %12s\n", "variant", "ITAE clean", "ITAE noisy",
                "ISU clean", "ISU noisy");
    const char* rows[2] = {"conventional", "nested"};
    for (int vi = 0; vi < 2; ++vi)
        std::printf("  %-14s %12.6g %12.6g %12.6g %12.6g\n", rows[vi], cmp.itae[vi][0],
                    cmp.itae[vi][1], cmp.isu[vi][0], cmp.isu[vi][1]);
    std::printf("  %-14s %11.4g%% %11.4g%% %11.4g%% %11.4g%%\n", "reduction",
                cmp.itae_reduction(0), cmp.itae_reduction(1), cmp.isu_reduction(0),
                cmp.isu_reduction(1));

    const char* noise_tag[2] = {"clean", "noisy"};
    if (out.want_csv())
        for (int vi = 0; vi < 2; ++vi)
            for (int nz = 0; nz < 2; ++nz) {
                const std::string stem = slug(s.name) + "-" +
                                         variant_name(cmp.runs[vi][nz].scenario.variant) + "-" +
                                         noise_tag[nz];
                const auto p = out.file(stem, ".csv");
                nadrc::export_csv(cmp.runs[vi][nz], p.string());
                std::cout << "  wrote " << p.string() << "\n";
            }
    if (out.want_svg()) {
        const auto p = out.file(slug(s.name) + "-compare", ".svg");
        nadrc::export_svg(cmp, p.string());
        std::cout << "  wrote " << p.string() << "\n";
    }
    return 0;
}

int cmd_verify_bounds(const std::string& file, const std::vector<double>& sweep) {
    const nadrc::Scenario s = nadrc::parse_scenario(read_file(file));
    const nadrc::BoundReport rep = nadrc::verify_theorem1(s, sweep);

    std::printf("bound verification: %s\n", s.name.c_str());
    std::printf("  %8s %3s %14s %14s %8s  %s\n", "omega0", "i", "bound", "steady max|e|",
                "ratio", "status");
    for (const auto& c : rep.cells)
        std::printf("  %8g %3d %14.6g %14.6g %8.3f  %s\n", c.omega0, c.i, c.theoretical,
                    c.empirical, c.ratio, c.within() ? "within" : "EXCEEDED");
    for (std::size_t i = 0; i < rep.slope.size(); ++i)
        std::printf("  log-log slope of steady |e%zu| vs omega0: %.4f\n", i + 1, rep.slope[i]);
    for (std::size_t j = 0; j < rep.omega0_sweep.size(); ++j)
        std::printf("  M estimate at omega0=%g: %.6g\n", rep.omega0_sweep[j],
                    rep.m_estimates[j]);
    std::printf("  %s\n", rep.all_within() ? "all bounds hold"
                                           : "WARNING: at least one bound exceeded");
    // a violated bound is a reported finding, not a failed run
    return 0;
}

int cmd_demo(const OutputOptions& out, bool out_dir_given) {
    const nadrc::Scenario s = nadrc::default_benchmark_scenario();
    const std::string doc = nadrc::serialize_scenario(s);
    std::cout << doc;
    if (out_dir_given) {
        const auto p = out.file(slug(s.name), ".scn");
        std::ofstream f(p, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + p.string() + "' for writing");
        f << doc;
        f.flush();
        if (!f) throw std::runtime_error("write to '" + p.string() + "' failed");
        std::cerr << "wrote " << p.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ADRC benchmark harness: conventional vs nested observer variants"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::uint64_t seed = 0;
    OutputOptions out;
    std::vector<double> sweep{5.0, 10.0, 20.0, 40.0};

    auto* run = app.add_subcommand("run", "Simulate one scenario and export its trace");
    run->add_option("scenario", scenario_file, "Scenario file")->required();
    auto* run_seed = run->add_option("--seed", seed, "Override noise.seed");
    add_output_flags(run, out);

    auto* cmp = app.add_subcommand(
        "compare", "Run both variants with and without noise; tabulate ITAE/ISU");
    cmp->add_option("scenario", scenario_file, "Scenario file")->required();
    auto* cmp_seed = cmp->add_option("--seed", seed, "Override noise.seed");
    add_output_flags(cmp, out);

    auto* vb = app.add_subcommand(
        "verify-bounds", "Sweep observer bandwidth and check convergence bounds");
    vb->add_option("scenario", scenario_file, "Scenario file")->required();
    vb->add_option("--omega0", sweep, "Bandwidth sweep values")
        ->delimiter(',')
        ->capture_default_str();

    auto* demo = app.add_subcommand("demo", "Print the committed benchmark scenario");
    auto* demo_dir = demo->add_option("--out-dir", out.out_dir,
                                      "Also write the scenario file into this directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(scenario_file, out, run_seed->count() ? &seed : nullptr);
        if (cmp->parsed())
            return cmd_compare(scenario_file, out, cmp_seed->count() ? &seed : nullptr);
        if (vb->parsed()) return cmd_verify_bounds(scenario_file, sweep);
        if (demo->parsed()) return cmd_demo(out, demo_dir->count() > 0);
    } catch (const nadrc::ScenarioError& e) {
        std::cerr << "scenario error at '" << e.key() << "': " << e.what() << "\n";
        return 1;
    } catch (const nadrc::IntegrationFault& e) {
        std::cerr << "integration fault (t=" << e.t() << ", channel " << e.channel()
                  << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
