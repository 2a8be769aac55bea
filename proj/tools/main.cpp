// Command line front end: every subcommand builds a RunConfig and hands it
// to cli::run, which writes JSON to stdout (or --out) and sets the exit code
// (0 = success / property holds, 1 = property fails, 2 = bad input).
#include <CLI11.hpp>

#include "framedual/cli.hpp"

namespace {

using framedual::cli::RunConfig;

void add_rep_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--lattice", cfg.lattice_spec,
                    "time-frequency lattice, e.g. \"L=6;gens=(2,0),(0,3)\" or \"gens=(1,0),(0,1)\"");
    cmd->add_option("--group", cfg.group_path,
                    "JSON file with a group table and multiplier (regular representation)");
    cmd->add_option("--L", cfg.L, "ambient dimension (with --lattice when the spec omits L=)");
}

void add_window_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--window", cfg.window_paths,
                    "JSON window file; repeat for several (default: seeded random vectors)");
    cmd->add_option("--seed", cfg.seed, "seed for generated windows")->capture_default_str();
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tol", cfg.tolerance, "verification tolerance")->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frame duality engine for projective representations of finite groups"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* classify = app.add_subcommand(
        "classify", "frame/Riesz/tight/orthogonal report for the orbit of a window");
    add_rep_options(classify, cfg);
    add_window_options(classify, cfg);
    add_common(classify, cfg);

    auto* dual = app.add_subcommand(
        "dual-window", "canonical dual window of a Gabor frame");
    add_rep_options(dual, cfg);
    add_window_options(dual, cfg);
    add_common(dual, cfg);

    auto* wr = app.add_subcommand(
        "wexler-raz", "biorthogonality of the window and its canonical dual on the adjoint orbit");
    add_rep_options(wr, cfg);
    add_window_options(wr, cfg);
    add_common(wr, cfg);

    auto* figa = app.add_subcommand(
        "figa", "fundamental identity relating the two lattice sums (needs 4 windows)");
    add_rep_options(figa, cfg);
    add_window_options(figa, cfg);
    add_common(figa, cfg);

    auto* duality = app.add_subcommand(
        "duality", "frame <-> Riesz sequence duality across the commutant pair");
    add_rep_options(duality, cfg);
    add_window_options(duality, cfg);
    add_common(duality, cfg);

    auto* super = app.add_subcommand(
        "superframe", "superframe duality for a tuple of windows");
    add_rep_options(super, cfg);
    add_window_options(super, cfg);
    super->add_option("--count", cfg.count, "number of generated windows")->capture_default_str();
    add_common(super, cfg);

    auto* multi = app.add_subcommand(
        "multiframe", "multi-window frame duality for a tuple of windows");
    add_rep_options(multi, cfg);
    add_window_options(multi, cfg);
    multi->add_option("--count", cfg.count, "number of generated windows")->capture_default_str();
    add_common(multi, cfg);

    auto* info = app.add_subcommand(
        "rep-info", "representation, adjoint lattice and commutant diagnostics");
    add_rep_options(info, cfg);
    add_common(info, cfg);

    auto* gen = app.add_subcommand("gen-window", "generate a window vector as JSON");
    gen->add_option("--L", cfg.L, "window length")->required();
    gen->add_option("--kind", cfg.kind, "random | gaussian-like | delta")->capture_default_str();
    gen->add_option("--seed", cfg.seed, "generation seed")->capture_default_str();
    add_common(gen, cfg);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    return framedual::cli::run(cfg);
}
