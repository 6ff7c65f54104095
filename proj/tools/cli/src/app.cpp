#include "zstr_cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "zstr/errors.hpp"
#include "zstr/zstr.hpp"
#include "zstr_cli/cache.hpp"
#include "zstr_cli/errors.hpp"
#include "zstr_cli/output.hpp"
#include "zstr_cli/presets.hpp"
#include "zstr_cli/ranges.hpp"

namespace zstr::cli {

namespace {

struct GlobalOptions {
    double precision = 0.0;
    std::string strategy;
    bool compensated_phase = false;
    std::string cache_dir;
    bool no_cache = false;
    std::string config;

    CLI::Option* precision_opt = nullptr;
    CLI::Option* strategy_opt = nullptr;
    CLI::Option* compensated_opt = nullptr;
    CLI::Option* cache_dir_opt = nullptr;
};

struct RenderOptions {
    std::string format = "csv";
    int width = 800;
    int height = 800;
    double dot_radius = 2.0;
    bool free_axes = false;
    bool subtract_one = false;

    [[nodiscard]] RenderSpec spec() const {
        return {parse_format(format), width, height, !free_axes, dot_radius, subtract_one};
    }
};

std::string canonical(const RenderSpec& r) {
    return fmt::format("{}|{}x{}|eq={}|r={:a}|sub1={}", r.format == Format::Csv ? "csv" : "svg", r.width, r.height,
                       r.equal_axes, r.dot_radius, r.subtract_one);
}

std::string canonical(const PrecisionSpec& s) {
    return fmt::format("p={:a}|{}|comp={}", s.p, to_string(s.strategy), s.compensated_phase);
}

void add_render_options(CLI::App* cmd, RenderOptions& r) {
    cmd->add_option("--format", r.format, "csv or svg")->capture_default_str();
    cmd->add_option("--width", r.width, "SVG width in pixels")->capture_default_str();
    cmd->add_option("--height", r.height, "SVG height in pixels")->capture_default_str();
    cmd->add_option("--dot-radius", r.dot_radius, "SVG dot radius in pixels")->capture_default_str();
    cmd->add_flag("--free-axes", r.free_axes, "scale the two SVG axes independently");
    cmd->add_flag("--subtract-one", r.subtract_one, "shift the origin to (1, 0)");
}

class Runner {
public:
    Runner(const Settings& settings, bool use_cache, std::ostream& out)
        : settings_(settings), out_(out) {
        if (use_cache && settings.cache_dir) cache_.emplace(*settings.cache_dir);
    }

    [[nodiscard]] const PrecisionSpec& spec() const { return settings_.spec; }

    std::string cached(const std::string& request, const std::function<std::string()>& compute) {
        if (!cache_) return compute();
        const std::string key = ResultCache::key_for(request + "|" + canonical(settings_.spec));
        if (auto hit = cache_->load(key)) return std::move(hit->payload);
        std::string payload = compute();
        cache_->store(key, payload);
        return payload;
    }

    void emit(const std::string& payload, const std::string& output) {
        if (output.empty()) {
            out_ << payload;
            return;
        }
        std::ofstream file(output, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError(fmt::format("cannot open {} for writing", output));
        file << payload;
        if (!file.flush()) throw IoError(fmt::format("write to {} failed", output));
    }

private:
    Settings settings_;
    std::ostream& out_;
    std::optional<ResultCache> cache_;
};

std::vector<TString> build(const RangeSpec& t, const RangeSpec& sigma, std::optional<std::int64_t> terms,
                           const PrecisionSpec& spec) {
    const SigmaGrid grid(sigma.start, sigma.stop, sigma.step);
    StringFamily family = terms ? build_family_truncated(t.start, t.stop, t.step, grid, TruncationPlan{*terms},
                                                         spec.compensated_phase)
                                : build_family(t.start, t.stop, t.step, grid, spec);
    return std::move(family.strings);
}

std::optional<std::int64_t> terms_option(std::int64_t terms, const CLI::Option* opt) {
    if (opt->count() == 0) return std::nullopt;
    if (terms < 1) throw UsageError("--terms must be at least 1");
    return terms;
}

void reject_terms_with_accelerated(const GlobalOptions& g, const CLI::Option* terms_opt) {
    if (terms_opt->count() > 0 && g.strategy_opt->count() > 0 && parse_strategy(g.strategy) == Strategy::Accelerated) {
        throw UsageError("--terms fixes a partial sum and cannot be combined with --strategy accelerated");
    }
}

std::string describe(const FlareReport& r) {
    switch (r.kind) {
        case FlareKind::Parallel:
            return fmt::format("Parallel direction={:.6g} spread={:.6g}\n", *r.direction_deg, r.spread_deg);
        case FlareKind::Radial:
            return fmt::format("Radial center=({},{}) residual={:.6g} spread={:.6g}\n",
                               fmt::format("{:.6g}", r.center->real() == 0.0 ? 0.0 : r.center->real()),
                               fmt::format("{:.6g}", r.center->imag() == 0.0 ? 0.0 : r.center->imag()), r.residual,
                               r.spread_deg);
        case FlareKind::Jumble:
            return fmt::format("Jumble spread={:.6g} residual={:.6g}\n", r.spread_deg, r.residual);
    }
    return {};
}

std::string preset_listing() {
    std::string out = "figure,t,sigma,evaluator,caption\n";
    for (const auto& p : figure_presets()) {
        const std::string evaluator = !p.unavailable.empty() ? "unavailable"
                                      : p.fixed_terms       ? fmt::format("sum n={}", *p.fixed_terms)
                                                            : "eta";
        out += fmt::format("{},{}:{}:{},{}:{}:{},{},\"{}\"\n", p.id, format_number(p.t.start), format_number(p.t.stop),
                           format_number(p.t.step), format_number(p.sigma.start), format_number(p.sigma.stop),
                           format_number(p.sigma.step), evaluator, p.caption);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"Strings of the Dirichlet eta function: evaluation, zero scans, flares and figures"};
    app.name("zstr");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    g.precision_opt = app.add_option("--precision", g.precision, "decimal digits p (default 6)");
    g.strategy_opt = app.add_option("--strategy", g.strategy, "accelerated or truncated")
                         ->check(CLI::IsMember({"accelerated", "truncated"}, CLI::ignore_case));
    g.compensated_opt = app.add_flag("--compensated-phase,!--no-compensated-phase", g.compensated_phase,
                                     "reduce t ln n mod 2 pi in double-word arithmetic");
    g.cache_dir_opt = app.add_option("--cache-dir", g.cache_dir, "result cache directory");
    app.add_flag("--no-cache", g.no_cache, "ignore any configured cache");
    app.add_option("--config", g.config, "key=value settings file");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "print eta (or zeta) at one point as 're im'");
    double eval_sigma = 0.0;
    double eval_t = 0.0;
    bool eval_zeta = false;
    std::int64_t eval_terms = 0;
    eval_cmd->add_option("--sigma", eval_sigma)->required();
    eval_cmd->add_option("--t", eval_t)->required();
    auto* eval_zeta_opt = eval_cmd->add_flag("--zeta", eval_zeta, "divide by 1 - 2^(1-s)");
    auto* eval_terms_opt = eval_cmd->add_option("--terms", eval_terms, "fixed partial sum length")->excludes(eval_zeta_opt);

    // string / family
    struct StringArgs {
        std::string t;
        std::string sigma;
        std::string output;
        std::int64_t terms = 0;
        CLI::Option* terms_opt = nullptr;
        RenderOptions render;
    };
    StringArgs string_args;
    StringArgs family_args;
    auto* string_cmd = app.add_subcommand("string", "one t string");
    auto* family_cmd = app.add_subcommand("family", "strings for t = start:stop:step");
    for (auto [cmd, a] : {std::pair{string_cmd, &string_args}, std::pair{family_cmd, &family_args}}) {
        cmd->add_option("--t", a->t, cmd == string_cmd ? "t value" : "start:stop:step")->required();
        cmd->add_option("--sigma", a->sigma, "sigma grid start:stop:step")->required();
        cmd->add_option("-o,--output", a->output, "output file (default stdout)");
        a->terms_opt = cmd->add_option("--terms", a->terms, "fixed partial sum length");
        add_render_options(cmd, a->render);
    }

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "scan for zeros on sigma = 1/2 and sigma = 1");
    std::string zeros_t;
    std::string zeros_kind = "all";
    std::string zeros_output;
    ScanConfig scan;
    zeros_cmd->add_option("--t", zeros_t, "lo:hi")->required();
    zeros_cmd->add_option("--step", scan.step, "grid step in t")->capture_default_str();
    zeros_cmd->add_option("--threshold", scan.detect_threshold, "largest grid |eta| refined")->capture_default_str();
    zeros_cmd->add_option("--tolerance", scan.refine_tolerance, "refinement tolerance in t")->capture_default_str();
    zeros_cmd->add_option("--kind", zeros_kind, "all, trivial or nontrivial")
        ->check(CLI::IsMember({"all", "trivial", "nontrivial"}))
        ->capture_default_str();
    zeros_cmd->add_option("-o,--output", zeros_output, "output file (default stdout)");

    // flare
    auto* flare_cmd = app.add_subcommand("flare", "classify a family as parallel, radial or jumble");
    std::string flare_t;
    std::string flare_sigma;
    std::string flare_window;
    FlareThresholds thresholds;
    flare_cmd->add_option("--t", flare_t, "start:stop:step")->required();
    flare_cmd->add_option("--sigma", flare_sigma, "sigma grid start:stop:step")->required();
    flare_cmd->add_option("--window", flare_window, "sigma window lo:hi (default: the whole grid)");
    flare_cmd->add_option("--parallel-deg", thresholds.parallel_spread_deg)->capture_default_str();
    flare_cmd->add_option("--radial-residual", thresholds.radial_residual)->capture_default_str();

    // crossings
    auto* crossings_cmd = app.add_subcommand("crossings", "self-crossings of one t string");
    std::string crossings_sigma;
    std::string crossings_output;
    double crossings_t = 0.0;
    double crossings_gap = 0.0;
    crossings_cmd->add_option("--t", crossings_t)->required();
    crossings_cmd->add_option("--sigma", crossings_sigma, "sigma grid start:stop:step")->required();
    crossings_cmd->add_option("--gap", crossings_gap, "report near misses closer than this")->capture_default_str();
    crossings_cmd->add_option("-o,--output", crossings_output, "output file (default stdout)");

    // render-figure
    auto* figure_cmd = app.add_subcommand("render-figure", "render a published figure from its preset");
    int figure_id = 0;
    bool figure_list = false;
    std::string figure_output;
    RenderOptions figure_render;
    figure_render.format = "svg";
    auto* figure_list_opt = figure_cmd->add_flag("--list", figure_list, "list the presets");
    figure_cmd->add_option("--figure", figure_id, "figure number")->excludes(figure_list_opt);
    figure_cmd->add_option("-o,--output", figure_output, "output file (default stdout)");
    add_render_options(figure_cmd, figure_render);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        SettingLayer flags;
        if (g.precision_opt->count()) flags.precision = g.precision;
        if (g.strategy_opt->count()) flags.strategy = parse_strategy(g.strategy);
        if (g.compensated_opt->count()) flags.compensated_phase = g.compensated_phase;
        if (g.cache_dir_opt->count()) flags.cache_dir = g.cache_dir;
        const SettingLayer file = g.config.empty() ? SettingLayer{} : layer_from_config_file(g.config);
        const Settings settings = resolve_settings(flags, layer_from_environment(env), file);
        if (!(settings.spec.p > 0.0)) throw UsageError("--precision must be positive");
        Runner runner(settings, !g.no_cache, out);
        const PrecisionSpec& spec = runner.spec();

        if (eval_cmd->parsed()) {
            reject_terms_with_accelerated(g, eval_terms_opt);
            const EtaArgument s(eval_sigma, eval_t);
            ComplexValue v;
            if (const auto terms = terms_option(eval_terms, eval_terms_opt)) {
                v = eta_truncated(s, TruncationPlan{*terms}, spec.compensated_phase);
            } else {
                v = eval_zeta ? zeta_from_eta(s, spec) : eta(s, spec);
            }
            out << format_number(v.real()) << ' ' << format_number(v.imag()) << '\n';
        } else if (string_cmd->parsed() || family_cmd->parsed()) {
            const bool single = string_cmd->parsed();
            const StringArgs& a = single ? string_args : family_args;
            const char* op = single ? "string" : "family";
            reject_terms_with_accelerated(g, a.terms_opt);
            RangeSpec t_range;
            if (single) {
                const double t = parse_real(a.t, "--t");
                t_range = {t, t, 1.0};
            } else {
                t_range = parse_range(a.t, "--t");
            }
            const RangeSpec sigma = parse_range(a.sigma, "--sigma");
            const auto terms = terms_option(a.terms, a.terms_opt);
            const RenderSpec render_spec = a.render.spec();
            const std::string request = fmt::format("{}|t={}|sigma={}|terms={}|{}", op, canonical(t_range),
                                                    canonical(sigma), terms.value_or(0), canonical(render_spec));
            const std::string payload = runner.cached(request, [&] {
                const auto strings = build(t_range, sigma, terms, spec);
                return render(strings, render_spec, fmt::format("eta {} t={} sigma={}", op, a.t, a.sigma));
            });
            runner.emit(payload, a.output);
        } else if (zeros_cmd->parsed()) {
            const Interval t = parse_interval(zeros_t, "--t");
            scan.t_min = t.lo;
            scan.t_max = t.hi;
            scan.spec = spec;
            const std::string request =
                fmt::format("zeros|t={}|step={:a}|thr={:a}|tol={:a}|res={:a}|kind={}", canonical(t), scan.step,
                            scan.detect_threshold, scan.refine_tolerance, scan.residual_tolerance, zeros_kind);
            const std::string payload = runner.cached(request, [&] {
                auto zeros = scan_zeros(scan);
                if (zeros_kind != "all") {
                    const ZeroKind keep = zeros_kind == "trivial" ? ZeroKind::TrivialEta : ZeroKind::NonTrivial;
                    std::erase_if(zeros, [keep](const ZeroRecord& z) { return z.kind != keep; });
                }
                return zeros_csv(zeros);
            });
            runner.emit(payload, zeros_output);
        } else if (flare_cmd->parsed()) {
            const RangeSpec t = parse_range(flare_t, "--t");
            const RangeSpec sigma = parse_range(flare_sigma, "--sigma");
            const Interval window = flare_window.empty() ? Interval{sigma.start, sigma.stop}
                                                         : parse_interval(flare_window, "--window");
            const std::size_t count = inclusive_count(t.start, t.stop, t.step);
            if (count < 3) {
                throw UsageError(fmt::format("flare needs at least 3 strings; --t {} gives {}", flare_t, count));
            }
            const StringFamily family =
                build_family(t.start, t.stop, t.step, SigmaGrid(sigma.start, sigma.stop, sigma.step), spec);
            out << describe(classify_flare(family, SigmaWindow{window.lo, window.hi}, thresholds));
        } else if (crossings_cmd->parsed()) {
            const RangeSpec sigma = parse_range(crossings_sigma, "--sigma");
            const TString s = build_string(crossings_t, SigmaGrid(sigma.start, sigma.stop, sigma.step), spec);
            runner.emit(crossings_csv(self_crossings(s, crossings_gap)), crossings_output);
        } else if (figure_cmd->parsed()) {
            if (figure_list) {
                runner.emit(preset_listing(), figure_output);
                return kExitOk;
            }
            if (figure_id == 0) throw UsageError("render-figure needs --figure N or --list");
            const FigurePreset& preset = find_preset(figure_id);
            if (!preset.unavailable.empty()) {
                throw Error(fmt::format("figure {}: {}", preset.id, preset.unavailable));
            }
            const RenderSpec render_spec = figure_render.spec();
            const std::string request = fmt::format("figure|{}|t={}|sigma={}|terms={}|{}", preset.id,
                                                    canonical(preset.t), canonical(preset.sigma),
                                                    preset.fixed_terms.value_or(0), canonical(render_spec));
            const std::string payload = runner.cached(request, [&] {
                const auto strings = build(preset.t, preset.sigma, preset.fixed_terms, spec);
                return render(strings, render_spec, fmt::format("Figure {}: {}", preset.id, preset.caption));
            });
            runner.emit(payload, figure_output);
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "zstr: usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "zstr: error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace zstr::cli
