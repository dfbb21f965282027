#include "cli.hpp"

#include <liefan/branching.hpp>
#include <liefan/errors.hpp>
#include <liefan/json_io.hpp>
#include <liefan/oracle.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace liefan::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Compact algebra names: A2, B3, G2, A2_1 (untwisted affine), A2_2
// (twisted). Alternatively a JSON file path or an inline JSON object.
AlgebraSpec load_algebra(const std::string& text) {
    if (!text.empty() && text.front() == '{') return algebra_from_json(text);
    if (std::filesystem::exists(text)) return algebra_from_json(read_file(text));

    std::string base = text;
    int twist = 0;
    if (auto pos = text.find('_'); pos != std::string::npos) {
        base = text.substr(0, pos);
        std::string suffix = text.substr(pos + 1);
        if (suffix != "1" && suffix != "2")
            throw UnsupportedAlgebraError("unsupported twist suffix in " + text);
        twist = suffix == "1" ? 1 : 2;
    }
    if (base.size() < 2) throw ConfigError("malformed algebra name: " + text);
    Series series;
    switch (base.front()) {
        case 'A': series = Series::A; break;
        case 'B': series = Series::B; break;
        case 'C': series = Series::C; break;
        case 'D': series = Series::D; break;
        case 'G': series = Series::G; break;
        default: throw UnsupportedAlgebraError("unsupported series in " + text);
    }
    int rank = 0;
    try {
        rank = std::stoi(base.substr(1));
    } catch (const std::exception&) {
        throw ConfigError("malformed algebra name: " + text);
    }
    return twist == 0 ? AlgebraSpec::finite(series, rank)
                      : AlgebraSpec::affine(series, rank, twist);
}

InjectionSpec load_injection(const std::string& text) {
    constexpr const char* kPresetPrefix = "preset:";
    if (text.rfind(kPresetPrefix, 0) == 0)
        return InjectionSpec::preset(text.substr(std::string(kPresetPrefix).size()));
    if (!text.empty() && text.front() == '{') return injection_from_json(text);
    return injection_from_json(read_file(text));
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        values.push_back(rat_from_string(token));
    return values;
}

// fw:1,0,0 (fundamental-weight coordinates, alpha_0 first for affine kinds)
// or ortho:1,0,-1[;level[;grade]] (orthogonal coordinates).
Weight parse_highest_weight(const AlgebraSpec& spec, const std::string& text) {
    if (text.rfind("fw:", 0) == 0) return spec.weight_from_fw(parse_rat_list(text.substr(3)));
    if (text.rfind("ortho:", 0) == 0) {
        std::string body = text.substr(6);
        std::vector<std::string> parts;
        std::string token;
        std::istringstream in(body);
        while (std::getline(in, token, ';')) parts.push_back(token);
        if (parts.empty() || parts.size() > 3)
            throw ConfigError("expected ortho:<coords>[;level[;grade]]");
        std::vector<Rat> finite = parse_rat_list(parts[0]);
        if (static_cast<int>(finite.size()) != spec.ambient_dim())
            throw ConfigError("expected " + std::to_string(spec.ambient_dim()) +
                              " orthogonal coordinates for " + spec.name());
        Rat level = parts.size() > 1 ? rat_from_string(parts[1]) : Rat(0);
        Rat grade = parts.size() > 2 ? rat_from_string(parts[2]) : Rat(0);
        return Weight(std::move(finite), std::move(level), std::move(grade));
    }
    throw ConfigError("highest weight must start with fw: or ortho:");
}

std::string render_rat(const Rat& r) { return rat_to_string(r); }

// Classical parts as simple-root combinations where possible.
std::string render_classical(const AlgebraSpec& spec, const Weight& w) {
    auto coords = spec.to_root_coords(w);
    if (!coords) return w.to_string();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coords->size(); ++i) {
        const Rat& c = (*coords)[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rat mag = c > 0 ? c : -c;
        if (mag != 1) out << render_rat(mag) << "*";
        out << "a" << (i + 1);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string render_weight(const AlgebraSpec& spec, const Weight& w) {
    std::ostringstream out;
    out << render_classical(spec, w.with_grade(0));
    if (spec.is_affine() || w.level() != 0 || w.grade() != 0)
        out << "  [k=" << render_rat(w.level()) << ", n=" << render_rat(w.grade()) << "]";
    return out.str();
}

// Fundamental-weight coordinates of a weight, when they are defined.
std::string render_fw(const AlgebraSpec& spec, const Weight& w) {
    std::ostringstream out;
    out << "fw[";
    bool first = true;
    const int lo = spec.is_affine() ? 0 : 1;
    for (int i = lo; i <= spec.classical_rank(); ++i) {
        if (!first) out << ",";
        out << render_rat(spec.coroot_pairing(w, spec.simple_roots()[spec.is_affine() && i == 0
                                                   ? spec.classical_rank()
                                                   : static_cast<std::size_t>(i - 1)]));
        first = false;
    }
    out << "]";
    return out.str();
}

std::string render_q_series(const std::vector<std::pair<Int, Int>>& series) {
    if (series.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponent, coefficient] : series) {
        if (!first) out << " + ";
        if (exponent == 0) {
            out << int_to_string(coefficient);
        } else {
            if (coefficient != 1) out << int_to_string(coefficient);
            out << "q";
            if (exponent != 1) out << "^" << int_to_string(exponent);
        }
        first = false;
    }
    return out.str();
}

std::vector<std::pair<Weight, Int>> terms_sorted_for_display(const SignedSeries& s) {
    std::vector<std::pair<Weight, Int>> terms(s.terms().begin(), s.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int c = cmp(a.first.grade(), b.first.grade());
        if (c != 0) return c > 0;
        return Weight::compare(a.first, b.first) < 0;
    });
    return terms;
}

struct Options {
    std::string algebra;
    std::string injection;
    std::string hw;
    long cutoff = 0;
    long cutoff_limit = 50;
    std::string format = "text";
    std::string out_path;
};

void check_cutoff(const Options& opt) {
    if (opt.cutoff < 0) throw ConfigError("cutoff must be nonnegative");
    if (opt.cutoff > opt.cutoff_limit)
        throw ConfigError("cutoff " + std::to_string(opt.cutoff) +
                          " exceeds the safety limit " + std::to_string(opt.cutoff_limit) +
                          " (raise with --cutoff-limit)");
}

void check_format(const Options& opt, bool qseries_allowed) {
    if (opt.format == "text" || opt.format == "json") return;
    if (qseries_allowed && opt.format == "qseries") return;
    throw ConfigError("unsupported output format: " + opt.format);
}

std::string run_fan(const Options& opt) {
    check_format(opt, false);
    InjectionSpec inj = load_injection(opt.injection);
    SignedSeries phi = compute_phi(inj, opt.cutoff);
    Fan fan = build_fan(phi, inj, opt.cutoff);
    if (opt.format == "json") return fan_to_json(fan);

    std::ostringstream out;
    out << "injection: " << inj.name() << " (" << inj.sub().name() << " in "
        << inj.ambient().name() << ")\n";
    out << "gamma0 = " << render_weight(inj.sub(), fan.gamma0())
        << ", s(gamma0) = " << int_to_string(fan.s0()) << "\n";
    out << "fan (" << fan.entries().size() << " vectors, cutoff " << render_rat(fan.cutoff())
        << "):\n";
    for (const auto& entry : fan.entries())
        out << "  " << render_weight(inj.sub(), entry.gamma) << "  sign "
            << int_to_string(entry.sign) << "\n";
    return out.str();
}

std::string run_branch(const Options& opt) {
    check_format(opt, true);
    InjectionSpec inj = load_injection(opt.injection);
    Weight mu = parse_highest_weight(inj.ambient(), opt.hw);
    BranchingResult result = branch(inj, mu, opt.cutoff);
    if (opt.format == "qseries" && !result.sub_is_affine)
        throw ConfigError("qseries output needs an affine subalgebra");
    if (opt.format == "json") return branching_to_json(result);

    std::ostringstream out;
    if (opt.format != "qseries") {
        out << "module: highest weight " << render_fw(inj.ambient(), mu) << " = "
            << mu.to_string() << "\n";
        out << "injection: " << inj.name() << "\n";
        out << "branching coefficients (dominant chamber";
        if (result.sub_is_affine) out << ", grades down to -" << opt.cutoff;
        out << "):\n";
        for (const auto& [nu, b] : terms_sorted_for_display(result.coefficients))
            out << "  b[" << nu.to_string() << "] = " << int_to_string(b) << "\n";
    }
    if (result.sub_is_affine) {
        for (const BranchingFunction& f : branching_functions(result)) {
            out << "class " << render_fw(inj.sub(), f.class_rep) << " = "
                << f.class_rep.to_string() << ": " << render_q_series(f.q_series) << "\n";
        }
    }
    return out.str();
}

std::string run_weights(const Options& opt) {
    check_format(opt, false);
    AlgebraSpec spec = load_algebra(opt.algebra);
    Weight mu = parse_highest_weight(spec, opt.hw);
    AnomalousTable table = weight_multiplicities(spec, mu, opt.cutoff);
    if (opt.format == "json") return weight_multiplicities_to_json(spec, table);

    std::ostringstream out;
    out << "algebra: " << spec.name() << "\n";
    out << "highest weight: " << render_fw(spec, mu) << " = " << mu.to_string() << "\n";
    Int total = 0;
    for (const auto& [w, m] : terms_sorted_for_display(table.values())) {
        out << "  m[" << render_weight(spec, w) << "] = " << int_to_string(m) << "\n";
        total += m;
    }
    if (!spec.is_affine()) out << "dimension: " << int_to_string(total) << "\n";
    return out.str();
}

std::string run_singular(const Options& opt) {
    check_format(opt, false);
    AlgebraSpec spec = load_algebra(opt.algebra);
    Weight mu = parse_highest_weight(spec, opt.hw);
    SingularElement element = spec.singular_weights(mu, opt.cutoff);
    if (opt.format == "json") return singular_to_json(spec, element);

    std::ostringstream out;
    out << "algebra: " << spec.name() << "\n";
    out << "highest weight: " << render_fw(spec, mu) << " = " << mu.to_string() << "\n";
    out << "singular weights (grades down to -" << opt.cutoff << "): "
        << element.series.size() << "\n";
    for (const auto& [w, eps] : terms_sorted_for_display(element.series))
        out << "  " << w.to_string() << "  eps " << int_to_string(eps) << "\n";
    return out.str();
}

std::string run_denominator_check(const Options& opt) {
    AlgebraSpec spec = load_algebra(opt.algebra);
    SignedSeries weyl_sum =
        spec.singular_weights(Weight::zero(spec.ambient_dim()), opt.cutoff).series;
    SignedSeries product = spec.expand_denominator(opt.cutoff);
    if (weyl_sum == product) {
        std::ostringstream out;
        out << "denominator identity holds for " << spec.name() << " at cutoff " << opt.cutoff
            << " (" << weyl_sum.size() << " terms)\n";
        return out.str();
    }
    throw WindowError("denominator identity FAILED for " + spec.name() + " at cutoff " +
                      std::to_string(opt.cutoff));
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Branching coefficients of finite and affine Lie algebra modules "
                 "via the fan recursion"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_algebra, bool needs_injection,
                          bool needs_hw) {
        if (needs_algebra)
            cmd->add_option("--algebra", opt.algebra,
                            "Algebra: compact name (A2, G2, A2_1, A2_2) or JSON")
                ->required();
        if (needs_injection)
            cmd->add_option("--injection", opt.injection,
                            "Injection: preset:NAME, a JSON file path, or inline JSON")
                ->required();
        if (needs_hw)
            cmd->add_option("--hw", opt.hw, "Highest weight: fw:... or ortho:...")->required();
        cmd->add_option("--cutoff", opt.cutoff, "Grade depth of the computation");
        cmd->add_option("--cutoff-limit", opt.cutoff_limit,
                        "Safety limit for the cutoff (default 50)");
        cmd->add_option("--format", opt.format, "Output format: text | json | qseries");
        cmd->add_option("--out", opt.out_path, "Write output to a file instead of stdout");
    };

    CLI::App* fan = app.add_subcommand("fan", "Carrier and fan of an injection");
    add_common(fan, false, true, false);
    CLI::App* branch_cmd = app.add_subcommand("branch", "Branching coefficients of a module");
    add_common(branch_cmd, false, true, true);
    CLI::App* weights = app.add_subcommand("weights", "Weight diagram of a module");
    add_common(weights, true, false, true);
    CLI::App* singular = app.add_subcommand("singular", "Singular weights of a module");
    add_common(singular, true, false, true);
    CLI::App* denom = app.add_subcommand("denominator-check",
                                         "Verify the Weyl sum against the product expansion");
    add_common(denom, true, false, false);

    CliResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        check_cutoff(opt);
        std::string output;
        if (fan->parsed()) output = run_fan(opt);
        else if (branch_cmd->parsed()) output = run_branch(opt);
        else if (weights->parsed()) output = run_weights(opt);
        else if (singular->parsed()) output = run_singular(opt);
        else if (denom->parsed()) output = run_denominator_check(opt);

        if (!opt.out_path.empty()) {
            std::ofstream file(opt.out_path);
            if (!file) throw ConfigError("cannot write file: " + opt.out_path);
            file << output;
        } else {
            result.out = output;
        }
    } catch (const UnsupportedAlgebraError& e) {
        result.exit_code = 3;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const WindowError& e) {
        result.exit_code = 4;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const Error& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace liefan::cli
