#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmeas/characters.hpp"
#include "wordmeas/complex.hpp"
#include "wordmeas/divisibility.hpp"
#include "wordmeas/group.hpp"
#include "wordmeas/measure.hpp"
#include "wordmeas/so3.hpp"
#include "wordmeas/word.hpp"
#include "wordmeas/zeta.hpp"

namespace wm = wordmeas;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string group;
    std::string word;
    int arity = 0;
    std::string method = "both";
    std::string chartab_path;
    std::string save_path;
    double budget = 1e8;
    std::uint64_t samples = 1000000;
    double eps = 0.2;
    std::uint64_t seed = 0;
    double s = 2.0;
    bool so3 = false;
    std::string format = "json";
};

wm::FiniteGroup resolve_group(const std::string& spec) {
    if (spec.ends_with(".grp") || std::filesystem::exists(spec)) return wm::load_group(spec);
    return wm::preset(spec);
}

wm::Word resolve_word(const Options& opt) {
    wm::Word w = wm::parse_word(opt.word);
    if (opt.arity > 0) w = w.with_arity(opt.arity);
    return w;
}

wm::CharacterTable resolve_table(const Options& opt, const wm::FiniteGroup& G) {
    if (!opt.chartab_path.empty()) {
        wm::CharacterTable T = wm::load_chartab(opt.chartab_path);
        wm::attach_group(T, G);
        return T;
    }
    return wm::compute_character_table(G);
}

json count_json(wm::Count v) {
    if (v < (wm::Count(1) << 53)) return static_cast<std::uint64_t>(v);
    return wm::count_to_string(v);
}

json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p() && std::abs(v.get_si()) < (1LL << 53)) return v.get_si();
    return v.get_str();
}

std::string rational_string(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string complex_string(std::complex<double> z) {
    std::ostringstream out;
    out.precision(12);
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

void emit(const json& payload, const std::string& format) {
    if (format == "table") {
        for (auto it = payload.begin(); it != payload.end(); ++it)
            std::cout << it.key() << "\t" << it.value().dump() << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
}

json chartab_json(const wm::CharacterTable& T) {
    json out;
    out["group"] = T.group_name;
    out["order"] = T.group_order;
    out["classes"] = T.classes.count();
    out["class_sizes"] = T.classes.sizes;
    out["class_representatives"] = T.classes.representatives;
    out["degrees"] = T.degrees;
    json rows = json::array();
    for (const auto& row : T.values) {
        json r = json::array();
        for (auto v : row) r.push_back(complex_string(v));
        rows.push_back(r);
    }
    out["values"] = rows;
    return out;
}

int run_classify(const Options& opt) {
    wm::Word w = resolve_word(opt);
    wm::WordComplex c = wm::build_complex(w);
    json out;
    out["word"] = wm::format_word(w);
    out["surface"] = wm::is_closed_surface(w);
    if (out["surface"].get<bool>()) {
        wm::SurfaceClass s = wm::classify_surface(w);
        out["orientable"] = s.orientable;
        out["euler"] = s.euler_characteristic;
        out[s.orientable ? "genus" : "crosscaps"] = s.genus_or_crosscaps;
    }
    out["V"] = c.vertex_count;
    out["E"] = c.edge_count;
    out["F"] = wm::WordComplex::face_count;
    emit(out, opt.format);
    return 0;
}

int run_count(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::Word w = resolve_word(opt);
    json out;
    out["group"] = G.name();
    out["word"] = wm::format_word(w);
    out["n"] = w.arity();
    out["method"] = opt.method;
    bool agree = true;
    if (opt.method == "brute" || opt.method == "both")
        out["gamma_brute"] = count_json(wm::count_solutions(G, w, opt.budget));
    if (opt.method == "zeta" || opt.method == "both") {
        wm::CharacterTable T = resolve_table(opt, G);
        out["gamma_zeta"] = mpz_json(wm::count_via_zeta(G, T, w));
    }
    if (opt.method == "both") {
        agree = out["gamma_brute"] == out["gamma_zeta"];
        out["agree"] = agree;
    }
    emit(out, opt.format);
    return agree ? 0 : 2;
}

int run_distribution(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::Word w = resolve_word(opt);
    wm::WordDistribution d = wm::brute_force_distribution(G, w, opt.budget);
    json out;
    out["group"] = G.name();
    out["word"] = wm::format_word(w);
    out["n"] = d.arity;
    out["method"] = "brute";
    json counts = json::array();
    for (auto c : d.counts) counts.push_back(count_json(c));
    out["counts"] = counts;
    out["total"] = count_json(d.total());
    emit(out, opt.format);
    return 0;
}

int run_indicators(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::Word w = resolve_word(opt);
    wm::CharacterTable T = resolve_table(opt, G);
    wm::WordDistribution d = wm::brute_force_distribution(G, w, opt.budget);
    bool surface = wm::is_closed_surface(w);
    json out;
    out["group"] = G.name();
    out["word"] = wm::format_word(w);
    out["surface"] = surface;
    json rows = json::array();
    bool agree = true;
    for (int i = 0; i < T.irreducible_count(); ++i) {
        json row;
        row["degree"] = T.degrees[i];
        std::complex<double> brute = wm::indicator_from_distribution(d, T, i);
        row["brute"] = complex_string(brute);
        if (surface) {
            mpq_class formula = wm::surface_indicator(T, i, wm::classify_surface(w), G);
            row["formula"] = rational_string(formula);
            bool close = std::abs(brute - std::complex<double>(formula.get_d(), 0.0)) <= 1e-8;
            row["agree"] = close;
            agree = agree && close;
        }
        rows.push_back(row);
    }
    out["indicators"] = rows;
    if (surface) out["agree"] = agree;
    emit(out, opt.format);
    return agree ? 0 : 2;
}

int run_chartab(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::CharacterTable T = resolve_table(opt, G);
    if (!opt.save_path.empty()) wm::save_chartab(T, opt.save_path);
    emit(chartab_json(T), opt.format);
    return 0;
}

int run_zeta(const Options& opt) {
    if (!opt.so3 && opt.group.empty())
        throw wm::ZetaError("zeta needs either --group or --so3");
    json out;
    out["s"] = opt.s;
    if (opt.so3) {
        out["group"] = "SO(3)";
        out["zeta"] = wm::so3_zeta(opt.s);
    } else {
        wm::FiniteGroup G = resolve_group(opt.group);
        wm::CharacterTable T = resolve_table(opt, G);
        out["group"] = G.name();
        if (opt.s == static_cast<long>(opt.s)) {
            mpq_class exact = wm::zeta_finite(T.degrees, static_cast<long>(opt.s));
            out["zeta"] = rational_string(exact);
            out["zeta_real"] = exact.get_d();
        } else {
            out["zeta"] = wm::zeta_finite_real(T.degrees, opt.s);
        }
    }
    emit(out, opt.format);
    return 0;
}

int run_stats(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::CharacterTable T = resolve_table(opt, G);
    wm::GroupStats st = wm::group_stats(T.degrees, G.order());
    json out;
    out["group"] = G.name();
    out["derived_index"] = st.derived_index;
    out["avg_class_size"] = rational_string(st.avg_class_size);
    out["max_dim"] = st.max_dim;
    out["max_dim_count"] = st.max_dim_count;
    out["num_classes"] = st.num_classes;
    emit(out, opt.format);
    return 0;
}

int run_mc_so3(const Options& opt) {
    wm::Word w = resolve_word(opt);
    wm::EstimatorConfig cfg{opt.samples, opt.eps, opt.seed};
    wm::DensityEstimate est = wm::density_at_identity(w, cfg);
    wm::SurfaceClass s = wm::classify_surface(w);
    double target = wm::so3_zeta(static_cast<double>(-s.euler_characteristic));
    json out;
    out["word"] = wm::format_word(w);
    out["n"] = static_cast<std::uint64_t>(opt.samples);
    out["eps"] = opt.eps;
    out["seed"] = opt.seed;
    out["estimate"] = est.estimate;
    out["std_error"] = est.std_error;
    out["target"] = target;
    out["z_score"] = (est.estimate - target) / est.std_error;
    emit(out, opt.format);
    return 0;
}

int run_divides(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::CharacterTable T = resolve_table(opt, G);
    json out;
    out["group"] = G.name();
    out["degrees"] = T.degrees;
    out["order"] = G.order();
    json ratios = json::array();
    for (int d : T.degrees) {
        mpq_class r(mpz_class(G.order()) * G.order(), mpz_class(d) * d);
        r.canonicalize();
        ratios.push_back(rational_string(r));
    }
    out["ratios"] = ratios;
    out["all_integer"] = wm::verify_dim_divides_order(G, T);
    emit(out, opt.format);
    return out["all_integer"].get<bool>() ? 0 : 2;
}

int run_verify(const Options& opt) {
    wm::FiniteGroup G = resolve_group(opt.group);
    wm::Word w = resolve_word(opt);
    wm::CharacterTable T = resolve_table(opt, G);
    wm::WordDistribution d = wm::brute_force_distribution(G, w, opt.budget);

    json checks;
    bool ok = true;

    // counts constant on conjugacy classes
    bool class_fn = true;
    for (int g = 0; g < G.order() && class_fn; ++g)
        class_fn = d.counts[g] == d.counts[T.classes.representatives[T.classes.class_of[g]]];
    checks["counts_are_class_function"] = class_fn;
    ok = ok && class_fn;

    if (wm::is_closed_surface(w)) {
        wm::SurfaceClass s = wm::classify_surface(w);
        mpz_class zeta_count = wm::count_via_zeta(G, T, w);
        bool counts_agree = zeta_count == wm::count_to_mpz(d.identity_count());
        checks["gamma_brute"] = count_json(d.identity_count());
        checks["gamma_zeta"] = mpz_json(zeta_count);
        checks["counts_agree"] = counts_agree;
        ok = ok && counts_agree;

        bool indicators_agree = true;
        for (int i = 0; i < T.irreducible_count(); ++i) {
            std::complex<double> brute = wm::indicator_from_distribution(d, T, i);
            mpq_class formula = wm::surface_indicator(T, i, s, G);
            if (std::abs(brute - std::complex<double>(formula.get_d(), 0.0)) > 1e-8)
                indicators_agree = false;
        }
        checks["indicators_agree"] = indicators_agree;
        ok = ok && indicators_agree;

        // density at the identity from indicators vs |G|^(1-n) gamma
        std::vector<std::complex<double>> indicators;
        for (int i = 0; i < T.irreducible_count(); ++i)
            indicators.push_back(std::complex<double>(wm::surface_indicator(T, i, s, G).get_d(), 0.0));
        double density = wm::density_from_indicators(T, indicators, 0).real();
        double brute_density = wm::count_to_mpz(d.identity_count()).get_d() *
                               std::pow(static_cast<double>(G.order()), 1 - d.arity);
        bool density_agrees = std::abs(density - brute_density) <= 1e-8 * std::max(1.0, brute_density);
        checks["density_at_identity_agrees"] = density_agrees;
        ok = ok && density_agrees;
    } else {
        checks["gamma_brute"] = count_json(d.identity_count());
        checks["surface"] = false;
    }

    json out;
    out["group"] = G.name();
    out["word"] = wm::format_word(w);
    out["n"] = d.arity;
    out["checks"] = checks;
    out["agreement"] = ok;
    emit(out, opt.format);
    return ok ? 0 : 2;
}

const char* error_code(const std::exception& e) {
    if (dynamic_cast<const wm::ParseError*>(&e)) return "word_syntax";
    if (dynamic_cast<const wm::TopologyError*>(&e)) return "topology";
    if (dynamic_cast<const wm::GroupError*>(&e)) return "group";
    if (dynamic_cast<const wm::CharacterError*>(&e)) return "chartab";
    if (dynamic_cast<const wm::MeasureError*>(&e)) return "measure";
    if (dynamic_cast<const wm::ZetaError*>(&e)) return "zeta";
    if (dynamic_cast<const wm::So3Error*>(&e)) return "so3";
    return "error";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word-induced measures on finite groups: exact counts, surface "
                 "classification, character-theoretic formulas, and SO(3) sampling"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_group = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--group", opt.group, "Preset name or .grp file");
        if (required) o->required();
        cmd->add_option("--chartab", opt.chartab_path, "Load character table from a .chr file");
    };
    auto add_word = [&](CLI::App* cmd) {
        cmd->add_option("--word", opt.word, "Word, e.g. \"[a,b]\" or \"a b c a' b' c'\"")->required();
        cmd->add_option("--arity", opt.arity, "Declared arity (>= letters used)");
    };

    auto* classify = app.add_subcommand("classify", "Classify the 2-complex of a word");
    add_word(classify);
    add_common(classify);

    auto* count = app.add_subcommand("count", "Count solutions of w(t) = 1");
    add_group(count);
    add_word(count);
    count->add_option("--method", opt.method, "brute | zeta | both")
        ->check(CLI::IsMember({"brute", "zeta", "both"}));
    count->add_option("--budget", opt.budget, "Max |G|^n for enumeration");
    add_common(count);

    auto* distribution = app.add_subcommand("distribution", "Exact pushforward counts per element");
    add_group(distribution);
    add_word(distribution);
    distribution->add_option("--budget", opt.budget, "Max |G|^n for enumeration");
    add_common(distribution);

    auto* indicators = app.add_subcommand("indicators", "Per-irreducible word indicators v_w(chi)");
    add_group(indicators);
    add_word(indicators);
    indicators->add_option("--budget", opt.budget, "Max |G|^n for enumeration");
    add_common(indicators);

    auto* chartab = app.add_subcommand("chartab", "Compute, show, or save a character table");
    add_group(chartab);
    chartab->add_option("--save", opt.save_path, "Write the table to a .chr file");
    add_common(chartab);

    auto* zeta = app.add_subcommand("zeta", "Witten zeta values");
    add_group(zeta, false);
    zeta->add_option("--s", opt.s, "Argument s")->required();
    zeta->add_flag("--so3", opt.so3, "Evaluate for SO(3) instead of a finite group");
    add_common(zeta);

    auto* stats = app.add_subcommand("stats", "Abelianness statistics from the zeta data");
    add_group(stats);
    add_common(stats);

    auto* mc = app.add_subcommand("mc-so3", "Monte-Carlo density of mu_w at the identity of SO(3)");
    add_word(mc);
    mc->add_option("--n", opt.samples, "Sample count");
    mc->add_option("--eps", opt.eps, "Ball radius in radians");
    mc->add_option("--seed", opt.seed, "RNG seed (splitmix64)")->required();
    add_common(mc);

    auto* divides = app.add_subcommand("divides", "Verify dim rho | |G| via the counting argument");
    add_group(divides);
    add_common(divides);

    auto* verify = app.add_subcommand("verify", "Cross-validate brute force against the formulas");
    add_group(verify);
    add_word(verify);
    verify->add_option("--budget", opt.budget, "Max |G|^n for enumeration");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(opt);
        if (count->parsed()) return run_count(opt);
        if (distribution->parsed()) return run_distribution(opt);
        if (indicators->parsed()) return run_indicators(opt);
        if (chartab->parsed()) return run_chartab(opt);
        if (zeta->parsed()) return run_zeta(opt);
        if (stats->parsed()) return run_stats(opt);
        if (mc->parsed()) return run_mc_so3(opt);
        if (divides->parsed()) return run_divides(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        err["code"] = error_code(e);
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 1;
}
