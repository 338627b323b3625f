#include "picalb/cli.hpp"

#include "picalb/albanese_product.hpp"
#include "picalb/errors.hpp"
#include "picalb/local_singularity.hpp"
#include "picalb/picard.hpp"
#include "picalb/semigroups.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace picalb::cli {

namespace {

const std::map<std::string, DimensionMethod> kMethods{
    {"auto", DimensionMethod::Auto},
    {"semigroup", DimensionMethod::Semigroup},
    {"jets", DimensionMethod::Jets},
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Schema, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::Schema, "'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

/// Fixed-width table whose columns are the keys of the first row.
void print_table(std::ostream& out, const Json& rows) {
    if (rows.empty()) {
        out << "(no rows)\n";
        return;
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& k : keys) {
        std::size_t w = k.size();
        for (const auto& r : rows) w = std::max(w, cell(r.at(k)).size());
        width.push_back(w);
    }
    auto line = [&](auto&& value_of) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << value_of(i);
        }
        out << '\n';
    };
    line([&](std::size_t i) { return keys[i]; });
    line([&](std::size_t i) { return std::string(width[i], '-'); });
    for (const auto& r : rows) line([&](std::size_t i) { return cell(r.at(keys[i])); });
}

Json point_json(const PointContribution& c) {
    Json j;
    j["label"] = c.label;
    j["class"] = to_string(c.point_class);
    j["torus"] = c.torus;
    j["unipotent"] = c.unipotent;
    if (c.analysis) {
        j["method"] = to_string(c.analysis->method_used);
        j["truncation"] = c.analysis->jets ? Json(c.analysis->jets->truncation) : Json(nullptr);
        j["profile"] = to_json(c.analysis->profile);
    } else {
        j["method"] = "declared";
    }
    return j;
}

Json local_json(const SingularPointData& p, const LocalAnalysis& a) {
    Json j;
    j["label"] = p.label();
    j["class"] = to_string(a.point_class);
    j["unipotent"] = a.unipotent_dim;
    j["method"] = to_string(a.method_used);
    j["truncation"] = a.jets ? Json(a.jets->truncation) : Json(nullptr);
    j["stable"] = a.jets ? Json(a.jets->stable) : Json(nullptr);
    j["profile"] = to_json(a.profile);
    return j;
}

Json profiles_json(const RulingProfiles& profiles) {
    Json out = Json::object();
    for (const auto& [ruling, dims] : profiles) {
        Json orders = Json::array(), ds = Json::array();
        for (const auto& [nu, d] : dims) {
            orders.push_back(nu);
            ds.push_back(d);
        }
        out[ruling] = {{"pole_orders", orders}, {"dims", ds}};
    }
    return out;
}

void emit(std::ostream& out, const Json& doc, const std::string& format) {
    if (format == "table") {
        print_table(out, doc.is_array() ? doc : Json::array({doc}));
    } else {
        out << doc.dump() << '\n';
    }
}

void error_json(std::ostream& err, std::string_view code, const std::string& detail) {
    Json j;
    j["error"] = code;
    j["detail"] = detail;
    err << j.dump() << '\n';
}

void check_range(std::uint64_t range, std::uint64_t max_range) {
    if (range > max_range) {
        throw Error(ErrorCode::InvalidArgument,
                    "range " + std::to_string(range) + " exceeds the maximum " + std::to_string(max_range));
    }
}

}  // namespace

Json gamma_row(unsigned alpha, DimensionMethod method, bool detail) {
    const auto d = picard_decompose_detailed(build_gamma_alpha(alpha), method);
    Json j;
    j["alpha"] = alpha;
    j["abelian"] = d.decomposition.abelian_dim;
    j["torus"] = d.decomposition.torus_rank;
    j["unipotent"] = d.decomposition.unipotent_dim;
    j["total"] = d.decomposition.total();
    if (detail) {
        j["points"] = Json::array();
        for (const auto& c : d.points) j["points"].push_back(point_json(c));
    }
    return j;
}

Json gysin_row(unsigned alpha, unsigned beta) {
    const auto r = gysin_thresholds(alpha, beta);
    Json j;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["N_low"] = format_rational(r.n_low);
    j["N_suff"] = format_rational(r.n_suff);
    j["N0"] = r.n0.get_ui();
    j["N1"] = r.n1.get_ui();
    j["exact"] = r.exact;
    j["esv_bound"] = r.esv_bound ? Json(format_rational(*r.esv_bound)) : Json(nullptr);
    return j;
}

std::vector<std::vector<std::uint64_t>> random_exponent_sets(std::size_t trials, std::uint64_t seed,
                                                             std::uint64_t max_exponent) {
    if (max_exponent < 1) throw Error(ErrorCode::InvalidArgument, "max exponent must be positive");
    // Plain modular reduction of mt19937_64 output keeps the sequence
    // identical across standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint64_t>> out;
    while (out.size() < trials) {
        const std::size_t count = 2 + rng() % 2;
        std::vector<std::uint64_t> exps;
        std::uint64_t g = 0;
        for (std::size_t i = 0; i < count; ++i) {
            exps.push_back(1 + rng() % max_exponent);
            g = std::gcd(g, exps.back());
        }
        if (g == 1) out.push_back(std::move(exps));
    }
    return out;
}

std::vector<OracleCase> run_oracle(std::size_t trials, std::uint64_t seed, std::uint64_t max_exponent) {
    std::vector<OracleCase> out;
    for (auto& exps : random_exponent_sets(trials, seed, max_exponent)) {
        const auto p = SingularPointData::monomial("oracle", exps);
        OracleCase c;
        c.semigroup_dim = unipotent_dim_semigroup(p);
        c.truncation = select_truncation(p);
        c.jets_dim = unipotent_dim_jets(p, c.truncation).dimension;
        c.exponents = std::move(exps);
        out.push_back(std::move(c));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Picard and generalized Albanese invariants of singular curves and cuspidal surfaces", "picalb"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string method_name = "auto";
    std::uint64_t max_range = 12;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_method = [&](CLI::App* sub) {
        sub->add_option("--method", method_name, "Local dimension method")
            ->check(CLI::IsMember({"auto", "semigroup", "jets"}));
    };

    std::vector<std::uint64_t> generators;
    auto* semigroup = app.add_subcommand("semigroup", "Gaps and conductor of a numerical semigroup");
    semigroup->add_option("generators", generators, "Positive generators")->required()->check(CLI::PositiveNumber);

    std::string point_file;
    std::optional<std::size_t> truncation;
    auto* local = app.add_subcommand("local", "Local invariants of one singular point");
    local->add_option("point", point_file, "Point JSON file")->required();
    local->add_option("--truncation", truncation, "Jets truncation order (stability is still checked)")
        ->check(CLI::PositiveNumber);
    add_method(local);

    std::string model_file;
    auto* picard = app.add_subcommand("picard", "Pic^0 decomposition of a curve model");
    picard->add_option("model", model_file, "Curve model JSON file")->required();
    add_method(picard);

    std::optional<unsigned> alpha_opt, beta_opt;
    std::optional<std::uint64_t> range;
    bool detail = false;
    auto* gamma = app.add_subcommand("gamma", "Decomposition for the cuspidal curve Gamma_alpha");
    gamma->add_option("alpha", alpha_opt)->check(CLI::PositiveNumber);
    gamma->add_option("--range", range, "Rows for alpha = 1..N")->check(CLI::NonNegativeNumber);
    gamma->add_option("--max-range", max_range, "Largest accepted --range");
    gamma->add_flag("--detail", detail, "Include per-point contributions");
    add_method(gamma);
    add_format(gamma);

    unsigned alpha = 0, beta = 0, k = 0, l = 0;
    auto* dkl = app.add_subcommand("dkl", "Decomposition for the divisor D^{k,l} on Gamma_alpha x Gamma_beta");
    dkl->add_option("alpha", alpha)->required()->check(CLI::PositiveNumber);
    dkl->add_option("beta", beta)->required()->check(CLI::PositiveNumber);
    dkl->add_option("k", k)->required()->check(CLI::PositiveNumber);
    dkl->add_option("l", l)->required()->check(CLI::PositiveNumber);
    dkl->add_flag("--detail", detail, "Include per-point contributions");
    add_method(dkl);
    add_format(dkl);

    auto* product = app.add_subcommand("product", "Albanese dimension and theta basis of Gamma_alpha x Gamma_beta");
    product->add_option("alpha", alpha)->required()->check(CLI::PositiveNumber);
    product->add_option("beta", beta)->required()->check(CLI::PositiveNumber);

    auto* gysin = app.add_subcommand("gysin", "Gysin surjectivity thresholds");
    gysin->add_option("alpha", alpha_opt)->check(CLI::PositiveNumber);
    gysin->add_option("beta", beta_opt)->check(CLI::PositiveNumber);
    gysin->add_option("--range", range, "Rows for alpha = beta = 1..N")->check(CLI::NonNegativeNumber);
    gysin->add_option("--max-range", max_range, "Largest accepted --range");
    add_format(gysin);

    std::size_t trials = 25;
    std::uint64_t seed = 1, max_exponent = 12;
    auto* oracle = app.add_subcommand("oracle", "Compare the semigroup and jets paths on random monomial points");
    oracle->add_option("--trials", trials)->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed);
    oracle->add_option("--max-exponent", max_exponent)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json(err, "USAGE", e.what());
        return 2;
    }

    try {
        const DimensionMethod method = kMethods.at(method_name);
        if (*semigroup) {
            NumericalSemigroup s(generators);
            Json j;
            j["gaps"] = s.gaps();
            j["conductor"] = s.conductor();
            emit(out, j, format);
        } else if (*local) {
            const auto p = parse_point(read_json_file(point_file));
            emit(out, local_json(p, analyze_point(p, method, truncation)), format);
        } else if (*picard) {
            const auto model = parse_curve_model(read_json_file(model_file));
            const auto d = picard_decompose_detailed(model, method);
            Json j = to_json(d.decomposition);
            j["points"] = Json::array();
            for (const auto& c : d.points) j["points"].push_back(point_json(c));
            emit(out, j, format);
        } else if (*gamma) {
            if (range.has_value() == alpha_opt.has_value()) {
                throw Error(ErrorCode::InvalidArgument, "gamma takes either alpha or --range");
            }
            if (range) {
                check_range(*range, max_range);
                Json rows = Json::array();
                for (unsigned a = 1; a <= *range; ++a) rows.push_back(gamma_row(a, method, detail));
                emit(out, rows, format);
            } else {
                emit(out, gamma_row(*alpha_opt, method, detail), format);
            }
        } else if (*dkl) {
            const auto d = picard_decompose_detailed(build_dkl(alpha, beta, k, l), method);
            Json j;
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["k"] = k;
            j["l"] = l;
            j.update(to_json(d.decomposition));
            if (detail) {
                j["points"] = Json::array();
                for (const auto& c : d.points) j["points"].push_back(point_json(c));
            }
            emit(out, j, format);
        } else if (*product) {
            const auto ta = theta_basis(build_gamma_alpha(alpha));
            const auto tb = theta_basis(build_gamma_alpha(beta));
            const auto theta = product_theta(ta, tb);
            const auto dim = product_albanese_dim(ta.size(), tb.size());
            if (theta.size() != dim) throw std::logic_error("theta basis size disagrees with the product formula");
            Json j;
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["dim_alpha"] = ta.size();
            j["dim_beta"] = tb.size();
            j["dimension"] = dim;
            j["theta_size"] = theta.size();
            j["rulings"] = profiles_json(surface_ruling_profiles(alpha, beta));
            emit(out, j, format);
        } else if (*gysin) {
            if (range) {
                if (alpha_opt || beta_opt) throw Error(ErrorCode::InvalidArgument, "gysin takes either alpha beta or --range");
                check_range(*range, max_range);
                Json rows = Json::array();
                for (unsigned a = 1; a <= *range; ++a) rows.push_back(gysin_row(a, a));
                emit(out, rows, format);
            } else {
                if (!alpha_opt || !beta_opt) throw Error(ErrorCode::InvalidArgument, "gysin needs alpha and beta");
                emit(out, gysin_row(*alpha_opt, *beta_opt), format);
            }
        } else if (*oracle) {
            if (max_exponent > 64) throw Error(ErrorCode::InvalidArgument, "max exponent is limited to 64");
            const auto cases = run_oracle(trials, seed, max_exponent);
            Json j;
            j["trials"] = trials;
            j["seed"] = seed;
            j["max_exponent"] = max_exponent;
            std::size_t agree = 0;
            Json rows = Json::array();
            for (const auto& c : cases) {
                agree += c.jets_dim == c.semigroup_dim;
                rows.push_back({{"exponents", c.exponents},
                                {"semigroup", c.semigroup_dim},
                                {"jets", c.jets_dim},
                                {"truncation", c.truncation}});
            }
            j["agreements"] = agree;
            j["cases"] = std::move(rows);
            emit(out, j, format);
            if (agree != cases.size()) {
                error_json(err, "INTERNAL", "jets and semigroup paths disagree");
                return 1;
            }
        }
    } catch (const Error& e) {
        error_json(err, error_name(e.code()), e.what());
        return 2;
    } catch (const std::exception& e) {
        error_json(err, "INTERNAL", e.what());
        return 1;
    }
    return 0;
}

}  // namespace picalb::cli
