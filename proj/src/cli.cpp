#include "ruzsakit/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ruzsakit/checkers.hpp"
#include "ruzsakit/covers.hpp"
#include "ruzsakit/errors.hpp"
#include "ruzsakit/io.hpp"
#include "ruzsakit/projections.hpp"
#include "ruzsakit/ruzsa.hpp"

namespace ruzsakit::cli {

using nlohmann::json;

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return kHolds;
        case Verdict::violated: return kViolated;
        case Verdict::inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

namespace {

// Result of one subcommand: the document to print and its exit code.
struct Outcome {
    json doc;
    int code = kHolds;
};

Outcome from_report(const CheckReport& r) { return {to_json(r), exit_code(r.verdict)}; }

constexpr std::uint64_t kDemoKMax = 12;

IndexSet index_list(const std::vector<std::size_t>& v) { return IndexSet(v); }

// Every option any subcommand may take; each subcommand binds the subset it
// uses.
struct Args {
    std::string tolerance = "1e-9";
    std::string base = "2";
    std::string limit = "1000000";
    std::uint64_t seed = 1;
    std::string format = "json";

    std::string dist;
    std::string map;
    std::string set;
    std::string cover;
    std::string spec;
    std::string input;
    std::string y;
    std::string side;
    std::uint64_t k = 0;
    std::uint64_t kmax = 0;
    std::uint64_t max_den = 0;
    std::vector<double> weights;
    std::vector<std::uint64_t> ks;
    std::vector<std::size_t> S;
    std::vector<std::size_t> T;
    std::vector<std::size_t> C;
    bool cross_validate = false;
    bool product = false;
};

RunConfig make_config(const Args& a) {
    RunConfig cfg;
    try {
        cfg.tolerance = std::stod(a.tolerance);
    } catch (const std::exception&) {
        throw SchemaError("--tolerance: not a number");
    }
    if (!(cfg.tolerance > 0)) throw SchemaError("--tolerance must be positive");
    if (a.base == "2") {
        cfg.log_base = LogBase::two;
    } else if (a.base == "e") {
        cfg.log_base = LogBase::e;
    } else {
        throw SchemaError("--base must be 2 or e");
    }
    if (a.limit.empty() || !std::all_of(a.limit.begin(), a.limit.end(), ::isdigit))
        throw SchemaError("--limit must be a positive integer");
    cfg.enum_limit = BigInt(a.limit);
    if (cfg.enum_limit < 1) throw SchemaError("--limit must be >= 1");
    cfg.seed = a.seed;
    cfg.format = a.format == "table" ? OutputFormat::table : OutputFormat::json;
    return cfg;
}

RationalDist load_dist(const std::string& path) { return io::parse_dist(io::read_json_file(path)); }
PointSet load_set(const std::string& path) { return io::parse_point_set(io::read_json_file(path)); }
CoverSpec load_cover(const std::string& path) { return io::parse_cover(io::read_json_file(path)); }

std::vector<GroundElement> points_of(const PointSet& A) { return A.points(); }

bool is_sets_side(const std::string& side) {
    if (side == "sets") return true;
    if (side == "entropy") return false;
    throw SchemaError("--side must be sets or entropy");
}

}  // namespace

json demo_equivalence(std::uint64_t seed, bool product, const EvalOptions& opts) {
    std::mt19937_64 rng(seed);
    std::vector<GroundElement> points;
    if (product) {
        // B_1 x B_2 x B_3 with each B_i a random nonempty subset of {0,1,2}
        // and 2 <= |A| <= 12.
        std::vector<std::vector<std::int64_t>> factors;
        std::size_t total = 0;
        do {
            factors.clear();
            total = 1;
            for (int i = 0; i < 3; ++i) {
                std::vector<std::int64_t> b;
                while (b.empty())
                    for (std::int64_t v = 0; v < 3; ++v)
                        if (rng() & 1) b.push_back(v);
                total *= b.size();
                factors.push_back(std::move(b));
            }
        } while (total < 2 || total > kDemoKMax);
        for (auto a : factors[0])
            for (auto b : factors[1])
                for (auto c : factors[2]) points.push_back({a, b, c});
    } else {
        // |A| divides 12 so several suitable k fit under the cap.
        constexpr std::size_t sizes[] = {2, 3, 4, 6};
        const std::size_t target = sizes[rng() % std::size(sizes)];
        std::vector<GroundElement> cube;
        for (std::int64_t a = 0; a < 3; ++a)
            for (std::int64_t b = 0; b < 3; ++b)
                for (std::int64_t c = 0; c < 3; ++c) cube.push_back({a, b, c});
        std::shuffle(cube.begin(), cube.end(), rng);
        points.assign(cube.begin(), cube.begin() + static_cast<std::ptrdiff_t>(target));
    }
    const PointSet A(3, points);

    // Loomis-Whitney / Han as  f = id,  f_i = projection dropping i,  alpha = 1/2.
    const CoverSpec hyperplanes(3, {IndexSet{2, 3}, IndexSet{1, 3}, IndexSet{1, 2}},
                                std::vector<Rational>(3, Rational(1, 2)));
    const InequalitySpec spec = projection_spec(A.points(), hyperplanes);
    const RationalDist X = RationalDist::uniform(A.points());

    const CheckReport lw = check_cardinality(spec, A.points(), opts);
    const CheckReport han = check_entropy(spec, X, opts);
    const CheckReport lemma1 = empirical_lemma1(spec, X, kDemoKMax, opts);

    return {{"seed", seed},
            {"product", product},
            {"set", io::to_json(A)},
            {"loomis_whitney", to_json(lw)},
            {"han", to_json(han)},
            {"ruzsa_sets", to_json(lemma1)},
            {"all_hold", lw.holds() && han.holds() && lemma1.holds()}};
}

namespace {

void render(const json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render(value, path.empty() ? key : path + "." + key, os);
        return;
    }
    const bool table = j.is_array() && !j.empty() &&
                       std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); });
    if (!table) {
        os << path << ": " << j.dump() << "\n";
        return;
    }
    // Array of records: one column per scalar field of the first record.
    std::vector<std::string> cols;
    for (const auto& [key, value] : j.front().items())
        if (!value.is_structured()) cols.push_back(key);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& rec : j) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string cell;
            if (rec.contains(cols[c])) {
                const json& v = rec[cols[c]];
                cell = v.is_string() ? v.get<std::string>() : v.dump();
            }
            width[c] = std::max(width[c], cell.size());
            row.push_back(std::move(cell));
        }
        cells.push_back(std::move(row));
    }
    os << path << ":\n";
    for (std::size_t c = 0; c < cols.size(); ++c) os << "  " << std::setw(static_cast<int>(width[c])) << cols[c];
    os << "\n";
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            os << "  " << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    }
}

}  // namespace

std::string render_table(const json& doc) {
    std::ostringstream os;
    render(doc, "", os);
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ruzsa sets, entropy and sumset inequality checker"};
    app.fallthrough();
    app.require_subcommand(1);
    Args a;

    app.add_option("--tolerance", a.tolerance, "Absolute float tolerance")->capture_default_str();
    app.add_option("--base", a.base, "Logarithm base: 2 or e")->capture_default_str();
    app.add_option("--limit", a.limit, "Enumeration size guard")->capture_default_str();
    app.add_option("--seed", a.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    // Map from subcommand to its handler; filled alongside the definitions.
    std::vector<std::pair<CLI::App*, std::function<Outcome(const RunConfig&)>>> handlers;
    auto on = [&](CLI::App* sub, std::function<Outcome(const RunConfig&)> fn) {
        handlers.emplace_back(sub, std::move(fn));
    };

    auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of a distribution");
    entropy_cmd->add_option("--dist", a.dist)->required();
    on(entropy_cmd, [&](const RunConfig& cfg) {
        return Outcome{{{"entropy", entropy(load_dist(a.dist), cfg.log_base)}}};
    });

    auto* push_cmd = app.add_subcommand("pushforward", "Law of f(X)");
    push_cmd->add_option("--dist", a.dist)->required();
    push_cmd->add_option("--map", a.map)->required();
    on(push_cmd, [&](const RunConfig&) {
        const RationalDist X = load_dist(a.dist);
        const FiniteMap f = io::parse_map(io::read_json_file(a.map), X.support());
        return Outcome{io::to_json(pushforward(f, X))};
    });

    auto* suitable_cmd = app.add_subcommand("suitable", "Minimal suitable k");
    suitable_cmd->add_option("--dist", a.dist)->required();
    suitable_cmd->add_option("--k", a.k, "Also test this k");
    on(suitable_cmd, [&](const RunConfig&) {
        const RationalDist X = load_dist(a.dist);
        json doc = {{"minimal_k", std::to_string(minimal_suitable_k(X))}};
        if (a.k > 0) doc["suitable"] = is_suitable(X, a.k);
        return Outcome{doc};
    });

    auto* rat_cmd = app.add_subcommand("rationalize", "Rational approximation of weights");
    rat_cmd->add_option("--weights", a.weights)->required()->delimiter(',');
    rat_cmd->add_option("--max-den", a.max_den)->required();
    on(rat_cmd, [&](const RunConfig&) {
        return Outcome{io::to_json(rationalize(a.weights, a.max_den))};
    });

    auto* ruzsa_cmd = app.add_subcommand("ruzsa", "k-Ruzsa sets");
    ruzsa_cmd->require_subcommand(1);
    auto ruzsa_sub = [&](const char* name, const char* desc, bool needs_k) {
        auto* sub = ruzsa_cmd->add_subcommand(name, desc);
        sub->add_option("--dist", a.dist)->required();
        if (needs_k) sub->add_option("--k", a.k)->required();
        return sub;
    };
    auto* size_cmd = ruzsa_sub("size", "|R_k(X)| in closed form", true);
    on(size_cmd, [&](const RunConfig&) {
        return Outcome{{{"size", ruzsa_size(RuzsaSpec(load_dist(a.dist), a.k)).get_str()}}};
    });
    auto* enum_cmd = ruzsa_sub("enum", "List R_k(X)", true);
    on(enum_cmd, [&](const RunConfig& cfg) {
        const RuzsaSpec spec(load_dist(a.dist), a.k);
        json vectors = json::array();
        for (const auto& v : ruzsa_enumerate(spec, cfg.enum_limit))
            vectors.push_back(io::to_json(std::span<const GroundElement>(v)));
        return Outcome{{{"size", ruzsa_size(spec).get_str()}, {"vectors", vectors}}};
    });
    auto* commute_cmd = ruzsa_sub("commute", "Check f^k(R_k(X)) = R_k(f(X))", true);
    commute_cmd->add_option("--map", a.map)->required();
    on(commute_cmd, [&](const RunConfig& cfg) {
        const RationalDist X = load_dist(a.dist);
        const FiniteMap f = io::parse_map(io::read_json_file(a.map), X.support());
        return from_report(verify_commutation(f, RuzsaSpec(X, a.k), cfg.enum_limit));
    });
    auto* lift_cmd = ruzsa_sub("lift", "Lift y in R_k(f(X)) to R_k(X)", true);
    lift_cmd->add_option("--map", a.map)->required();
    lift_cmd->add_option("--y", a.y, "JSON array of image elements")->required();
    on(lift_cmd, [&](const RunConfig&) {
        const RationalDist X = load_dist(a.dist);
        const FiniteMap f = io::parse_map(io::read_json_file(a.map), X.support());
        const auto y = io::parse_elements(io::read_json_file(a.y), "y");
        const auto x = preimage_lift(f, RuzsaSpec(X, a.k), y);
        return Outcome{{{"x", io::to_json(std::span<const GroundElement>(x))}}};
    });
    auto* bound_cmd = ruzsa_sub("bound", "Exact |R_k| <= 2^(kH) <= (k+1)^(n-1)|R_k| certificate", true);
    on(bound_cmd, [&](const RunConfig& cfg) {
        return from_report(type_bound_check(RuzsaSpec(load_dist(a.dist), a.k), cfg.eval()));
    });
    auto* converge_cmd = ruzsa_sub("converge", "log|R_k|/k against H(X)", false);
    converge_cmd->add_option("--ks", a.ks)->required()->delimiter(',');
    on(converge_cmd, [&](const RunConfig& cfg) {
        json rows = json::array();
        bool ok = true;
        for (const auto& row : convergence_profile(load_dist(a.dist), a.ks, cfg.eval())) {
            rows.push_back(to_json(row));
            ok = ok && row.within;
        }
        return Outcome{{{"rows", rows}, {"within_envelope", ok}}, ok ? kHolds : kViolated};
    });

    auto* project_cmd = app.add_subcommand("project", "Projection A_S or X_S");
    project_cmd->add_option("--set", a.set);
    project_cmd->add_option("--dist", a.dist);
    project_cmd->add_option("--S", a.S)->required()->delimiter(',');
    on(project_cmd, [&](const RunConfig&) {
        if (!a.set.empty()) return Outcome{io::to_json(project_set(load_set(a.set), index_list(a.S)))};
        if (!a.dist.empty()) return Outcome{io::to_json(project_rv(load_dist(a.dist), index_list(a.S)))};
        throw SchemaError("project needs --set or --dist");
    });

    auto* condsize_cmd = app.add_subcommand("condsize", "Average conditioned size |A_T | A_S|");
    condsize_cmd->add_option("--set", a.set)->required();
    condsize_cmd->add_option("--T", a.T)->required()->delimiter(',');
    condsize_cmd->add_option("--S", a.S)->delimiter(',');
    on(condsize_cmd, [&](const RunConfig& cfg) {
        const PointSet A = load_set(a.set);
        const double l = log_conditional_avg_size(A, index_list(a.T), index_list(a.S), cfg.log_base);
        return Outcome{{{"log_size", l}, {"size", conditional_avg_size(A, index_list(a.T), index_list(a.S))}}};
    });

    auto* condent_cmd = app.add_subcommand("condentropy", "Conditional entropy H(X_S | X_C)");
    condent_cmd->add_option("--dist", a.dist)->required();
    condent_cmd->add_option("--S", a.S)->required()->delimiter(',');
    condent_cmd->add_option("--C", a.C)->delimiter(',');
    on(condent_cmd, [&](const RunConfig& cfg) {
        return Outcome{{{"entropy", conditional_entropy(load_dist(a.dist), index_list(a.S),
                                                        index_list(a.C), cfg.log_base)}}};
    });

    auto* cover_cmd = app.add_subcommand("cover", "Fractional and uniform covers");
    cover_cmd->require_subcommand(1);
    auto* cover_check = cover_cmd->add_subcommand("check", "Fractional / uniform k-cover check");
    cover_check->add_option("--cover", a.cover)->required();
    cover_check->add_option("--k", a.k, "Also check for a uniform k-cover");
    on(cover_check, [&](const RunConfig&) {
        const CoverSpec cover = load_cover(a.cover);
        if (!cover.weights() && a.k == 0)
            throw SchemaError("cover has no weights and no --k was given");
        json doc = json::object();
        bool ok = true;
        if (cover.weights()) {
            const auto r = is_fractional_cover(cover);
            doc["fractional"] = to_json(r);
            ok = ok && r.holds();
        }
        if (a.k > 0) {
            const auto r = is_uniform_k_cover(cover, a.k);
            doc["uniform"] = to_json(r);
            ok = ok && r.holds();
        }
        return Outcome{doc, ok ? kHolds : kViolated};
    });
    auto* cover_min = cover_cmd->add_subcommand("min", "Minimum-weight fractional cover (exact LP)");
    cover_min->add_option("--cover", a.cover)->required();
    on(cover_min, [&](const RunConfig&) {
        const CoverSpec cover = load_cover(a.cover);
        return Outcome{io::to_json(min_fractional_cover(cover.n(), cover.members()))};
    });

    auto* check_cmd = app.add_subcommand("check", "Evaluate both sides of an inequality");
    check_cmd->require_subcommand(1);
    auto* check_entropy_cmd = check_cmd->add_subcommand("entropy", "H(f(X)) <= sum a_i H(f_i(X))");
    check_entropy_cmd->add_option("--spec", a.spec)->required();
    check_entropy_cmd->add_option("--input", a.input)->required();
    on(check_entropy_cmd, [&](const RunConfig& cfg) {
        const RationalDist X = load_dist(a.input);
        const auto spec = io::parse_inequality(io::read_json_file(a.spec), X.support());
        return from_report(check_entropy(spec, X, cfg.eval()));
    });
    auto* check_card_cmd = check_cmd->add_subcommand("cardinality", "|f(A)| <= prod |f_i(A)|^a_i");
    check_card_cmd->add_option("--spec", a.spec)->required();
    check_card_cmd->add_option("--input", a.input)->required();
    on(check_card_cmd, [&](const RunConfig& cfg) {
        const auto A = points_of(load_set(a.input));
        const auto spec = io::parse_inequality(io::read_json_file(a.spec), A);
        return from_report(check_cardinality(spec, A, cfg.eval()));
    });
    auto* shearer_cmd = check_cmd->add_subcommand("shearer", "Uniform k-cover inequality");
    shearer_cmd->add_option("--cover", a.cover)->required();
    shearer_cmd->add_option("--k", a.k)->required();
    shearer_cmd->add_option("--side", a.side)->required();
    shearer_cmd->add_option("--input", a.input)->required();
    on(shearer_cmd, [&](const RunConfig& cfg) {
        const CoverSpec cover = load_cover(a.cover);
        if (is_sets_side(a.side)) return from_report(check_shearer(load_set(a.input), cover, a.k, cfg.eval()));
        return from_report(check_shearer(load_dist(a.input), cover, a.k, cfg.eval()));
    });
    auto* projection_cmd = check_cmd->add_subcommand("projection", "Fractional cover with prefix conditioning");
    projection_cmd->add_option("--cover", a.cover)->required();
    projection_cmd->add_option("--side", a.side)->required();
    projection_cmd->add_option("--input", a.input)->required();
    on(projection_cmd, [&](const RunConfig& cfg) {
        const CoverSpec cover = load_cover(a.cover);
        if (is_sets_side(a.side)) return from_report(check_projection_theorem(load_set(a.input), cover, cfg.eval()));
        return from_report(check_projection_theorem(load_dist(a.input), cover, cfg.eval()));
    });
    auto* lemma1_cmd = check_cmd->add_subcommand("lemma1", "Cardinality hypothesis on Ruzsa sets for k <= kmax");
    lemma1_cmd->add_option("--spec", a.spec)->required();
    lemma1_cmd->add_option("--input", a.input)->required();
    lemma1_cmd->add_option("--kmax", a.kmax)->required();
    lemma1_cmd->add_flag("--cross-validate", a.cross_validate, "Also count by enumeration");
    on(lemma1_cmd, [&](const RunConfig& cfg) {
        const RationalDist X = load_dist(a.input);
        const auto spec = io::parse_inequality(io::read_json_file(a.spec), X.support());
        std::optional<BigInt> limit;
        if (a.cross_validate) limit = cfg.enum_limit;
        return from_report(empirical_lemma1(spec, X, a.kmax, cfg.eval(), limit));
    });

    auto* witness_cmd = app.add_subcommand("witness", "Witness distributions");
    witness_cmd->require_subcommand(1);
    auto* lemma2_cmd = witness_cmd->add_subcommand("lemma2", "Uniform law on fiber representatives");
    lemma2_cmd->add_option("--map", a.map)->required();
    lemma2_cmd->add_option("--input", a.input)->required();
    on(lemma2_cmd, [&](const RunConfig& cfg) {
        const auto A = points_of(load_set(a.input));
        const FiniteMap f = io::parse_map(io::read_json_file(a.map), A);
        const RationalDist W = lemma2_witness(A, f);
        const double h = entropy(pushforward(f, W), cfg.log_base);
        std::set<GroundElement> image;
        for (const auto& x : A) image.insert(f(x));
        return Outcome{{{"witness", io::to_json(W)},
                        {"image_entropy", h},
                        {"log_image_size", log_in(static_cast<double>(image.size()), cfg.log_base)}}};
    });

    auto* demo_cmd = app.add_subcommand("demo", "Loomis-Whitney / Han walkthrough");
    demo_cmd->add_flag("--product", a.product, "Use a product set (equality case)");
    on(demo_cmd, [&](const RunConfig& cfg) {
        json doc = demo_equivalence(cfg.seed, a.product, cfg.eval());
        const int code = doc["all_hold"].get<bool>() ? kHolds : kViolated;
        return Outcome{std::move(doc), code};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kHolds : kInputError;
    }

    try {
        const RunConfig cfg = make_config(a);
        for (const auto& [sub, fn] : handlers) {
            if (!sub->parsed()) continue;
            const Outcome result = fn(cfg);
            if (cfg.format == OutputFormat::table) {
                out << render_table(result.doc);
            } else {
                out << result.doc.dump(2) << "\n";
            }
            return result.code;
        }
        throw SchemaError("no subcommand selected");
    } catch (const Error& e) {
        out << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
        err << e.kind() << ": " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        out << json{{"error", {{"kind", "InputError"}, {"message", e.what()}}}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ruzsakit");
    for (const auto& s : args) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ruzsakit::cli
