#include "orbicurve/cli.hpp"

#include "orbicurve/cohomology.hpp"
#include "orbicurve/convexity.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/sector.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace orbicurve {

std::string_view to_string(Command c) noexcept
{
    switch (c) {
    case Command::Cohomology: return "cohomology";
    case Command::Convexity: return "convexity";
    case Command::Rank: return "rank";
    case Command::Sign: return "sign";
    case Command::Wps: return "wps";
    case Command::SeriesVerify: return "series-verify";
    case Command::Verify: return "verify";
    }
    return "?";
}

namespace {

template <typename T>
const T& input_as(const JobSpec& job, const char* what)
{
    if (!job.input) throw std::invalid_argument(std::string(to_string(job.command)) + " needs an input file with " + what);
    if (const auto* v = std::get_if<T>(&*job.input)) return *v;
    throw std::invalid_argument(std::string(to_string(job.command)) + " needs an input document with " + what);
}

const SplitBundle& bundle_of(const JobSpec& job)
{
    const auto& in = input_as<CurveInput>(job, "a chain and a bundle");
    if (!in.bundle) throw InputError("/bundle", "missing required key");
    return *in.bundle;
}

Json cohomology_json(const CohomologyReport& r)
{
    return Json{{"h0", r.h0}, {"h1", r.h1}, {"euler_char", to_string(r.euler_char)}};
}

Report cmd_cohomology(const JobSpec& job)
{
    const auto& B = bundle_of(job);
    Report rep;
    rep.body = Json{{"command", "cohomology"}};
    std::int64_t h0 = 0, h1 = 0;
    Rational euler(0);
    Json summands = Json::array();
    for (const auto& L : B.summands) {
        auto r = h_chain(L);
        h0 += r.h0;
        h1 += r.h1;
        euler += r.euler_char;
        summands.push_back(cohomology_json(r));
    }
    rep.body["h0"] = h0;
    rep.body["h1"] = h1;
    rep.body["euler_char"] = to_string(euler);
    if (B.rank() > 1) rep.body["summands"] = summands;
    return rep;
}

Report cmd_convexity(const JobSpec& job)
{
    const auto& B = bundle_of(job);
    auto v = decide_convexity(B);
    Report rep;
    rep.body = Json{{"command", "convexity"},
                    {"weakly_semipositive", v.weakly_semipositive},
                    {"weakly_convex", v.weakly_convex},
                    {"weakly_concave_dual", v.weakly_concave_dual}};
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses)
        witnesses.push_back(Json{{"summand", w.summand}, {"component", w.component}, {"reason", w.reason}});
    rep.body["witnesses"] = witnesses;
    try {
        auto cert = log_canonical_certificate(B.chain());
        rep.body["log_canonical_certificate"] = Json{{"passed", true},
                                                     {"log_canonical", cohomology_json(cert.log_canonical)},
                                                     {"canonical_x2", cohomology_json(cert.canonical_x2)}};
    } catch (const CertificateFailure& e) {
        rep.body["log_canonical_certificate"] =
            Json{{"passed", false}, {"condition", e.condition()}, {"message", e.what()}};
        rep.exit_code = kExitFailure;
    }
    return rep;
}

std::pair<SectorAction, SectorAction> padded_sectors(const JobSpec& job)
{
    auto parse = [](const std::optional<std::string>& text, const char* flag) {
        try {
            return parse_sector(text.value_or(""));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string(flag) + ": " + e.what());
        }
    };
    auto g1 = parse(job.g1, "--g1"), g2 = parse(job.g2, "--g2");
    // an empty sector is the untwisted one, of whatever rank the other has
    if (g1.rank() == 0) g1 = SectorAction::untwisted(g2.rank());
    if (g2.rank() == 0) g2 = SectorAction::untwisted(g1.rank());
    if (g1.rank() != g2.rank())
        throw std::invalid_argument("--g1 and --g2 have ranks " + std::to_string(g1.rank()) + " and " +
                                 std::to_string(g2.rank()));
    return {g1, g2};
}

Rational beta_flag(const JobSpec& job)
{
    if (!job.beta_detE) throw std::invalid_argument("--beta-detE is required");
    try {
        return Rational::parse(*job.beta_detE);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("--beta-detE: ") + e.what());
    }
}

Report cmd_rank(const JobSpec& job)
{
    Report rep;
    rep.body = Json{{"command", "rank"}};
    if (job.input) {
        const auto& B = bundle_of(job);
        Rational beta(0);
        std::int64_t direct = 0;
        for (const auto& L : B.summands) {
            beta += L.degree();
            direct += h_twisted(dual(L), MarkedPoint::X1, -1).h1;
        }
        auto g1 = sector_at(B, MarkedPoint::X1), g2 = sector_at(B, MarkedPoint::X2);
        auto R = rank_formula(beta, g1, g2);
        bool convex = is_weakly_convex_on(B).holds;
        rep.body["beta_detE"] = to_string(beta);
        rep.body["g1"] = g1.str();
        rep.body["g2"] = g2.str();
        rep.body["rank"] = to_string(R);
        rep.body["weakly_convex"] = convex;
        rep.body["h1_dual_direct"] = direct;
        bool agrees = R == Rational(direct);
        rep.body["agrees"] = agrees;
        if (convex && !agrees) rep.exit_code = kExitFailure;
        return rep;
    }
    auto beta = beta_flag(job);
    auto [g1, g2] = padded_sectors(job);
    auto R = rank_formula(beta, g1, g2);
    rep.body["rank"] = to_string(R);
    if (!R.is_integer() || R < Rational(0))
        rep.body["warning"] = "not a nonnegative integer, so not the rank of a weakly convex split bundle";
    return rep;
}

Report cmd_sign(const JobSpec& job)
{
    auto beta = beta_flag(job);
    auto [g1, g2] = padded_sectors(job);
    auto s = sign_cycle(beta, g1, g2);
    Report rep;
    rep.body = Json{{"command", "sign"}, {"exponent", to_string(s.phase.exponent())}};
    if (s.sign)
        rep.body["sign"] = *s.sign;
    else
        rep.body["sign"] = nullptr;
    rep.body["phase"] = s.phase.str();
    if (!s.warning.empty()) rep.body["warning"] = s.warning;
    return rep;
}

Json gram_json(const Matrix<Rational>& g)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_string(g(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Report cmd_wps(const JobSpec& job)
{
    const auto& model = input_as<WPSInput>(job, "a wps model").model;
    StateSpace space(model);
    Report rep;
    rep.body = Json{{"command", "wps"}, {"action", job.wps_action}, {"model", model.str()}};
    if (job.wps_action == "sectors") {
        Json sectors = Json::array();
        for (std::size_t f = 0; f < space.sectors().size(); ++f) {
            const auto& s = space.sectors()[f];
            sectors.push_back(Json{{"f", to_string(s.f)},
                                   {"fixed", s.fixed},
                                   {"dim", s.dim()},
                                   {"age", to_string(space.age(f))},
                                   {"rank_fixed", s.rank_fixed()},
                                   {"euler_coefficient", to_string(space.euler_coefficient(f))},
                                   {"compact_type_dim", s.ring_dim() - std::min(s.ring_dim(), s.rank_fixed())}});
        }
        rep.body["sectors"] = sectors;
    } else if (job.wps_action == "pairing") {
        auto basis = space.reduced_basis();
        Json labels = Json::array();
        for (const auto& b : basis)
            labels.push_back(Json{{"sector", to_string(space.sectors()[b.sector].f)}, {"power", b.power}});
        rep.body["basis"] = labels;
        rep.body["compact_type_gram"] = gram_json(space.ct_gram(basis));
        rep.body["ambient_gram"] = gram_json(space.ambient_gram(basis));
    } else if (job.wps_action == "verify") {
        auto pairing = verify_pairing_comparison(model);
        auto dims = verify_delta_iso_dims(model);
        Json violations = Json::array();
        for (const auto& v : pairing.violations)
            violations.push_back(Json{{"first", Json{{"sector", to_string(space.sectors()[v.first.sector].f)},
                                                     {"power", v.first.power}}},
                                      {"second", Json{{"sector", to_string(space.sectors()[v.second.sector].f)},
                                                      {"power", v.second.power}}},
                                      {"ambient", v.ambient.str()},
                                      {"expected", v.expected.str()}});
        rep.body["pairing_comparison"] =
            Json{{"pairs_checked", pairing.pairs_checked}, {"passed", pairing.passed()}, {"violations", violations}};
        Json sectors = Json::array();
        for (const auto& s : dims.sectors)
            sectors.push_back(Json{{"f", to_string(s.f)},
                                   {"ring_dim", s.ring_dim},
                                   {"euler_image_dim", s.euler_image_dim},
                                   {"ambient_dim", s.ambient_dim},
                                   {"compact_type_dim", s.ct_dim},
                                   {"nondegenerate", s.nondegenerate},
                                   {"kernel_is_ideal", s.kernel_is_ideal}});
        rep.body["delta_iso"] = sectors;
        bool ok = pairing.passed() && dims.passed();
        rep.body["passed"] = ok;
        if (!ok) rep.exit_code = kExitFailure;
    } else {
        throw std::invalid_argument("unknown wps action '" + job.wps_action + "' (expected sectors, pairing or verify)");
    }
    return rep;
}

Report cmd_series_verify(const JobSpec& job)
{
    const auto& in = input_as<SeriesInput>(job, "a wps model and a table");
    if (job.order < 1) throw std::invalid_argument("--order must be positive");
    auto report = verify_qsd_operator_identity(in.table, in.model, job.order);
    Report rep;
    rep.body = Json{{"command", "series-verify"},
                    {"model", in.model.str()},
                    {"order", job.order},
                    {"coefficients_checked", report.coefficients_checked},
                    {"passed", report.passed()}};
    if (report.violation) {
        const auto& v = *report.violation;
        rep.body["violation"] = Json{{"beta", v.beta.str()},
                                     {"z_inverse_power", v.z_inverse_power},
                                     {"row", v.row},
                                     {"col", v.col},
                                     {"lhs", v.lhs.str()},
                                     {"rhs", v.rhs.str()}};
        rep.exit_code = kExitFailure;
    } else {
        rep.body["violation"] = nullptr;
    }
    return rep;
}

SuiteOptions suite_options(const JobSpec& job, const std::string& name)
{
    auto o = default_options(name);
    auto positive = [](std::int64_t v, const char* flag) {
        if (v < 1) throw std::invalid_argument(std::string(flag) + " must be positive");
        return v;
    };
    if (job.max_a) o.bounds.max_ab = positive(*job.max_a, "--max-a");
    if (job.max_l) o.bounds.max_l = positive(*job.max_l, "--max-l");
    if (job.max_d) {
        if (*job.max_d < 0) throw std::invalid_argument("--max-d must be nonnegative");
        // suites on a symmetric degree window stay symmetric
        if (o.bounds.min_d < 0) o.bounds.min_d = -*job.max_d;
        o.bounds.max_d = *job.max_d;
    }
    if (job.min_d) o.bounds.min_d = *job.min_d;
    if (o.bounds.min_d > o.bounds.max_d) throw std::invalid_argument("--min-d exceeds --max-d");
    if (job.max_len) o.bounds.max_len = static_cast<std::size_t>(positive(*job.max_len, "--max-len"));
    if (o.bounds.max_len > 8) throw std::invalid_argument("--max-len is limited to 8");
    if (job.trials) {
        if (*job.trials == 0) throw std::invalid_argument("--trials must be positive");
        o.trials = *job.trials;
    }
    o.seed = job.seed;
    o.order = positive(job.order, "--order");
    return o;
}

Report cmd_verify(const JobSpec& job)
{
    std::vector<std::string> names;
    if (job.suite == "all") {
        names = suite_names();
    } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), job.suite) == known.end())
            throw std::invalid_argument("unknown suite '" + job.suite + "'");
        names = {job.suite};
    }
    Report rep;
    rep.body = Json{{"command", "verify"}, {"seed", job.seed}};
    Json suites = Json::array();
    bool all_passed = true;
    for (const auto& name : names) {
        auto r = run_suite(name, suite_options(job, name));
        all_passed &= r.passed();
        Json s{{"name", r.name},
               {"cases", r.cases},
               {"counterexamples", r.failures},
               {"passed", r.passed()},
               {"first_counterexample", r.first_counterexample.empty() ? Json(nullptr) : Json(r.first_counterexample)},
               {"seconds", r.seconds}};
        suites.push_back(s);
    }
    rep.body["suites"] = suites;
    rep.body["passed"] = all_passed;
    if (!all_passed) rep.exit_code = kExitFailure;
    return rep;
}

std::string scalar_text(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

std::string module_of(Command c)
{
    switch (c) {
    case Command::Cohomology: return "cohomology_engine";
    case Command::Convexity: return "convexity";
    case Command::Rank:
    case Command::Sign: return "sector_calculus";
    case Command::Wps: return "wps_state_space";
    case Command::SeriesVerify: return "novikov_series";
    case Command::Verify: return "cli";
    }
    return "cli";
}

void strip_seconds(Json& v)
{
    if (v.is_object()) {
        v.erase("seconds");
        for (auto& [k, x] : v.items()) strip_seconds(x);
    } else if (v.is_array()) {
        for (auto& x : v) strip_seconds(x);
    }
}

} // namespace

Report run(const JobSpec& job)
{
    switch (job.command) {
    case Command::Cohomology: return cmd_cohomology(job);
    case Command::Convexity: return cmd_convexity(job);
    case Command::Rank: return cmd_rank(job);
    case Command::Sign: return cmd_sign(job);
    case Command::Wps: return cmd_wps(job);
    case Command::SeriesVerify: return cmd_series_verify(job);
    case Command::Verify: return cmd_verify(job);
    }
    throw std::logic_error("unhandled command");
}

std::string render_text(const Json& body)
{
    // scalars and small arrays become "key  value" lines, nested objects
    // flatten to dotted keys, arrays of objects become tables
    std::vector<std::pair<std::string, const Json*>> lines;
    auto flatten = [&](auto&& self, const std::string& prefix, const Json& obj) -> void {
        for (const auto& [key, v] : obj.items()) {
            auto name = prefix.empty() ? key : prefix + "." + key;
            if (v.is_object())
                self(self, name, v);
            else
                lines.emplace_back(name, &v);
        }
    };
    flatten(flatten, "", body);

    std::size_t width = 0;
    for (const auto& [key, v] : lines) width = std::max(width, key.size());
    std::ostringstream os;
    for (const auto& [key, vp] : lines) {
        const Json& v = *vp;
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::vector<std::string> cols;
            for (const auto& [c, x] : v.front().items()) cols.push_back(c);
            std::vector<std::size_t> w;
            for (const auto& c : cols) w.push_back(c.size());
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : v) {
                std::vector<std::string> r;
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    const Json* x = row.contains(cols[i]) ? &row.at(cols[i]) : nullptr;
                    r.push_back(!x ? "" : x->is_structured() ? x->dump() : scalar_text(*x));
                    w[i] = std::max(w[i], r.back().size());
                }
                cells.push_back(std::move(r));
            }
            os << key << ":\n";
            auto line = [&](const std::vector<std::string>& r) {
                os << " ";
                for (std::size_t i = 0; i < r.size(); ++i) {
                    os << " " << r[i];
                    if (i + 1 < r.size()) os << std::string(w[i] - r[i].size(), ' ');
                }
                os << "\n";
            };
            line(cols);
            for (const auto& r : cells) line(r);
        } else {
            std::string text = v.is_array() && v.empty() ? "none" : v.is_structured() ? v.dump() : scalar_text(v);
            os << std::left << std::setw(static_cast<int>(width)) << key << "  " << text << "\n";
        }
    }
    return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations on two-pointed orbifold curve chains and weighted projective examples",
                 "orbicurve"};
    app.require_subcommand(1);
    app.fallthrough();
    JobSpec job;
    std::string file;
    app.add_flag("--json", job.json, "JSON output");
    app.add_flag("--timing", job.timing, "include wall-clock seconds in JSON output");
    app.add_option("--seed", job.seed, "seed for randomized suites");
    app.add_option("--order", job.order, "Novikov truncation order N");

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "input JSON document ('-' for stdin)"); };
    auto add_sector_flags = [&](CLI::App* sub) {
        sub->add_option("--beta-detE", job.beta_detE, "beta(det E) as p/q");
        sub->add_option("--g1", job.g1, "fiber weights at x1, comma separated");
        sub->add_option("--g2", job.g2, "fiber weights at x2, comma separated");
    };

    auto* cohomology = app.add_subcommand("cohomology", "h0, h1 and Euler characteristic of a split bundle");
    add_file(cohomology);
    auto* convexity = app.add_subcommand("convexity", "convexity decisions and the log-canonical certificate");
    add_file(convexity);
    auto* rank = app.add_subcommand("rank", "rank formula, from sectors or from a bundle");
    add_file(rank);
    add_sector_flags(rank);
    auto* sign = app.add_subcommand("sign", "sign of the two-pointed cycle");
    add_sector_flags(sign);
    auto* wps = app.add_subcommand("wps", "state spaces of a weighted projective model");
    wps->add_option("action", job.wps_action, "sectors | pairing | verify")->required();
    add_file(wps);
    auto* series = app.add_subcommand("series-verify", "operator identity for an invariant table");
    add_file(series);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", job.suite, "suite name or 'all'")->required();
    verify->add_option("--max-a", job.max_a, "bound on a, b");
    verify->add_option("--max-l", job.max_l, "bound on l1*l2");
    verify->add_option("--max-d", job.max_d, "bound on |d|");
    verify->add_option("--min-d", job.min_d, "lower bound on d");
    verify->add_option("--max-len", job.max_len, "bound on chain length");
    verify->add_option("--trials", job.trials, "number of random trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const std::pair<CLI::App*, Command> commands[] = {
        {cohomology, Command::Cohomology}, {convexity, Command::Convexity}, {rank, Command::Rank},
        {sign, Command::Sign},             {wps, Command::Wps},             {series, Command::SeriesVerify},
        {verify, Command::Verify}};
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed()) job.command = cmd;

    bool parsed = false;
    auto fail = [&](const char* kind, const std::string& module, const std::string& message, int code) {
        err << "orbicurve: " << kind << " error [" << module << "]: " << message << "\n";
        if (job.json)
            out << Json{{"command", to_string(job.command)},
                        {"error", Json{{"kind", kind}, {"module", module}, {"message", message}}}}
                       .dump(2)
                << "\n";
        return code;
    };

    try {
        if (!file.empty()) {
            std::string text;
            if (file == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(file);
                if (!in) throw std::invalid_argument("cannot read " + file);
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            job.input = parse_input(std::string_view(text));
        }
        parsed = true;
        Report rep = run(job);
        if (job.json) {
            Json body = rep.body;
            if (!job.timing) strip_seconds(body);
            out << body.dump(2) << "\n";
        } else {
            out << render_text(rep.body);
        }
        return rep.exit_code;
    } catch (const InternalInconsistency& e) {
        return fail("internal", e.module(), e.what(), kExitFailure);
    } catch (const std::invalid_argument& e) {
        return fail("input", parsed ? module_of(job.command) : "cli", e.what(), kExitInput);
    } catch (const std::exception& e) {
        return fail("runtime", module_of(job.command), e.what(), kExitFailure);
    }
}

} // namespace orbicurve
