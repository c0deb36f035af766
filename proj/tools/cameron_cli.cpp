// cameron: compute restricted/associated Cameron transforms and modified
// hypergeometric numbers, invert transforms, and run the verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cameron/combinatorics.hpp"
#include "cameron/determinant.hpp"
#include "cameron/hypergeometric.hpp"
#include "cameron/io.hpp"
#include "cameron/operator.hpp"
#include "cameron/verify.hpp"

using namespace cameron;

namespace {

/// Engines disagreed under --method all.
struct Disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Column {
    std::string method;
    std::vector<Rational> values;  // aligned with the requested indices
};

std::vector<IndexedValue> agree(std::size_t lo, const std::vector<Column>& columns) {
    std::vector<IndexedValue> rows;
    const auto& first = columns.front();
    for (std::size_t i = 0; i < first.values.size(); ++i) {
        for (const auto& c : columns) {
            if (c.values[i] == first.values[i]) continue;
            std::ostringstream msg;
            msg << "engines disagree at n=" << lo + i << ":";
            for (const auto& d : columns) msg << "\n  " << d.method << " = " << d.values[i];
            throw Disagreement(msg.str());
        }
        rows.push_back({lo + i, first.values[i]});
    }
    return rows;
}

void emit(const std::vector<IndexedValue>& rows, Format format, const std::string& out_path) {
    std::ostringstream buf;
    write_values(buf, rows, format);
    if (out_path.empty()) {
        std::cout << buf.str();
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << buf.str();
}

std::pair<long, long> parse_pair(const std::string& text, const char* what) {
    const auto values = parse_rational_list(text);
    if (values.size() != 2 || !values[0].is_integer() || !values[1].is_integer()) {
        throw std::invalid_argument(std::string(what) + " expects two integers a,b");
    }
    return {values[0].numerator().get_si(), values[1].numerator().get_si()};
}

std::vector<std::string> expand_methods(const std::string& method, const std::vector<std::string>& known) {
    if (method == "all") return known;
    for (const auto& k : known) {
        if (k == method) return {method};
    }
    std::string list;
    for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
    throw std::invalid_argument("method '" + method + "' not available here (" + list + ", all)");
}

struct OutputArgs {
    std::string format = "json";
    std::string out;
};

void add_output(CLI::App* cmd, OutputArgs& o) {
    cmd->add_option("--format", o.format, "json | csv | bfile")->capture_default_str();
    cmd->add_option("--out", o.out, "Write to this file instead of stdout");
}

struct ModeArgs {
    std::optional<unsigned> restricted;
    std::optional<unsigned> associated;

    std::optional<OperatorMode> mode() const {
        if (restricted && associated) throw std::invalid_argument("give only one of --restricted and --associated");
        if (restricted) return OperatorMode::restricted(*restricted);
        if (associated) return OperatorMode::associated(*associated);
        return std::nullopt;
    }
};

void add_mode(CLI::App* cmd, ModeArgs& m) {
    cmd->add_option("--restricted", m.restricted, "Restricted mode with this m");
    cmd->add_option("--associated", m.associated, "Associated mode with this m");
}

struct SeedArgs {
    std::string seed;
    std::string seed_file;
    bool ones = false;
    std::string geometric;
    std::string arithmetic;
};

void add_seed(CLI::App* cmd, SeedArgs& s) {
    cmd->add_option("--seed", s.seed, "Seed values x_1,x_2,... (or x_m,... when associated)");
    cmd->add_option("--seed-file", s.seed_file, "JSON seed file");
    cmd->add_flag("--ones", s.ones, "x_n = 1 on the support");
    cmd->add_option("--geometric", s.geometric, "a,b: x_n = a^(n-m) b");
    cmd->add_option("--arithmetic", s.arithmetic, "a,b: x_n = (n-m) a + b");
}

/// Resolves the seed rule and, for seed files in the {"m", "values"} form, the mode.
SeedRule seed_rule(const SeedArgs& s, std::optional<OperatorMode>& mode) {
    const int given = !s.seed.empty() + !s.seed_file.empty() + s.ones + !s.geometric.empty() + !s.arithmetic.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --seed, --seed-file, --ones, --geometric, --arithmetic");
    if (!s.seed.empty()) return ExplicitSeed{parse_rational_list(s.seed)};
    if (s.ones) return OnesRule{};
    if (!s.geometric.empty()) {
        const auto [a, b] = parse_pair(s.geometric, "--geometric");
        return GeometricRule{a, b};
    }
    if (!s.arithmetic.empty()) {
        const auto [a, b] = parse_pair(s.arithmetic, "--arithmetic");
        return ArithmeticRule{a, b};
    }
    SeedFile file = read_seed_file(s.seed_file);
    if (file.m) {
        if (mode && (mode->is_restricted() || mode->m() != *file.m)) {
            throw std::invalid_argument("seed file is associated(" + std::to_string(*file.m) + ") but the flags say " +
                                        mode->to_string());
        }
        mode = OperatorMode::associated(*file.m);
    } else if (!mode) {
        if (file.values.empty()) throw std::invalid_argument("empty restricted seed file");
        mode = OperatorMode::restricted(static_cast<unsigned>(file.values.size()));
    }
    return ExplicitSeed{std::move(file.values)};
}

// ---------------------------------------------------------------------------
// compute transform

const std::vector<std::string> transform_methods{"recurrence", "determinant", "composition", "trudi", "binom", "oracle"};

std::vector<Rational> transform_values(const std::string& method, const CoefficientSequence& x, const OperatorMode& mode,
                                       std::size_t lo, std::size_t hi) {
    const std::size_t m = mode.m();
    std::vector<Rational> out;
    const auto per_index = [&](auto f) {
        for (std::size_t n = lo; n <= hi; ++n) out.push_back(n == 0 ? Rational(1) : f(n));
    };
    if (method == "recurrence") {
        const auto z = mode.is_restricted() ? restricted_transform(x, hi) : associated_transform(x, hi);
        per_index([&](std::size_t n) { return z.at(n); });
    } else if (method == "determinant") {
        per_index([&](std::size_t n) {
            if (mode.is_restricted()) return restricted_z_det(x, m, n);
            return n < m ? Rational(0) : associated_z_det(x, n);
        });
    } else if (method == "composition") {
        const auto col = composition_column(x, mode, hi);
        per_index([&](std::size_t n) { return col[n - 1]; });
    } else if (method == "trudi") {
        per_index([&](std::size_t n) { return mode.is_restricted() ? trudi_restricted(x, m, n) : trudi_associated(x, n); });
    } else if (method == "binom") {
        // (1 - sum x_n t^n)^(-1) is the binomial expansion of the series with x_0 = 1 and -x_n.
        std::vector<Rational> neg{Rational(1)};
        for (std::size_t i = 1; i <= hi; ++i) neg.push_back(mode.in_support(i) ? -x.get_or_zero(i) : Rational(0));
        const CoefficientSequence shifted(0, std::move(neg));
        const PartRange support = mode.is_restricted() ? PartRange{1, m} : PartRange{m, unbounded};
        per_index([&](std::size_t n) { return binomial_expansion_sum(shifted, n, support); });
    } else {
        const auto z = series_reciprocal(cameron_denominator(x, hi), hi);
        per_index([&](std::size_t n) { return z.at(n); });
    }
    return out;
}

struct TransformArgs {
    ModeArgs mode;
    SeedArgs seed;
    std::string range = "0..10";
    std::string method = "recurrence";
    OutputArgs output;
};

int run_compute_transform(const TransformArgs& a) {
    std::optional<OperatorMode> mode = a.mode.mode();
    const SeedRule rule = seed_rule(a.seed, mode);
    if (!mode) throw std::invalid_argument("give --restricted M or --associated M");
    const auto [lo, hi] = parse_index_range(a.range);
    const CoefficientSequence x = materialize_seed(rule, *mode, hi);
    if (mode->is_restricted() && x.empty()) throw std::invalid_argument("restricted seed is empty");

    std::vector<Column> columns;
    for (const auto& m : expand_methods(a.method, transform_methods)) columns.push_back({m, transform_values(m, x, *mode, lo, hi)});
    emit(agree(lo, columns), parse_format(a.output.format), a.output.out);
    return 0;
}

// ---------------------------------------------------------------------------
// compute hyper

const std::vector<std::string> hyper_methods{"recurrence", "determinant", "composition", "trudi", "binom", "oracle"};

struct HyperArgs {
    std::string family;
    int order = 1;
    ModeArgs mode;
    std::string range = "0..10";
    std::string method = "oracle";
    std::string euler_second_limit = "as-printed";
    OutputArgs output;
};

int run_compute_hyper(const HyperArgs& a) {
    const FamilySpec spec(parse_family(a.family), a.order);
    const auto mode = a.mode.mode();
    if (!mode) throw std::invalid_argument("give --restricted M or --associated M");
    HyperOptions opts;
    if (a.euler_second_limit == "uniform") opts.euler_second_limit = EulerSecondLimit::uniform;
    else if (a.euler_second_limit != "as-printed") throw std::invalid_argument("--euler-second-limit is as-printed or uniform");
    const auto [lo, hi] = parse_index_range(a.range);

    std::vector<Column> columns;
    for (const auto& method : expand_methods(a.method, hyper_methods)) {
        Column col{method, {}};
        std::vector<HyperNumber> def;
        if (method == "oracle") def = hyper_from_definition(spec, *mode, hi, opts);
        for (std::size_t index = lo; index <= hi; ++index) {
            if (method == "oracle") {
                col.values.push_back(def[index].value);
            } else if (index == 0) {
                col.values.push_back(1);
            } else if (spec.is_euler() && index % 2 == 1) {
                col.values.push_back(0);
            } else {
                const std::size_t n = spec.is_euler() ? index / 2 : index;
                if (method == "recurrence") col.values.push_back(hyper_recurrence(spec, *mode, n, opts).value);
                else if (method == "determinant") {
                    // Orders below m have an empty associated denominator term: the number is 0.
                    const bool empty = !mode->is_restricted() && n < mode->m();
                    col.values.push_back(empty ? Rational(0) : hyper_det(spec, *mode, n, opts).value);
                } else if (method == "composition") col.values.push_back(hyper_sum(spec, *mode, n, opts).value);
                else if (method == "trudi") col.values.push_back(hyper_trudi(spec, *mode, n, opts).value);
                else col.values.push_back(hyper_binom_sum(spec, *mode, n, opts).value);
            }
        }
        columns.push_back(std::move(col));
    }
    emit(agree(lo, columns), parse_format(a.output.format), a.output.out);
    return 0;
}

// ---------------------------------------------------------------------------
// compute closed-form

struct ClosedArgs {
    SeedArgs seed;
    std::optional<unsigned> m;
    std::optional<unsigned> associated;
    std::string range;
    std::string method = "closed-form";
    OutputArgs output;
};

int run_compute_closed(const ClosedArgs& a) {
    if (a.m && a.associated && *a.m != *a.associated) throw std::invalid_argument("--m and --associated differ");
    const auto m_opt = a.m ? a.m : a.associated;
    if (!m_opt) throw std::invalid_argument("give --m M");
    const unsigned m = *m_opt;
    if (a.range.empty()) throw std::invalid_argument("give --n");
    const auto [lo, hi] = parse_index_range(a.range);
    if (!a.seed.seed.empty() || !a.seed.seed_file.empty()) {
        throw std::invalid_argument("closed forms take --ones, --geometric a,b or --arithmetic a,b");
    }
    std::optional<OperatorMode> mode = OperatorMode::associated(m);
    const SeedRule rule = seed_rule(a.seed, mode);

    Column closed{"closed-form", {}};
    if (const auto* g = std::get_if<GeometricRule>(&rule); g || std::holds_alternative<OnesRule>(rule)) {
        if (lo < m) {
            throw std::invalid_argument(std::string(g ? "the geometric" : "the all-ones") + " closed form starts at n = m = " + std::to_string(m) + "; got n = " +
                                        std::to_string(lo));
        }
        for (std::size_t n = lo; n <= hi; ++n) {
            closed.values.push_back(g ? geometric_closed_form(GeometricParams(g->a, g->b, m), n) : ones_closed_form(m, n));
        }
    } else {
        const auto& ar = std::get<ArithmeticRule>(rule);
        const auto z = arithmetic_sequence(ArithmeticParams(ar.a, ar.b, m), hi);
        for (std::size_t n = lo; n <= hi; ++n) closed.values.push_back(z.at(n));
    }
    std::vector<Column> columns{closed};
    if (a.method == "all") {
        const auto z = associated_transform(materialize_seed(rule, *mode, hi), hi);
        Column op{"recurrence", {}};
        for (std::size_t n = lo; n <= hi; ++n) op.values.push_back(z.at(n));
        columns.push_back(std::move(op));
    } else if (a.method != "closed-form") {
        throw std::invalid_argument("closed-form takes --method closed-form or all");
    }
    emit(agree(lo, columns), parse_format(a.output.format), a.output.out);
    return 0;
}

// ---------------------------------------------------------------------------
// transform (seed file in, transform out; or the inverse)

struct FileTransformArgs {
    std::string seed_file;
    ModeArgs mode;
    std::optional<std::size_t> n_max;
    std::string direction = "forward";
    std::string method;
    OutputArgs output;
};

int run_transform(const FileTransformArgs& a) {
    if (a.direction == "forward") {
        TransformArgs t;
        t.mode = a.mode;
        t.seed.seed_file = a.seed_file;
        t.range = "0.." + std::to_string(a.n_max.value_or(10));
        t.method = a.method.empty() ? "recurrence" : a.method;
        t.output = a.output;
        return run_compute_transform(t);
    }
    if (a.direction != "invert") throw std::invalid_argument("--direction is forward or invert");

    const CoefficientSequence z = read_transform_file(a.seed_file);
    const std::size_t available = z.end_index() - 1;
    const std::size_t n_max = a.n_max.value_or(available);
    if (n_max > available) {
        throw std::invalid_argument("transform file holds z_0..z_" + std::to_string(available) + ", cannot invert to n = " +
                                    std::to_string(n_max));
    }
    std::vector<Column> columns;
    for (const auto& method : expand_methods(a.method.empty() ? "oracle" : a.method,
                                             {"determinant", "composition", "trudi", "oracle"})) {
        Column col{method, {}};
        if (method == "determinant") {
            for (std::size_t n = 1; n <= n_max; ++n) col.values.push_back(Rational(sign_power(n - 1)) * x_from_z_det(z, n));
        } else if (method == "composition") {
            col.values = inversion_column(z, n_max);
        } else if (method == "trudi") {
            for (std::size_t n = 1; n <= n_max; ++n) col.values.push_back(inversion_sum_multinomial(z, n));
        } else {
            // 1 - sum x_n t^n = 1 / (sum z_n t^n)
            const auto r = series_reciprocal(z.values(), n_max);
            for (std::size_t n = 1; n <= n_max; ++n) col.values.push_back(-r.at(n));
        }
        columns.push_back(std::move(col));
    }
    emit(agree(1, columns), parse_format(a.output.format), a.output.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    configure_workers_from_env();

    CLI::App app{"Restricted and associated Cameron operators, modified hypergeometric numbers"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Compute a sequence");
    compute->require_subcommand(1);

    TransformArgs targs;
    auto* ct = compute->add_subcommand("transform", "z_n of a seed under the restricted or associated operator");
    add_mode(ct, targs.mode);
    add_seed(ct, targs.seed);
    ct->add_option("--n", targs.range, "Index range a..b")->capture_default_str();
    ct->add_option("--method", targs.method, "recurrence | determinant | composition | trudi | binom | oracle | all")
        ->capture_default_str();
    add_output(ct, targs.output);

    HyperArgs hargs;
    auto* ch = compute->add_subcommand("hyper", "Modified hypergeometric Bernoulli, Cauchy or Euler numbers");
    ch->add_option("--family", hargs.family, "bernoulli | cauchy | euler | euler-second")->required();
    ch->add_option("--N", hargs.order, "Family parameter N")->capture_default_str();
    add_mode(ch, hargs.mode);
    ch->add_option("--n", hargs.range, "Coefficient index range a..b (Euler: odd indices are 0)")->capture_default_str();
    ch->add_option("--method", hargs.method, "recurrence | determinant | composition | trudi | binom | oracle | all")
        ->capture_default_str();
    ch->add_option("--euler-second-limit", hargs.euler_second_limit,
                   "Restricted euler-second denominator upper limit: as-printed (m-1) or uniform (m)")
        ->capture_default_str();
    add_output(ch, hargs.output);

    ClosedArgs cargs;
    auto* cc = compute->add_subcommand("closed-form", "Closed forms for geometric, all-ones and arithmetic associated seeds");
    add_seed(cc, cargs.seed);
    cc->add_option("--m", cargs.m, "Associated m");
    cc->add_option("--associated", cargs.associated, "Same as --m");
    cc->add_option("--n", cargs.range, "Index range a..b");
    cc->add_option("--method", cargs.method, "closed-form | all (also runs the operator and compares)")
        ->capture_default_str();
    add_output(cc, cargs.output);

    VerifyOptions vopts;
    std::string scope = "all";
    std::optional<std::size_t> n_limit;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "Cross-check every algorithm against the others");
    verify->add_option("--scope", scope, "all | section-2 | section-3")->capture_default_str();
    verify->add_option("--seed-count", vopts.seed_count, "Random seeds for the operator identities")->capture_default_str();
    verify->add_option("--n-limit", n_limit,
                       "Largest n (section-2 default 22; with section-3 the largest coefficient index, default 16)");
    verify->add_option("--rng-seed", vopts.rng_seed, "Seed of the random corpus")->capture_default_str();
    verify->add_option("--max-m", vopts.max_m, "Largest m for the operator identities")->capture_default_str();
    verify->add_option("--hyper-index-limit", vopts.hyper_index_limit, "Largest coefficient index, hypergeometric")
        ->capture_default_str();
    verify->add_option("--hyper-max-order", vopts.hyper_max_order, "Largest N, hypergeometric")->capture_default_str();
    verify->add_option("--hyper-max-m", vopts.hyper_max_m, "Largest m, hypergeometric")->capture_default_str();
    verify->add_flag("--serial", serial, "Run the cases on one thread");

    FileTransformArgs fargs;
    auto* tr = app.add_subcommand("transform", "Apply the operator to a seed file, or invert a transform file");
    tr->add_option("--seed-file", fargs.seed_file,
                   "forward: JSON seed; invert: JSON array z_0,z_1,... or b-file")
        ->required();
    add_mode(tr, fargs.mode);
    tr->add_option("--n-max", fargs.n_max, "Largest index (forward default 10, invert default: all of the file)");
    tr->add_option("--direction", fargs.direction, "forward | invert")->capture_default_str();
    tr->add_option("--method", fargs.method, "Engine (forward default recurrence, invert default oracle) or all");
    add_output(tr, fargs.output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ct->parsed()) return run_compute_transform(targs);
        if (ch->parsed()) return run_compute_hyper(hargs);
        if (cc->parsed()) return run_compute_closed(cargs);
        if (tr->parsed()) return run_transform(fargs);
        if (verify->parsed()) {
            vopts.scope = parse_scope(scope);
            if (n_limit) {
                if (vopts.scope == VerifyScope::hypergeometric) vopts.hyper_index_limit = *n_limit;
                else vopts.n_limit = *n_limit;
            }
            vopts.exec = serial ? Execution::serial : Execution::parallel;
            const VerifyReport report = run_verify(vopts);
            print_report(std::cout, report);
            print_timings(std::cerr, report);
            return report.passed() ? 0 : 1;
        }
    } catch (const Disagreement& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
