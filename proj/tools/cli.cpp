#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mhg/errors.hpp"
#include "mhg/jack.hpp"
#include "mhg/partition.hpp"
#include "mhg/series.hpp"
#include "mhg/stats.hpp"

namespace mhg::cli {

namespace {

struct Options {
    int m = 20;
    double alpha = 2.0;
    std::string a;
    std::string b;
    std::string x;
    std::string y;
    int n = 1;
    std::string csv;
    std::string grid;
    std::string ensemble = "laguerre";
    double beta = 1.0;
    double ens_a = 1.0;
    int l = 2;
    std::string sigma;
    std::uint64_t seed = 1;
    int precision = 15;
    std::string partition;
    std::string kernel = "parallel";
    std::string vary = "n";
    int repeat = 3;
    bool normalize = false;
    std::string norm = "j";
};

double parse_real(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
        throw UsageError("not a number: '" + std::string(s) + "'");
    if (!std::isfinite(v)) throw UsageError("not a finite number: '" + std::string(s) + "'");
    return v;
}

// Comma-separated list; empty string is the empty list.
std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    if (s.find_first_not_of(" \t") == std::string::npos) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_real(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// An existing file holds whitespace- or newline-separated values; anything
// else is an inline comma list.
std::vector<double> parse_values(const std::string& s) {
    std::error_code ec;
    if (!s.empty() && std::filesystem::is_regular_file(s, ec)) {
        std::ifstream in(s);
        std::vector<double> out;
        std::string tok;
        while (in >> tok) out.push_back(parse_real(tok));
        return out;
    }
    return parse_list(s);
}

std::vector<double> parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("grid must be start:stop:step");
    const double start = parse_real(std::string_view(text).substr(0, c1));
    const double stop = parse_real(std::string_view(text).substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_real(std::string_view(text).substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw UsageError("grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw UsageError("grid has too many points");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

std::vector<double> points(const Options& o) {
    if (!o.grid.empty()) return parse_grid(o.grid);
    const auto v = parse_values(o.x);
    if (v.empty()) throw UsageError("need --x or --grid");
    return v;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    for (double v : parse_list(s)) {
        if (v != std::floor(v) || v < 0 || v > 1e6) throw UsageError("partition parts must be nonnegative integers");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(parts);
}

Kernel parse_kernel(const std::string& s) { return s == "serial" ? Kernel::serial : Kernel::parallel; }

std::string number(double v, int precision) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, r.ptr);
}

void print_warnings(const std::vector<std::string>& w, std::ostream& err) {
    for (const auto& s : w) err << "warning: " << s << '\n';
}

// Evaluates f at every point, possibly concurrently; rows come back in input
// order. The first exception is rethrown after the loop.
std::vector<std::vector<double>> sweep(const std::vector<double>& xs,
                                       const std::function<std::vector<double>(double)>& f) {
    std::vector<std::vector<double>> rows(xs.size());
    std::exception_ptr first;
    const auto count = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
    return rows;
}

class Output {
public:
    Output(const Options& o, std::ostream& out) : out_(&out), precision_(o.precision) {
        if (!o.csv.empty() && o.csv != "-") {
            file_ = std::make_unique<std::ofstream>(o.csv, std::ios::binary);
            if (!*file_) throw UsageError("cannot open " + o.csv + " for writing");
            out_ = file_.get();
        }
    }

    void header(const std::string& h) { *out_ << h << '\n'; }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) *out_ << (i ? "," : "") << number(values[i], precision_);
        *out_ << '\n';
    }

    void value(double v) { *out_ << number(v, precision_) << '\n'; }

private:
    std::ostream* out_;
    int precision_;
    std::unique_ptr<std::ofstream> file_;
};

SeriesParameters series_params(const Options& o) {
    SeriesParameters sp{o.alpha, parse_list(o.a), parse_list(o.b), o.m};
    sp.validate();
    return sp;
}

EnsembleParams ensemble(const Options& o) {
    EnsembleParams p;
    p.n = o.n;
    p.a = o.ens_a;
    p.beta = o.beta;
    p.l = o.l;
    p.sigma_eigs = parse_values(o.sigma);
    return p;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    const auto sp = series_params(o);
    const auto x = parse_values(o.x);
    std::optional<std::vector<double>> y;
    if (!o.y.empty()) y = parse_values(o.y);
    const auto r = y ? hg_general(sp, x, std::span<const double>(*y), parse_kernel(o.kernel))
                     : hg_general(sp, x, std::nullopt, parse_kernel(o.kernel));
    print_warnings(r.warnings, err);
    Output sink(o, out);
    if (o.csv.empty()) {
        sink.value(r.value);
    } else {
        sink.header("value,diagnostic");
        sink.row({r.value, convergence_diagnostic(r)});
    }
    return 0;
}

int cmd_eval_identity(const Options& o, std::ostream& out, std::ostream& err) {
    const auto sp = series_params(o);
    const auto xs = points(o);
    const auto results = hg_identity(sp, o.n, xs);
    print_warnings(results.front().warnings, err);
    Output sink(o, out);
    if (xs.size() == 1 && o.csv.empty()) {
        sink.value(results.front().value);
        return 0;
    }
    sink.header("x,value,diagnostic");
    for (std::size_t i = 0; i < xs.size(); ++i) sink.row({xs[i], results[i].value, convergence_diagnostic(results[i])});
    return 0;
}

int cmd_jack(const Options& o, std::ostream& out, std::ostream&) {
    if (!(o.alpha > 0.0)) throw UsageError("alpha must be positive");
    const auto kappa = parse_partition(o.partition);
    const auto x = parse_values(o.x);
    double v = jack_value(kappa, x, o.alpha);
    if (o.norm == "c") v = c_from_j(v, kappa, o.alpha);
    Output sink(o, out);
    sink.value(v);
    return 0;
}

int emit_curve(const Options& o, std::ostream& out, const std::vector<double>& xs, bool with_diagnostic,
               const std::function<double(double)>& f, double diagnostic = 0.0) {
    const auto rows = sweep(xs, [&](double x) { return std::vector<double>{x, f(x)}; });
    Output sink(o, out);
    if (xs.size() == 1 && o.csv.empty() && o.grid.empty()) {
        sink.value(rows.front()[1]);
        return 0;
    }
    sink.header(with_diagnostic ? "x,value,diagnostic" : "x,value");
    for (auto r : rows) {
        if (with_diagnostic) r.push_back(diagnostic);
        sink.row(r);
    }
    return 0;
}

int cmd_cdf_lmax(const Options& o, std::ostream& out, std::ostream&) {
    const auto p = ensemble(o);
    const auto xs = points(o);
    if (o.ensemble == "laguerre") {
        p.validate_laguerre();
        return emit_curve(o, out, xs, false, [&](double x) { return lmax_cdf_laguerre(x, p, o.m); });
    }
    p.validate_wishart();
    // The grid loop is already concurrent, so each point runs the serial kernel.
    return emit_curve(o, out, xs, false, [&](double x) { return lmax_cdf_wishart(x, p, o.m, Kernel::serial); });
}

int cmd_pdf_lmin(const Options& o, std::ostream& out, std::ostream&) {
    const auto p = ensemble(o);
    (void)lmin_termination_degree(p);
    const auto xs = points(o);
    const double z = o.normalize ? lmin_pdf_normalization(p) : 1.0;
    return emit_curve(o, out, xs, false, [&](double x) { return z * lmin_pdf_laguerre(x, p); });
}

int cmd_pdf_trace(const Options& o, std::ostream& out, std::ostream& err) {
    const auto p = ensemble(o);
    const TraceDensity f(p, o.m, parse_kernel(o.kernel));
    if (f.diagnostic() > 1e-6) err << "warning: trace series diagnostic " << number(f.diagnostic(), 3) << " at m = " << o.m << '\n';
    return emit_curve(o, out, points(o), true, f, f.diagnostic());
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream&) {
    SeriesParameters sp{o.alpha, parse_list(o.a), parse_list(o.b), o.m};
    sp.validate();
    const auto sizes = parse_grid(o.grid.empty() ? (o.vary == "n" ? "10:80:10" : "5:25:5") : o.grid);
    const Kernel kernel = parse_kernel(o.kernel);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    Output sink(o, out);
    sink.header("size,seconds");
    for (double s : sizes) {
        const int size = static_cast<int>(std::lround(s));
        const int n = o.vary == "n" ? size : o.n;
        sp.m = o.vary == "n" ? o.m : size;
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = u(rng);
        std::vector<double> times;
        for (int r = 0; r < std::max(1, o.repeat); ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            (void)hg_general(sp, x, std::nullopt, kernel);
            times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
        sink.row({static_cast<double>(size), times[times.size() / 2]});
    }
    return 0;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream&) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << '\n';
        failures += ok ? 0 : 1;
    };
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    std::vector<double> x(5);
    double tr = 0.0;
    for (auto& v : x) tr += v = u(rng);

    const double e = hg_general(SeriesParameters{2.0, {}, {}, 25}, x).value;
    report("0F0 equals exp(trace)", std::abs(e - std::exp(tr)) <= 1e-12 * std::exp(tr));

    double det = 1.0;
    for (double v : x) det *= 1.0 - v;
    const double a = 0.6;
    const double f10 = hg_general(SeriesParameters{1.0, {a}, {}, 40}, x).value;
    report("1F0 equals det(I - X)^-a", std::abs(f10 - std::pow(det, -a)) <= 1e-6 * std::pow(det, -a));

    report("627 partitions of 20", count_partitions_bounded(20, 20) - count_partitions_bounded(19, 20) == 627);

    const SeriesParameters sp{0.8, {0.5, 1.2}, {2.7}, 12};
    report("serial and parallel kernels agree",
           hg_general(sp, x, std::nullopt, Kernel::serial).value == hg_general(sp, x, std::nullopt, Kernel::parallel).value);

    const double xi = 0.3;
    const double id = hg_identity(sp, 5, std::span<const double>(&xi, 1)).front().value;
    const std::vector<double> xs(5, xi);
    report("identity sweep matches general", std::abs(id - hg_general(sp, xs).value) <= 1e-12 * std::abs(id));
    return failures == 0 ? 0 : 1;
}

void add_series_flags(CLI::App* c, Options& o) {
    c->add_option("--m", o.m, "truncation degree")->check(CLI::NonNegativeNumber);
    c->add_option("--alpha", o.alpha, "Jack parameter");
    c->add_option("--a", o.a, "numerator parameters, comma-separated, \"\" for none");
    c->add_option("--b", o.b, "denominator parameters, comma-separated, \"\" for none");
}

void add_ensemble_flags(CLI::App* c, Options& o) {
    c->add_option("--n", o.n, "matrix size");
    c->add_option("--beta", o.beta, "Laguerre beta");
    c->add_option("--a", o.ens_a, "Laguerre parameter a");
    c->add_option("--l", o.l, "Wishart degrees of freedom");
    c->add_option("--sigma", o.sigma, "covariance eigenvalues: comma list or file");
}

void add_points_flags(CLI::App* c, Options& o) {
    c->add_option("--x", o.x, "evaluation point(s): comma list or file");
    c->add_option("--grid", o.grid, "start:stop:step");
}

void add_output_flags(CLI::App* c, Options& o) {
    c->add_option("--csv", o.csv, "write CSV to PATH ('-' for standard output)");
    c->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, 17));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Truncated hypergeometric functions of a matrix argument"};
    app.name("mhg");
    app.require_subcommand(1, 1);
    std::function<int(const Options&, std::ostream&, std::ostream&)> action;

    auto* eval = app.add_subcommand("eval", "pFq at diag(x), optionally with a second argument");
    add_series_flags(eval, o);
    eval->add_option("--x", o.x, "eigenvalues of X: comma list or file");
    eval->add_option("--two-arg-y", o.y, "eigenvalues of Y: comma list or file");
    eval->add_option("--kernel", o.kernel)->check(CLI::IsMember({"serial", "parallel"}));
    add_output_flags(eval, o);
    eval->callback([&] { action = cmd_eval; });

    auto* ident = app.add_subcommand("eval-identity", "pFq at x I_n over one or many x");
    add_series_flags(ident, o);
    ident->add_option("--n", o.n, "matrix size");
    add_points_flags(ident, o);
    add_output_flags(ident, o);
    ident->callback([&] { action = cmd_eval_identity; });

    auto* jack = app.add_subcommand("jack", "Jack function of a partition at diag(x)");
    jack->add_option("--partition", o.partition, "parts, comma-separated")->required();
    jack->add_option("--alpha", o.alpha, "Jack parameter");
    jack->add_option("--x", o.x, "eigenvalues: comma list or file");
    jack->add_option("--normalization", o.norm, "j or c")->check(CLI::IsMember({"j", "c"}));
    add_output_flags(jack, o);
    jack->callback([&] { action = cmd_jack; });

    auto* lmax = app.add_subcommand("cdf-lmax", "c.d.f. of the largest eigenvalue");
    lmax->add_option("--ensemble", o.ensemble)->check(CLI::IsMember({"laguerre", "wishart"}));
    lmax->add_option("--m", o.m, "truncation degree")->check(CLI::NonNegativeNumber);
    add_ensemble_flags(lmax, o);
    add_points_flags(lmax, o);
    add_output_flags(lmax, o);
    lmax->callback([&] { action = cmd_cdf_lmax; });

    auto* lmin = app.add_subcommand("pdf-lmin", "density of the smallest Laguerre eigenvalue");
    add_ensemble_flags(lmin, o);
    lmin->add_flag("--normalize", o.normalize, "scale by the quadrature normalization");
    add_points_flags(lmin, o);
    add_output_flags(lmin, o);
    lmin->callback([&] { action = cmd_pdf_lmin; });

    auto* trace = app.add_subcommand("pdf-trace", "density of the Wishart trace");
    trace->add_option("--m", o.m, "truncation degree")->check(CLI::NonNegativeNumber);
    add_ensemble_flags(trace, o);
    trace->add_option("--kernel", o.kernel)->check(CLI::IsMember({"serial", "parallel"}));
    add_points_flags(trace, o);
    add_output_flags(trace, o);
    trace->callback([&] { action = cmd_pdf_trace; });

    auto* bench = app.add_subcommand("bench", "time the general evaluation over a size grid");
    add_series_flags(bench, o);
    bench->add_option("--n", o.n, "matrix size when varying m");
    bench->add_option("--vary", o.vary, "n or m")->check(CLI::IsMember({"n", "m"}));
    bench->add_option("--grid", o.grid, "sizes as start:stop:step");
    bench->add_option("--repeat", o.repeat, "runs per size; the median is reported");
    bench->add_option("--kernel", o.kernel)->check(CLI::IsMember({"serial", "parallel"}));
    bench->add_option("--seed", o.seed);
    add_output_flags(bench, o);
    bench->callback([&] { action = cmd_bench; });

    auto* self = app.add_subcommand("selftest", "quick internal consistency checks");
    self->add_option("--seed", o.seed);
    self->callback([&] { action = cmd_selftest; });

    std::vector<std::string> argv_store{"mhg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPole;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mhg::cli
