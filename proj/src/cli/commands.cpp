#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "renyi/cli.hpp"
#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "renyi/qcalc.hpp"
#include "renyi/thermo.hpp"

namespace renyi::cli {

namespace {

constexpr double kDefaultTemp0 = 1.0;
constexpr double kDefaultIdentityTolerance = 1e-9;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string q;
    double temp = 0.0;
    double temp0 = kDefaultTemp0;
    double tol = kDefaultIdentityTolerance;
    std::string mode;
    std::string range;
    bool strict = false;

    std::vector<CLI::Option *> temp_opts;
    std::vector<CLI::Option *> temp0_opts;
};

bool given(const std::vector<CLI::Option *> &opts) {
    for (const CLI::Option *opt : opts)
        if (opt->count() > 0) return true;
    return false;
}

Normalization normalization(const Options &o) { return o.strict ? Normalization::Strict : Normalization::Rescale; }

InputDocument load(const std::string &path, std::istream &in) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad()) throw IoError("cannot read standard input");
        text = ss.str();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        if (f.bad()) throw IoError("cannot read '" + path + "'");
        text = ss.str();
    }
    return parse_document(text);
}

double parse_real(const std::string &text, const char *what) {
    if (text == "inf" || text == "+inf" || text == "infinity" || text == "Infinity")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw Error(ErrorKind::InvalidInput, std::string("cannot parse ") + what + " '" + text + "'");
    return v;
}

// --temp0 flag, then the document's "temp0", then 1.
double reference_temperature(const Options &o, const InputDocument &doc) {
    if (given(o.temp0_opts)) return o.temp0;
    if (doc.temp0) return *doc.temp0;
    return kDefaultTemp0;
}

// The thermal system named by the document: energies as given, a Hamiltonian's
// eigenvalues, or probabilities embedded as a Gibbs state at T0.
EnergySpectrum thermal_system(const InputDocument &doc, double temp0, const Options &o) {
    if (const auto *e = std::get_if<Energies>(&doc.payload)) return EnergySpectrum::make(e->values);
    if (const auto *m = std::get_if<Matrix>(&doc.payload))
        return EnergySpectrum::of(HermitianOperator::make(m->values));
    const auto &p = std::get<Probabilities>(doc.payload);
    return embed_distribution(ProbDist::make(p.values, normalization(o)), temp0);
}

void print_kv(std::ostream &out, const char *key, double value) { out << key << '=' << format_scalar(value) << '\n'; }

int cmd_entropy(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const EntropyOrder order = EntropyOrder::of(parse_real(o.q, "order"));
    double s = 0.0;
    if (const auto *p = std::get_if<Probabilities>(&doc.payload))
        s = renyi(ProbDist::make(p->values, normalization(o)), order);
    else if (const auto *m = std::get_if<Matrix>(&doc.payload))
        s = renyi_quantum(HermitianOperator::make(m->values), order, normalization(o));
    else
        throw Error(ErrorKind::InvalidInput, "entropy needs a \"probabilities\" or \"matrix\" document");
    out << format_scalar(s) << '\n';
    return kSuccess;
}

int cmd_relation(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const double temp0 = reference_temperature(o, doc);
    const double q = parse_real(o.q, "order");
    const RelationReport r = relation_check(thermal_system(doc, temp0, o), temp0, q);
    print_kv(out, "T0", r.reference_temperature);
    print_kv(out, "T", r.temperature);
    print_kv(out, "q", r.q);
    print_kv(out, "lhs", r.lhs);
    print_kv(out, "rhs", r.rhs);
    print_kv(out, "residual", r.residual);
    return std::abs(r.residual) <= o.tol ? kSuccess : kIdentityViolation;
}

std::vector<double> grid(const std::string &spec) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    for (;;) {
        const auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3) throw Error(ErrorKind::InvalidInput, "--range must be lo:hi:count");
    const double lo = parse_real(parts[0], "range bound");
    const double hi = parse_real(parts[1], "range bound");
    long long count = 0;
    const char *end = parts[2].data() + parts[2].size();
    auto [ptr, ec] = std::from_chars(parts[2].data(), end, count);
    if (ec != std::errc() || ptr != end) throw Error(ErrorKind::InvalidInput, "range count must be an integer");
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw Error(ErrorKind::InvalidInput, "range needs finite lo < hi");
    if (count < 2) throw Error(ErrorKind::InvalidInput, "range count must be >= 2");

    std::vector<double> xs(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    xs.back() = hi;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw Error(ErrorKind::InvalidInput, "range too narrow for the requested count");
    return xs;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream &out, const Table &t) {
    for (const auto &row : t.rows)
        for (double v : row)
            if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "sweep produced a non-finite value");
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
    out << "\r\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt::format("{:.17g}", row[i]);
        out << "\r\n";
    }
}

bool near_one(double q) { return std::abs(q - 1.0) <= kQOneThreshold; }

// Order sweep at fixed T0. Energies also get the quench-ratio side of the
// identity; at q = 1 that column carries its limit, the von Neumann entropy.
Table sweep_order(const InputDocument &doc, double temp0, const std::vector<double> &qs, const Options &o) {
    Table t;
    if (const auto *e = std::get_if<Energies>(&doc.payload)) {
        const EnergySpectrum spectrum = EnergySpectrum::make(e->values);
        const ProbDist p = gibbs_state(spectrum, temp0);
        t.header = {"q", "temperature", "renyi", "quench_ratio", "residual"};
        for (double q : qs) {
            const double s = renyi(p, EntropyOrder::of(q));
            const double ratio = near_one(q) ? von_neumann_from_temperature(spectrum, temp0)
                                             : quench_ratio(spectrum, temp0, q);
            t.rows.push_back({q, temp0 / q, s, ratio, s - ratio});
        }
        return t;
    }
    ProbDist p = [&] {
        if (const auto *m = std::get_if<Matrix>(&doc.payload))
            return validate_density(HermitianOperator::make(m->values), normalization(o));
        return ProbDist::make(std::get<Probabilities>(doc.payload).values, normalization(o));
    }();
    t.header = {"q", "renyi"};
    for (const CurvePoint &c : renyi_curve(p, qs)) t.rows.push_back({c.q, c.entropy});
    return t;
}

// Temperature sweep: thermodynamic potentials at T plus both sides of the
// secant identity between T0 and T. At T = T0 the secant is its tangent limit.
Table sweep_temperature(const InputDocument &doc, double temp0, const std::vector<double> &temps, const Options &o) {
    const EnergySpectrum spectrum = thermal_system(doc, temp0, o);
    const ProbDist p0 = gibbs_state(spectrum, temp0);
    Table t;
    t.header = {"temperature", "log_partition", "free_energy", "tangent", "secant", "renyi", "residual"};
    for (double temp : temps) {
        const ThermalPoint tp = free_energy(spectrum, temp);
        const double tangent = von_neumann_from_temperature(spectrum, temp);
        const double q = temp0 / temp;
        double secant = 0.0;
        double s = 0.0;
        if (near_one(q)) {
            secant = von_neumann_from_temperature(spectrum, temp0);
            s = renyi(p0, EntropyOrder::one());
        } else {
            secant = free_energy_secant(spectrum, temp0, temp);
            s = renyi(p0, EntropyOrder::of(q));
        }
        t.rows.push_back({temp, tp.log_partition, tp.free_energy, tangent, secant, s, s - secant});
    }
    return t;
}

int cmd_sweep(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const double temp0 = reference_temperature(o, doc);
    detail::require_positive_temperature(temp0, "temp0");
    const std::vector<double> xs = grid(o.range);
    Table t;
    if (o.mode == "q")
        t = sweep_order(doc, temp0, xs, o);
    else if (o.mode == "T")
        t = sweep_temperature(doc, temp0, xs, o);
    else
        throw Error(ErrorKind::InvalidInput, "--mode must be 'q' or 'T'");
    std::ostringstream buf;
    write_csv(buf, t);
    out << buf.str();
    return kSuccess;
}

int cmd_embed(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const auto *p = std::get_if<Probabilities>(&doc.payload);
    if (p == nullptr) throw Error(ErrorKind::InvalidInput, "embed needs a \"probabilities\" document");
    const double temp0 = reference_temperature(o, doc);
    const EnergySpectrum e = embed_distribution(ProbDist::make(p->values, normalization(o)), temp0);
    InputDocument result{Energies{{e.levels().begin(), e.levels().end()}}, temp0, doc.label};
    out << serialize_document(result) << '\n';
    return kSuccess;
}

// --temp, falling back to the document's "temp0".
double gibbs_temperature(const Options &o, const InputDocument &doc) {
    if (given(o.temp_opts)) return o.temp;
    if (doc.temp0) return *doc.temp0;
    throw Error(ErrorKind::InvalidInput, "no temperature: pass --temp or set \"temp0\" in the document");
}

int cmd_gibbs(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const double temp = gibbs_temperature(o, doc);
    InputDocument result;
    result.label = doc.label;
    if (const auto *e = std::get_if<Energies>(&doc.payload)) {
        const ProbDist p = gibbs_state(EnergySpectrum::make(e->values), temp);
        result.payload = Probabilities{{p.weights().begin(), p.weights().end()}};
    } else if (const auto *m = std::get_if<Matrix>(&doc.payload)) {
        result.payload = Matrix{gibbs_state_quantum(HermitianOperator::make(m->values), temp).matrix()};
    } else {
        throw Error(ErrorKind::InvalidInput, "gibbs needs an \"energies\" or \"matrix\" document");
    }
    out << serialize_document(result) << '\n';
    return kSuccess;
}

int cmd_free_energy(const Options &o, std::istream &in, std::ostream &out) {
    const InputDocument doc = load(o.input, in);
    const double temp = gibbs_temperature(o, doc);
    if (std::holds_alternative<Probabilities>(doc.payload))
        throw Error(ErrorKind::InvalidInput, "free-energy needs an \"energies\" or \"matrix\" document");
    const ThermalPoint tp = free_energy(thermal_system(doc, kDefaultTemp0, o), temp);
    print_kv(out, "T", tp.temperature);
    print_kv(out, "lnZ", tp.log_partition);
    print_kv(out, "F", tp.free_energy);
    return kSuccess;
}

} // namespace

int run(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Renyi entropy, Gibbs states and free-energy secant identities (nats, k_B = 1)", "renyi"};
    app.require_subcommand(1);
    Options o;

    auto input = [&o](CLI::App *sub) {
        sub->add_option("input", o.input, "JSON document path, or - for standard input")->capture_default_str();
    };
    auto strict = [&o](CLI::App *sub) {
        sub->add_flag("--strict", o.strict, "reject inputs that are not already normalized");
    };
    auto temp0 = [&o](CLI::App *sub) {
        o.temp0_opts.push_back(sub->add_option("--temp0", o.temp0, "reference temperature T0 (default: document temp0, else 1)"));
    };

    CLI::App *entropy = app.add_subcommand("entropy", "Renyi entropy S_q of a distribution or density matrix");
    input(entropy);
    entropy->add_option("--q", o.q, "order: a number >= 0 or inf")->required();
    strict(entropy);

    CLI::App *relation = app.add_subcommand("relation", "check S_q(T0) = -(F(T0/q) - F(T0)) / (T0/q - T0)");
    input(relation);
    relation->add_option("--q", o.q, "order q = T0/T")->required();
    temp0(relation);
    relation->add_option("--tol", o.tol, "maximum |residual| for exit status 0")->capture_default_str();
    strict(relation);

    CLI::App *sweep = app.add_subcommand("sweep", "CSV sweep over order (q) or temperature (T)");
    input(sweep);
    sweep->add_option("--mode", o.mode, "q or T")->required()->check(CLI::IsMember({"q", "T"}));
    sweep->add_option("--range", o.range, "lo:hi:count")->required();
    temp0(sweep);
    strict(sweep);

    CLI::App *embed = app.add_subcommand("embed", "energies -T0 ln p_i whose Gibbs state at T0 is p");
    input(embed);
    temp0(embed);
    strict(embed);

    CLI::App *gibbs = app.add_subcommand("gibbs", "Gibbs state at temperature T");
    input(gibbs);
    o.temp_opts.push_back(gibbs->add_option("--temp", o.temp, "temperature T (default: document temp0)"));

    CLI::App *free = app.add_subcommand("free-energy", "ln Z and F = -T ln Z at temperature T");
    input(free);
    o.temp_opts.push_back(free->add_option("--temp", o.temp, "temperature T (default: document temp0)"));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("renyi");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationFailure;
    }

    try {
        if (entropy->parsed()) return cmd_entropy(o, in, out);
        if (relation->parsed()) return cmd_relation(o, in, out);
        if (sweep->parsed()) return cmd_sweep(o, in, out);
        if (embed->parsed()) return cmd_embed(o, in, out);
        if (gibbs->parsed()) return cmd_gibbs(o, in, out);
        return cmd_free_energy(o, in, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
}

} // namespace renyi::cli
