#include "monoconv_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoconv/alt_convolutions.hpp"
#include "monoconv/atomic_conv.hpp"
#include "monoconv/bp_map.hpp"
#include "monoconv/json_io.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/semigroup.hpp"
#include "monoconv/stable_laws.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv::cli {

namespace {

using nlohmann::json;

std::string read_source(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw ValidationError("cannot read \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Named triples for quick use; anything else is a path or inline JSON.
Triple load_triple(const std::string& arg) {
    if (arg == "arcsine") return {0.0, AtomicMeasure::dirac(0.0)};
    if (arg == "poisson") return {0.5, AtomicMeasure({{1.0, 0.5}})};
    return triple_from_json(read_source(arg));
}

Measure load_measure(const std::string& arg) { return measure_from_json(read_source(arg)); }

double parse_number(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ValidationError("bad number for " + what + ": \"" + s + "\"");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw ValidationError("bad number for " + what + ": \"" + s + "\"");
    return v;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

cplx parse_complex(const std::string& s, const std::string& what) {
    const auto parts = split(s);
    if (parts.size() == 1) return {parse_number(parts[0], what), 0.0};
    if (parts.size() != 2) throw ValidationError(what + " must be \"re,im\"");
    return {parse_number(parts[0], what), parse_number(parts[1], what)};
}

std::vector<double> parse_grid(const std::string& s) {
    const auto parts = split(s);
    if (parts.size() != 3) throw ValidationError("grid must be \"lo,hi,n\"");
    const double lo = parse_number(parts[0], "grid lo"), hi = parse_number(parts[1], "grid hi");
    const double nd = parse_number(parts[2], "grid n");
    if (!(hi > lo) || nd < 2 || nd != std::floor(nd)) throw ValidationError("grid needs lo < hi and integer n >= 2");
    const auto n = static_cast<std::size_t>(nd);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return xs;
}

std::vector<double> eps_schedule(double eps_min) {
    if (eps_min <= 0.0) return default_eps_schedule();
    if (!(eps_min < 1e-2)) throw ValidationError("--tol-eps-min must be below 1e-2");
    std::vector<double> e;
    for (double v = 1e-2; v > eps_min * 1.0000001; v /= std::sqrt(10.0)) e.push_back(v);
    e.push_back(eps_min);
    if (e.size() < 3) throw ValidationError("--tol-eps-min leaves fewer than three eps levels");
    return e;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string density_csv(const GridMeasure& g) {
    std::string s = "x,density\n";
    for (std::size_t i = 0; i < g.xs().size(); ++i) s += num(g.xs()[i]) + "," + num(g.density()[i]) + "\n";
    return s;
}

json atoms_json(const AtomicMeasure& a) {
    json arr = json::array();
    for (const auto& at : a.atoms()) arr.push_back(json::array({at.x, at.w}));
    return arr;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// JSON has no infinities; spell them out.
json extended(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    return v;
}

class Output {
public:
    Output(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}
    bool to_file() const { return !path_.empty(); }
    void write(const std::string& text) const {
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) throw ValidationError("cannot write \"" + path_ + "\"");
        f << text;
    }

private:
    std::ostream& out_;
    std::string path_;
};

std::optional<AtomicMeasure> as_atomic(const Measure& m) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return *a;
    if (const auto* f = std::get_if<AnalyticFamily>(&m))
        if (const auto* d = std::get_if<Dirac>(f)) return AtomicMeasure::dirac(d->a);
    return std::nullopt;
}

json moments_json(const MomentSequence& m) { return json{{"moments", m}}; }

// First failing condition of the subordinator test, empty when it holds.
std::string subordinator_failure(const VectorField& V) {
    if (!V.has_pair()) return subordinator_check(V) ? "" : "field fails the subordinator test";
    const Bounds e = V.tau_extent();
    if (e.lo <= e.hi && e.lo < 0.0) return "tau charges the negative half-line";
    const auto inv = positive_inverse_integral(V.tau());
    if (!inv) return "tau has an atom at 0 or the integral of 1/x diverges";
    if (V.gamma() < *inv - 1e-12) return "gamma = " + num(V.gamma()) + " is below the integral of 1/x d tau = " + num(*inv);
    return "";
}

struct Flags {
    std::string left, right, out, triple, measure, classical, z, grid, alpha_b = "1,0", c = "0,0", atoms_out;
    std::string stable_grid;
    double t = 0.0, x = 0.0, alpha = 0.0, eps_min = 0.0, y = 1.0;
    int order = 8;
    bool reverse = false, show_case = false;
};

int dispatch(const std::string& cmd, const std::string& sub, const Flags& f, std::ostream& out) {
    const Output o(out, f.out);
    if (cmd == "convolve" || cmd == "bconvolve") {
        const Measure mu = load_measure(f.left), nu = load_measure(f.right);
        const auto am = as_atomic(mu), an = as_atomic(nu);
        if (am && an) {
            const AtomicMeasure r = cmd == "convolve" ? monotone_convolve_atomic(*am, *an) : boolean_convolve_atomic(*am, *an);
            o.write(measure_to_json(r) + "\n");
            return 0;
        }
        if (cmd == "bconvolve") {
            if (f.grid.empty()) throw ValidationError("bconvolve of non-atomic measures needs --grid");
            o.write(measure_to_json(boolean_convolve(mu, nu, parse_grid(f.grid))) + "\n");
            return 0;
        }
        const MomentSequence m = convolve_moments(moments_of(mu, f.order), moments_of(nu, f.order), f.order);
        json j = moments_json(m);
        j["mode"] = "moments";
        o.write(j.dump() + "\n");
        return 0;
    }
    if (cmd == "evolve") {
        const Triple tr = load_triple(f.triple);
        const VectorField V(tr.gamma, tr.tau);
        std::vector<cplx> zs;
        if (!f.z.empty()) zs.push_back(parse_complex(f.z, "--z"));
        if (!f.grid.empty())
            for (double x : parse_grid(f.grid)) zs.emplace_back(x, f.y);
        if (zs.empty()) throw ValidationError("evolve needs --z or --grid");
        std::string s = "re,im,H_re,H_im\n";
        for (cplx z : zs) {
            const cplx h = flow(V, z, f.t);
            s += num(z.real()) + "," + num(z.imag()) + "," + num(h.real()) + "," + num(h.imag()) + "\n";
        }
        o.write(s);
        return 0;
    }
    if (cmd == "density" || cmd == "markov") {
        const Triple tr = load_triple(f.triple);
        const VectorField V(tr.gamma, tr.tau);
        if (f.grid.empty()) throw ValidationError(cmd + " needs --grid");
        const auto xs = parse_grid(f.grid);
        const auto eps = eps_schedule(f.eps_min);
        const GridMeasure g = cmd == "density" ? stieltjes_invert(flow_evaluator(V, f.t), xs, eps)
                                               : markov_kernel(V, f.t, f.x, xs, eps);
        o.write(density_csv(g));
        const std::string atoms = json{{"atoms", atoms_json(g.atoms())}}.dump() + "\n";
        if (!f.atoms_out.empty()) Output(out, f.atoms_out).write(atoms);
        else if (o.to_file()) out << atoms;
        return 0;
    }
    if (cmd == "moments") {
        if (f.order < 0 || f.order > 16) throw ValidationError("--order must be in 0..16");
        if (!f.measure.empty()) {
            o.write(moments_json(moments_of(load_measure(f.measure), f.order)).dump() + "\n");
            return 0;
        }
        if (f.triple.empty()) throw ValidationError("moments needs --measure or --triple");
        const Triple tr = load_triple(f.triple);
        const FieldCoefficients r = field_coefficients(tr.gamma, tr.tau, std::max(f.order, 1));
        o.write(moments_json(semigroup_moments(r, f.t, f.order)).dump() + "\n");
        return 0;
    }
    if (cmd == "check") {
        json j;
        if (sub == "injectivity") {
            const Measure m = load_measure(f.measure);
            const auto c = collision_search(evaluator_of(m));
            j["injective"] = !c.has_value();
            if (c) {
                auto clean = [](cplx z) {
                    auto snap = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
                    return complex_json({snap(z.real()), snap(z.imag())});
                };
                j["collision"] = json::array({clean(c->z1), clean(c->z2)});
                j["not_n_divisible_for_n_gt"] = divisibility_bound(finite_variance_rep(m), *c);
            }
        } else if (sub == "positivity") {
            const Measure m = load_measure(f.measure);
            const bool ok = positivity_check(nevanlinna_rep(finite_variance_rep(m)));
            j["positive"] = ok;
            j["support_lower_bound"] = extended(support_bounds(m).lo);
        } else if (sub == "symmetry") {
            const Triple tr = load_triple(f.triple);
            j["symmetric"] = symmetry_diagnostic(tr.gamma, tr.tau, f.order);
            if (std::abs(tr.gamma) >= 1e-12) j["failing_condition"] = "gamma is nonzero";
        } else if (sub == "subordinator") {
            const Triple tr = load_triple(f.triple);
            const VectorField V(tr.gamma, tr.tau);
            const bool ok = subordinator_check(V);
            j["subordinator"] = ok;
            if (!ok) j["failing_condition"] = subordinator_failure(V);
        } else if (sub == "bounded-below") {
            const Triple tr = load_triple(f.triple);
            const VectorField V(tr.gamma, tr.tau);
            const bool ok = bounded_below_check(V);
            j["bounded_below"] = ok;
            const Bounds e = V.tau_extent();
            if (e.lo <= e.hi) j["tau_lower_end"] = e.lo;
            if (!ok) j["failing_condition"] = "tau is not bounded below";
        } else {
            throw ValidationError("unknown check \"" + sub + "\"");
        }
        o.write(j.dump() + "\n");
        return 0;
    }
    if (cmd == "stable") {
        const StableParams p{f.alpha, parse_complex(f.alpha_b, "--b"), parse_complex(f.c, "--c"), f.t};
        if (f.show_case == !f.stable_grid.empty()) throw ValidationError("stable needs exactly one of --case and --density");
        if (f.show_case) {
            const SupportCase sc = stable_support_case(p);
            json j{{"case", sc.case_id}, {"ac_empty", sc.ac_empty}};
            if (!sc.ac_empty) j["ac"] = json::array({extended(sc.ac.lo), extended(sc.ac.hi)});
            j["atom"] = sc.atom ? json::array({sc.atom->x, sc.atom->w}) : json(nullptr);
            o.write(j.dump() + "\n");
            return 0;
        }
        const StableDensity d = stable_density(p, parse_grid(f.stable_grid));
        o.write(density_csv(d.measure));
        const std::string atoms =
            json{{"atoms", atoms_json(d.measure.atoms())}, {"closed_form", d.closed_form}}.dump() + "\n";
        if (!f.atoms_out.empty()) Output(out, f.atoms_out).write(atoms);
        else if (o.to_file()) out << atoms;
        return 0;
    }
    if (cmd == "bpmap") {
        if (!f.reverse) {
            if (f.classical.empty()) throw ValidationError("bpmap needs --classical");
            const Triple c = triple_from_json(read_source(f.classical));
            const VectorField V = lambda_M(ClassicalTriple{c.gamma, c.tau});
            o.write(triple_to_json({V.gamma(), V.tau()}) + "\n");
        } else {
            if (f.triple.empty()) throw ValidationError("bpmap --reverse needs --triple");
            const Triple m = load_triple(f.triple);
            const ClassicalTriple c = lambda_M_inverse(VectorField(m.gamma, m.tau));
            o.write(triple_to_json({c.gamma, c.tau}) + "\n");
        }
        return 0;
    }
    throw ValidationError("no subcommand given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monotone convolution toolkit"};
    app.require_subcommand(1);
    Flags f;

    auto* conv = app.add_subcommand("convolve", "monotone convolution of two measures");
    auto* bconv = app.add_subcommand("bconvolve", "boolean convolution of two measures");
    for (auto* s : {conv, bconv}) {
        s->add_option("--left", f.left, "left measure (file or inline JSON)")->required();
        s->add_option("--right", f.right, "right measure")->required();
        s->add_option("--out", f.out, "output file");
        s->add_option("--order", f.order, "moment order for non-atomic inputs");
    }
    bconv->add_option("--grid", f.grid, "lo,hi,n for non-atomic inputs");

    auto* evolve = app.add_subcommand("evolve", "flow H_t(z) of a vector field");
    evolve->add_option("--triple", f.triple, "Levy pair JSON or a named field")->required();
    evolve->add_option("--t", f.t, "time")->required();
    evolve->add_option("--z", f.z, "starting point re,im");
    evolve->add_option("--grid", f.grid, "lo,hi,n of real parts");
    evolve->add_option("--y", f.y, "imaginary part for --grid");
    evolve->add_option("--out", f.out, "output file");

    auto* density = app.add_subcommand("density", "density of the time-t law");
    auto* markov = app.add_subcommand("markov", "transition kernel k_t(x, .)");
    for (auto* s : {density, markov}) {
        s->add_option("--triple", f.triple, "Levy pair JSON or a named field")->required();
        s->add_option("--t", f.t, "time")->required();
        s->add_option("--grid", f.grid, "lo,hi,n")->required();
        s->add_option("--out", f.out, "CSV output file");
        s->add_option("--atoms", f.atoms_out, "atoms JSON output file");
        s->add_option("--tol-eps-min", f.eps_min, "smallest eps of the inversion schedule");
    }
    markov->add_option("--x", f.x, "starting point")->required();

    auto* moments = app.add_subcommand("moments", "moments of a measure or of a semigroup member");
    moments->add_option("--measure", f.measure, "measure JSON");
    moments->add_option("--triple", f.triple, "Levy pair JSON");
    moments->add_option("--t", f.t, "time");
    moments->add_option("--order", f.order, "highest order");
    moments->add_option("--out", f.out, "output file");

    auto* check = app.add_subcommand("check", "structural checks");
    check->require_subcommand(1);
    std::string sub;
    for (const char* name : {"injectivity", "positivity", "symmetry", "subordinator", "bounded-below"}) {
        auto* s = check->add_subcommand(name);
        s->add_option("--measure", f.measure, "measure JSON");
        s->add_option("--triple", f.triple, "Levy pair JSON");
        s->add_option("--order", f.order, "moment order for the symmetry test");
        s->add_option("--out", f.out, "output file");
        s->callback([&sub, s] { sub = s->get_name(); });
    }

    auto* stable = app.add_subcommand("stable", "strictly stable laws");
    stable->add_option("--alpha", f.alpha, "index in (0, 2]")->required();
    stable->add_option("--b", f.alpha_b, "b as re,im");
    stable->add_option("--c", f.c, "c as re,im");
    stable->add_option("--t", f.t, "time")->required();
    stable->add_option("--density", f.stable_grid, "lo,hi,n");
    stable->add_flag("--case", f.show_case, "report the support case");
    stable->add_option("--out", f.out, "output file");
    stable->add_option("--atoms", f.atoms_out, "atoms JSON output file");

    auto* bpmap = app.add_subcommand("bpmap", "classical to monotone Levy pair");
    bpmap->add_option("--classical", f.classical, "classical pair JSON");
    bpmap->add_option("--triple", f.triple, "monotone pair JSON (with --reverse)");
    bpmap->add_flag("--reverse", f.reverse, "monotone to classical");
    bpmap->add_option("--out", f.out, "output file");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string cmd;
    for (auto* s : app.get_subcommands()) cmd = s->get_name();
    try {
        return dispatch(cmd, sub, f, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.numeric() ? 3 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace monoconv::cli
