#include "transurf/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "transurf/implicitize.hpp"
#include "transurf/poly_io.hpp"

namespace transurf {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned kDefaultSamples = 25;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::JobFormat, "job file: cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string plain(const MultiPoly &p) { return print_poly(p); }
std::string latex(const MultiPoly &p) { return print_poly(p, PrintStyle::latex); }

std::string rational_string(const Rational &r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string pair_label(VarGroup g) { return g == VarGroup::su ? "s,u" : "t,v"; }

// q^k with parentheses around sums.
std::string power_string(const MultiPoly &q, unsigned k, PrintStyle style) {
    std::string base = print_poly(q, style);
    if (q.size() > 1) base = "(" + base + ")";
    if (k == 1) return base;
    return style == PrintStyle::plain ? base + "^" + std::to_string(k) : base + "^{" + std::to_string(k) + "}";
}

double clean(double x) {
    if (std::abs(x) < 1e-12) return 0.0;
    return std::round(x * 1e12) / 1e12;
}

std::string complex_string(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(10);
    const double re = clean(z.real()), im = clean(z.imag());
    if (im == 0) {
        os << re;
    } else {
        os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    }
    return os.str();
}

ordered_json complex_json(std::complex<double> z) { return ordered_json::array({clean(z.real()), clean(z.imag())}); }

struct Curves {
    CurveParam f, g;
};

Curves load(const JobConfig &config, Job &job) {
    job = parse_job(read_file(config.input_path));
    Curves c;
    try {
        c.f = validate_curve(job.f, VarGroup::su);
    } catch (const Error &e) {
        throw Error(e.code(), std::string("curve f: ") + e.what());
    }
    try {
        c.g = validate_curve(job.g, VarGroup::tv);
    } catch (const Error &e) {
        throw Error(e.code(), std::string("curve g: ") + e.what());
    }
    return c;
}

// ---------------------------------------------------------------------------
// Reports as JSON

ordered_json vec_json(const Vec4 &v) {
    ordered_json a = ordered_json::array();
    for (const auto &p : v) a.push_back(plain(p));
    return a;
}

ordered_json mu_json(const MuBasis &mu) {
    ordered_json j;
    j["degrees"] = {mu.mu[0], mu.mu[1], mu.mu[2]};
    j["columns"] = {vec_json(mu.columns[0]), vec_json(mu.columns[1]), vec_json(mu.columns[2])};
    return j;
}

ordered_json basepoints_json(const BasepointReport &r) {
    ordered_json j;
    j["tol"] = r.tol;
    j["points"] = ordered_json::array();
    for (const auto &p : r.points) {
        ordered_json e;
        e["su"] = {complex_json(p.f_first), complex_json(p.f_second)};
        e["tv"] = {complex_json(p.g_first), complex_json(p.g_second)};
        e["multiplicity"] = p.multiplicity;
        e["bad"] = p.bad;
        e["lambda"] = p.lambda ? complex_json(*p.lambda) : ordered_json(nullptr);
        j["points"].push_back(e);
    }
    j["multiplicity_convention"] = "product of the root multiplicities of f0 and g0";
    return j;
}

ordered_json implicit_json(const ImplicitResult &r, const JobConfig &config, const BasepointReport *bp) {
    const auto &in = r.intermediates;
    ordered_json j;
    j["schema"] = "1";
    j["command"] = "implicitize";
    j["F"] = plain(r.F);
    j["method"] = std::string(method_name(r.method));
    j["swapped"] = r.swapped;
    j["unit"] = rational_string(in.unit);
    j["F_multiplicity"] = in.F_multiplicity;
    j["extraneous"] = ordered_json::array();
    for (const auto &[q, k] : in.extraneous) j["extraneous"].push_back({plain(q), k});
    j["verification"] = {{"symbolic_zero", r.verification.symbolic_zero},
                         {"samples_checked", r.verification.samples_checked},
                         {"seed", r.verification.seed}};
    j["matrices"] = ordered_json::array();
    for (const auto &m : in.matrices) j["matrices"].push_back({{"name", m.name}, {"rows", m.rows}, {"cols", m.cols}});
    j["warnings"] = r.warnings;
    if (config.show_intermediates) {
        ordered_json i;
        i["first_pair"] = std::string(group_name(r.swapped ? VarGroup::tv : VarGroup::su));
        i["mu_basis"] = mu_json(in.mu);
        i["removed_gcds"] = ordered_json::array();
        i["units"] = ordered_json::array();
        for (std::size_t k = 0; k < 3; ++k) {
            i["removed_gcds"].push_back(plain(in.syzygies.removed_gcds[k]));
            i["units"].push_back(rational_string(in.syzygies.units[k]));
        }
        i["A"] = vec_json(in.syzygies.A());
        i["B"] = vec_json(in.syzygies.B());
        i["C"] = vec_json(in.syzygies.C());
        i["G"] = plain(in.syzygies.G);
        i["xA"] = plain(in.xA);
        i["xB"] = plain(in.xB);
        i["xC"] = plain(in.xC);
        i["R1"] = plain(in.R1);
        i["R2"] = plain(in.R2);
        i["F0"] = plain(in.F0);
        i["F1"] = plain(in.F1);
        i["final_resultant"] = plain(in.final_resultant);
        j["intermediates"] = i;
    }
    if (bp) j["basepoints"] = basepoints_json(*bp);
    return j;
}

// ---------------------------------------------------------------------------
// Reports as text / LaTeX

void text_basepoints(std::ostream &out, const BasepointReport &r) {
    out << "basepoints (tol " << r.tol << "):";
    if (r.points.empty()) out << " none";
    out << "\n";
    for (const auto &p : r.points) {
        out << "  (s,u) = (" << complex_string(p.f_first) << ", " << complex_string(p.f_second) << "), (t,v) = ("
            << complex_string(p.g_first) << ", " << complex_string(p.g_second) << "), multiplicity "
            << p.multiplicity;
        if (p.bad) out << ", bad (lambda = " << complex_string(*p.lambda) << ")";
        out << "\n";
    }
}

std::string vec_text(const Vec4 &v, PrintStyle style) {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + print_poly(v[i], style);
    return s + ")";
}

std::string factored_text(const ImplicitResult &r, PrintStyle style) {
    const auto &in = r.intermediates;
    std::string s;
    if (in.unit == -1) s += "-";
    else if (in.unit != 1) s += rational_string(in.unit) + (style == PrintStyle::plain ? "*" : " ");
    for (const auto &[q, k] : in.extraneous) s += power_string(q, k, style) + (style == PrintStyle::plain ? "*" : " ");
    if (in.F_multiplicity == 1) s += "F";
    else s += style == PrintStyle::plain ? "F^" + std::to_string(in.F_multiplicity) : "F^{" + std::to_string(in.F_multiplicity) + "}";
    return s;
}

void implicit_text(std::ostream &out, const ImplicitResult &r, const JobConfig &config, const BasepointReport *bp) {
    const auto &in = r.intermediates;
    out << "method: " << method_name(r.method) << "\n";
    out << "swapped: " << (r.swapped ? "yes" : "no") << "\n";
    out << "final resultant: " << factored_text(r, PrintStyle::plain) << "\n";
    out << "extraneous:";
    if (in.extraneous.empty()) out << " none";
    for (std::size_t i = 0; i < in.extraneous.size(); ++i)
        out << (i ? ", " : " ") << power_string(in.extraneous[i].first, in.extraneous[i].second, PrintStyle::plain);
    out << "\n";
    out << "matrices:";
    for (const auto &m : in.matrices) {
        out << (&m == &in.matrices.front() ? " " : ", ") << m.name << " ";
        if (m.rows == 0) out << "none";
        else out << m.rows << "x" << m.cols;
    }
    out << "\n";
    out << "verification: " << (r.verification.symbolic_zero ? "symbolic zero" : "not symbolic") << ", "
        << r.verification.samples_checked << " random points (seed " << r.verification.seed << ")\n";
    for (const auto &w : r.warnings) out << "warning: " << w << "\n";
    if (config.show_intermediates) {
        const VarGroup first = r.swapped ? VarGroup::tv : VarGroup::su;
        out << "first elimination over " << pair_label(first) << "\n";
        out << "mu-basis degrees: " << in.mu.mu[0] << ", " << in.mu.mu[1] << ", " << in.mu.mu[2] << "\n";
        const char *names[] = {"a", "b", "c"};
        for (std::size_t k = 0; k < 3; ++k) out << "  " << names[k] << " = " << vec_text(in.mu.columns[k], PrintStyle::plain) << "\n";
        out << "removed gcds: ";
        for (std::size_t k = 0; k < 3; ++k) out << (k ? ", " : "") << plain(in.syzygies.removed_gcds[k]);
        out << "\n";
        out << "G = " << plain(in.syzygies.G) << "\n";
        out << "xA = " << plain(in.xA) << "\n";
        out << "xB = " << plain(in.xB) << "\n";
        out << "xC = " << plain(in.xC) << "\n";
        out << "R1 = " << plain(in.R1) << "\n";
        out << "R2 = " << plain(in.R2) << "\n";
        out << "F0 = " << plain(in.F0) << "\n";
        out << "F1 = " << plain(in.F1) << "\n";
        out << "final resultant = " << plain(in.final_resultant) << "\n";
    }
    if (bp) text_basepoints(out, *bp);
    out << "F = " << plain(r.F) << "\n";
}

void implicit_latex(std::ostream &out, const ImplicitResult &r, const JobConfig &config) {
    const auto &in = r.intermediates;
    out << "% method: " << method_name(r.method) << ", swapped: " << (r.swapped ? "yes" : "no") << "\n";
    out << "\\begin{align*}\n";
    if (config.show_intermediates) {
        out << "{\\bf x}{\\bf A} &= " << latex(in.xA) << "\\\\\n";
        out << "{\\bf x}{\\bf B} &= " << latex(in.xB) << "\\\\\n";
        out << "{\\bf x}{\\bf C} &= " << latex(in.xC) << "\\\\\n";
        out << "R_1 &= " << latex(in.R1) << "\\\\\n";
        out << "R_2 &= " << latex(in.R2) << "\\\\\n";
        out << "F_0 &= " << latex(in.F0) << "\\\\\n";
        out << "F_1 &= " << latex(in.F1) << "\\\\\n";
    }
    out << "\\mathrm{Res} &= " << factored_text(r, PrintStyle::latex) << "\\\\\n";
    out << "F &= " << latex(r.F) << "\n";
    out << "\\end{align*}\n";
}

// ---------------------------------------------------------------------------
// Commands

int do_implicitize(const JobConfig &config, std::ostream &out) {
    Job job;
    const Curves c = load(config, job);
    const Method method = config.method ? *config.method : job.method.value_or(Method::automatic);
    const unsigned samples = config.verify_samples ? *config.verify_samples : job.verify_samples.value_or(kDefaultSamples);
    ImplicitResult r = implicitize(c.f, c.g, method);
    r.verification = verify_implicit(r.F, build_surface(c.f, c.g), samples, config.seed);
    std::optional<BasepointReport> bp;
    if (config.run_basepoint_diagnostic) bp = basepoint_diagnostic(c.f, c.g, config.tol);
    switch (config.format) {
    case OutputFormat::json: out << implicit_json(r, config, bp ? &*bp : nullptr).dump(2) << "\n"; break;
    case OutputFormat::latex: implicit_latex(out, r, config); break;
    case OutputFormat::text: implicit_text(out, r, config, bp ? &*bp : nullptr); break;
    }
    return kExitOk;
}

int do_check(const JobConfig &config, std::ostream &out) {
    Job job;
    const Curves c = load(config, job);
    build_surface(c.f, c.g);
    const Method method = config.method ? *config.method : job.method.value_or(Method::automatic);
    const Dispatch d = choose_method(c.f, c.g, method);
    const int df = span_dimension(c.f), dg = span_dimension(c.g);
    if (config.format == OutputFormat::json) {
        ordered_json j;
        j["schema"] = "1";
        j["command"] = "check";
        j["valid"] = true;
        j["f"] = {{"degree", c.f.degree}, {"span_dimension", df}};
        j["g"] = {{"degree", c.g.degree}, {"span_dimension", dg}};
        j["method"] = std::string(method_name(d.method));
        j["swapped"] = d.swapped;
        out << j.dump(2) << "\n";
    } else {
        const char *pre = config.format == OutputFormat::latex ? "% " : "";
        out << pre << "f: degree " << c.f.degree << " in s,u, span dimension " << df << "\n";
        out << pre << "g: degree " << c.g.degree << " in t,v, span dimension " << dg << "\n";
        out << pre << "method: " << method_name(d.method) << (d.swapped ? " (swapped)" : "") << "\n";
        out << pre << "valid\n";
    }
    return kExitOk;
}

void mu_latex(std::ostream &out, const char *name, const MuBasis &mu) {
    out << "\\varphi_{\\bf " << name << "} = \\left[\\begin{array}{ccc}\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out << "  ";
        for (std::size_t k = 0; k < 3; ++k) out << (k ? " & " : "") << latex(mu.columns[k][i]);
        out << (i < 3 ? "\\\\\n" : "\n");
    }
    out << "\\end{array}\\right]\n";
}

int do_mubasis(const JobConfig &config, std::ostream &out) {
    Job job;
    const Curves c = load(config, job);
    const MuBasis mf = mu_basis(c.f), mg = mu_basis(c.g);
    switch (config.format) {
    case OutputFormat::json: {
        ordered_json j;
        j["schema"] = "1";
        j["command"] = "mubasis";
        j["f"] = mu_json(mf);
        j["g"] = mu_json(mg);
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::latex:
        mu_latex(out, "f", mf);
        mu_latex(out, "g", mg);
        break;
    case OutputFormat::text:
        for (auto [name, mu] : {std::pair<const char *, const MuBasis *>{"f", &mf}, {"g", &mg}}) {
            out << name << ": degrees " << mu->mu[0] << ", " << mu->mu[1] << ", " << mu->mu[2] << "\n";
            const char *cols[] = {"a", "b", "c"};
            for (std::size_t k = 0; k < 3; ++k)
                out << "  " << cols[k] << " = " << vec_text(mu->columns[k], PrintStyle::plain) << "\n";
        }
        break;
    }
    return kExitOk;
}

void report_error(std::ostream &err, const JobConfig &config, ErrorCode code, const std::string &message,
                  std::optional<std::size_t> position, int exit_code) {
    if (config.format == OutputFormat::json) {
        ordered_json j;
        j["schema"] = "1";
        j["error"] = {{"code", std::string(error_code_name(code))}, {"message", message}};
        if (position) j["error"]["position"] = *position;
        j["exit_code"] = exit_code;
        err << j.dump(2) << "\n";
    } else {
        err << "error [" << error_code_name(code) << "]: " << message << "\n";
    }
}

} // namespace

int run(const JobConfig &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.command) {
        case Command::implicitize: return do_implicitize(config, out);
        case Command::check: return do_check(config, out);
        case Command::mubasis: return do_mubasis(config, out);
        }
    } catch (const SyntaxError &e) {
        report_error(err, config, e.code(), e.what(), e.position(), kExitInvalid);
        return kExitInvalid;
    } catch (const Error &e) {
        const int code = is_validation_error(e.code()) ? kExitInvalid : kExitPipeline;
        report_error(err, config, e.code(), e.what(), std::nullopt, code);
        return code;
    } catch (const std::exception &e) {
        report_error(err, config, ErrorCode::InternalContradiction, e.what(), std::nullopt, kExitPipeline);
        return kExitPipeline;
    }
    return kExitPipeline;
}

} // namespace transurf
