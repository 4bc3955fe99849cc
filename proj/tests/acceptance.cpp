// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "frozen_values.hpp"
#include "test_util.hpp"
#include "transurf/error.hpp"
#include "transurf/factor.hpp"
#include "transurf/gcd.hpp"
#include "transurf/implicitize.hpp"
#include "transurf/surface.hpp"

using namespace transurf;
using testutil::P;
using testutil::V;

namespace {

constexpr double kBasepointTol = 1e-9;

const char *kPrintedSextic =
    "2*w^4*x^2 - 2*w^3*x^3 - w^5*y - w^4*x*y - 12*w^3*x^2*y + 5*w^4*y^2 + 8*w^3*x*y^2 + 12*w^2*x^2*y^2 - "
    "8*w^2*x*y^3 - 20*w^2*y^4 - 24*w*x*y^4 + 16*y^6 + w^5*z + w^4*x*z + 8*w^3*x^2*z - 8*w^4*y*z - "
    "12*w^3*x*y*z + 8*w^3*y^2*z + 48*w^2*x*y^2*z + 24*w^2*y^3*z + 3*w^4*z^2 - 4*w^3*x*z^2 - 14*w^3*y*z^2 - "
    "24*w^2*x*y*z^2 - 16*w*y^3*z^2 + 6*w^3*z^3 + 4*w^2*z^4";

// Printed Sylvester matrix of the two resultants over t,v (entries as displayed).
const char *kPrintedSylTV[6][6] = {
    {"2*w*z-4*x*y", "2*w*x-w^2", "2*w*y", "-w^2", "0", "0"},
    {"0", "2*w*z-4*x*y", "2*w*x-w^2", "2*w*y", "-w^2", "0"},
    {"0", "0", "2*w*z-4*x*y", "2*w*x-w^2", "2*w*y", "-w^2"},
    {"4*x*z-4*y^2", "4*w*y-2*w*x", "-w^2-2*w*z", "w^2", "0", "0"},
    {"0", "4*x*z-4*y^2", "4*w*y-2*w*x", "-w^2-2*w*z", "w^2", "0"},
    {"0", "0", "4*x*z-4*y^2", "4*w*y-2*w*x", "-w^2-2*w*z", "w^2"},
};

struct Check {
    std::vector<std::string> failed, notes;
    void expect(bool ok, const std::string &what) {
        if (!ok) failed.push_back(what);
    }
    bool pass() const { return failed.empty(); }
};

int failures = 0;

void report(int id, const std::string &title, const std::string &tolerance, const Check &c, const std::string &summary) {
    std::cout << "criterion " << id << " [" << (c.pass() ? "PASS" : "FAIL") << "] " << title << " (tolerance: " << tolerance
              << "): " << summary;
    if (!c.pass()) {
        std::cout << "; failed:";
        for (auto &f : c.failed) std::cout << " {" << f << "}";
    }
    for (auto &n : c.notes) std::cout << "; " << n;
    std::cout << "\n";
    std::cout.flush();
    if (!c.pass()) ++failures;
}

// Every factorization produced while the suite runs.
struct FactorRecord {
    MultiPoly input;
    Factorization result;
    bool irreducible;
};
std::vector<FactorRecord> g_records;
bool g_auditing = false;

bool matrix_equals(const PolyMatrix &m, std::size_t n, std::size_t k, auto &&printed, int sign) {
    if (m.rows() != n || m.cols() != k) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (m(i, j) != P(printed[i][j]) * Rational(sign)) return false;
    return true;
}

CurveParam curve(const Vec4 &p, VarGroup pair) { return validate_curve(p, pair); }

// -------------------------------------------------------------------------

void criterion1() {
    Check c;
    auto f = curve(V("s^3", "s^2*u", "s*u^2", "u^3"), VarGroup::su);
    auto g = curve(V("t^2", "v^2", "t*v", "t*v"), VarGroup::tv);
    auto r = implicitize(f, g, Method::general);
    auto &im = r.intermediates;

    PolyMatrix printed_mu{{P("u"), P("0"), P("0")}, {P("-s"), P("u"), P("0")}, {P("0"), P("-s"), P("u")}, {P("0"), P("0"), P("-s")}};
    const bool mu_exact = im.mu.matrix() == printed_mu;
    PolyMatrix neg_mu = printed_mu;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) neg_mu(i, j) = -neg_mu(i, j);
    const bool mu_negated = im.mu.matrix() == neg_mu;
    auto printed_minors = signed_minors(printed_mu);
    bool printed_is_minus_f = true;
    for (int i = 0; i < 4; ++i) printed_is_minus_f = printed_is_minus_f && printed_minors[i] == -f.polys[i];
    c.expect(mu_exact, "mu-basis as displayed");
    if (!mu_exact && mu_negated && printed_is_minus_f)
        c.notes.push_back("mu-basis equals the displayed matrix times -1; the displayed matrix has signed minors -f, "
                          "so it cannot satisfy the exact Hilbert-Burch identity f_i = (-1)^i det");

    c.expect(im.syzygies.removed_gcds[0] == P("1") && im.syzygies.removed_gcds[1] == P("1") &&
                 im.syzygies.removed_gcds[2] == P("t"),
             "removed gcds (1,1,t)");

    const bool planes_exact = im.xA == P(frozen::A_printed_xA) && im.xB == P(frozen::A_printed_xB) &&
                              im.xC == P(frozen::A_printed_xC);
    const bool planes_negated = im.xA == -P(frozen::A_printed_xA) && im.xB == -P(frozen::A_printed_xB) &&
                                im.xC == -P(frozen::A_printed_xC);
    c.expect(planes_exact, "moving planes as printed");
    if (!planes_exact && planes_negated) c.notes.push_back("moving planes equal the printed ones times -1");

    auto s1 = sylvester(im.xA, im.xC, VarGroup::su), s2 = sylvester(im.xB, im.xC, VarGroup::su);
    const bool syl_exact = matrix_equals(s1, 2, 2, frozen::A_printed_syl_AC, 1) && matrix_equals(s2, 2, 2, frozen::A_printed_syl_BC, 1);
    const bool syl_negated = matrix_equals(s1, 2, 2, frozen::A_printed_syl_AC, -1) && matrix_equals(s2, 2, 2, frozen::A_printed_syl_BC, -1);
    c.expect(syl_exact, "2x2 Sylvester matrices as printed");
    if (!syl_exact && syl_negated) c.notes.push_back("2x2 Sylvester matrices equal the printed ones times -1");

    // printed R1 ends in -v^3 w and R2 in +v^3 w; the 2x2 determinant oracle gives v^3 w^2 in both
    c.expect(im.R1 == P(frozen::A_R1) && im.R2 == P(frozen::A_R2), "R1, R2 equal the 2x2 determinant oracle");
    // F0, F1 are the canonical following factors, here -R1 and -R2
    c.notes.push_back(std::string("Syl_tv(R1,R2) ") +
                      (matrix_equals(sylvester(im.R1, im.R2, VarGroup::tv), 6, 6, kPrintedSylTV, 1) ? "equals" : "differs from") +
                      " the printed 6x6 matrix");
    c.expect(im.final_resultant == P(frozen::A_final), "Res_tv(F0,F1) equals the oracle value");
    c.expect(im.unit == 8 && im.extraneous.size() == 2 && im.extraneous[0].first == P("w") && im.extraneous[0].second == 5 &&
                 im.extraneous[1].first == P("y - z") && im.extraneous[1].second == 1 && im.F_multiplicity == 1,
             "factorization unit 8, {w:5, (y-z):1, F:1}");
    const MultiPoly printed_F = P(kPrintedSextic);
    c.expect(is_associate(r.F, printed_F), "F associate to the printed sextic");
    c.notes.push_back(std::string("canonical F ") + (r.F == normalize(printed_F) ? "==" : "!=") + " canonical printed sextic");

    report(1, "golden example: twisted cubic along a planar conic", "exact", c,
           "mu=(1,1,1), gcds (1,1,t), R1/R2 oracle match, final 8*w^5*(y - z)*F");

    std::cout << "info: matrix sizes for this example:";
    for (auto &m : im.matrices) std::cout << " " << m.name << " " << m.rows << "x" << m.cols;
    std::cout << "\n";
}

void criterion2() {
    Check c;
    auto f = curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su);
    auto g = curve(V("t^2", "t*v", "0", "-v^2"), VarGroup::tv);
    auto r = implicitize(f, g);
    auto &im = r.intermediates;
    c.expect(im.syzygies.removed_gcds[0] == P("t") && im.syzygies.removed_gcds[1] == P("t^2") &&
                 im.syzygies.removed_gcds[2] == P("1"),
             "removed gcds (t,t^2,1)");
    PolyMatrix printed{{P("2*y"), P("-w"), P("0")}, {P("0"), P("2*y"), P("-w")}, {P("v^2*w + 2*t^2*z"), P("0"), P("-2*t^2*y")}};
    c.expect(sylvester(im.xB, im.xC, VarGroup::su) == printed, "printed 3x3 Sylvester matrix");
    c.expect(im.R2 == P("2*t^2*w^2*z - 8*t^2*y^3 + v^2*w^3"), "Res_su(xB,xC)");
    c.expect(im.final_resultant == P("2*w^2*(2*w*x^2 - 4*y^3 + w^2*z)"), "final resultant");
    c.expect(is_associate(r.F, P("2*w*x^2 - 4*y^3 + w^2*z")), "F associate to 2wx^2 - 4y^3 + w^2z");

    auto bp = basepoint_diagnostic(f, g, kBasepointTol);
    auto near = [](std::complex<double> a, double b) { return std::abs(a - b) < kBasepointTol; };
    bool flagged_1010 = false;
    std::ostringstream found;
    for (auto &p : bp.points) {
        if (near(p.f_first, 1) && near(p.f_second, 0) && near(p.g_first, 1) && near(p.g_second, 0) && p.bad && p.lambda &&
            near(*p.lambda, -1))
            flagged_1010 = true;
        auto re = [](std::complex<double> z) { return z.real() + 0.0; };
        found << "(" << re(p.f_first) << "," << re(p.f_second) << "," << re(p.g_first) << "," << re(p.g_second)
              << ") bad=" << (p.bad ? "yes" : "no");
        if (p.lambda) found << " lambda=" << re(*p.lambda);
        found << " multiplicity " << p.multiplicity << " ";
    }
    c.expect(flagged_1010, "bad basepoint flagged at (1,0,1,0) with lambda = -1");
    if (!flagged_1010)
        c.notes.push_back("diagnostic reports " + found.str() +
                          "; at (1,0,1,0) f0*g0 = 1 so h does not vanish there, the only common zero of f0 and g0 is (0,1,0,1)");
    report(2, "golden example: planar cubic along a planar conic", "exact; basepoint tol 1e-9", c,
           "F = " + print_poly(r.F) + ", final " + print_poly(im.final_resultant));
}

PolyMatrix scalar_identity(const MultiPoly &d) {
    PolyMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = d;
    return m;
}

void criterion3() {
    Check c;
    std::mt19937_64 rng(3003);
    int pairs = 0;
    std::map<std::string, int> fails;
    for (int rep = 0; rep < 216; ++rep) {
        const unsigned m = 1 + rep % 3, n = 1 + (rep / 3) % 3;
        const int span = (rep / 9) % 4 == 0 ? 3 : 0;
        auto f = testutil::random_curve(rng, VarGroup::su, m, m >= 2 ? span : 0);
        auto g = testutil::random_curve(rng, VarGroup::tv, n);
        auto S = build_surface(f, g);
        auto M = m_matrix(g), N = n_matrix(g);
        auto g02 = g.polys[0] * g.polys[0];
        if (!(M * N == scalar_identity(g02) && N * M == scalar_identity(g02))) ++fails["M_g N_g = N_g M_g = g0^2 I"];
        auto mu = mu_basis(f);
        if (mu.mu[0] + mu.mu[1] + mu.mu[2] != m) ++fails["mu1+mu2+mu3 = m"];
        auto hb = signed_minors(mu.matrix());
        for (int i = 0; i < 4; ++i)
            if (hb[i] != f.polys[i]) {
                ++fails["Hilbert-Burch minors reproduce f"];
                break;
            }
        auto R = reduced_syzygies(f, g, mu);
        for (int j = 0; j < 3; ++j)
            if (!dot(S.h, R.columns[j]).is_zero()) ++fails["h.A = h.B = h.C = 0"];
        auto minors = signed_minors(R.matrix());
        for (int i = 0; i < 4; ++i)
            if (minors[i] * Rational(2) != R.G * S.h[i]) {
                ++fails["signed minors of [A B C] = G h / 2"];
                break;
            }
        MultiPoly prod(1);
        for (auto &d : R.removed_gcds) {
            if (!try_div_exact(g.polys[0], d)) ++fails["removed gcds divide g0"];
            prod *= d;
        }
        if (!try_div_exact(g02, prod)) ++fails["product of removed gcds divides g0^2"];
        ++pairs;
    }
    for (auto &[k, v] : fails) c.expect(false, k + " (" + std::to_string(v) + " pairs)");
    report(3, "identity suite", "exact", c, std::to_string(pairs) + " seeded random curve pairs, 1 <= m,n <= 3");
}

void criterion4() {
    Check c;
    std::mt19937_64 rng(4004);
    int mult = 0, planted = 0, dets = 0;
    auto form = [&](unsigned d) {
        return testutil::random_form(rng, Var::t, Var::v, d, 3, 1.0) * P("w") +
               testutil::random_form(rng, Var::t, Var::v, d, 3, 1.0) * P("x") +
               testutil::random_form(rng, Var::t, Var::v, d, 2, 0.5) * P("y");
    };
    for (int rep = 0; rep < 60; ++rep) {
        auto p1 = form(1 + rep % 2), p2 = form(1 + rep % 3), q = form(1 + (rep / 2) % 3);
        if (p1.is_zero() || p2.is_zero() || q.is_zero()) continue;
        if (resultant(p1 * p2, q, VarGroup::tv) != resultant(p1, q, VarGroup::tv) * resultant(p2, q, VarGroup::tv))
            c.expect(false, "Res(p1 p2, q) = Res(p1, q) Res(p2, q) at sample " + std::to_string(rep));
        ++mult;
        auto common = form(1);
        if (!resultant(p1 * common, q * common, VarGroup::tv).is_zero())
            c.expect(false, "planted common factor at sample " + std::to_string(rep));
        ++planted;
    }
    for (std::size_t n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            auto m = testutil::random_poly_matrix(rng, n, rep % 4 == 0 ? 0.6 : 0.15);
            auto want = testutil::naive_det(m);
            bool ok = det_poly(m) == want && det_bareiss(m) == want && det_cofactor(m) == want;
            if (auto d = det_modular(m)) ok = ok && *d == want;
            if (!ok) c.expect(false, "det_poly vs cofactor oracle, n = " + std::to_string(n));
            ++dets;
        }
    report(4, "resultant properties", "exact", c,
           std::to_string(mult) + " multiplicativity, " + std::to_string(planted) + " planted-factor, " + std::to_string(dets) +
               " determinant (n <= 5) checks");
}

bool follows_exactly(const MultiPoly &F, const SurfaceParam &S) {
    Bindings b;
    b[static_cast<int>(Var::w)] = S.h[0];
    b[static_cast<int>(Var::x)] = S.h[1];
    b[static_cast<int>(Var::y)] = S.h[2];
    b[static_cast<int>(Var::z)] = S.h[3];
    return substitute(F, b).is_zero();
}

void criterion5() {
    Check c;
    std::mt19937_64 rng(5005);
    std::mt19937_64 pts(55);
    testutil::KroneckerOracle oracle;
    int runs = 0, skipped = 0, oracle_checked = 0;
    std::map<std::string, int> methods;
    for (int rep = 0; rep < 54; ++rep) {
        const unsigned m = 1 + rep % 3, n = 1 + (rep / 3) % 3;
        const int span = (rep / 9) % 3 == 1 ? 3 : 0;
        auto f = testutil::random_curve(rng, VarGroup::su, m, m >= 2 ? span : 0);
        auto g = testutil::random_curve(rng, VarGroup::tv, n);
        auto S = build_surface(f, g);
        ImplicitResult r;
        try {
            r = implicitize(f, g);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::IndistinctFactors) {
                ++skipped;
                std::cout << "log: IndistinctFactors on pair " << rep << ": f = (";
                for (int i = 0; i < 4; ++i) std::cout << (i ? ", " : "") << print_poly(f.polys[i]);
                std::cout << "), g = (";
                for (int i = 0; i < 4; ++i) std::cout << (i ? ", " : "") << print_poly(g.polys[i]);
                std::cout << ")\n";
                continue;
            }
            c.expect(false, "pair " + std::to_string(rep) + " raised " + std::string(error_code_name(e.code())));
            continue;
        }
        ++runs;
        ++methods[std::string(method_name(r.method))];
        const std::string tag = "pair " + std::to_string(rep);
        c.expect(r.F.variables().is_subset_of(kCoords), tag + ": F outside w,x,y,z");
        auto fac = factor_irreducible(r.F);
        c.expect(fac.factors.size() == 1 && fac.factors[0].second == 1, tag + ": F reducible");
        if (auto k = oracle.irreducible(r.F)) {
            ++oracle_checked;
            c.expect(*k, tag + ": exhaustive divisor search found a factor of F");
        }
        c.expect(follows_exactly(r.F, S), tag + ": F(h) != 0");
        int good = 0;
        while (good < 25) {
            std::array<Rational, kNumVars> pt{};
            pt[0] = testutil::random_rational(pts, 99, 29);
            pt[1] = testutil::random_rational(pts, 99, 29);
            pt[2] = testutil::random_rational(pts, 99, 29);
            pt[3] = testutil::random_rational(pts, 99, 29);
            if (evaluate(f.polys[0], pt) * evaluate(g.polys[0], pt) == 0) continue;
            std::array<Rational, kNumVars> img{};
            for (int i = 0; i < 4; ++i) img[4 + i] = evaluate(S.h[i], pt);
            if (evaluate(r.F, img) != 0) {
                c.expect(false, tag + ": F(h(p)) != 0 at a sample point");
                break;
            }
            ++good;
        }
    }
    std::string mix;
    for (auto &[k, v] : methods) mix += " " + k + "=" + std::to_string(v);
    c.notes.push_back(std::to_string(skipped) + " IndistinctFactors skips");
    report(5, "end-to-end soundness", "exact", c,
           std::to_string(runs) + " random pairs, m,n <= 3, 25 sample points each, methods" + mix + ", " +
               std::to_string(oracle_checked) + " F checked by exhaustive divisor search");
}

void criterion6() {
    Check c;
    std::mt19937_64 rng(6006);
    int checked = 0, full = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const unsigned small = 1 + rep % 2, other = 1 + (rep / 2) % 3;
        const bool small_is_f = (rep / 6) % 2 == 0;
        auto f = testutil::random_curve(rng, VarGroup::su, small_is_f ? small : other);
        auto g = testutil::random_curve(rng, VarGroup::tv, small_is_f ? other : small);
        auto d = choose_method(f, g, Method::automatic);
        const unsigned mn = std::min(f.degree, g.degree);
        const std::string tag = "m=" + std::to_string(f.degree) + ", n=" + std::to_string(g.degree);
        if (mn == 1) c.expect(d.method == Method::ruled, tag + " chose " + std::string(method_name(d.method)));
        else c.expect(d.method != Method::general, tag + " chose general");
        ++checked;
        if (rep % 12 == 0) {
            auto r = implicitize(f, g);
            c.expect(r.method == d.method && r.swapped == d.swapped, tag + ": implicitize disagrees with choose_method");
            ++full;
        }
    }
    report(6, "dispatch correctness", "exact", c,
           std::to_string(checked) + " pairs with min(m,n) <= 2, " + std::to_string(full) + " run end to end");
}

void criterion7() {
    // extra inputs: oracle-frozen cases and random bivariate products
    for (auto &fc : frozen::factor_cases) factor_irreducible(P(fc.input));
    std::mt19937_64 rng(7007);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = testutil::random_form(rng, Var::x, Var::y, 1 + rep % 2, 6, 1.0) + testutil::random_form(rng, Var::x, Var::y, rep % 2, 6);
        auto b = testutil::random_form(rng, Var::x, Var::y, 2, 6, 1.0) + testutil::random_form(rng, Var::x, Var::y, 1, 6);
        if (a.is_constant() || b.is_constant()) continue;
        factor_irreducible(a * b * (rep % 3 == 0 ? a : MultiPoly(1)));
    }

    g_auditing = true;
    Check c;
    testutil::KroneckerOracle oracle;
    std::size_t total = g_records.size(), irreducible_calls = 0;
    std::set<std::string> seen;
    int reached = 0, unreached = 0;
    for (auto &rec : g_records) {
        if (rec.result.expand() != rec.input) c.expect(false, "reconstruction of " + print_poly(rec.input));
        if (!rec.irreducible) continue;
        ++irreducible_calls;
        auto sq = squarefree(rec.input);
        for (auto &[q, k] : rec.result.factors) {
            bool found = false;
            for (auto &[r, j] : sq.factors)
                if (j == k && try_div_exact(r, q)) found = true;
            if (!found) c.expect(false, "square-free coherence for factor " + print_poly(q));
            auto key = print_poly(q);
            if (!seen.insert(key).second) continue;
            if (auto ok = oracle.irreducible(q)) {
                ++reached;
                if (!*ok) c.expect(false, "oracle found a divisor of " + key);
            } else {
                ++unreached;
            }
        }
    }
    g_auditing = false;
    report(7, "factorization contract", "exact", c,
           std::to_string(total) + " factorizations reconstructed, " + std::to_string(irreducible_calls) +
               " complete factorizations refined from their square-free decomposition, " + std::to_string(reached) +
               " distinct irreducible factors confirmed by exhaustive divisor search (" + std::to_string(unreached) +
               " out of its reach)");
}

std::pair<int, std::string> run_cli(const std::string &args) {
    std::string cmd = std::string("\"") + TRANSURF_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion8() {
    Check c;
    int jobs = 0;
    for (const char *name : {"twisted_cubic.json", "planar_cubic.json"}) {
        const std::string job = std::string(TRANSURF_JOBS_DIR) + "/" + name;
        const std::string args = "implicitize \"" + job + "\" --format json --seed 1234 --intermediates --basepoints";
        auto a = run_cli(args), b = run_cli(args);
        c.expect(a.first == 0 && b.first == 0, std::string(name) + ": nonzero exit");
        c.expect(!a.second.empty() && a.second == b.second, std::string(name) + ": outputs differ");
        ++jobs;
    }
    report(8, "determinism", "byte-identical", c, std::to_string(jobs) + " golden job files, two CLI runs each with seed 1234");
}

template <class F>
void guarded(int id, F &&fn) {
    try {
        fn();
    } catch (const std::exception &e) {
        Check c;
        c.expect(false, std::string("exception: ") + e.what());
        report(id, "aborted", "-", c, "");
    }
}

} // namespace

int main() {
    set_factorization_observer([](const MultiPoly &in, const Factorization &out, bool irreducible) {
        if (!g_auditing) g_records.push_back({in, out, irreducible});
    });
    const auto t0 = std::chrono::steady_clock::now();
    guarded(1, criterion1);
    guarded(2, criterion2);
    guarded(3, criterion3);
    guarded(4, criterion4);
    guarded(5, criterion5);
    guarded(6, criterion6);
    guarded(7, criterion7);
    guarded(8, criterion8);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "info: acceptance run took " << secs << " s\n";
    std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : std::string("all criteria passed\n"));
    return failures ? 1 : 0;
}
