#include "transurf/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace transurf {

std::string_view method_name(Method m) {
    switch (m) {
    case Method::automatic: return "auto";
    case Method::general: return "general";
    case Method::ruled: return "ruled";
    case Method::planar: return "planar";
    }
    return "auto";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "auto") return Method::automatic;
    if (name == "general") return Method::general;
    if (name == "ruled") return Method::ruled;
    if (name == "planar") return Method::planar;
    return std::nullopt;
}

namespace {

class Parser {
public:
    Parser(std::string_view src, VarSet allowed) : src_(src), allowed_(allowed) {}

    MultiPoly run() {
        skip_ws();
        if (pos_ == src_.size()) fail("empty expression");
        MultiPoly p;
        try {
            p = expr();
        } catch (const SyntaxError &) {
            throw;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::DegreeOverflow) throw;
            fail("degree exceeds the supported maximum of " + std::to_string(Monomial::kMaxDegree));
        }
        skip_ws();
        if (pos_ != src_.size()) unexpected();
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string &msg) const { throw SyntaxError(pos, msg); }

    [[noreturn]] void unexpected() const {
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isprint(static_cast<unsigned char>(c)))
            fail(std::string("unexpected character '") + c + "'");
        fail("unexpected byte");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (pos_ >= src_.size()) return acc;
            const char c = src_[pos_];
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                fail("implicit multiplication is not allowed; use '*'");
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        struct DepthGuard {
            int &depth;
            explicit DepthGuard(int &d) : depth(d) { ++depth; }
            ~DepthGuard() { --depth; }
        } guard(depth_);
        if (depth_ > kMaxDepth) fail("expression nested too deeply");
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input, expected a factor");
        const char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            skip_ws();
            if (peek(')')) fail("empty parentheses");
            MultiPoly inner = expr();
            if (!peek(')')) {
                if (pos_ >= src_.size()) fail_at(open, "unbalanced '('");
                unexpected();
            }
            ++pos_;
            return maybe_power(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(rational());
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        unexpected();
    }

    MultiPoly maybe_power(MultiPoly base) {
        if (!peek('^')) return base;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const unsigned e = exponent();
        const auto deg = base.total_degree();
        if (deg && static_cast<unsigned long long>(*deg) * e > Monomial::kMaxDegree)
            fail_at(at, "exponent too large");
        return base.pow(e);
    }

    unsigned exponent() {
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an unsigned integer exponent");
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string digits(src_.substr(start, pos_ - start));
        if (digits.size() > 4 || std::stoul(digits) > Monomial::kMaxDegree) fail_at(start, "exponent too large");
        return static_cast<unsigned>(std::stoul(digits));
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    Rational rational() {
        Integer num = integer();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("expected an unsigned integer denominator");
            const std::size_t at = pos_;
            Integer den = integer();
            if (den == 0) fail_at(at, "zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    MultiPoly variable() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name.size() != 1) {
            bool all_vars = true;
            for (char ch : name) all_vars = all_vars && var_from_name(ch).has_value();
            if (all_vars) fail_at(start + 1, "implicit multiplication is not allowed; use '*'");
            fail_at(start, "unknown identifier '" + std::string(name) + "'");
        }
        const auto v = var_from_name(name[0]);
        if (!v) fail_at(start, "unknown variable '" + std::string(name) + "'");
        if (!allowed_.contains(*v))
            throw Error(ErrorCode::ForbiddenVariable, "variable '" + std::string(name) + "' at position " +
                                                          std::to_string(start) + " is not allowed here (allowed: " +
                                                          allowed_.names() + ")");
        if (peek('^')) {
            ++pos_;
            skip_ws();
            return MultiPoly::variable(*v, exponent());
        }
        return MultiPoly::variable(*v);
    }

    static constexpr int kMaxDepth = 256;

    std::string_view src_;
    VarSet allowed_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

std::string format_monomial(Monomial m, PrintStyle style) {
    std::string out;
    for (Var v : kAllVars) {
        const unsigned e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += style == PrintStyle::plain ? "*" : " ";
        out += var_name(v);
        if (e > 1) out += style == PrintStyle::plain ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    }
    return out;
}

std::string format_abs_coeff(const Rational &c, PrintStyle style) {
    const Integer num = abs(c.get_num());
    if (c.get_den() == 1) return num.get_str();
    if (style == PrintStyle::latex) return "\\frac{" + num.get_str() + "}{" + c.get_den().get_str() + "}";
    return num.get_str() + "/" + c.get_den().get_str();
}

} // namespace

MultiPoly parse_poly(std::string_view src, VarSet allowed) { return Parser(src, allowed).run(); }

std::string print_poly(const MultiPoly &p, PrintStyle style) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &t : p.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = format_monomial(t.mono, style);
        const bool unit = abs(t.coeff) == 1;
        if (mono.empty()) {
            out += format_abs_coeff(t.coeff, style);
        } else if (unit) {
            out += mono;
        } else {
            out += format_abs_coeff(t.coeff, style);
            out += style == PrintStyle::plain ? "*" : " ";
            out += mono;
        }
    }
    return out;
}

namespace {

[[noreturn]] void job_error(const std::string &msg) { throw Error(ErrorCode::JobFormat, "job file: " + msg); }

std::array<MultiPoly, 4> parse_curve(const nlohmann::json &j, const char *key, VarSet allowed) {
    if (!j.contains(key)) job_error(std::string("missing key \"") + key + "\"");
    const auto &arr = j.at(key);
    if (!arr.is_array() || arr.size() != 4) job_error(std::string("\"") + key + "\" must be an array of 4 strings");
    std::array<MultiPoly, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!arr[i].is_string()) job_error(std::string("\"") + key + "\" must be an array of 4 strings");
        const std::string text = arr[i].get<std::string>();
        const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
        try {
            out[i] = parse_poly(text, allowed);
        } catch (const SyntaxError &e) {
            throw SyntaxError(e.position(), e.detail() + " (in " + where + ")");
        } catch (const Error &e) {
            throw Error(e.code(), std::string(e.what()) + " (in " + where + ")");
        }
    }
    return out;
}

} // namespace

Job parse_job(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        job_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) job_error("top level must be an object");
    for (const auto &[key, value] : j.items()) {
        if (key != "f" && key != "g" && key != "method" && key != "verify_samples")
            job_error("unknown key \"" + key + "\"");
    }
    Job job;
    job.f = parse_curve(j, "f", kSU);
    job.g = parse_curve(j, "g", kTV);
    if (j.contains("method")) {
        const auto &m = j.at("method");
        if (!m.is_string()) job_error("\"method\" must be a string");
        auto method = method_from_name(m.get<std::string>());
        if (!method) job_error("\"method\" must be one of auto, general, ruled, planar");
        job.method = method;
    }
    if (j.contains("verify_samples")) {
        const auto &n = j.at("verify_samples");
        if (!n.is_number_unsigned()) job_error("\"verify_samples\" must be an unsigned integer");
        const auto value = n.get<std::uint64_t>();
        if (value > 1000000) job_error("\"verify_samples\" is too large");
        job.verify_samples = static_cast<unsigned>(value);
    }
    return job;
}

} // namespace transurf
