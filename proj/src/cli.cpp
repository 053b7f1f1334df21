#include "bargheat/cli.hpp"

#include "bargheat/bargmann.hpp"
#include "bargheat/errors.hpp"
#include "bargheat/heatsolve.hpp"
#include "bargheat/operators.hpp"
#include "bargheat/suites.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <variant>

namespace bargheat::cli {

namespace {

// --- expression parser ---------------------------------------------------------

// p(v) exp(alpha v^2 + beta v), the value of any parsed subexpression.
struct Term {
    std::vector<cplx> p;
    cplx alpha = 0.0, beta = 0.0;

    bool is_constant() const { return p.size() <= 1 && alpha == 0.0 && beta == 0.0; }
    cplx constant() const { return p.empty() ? cplx(0.0) : p[0]; }
};

Term constant_term(cplx c) { return {{c}}; }

void trim(std::vector<cplx>& p) {
    while (!p.empty() && p.back() == 0.0) p.pop_back();
}

Term add(Term x, const Term& y, double sign) {
    if (x.p.empty()) {
        Term r = y;
        for (auto& c : r.p) c *= sign;
        return r;
    }
    if (y.p.empty()) return x;
    if (x.alpha != y.alpha || x.beta != y.beta)
        throw ParseError("sum of terms with different exp(...) factors is not a single polynomial-Gaussian");
    if (x.p.size() < y.p.size()) x.p.resize(y.p.size(), 0.0);
    for (std::size_t k = 0; k < y.p.size(); ++k) x.p[k] += sign * y.p[k];
    trim(x.p);
    if (x.p.empty()) return {};
    return x;
}

Term mul(const Term& x, const Term& y) {
    if (x.p.empty() || y.p.empty()) return {};
    std::vector<cplx> c(x.p.size() + y.p.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.p.size(); ++i)
        for (std::size_t j = 0; j < y.p.size(); ++j) c[i + j] += x.p[i] * y.p[j];
    trim(c);
    return {std::move(c), x.alpha + y.alpha, x.beta + y.beta};
}

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Term parse_all() {
        Term t = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return t;
    }

    char variable() const { return var_; }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    char var_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("init expression: " + what + " at position " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Term expr() {
        Term acc = unary();
        for (;;) {
            if (accept('+'))
                acc = add(std::move(acc), unary(), 1.0);
            else if (accept('-'))
                acc = add(std::move(acc), unary(), -1.0);
            else
                return acc;
        }
    }

    Term unary() {
        if (accept('-')) {
            Term t = unary();
            for (auto& c : t.p) c = -c;
            return t;
        }
        if (accept('+')) return unary();
        return term();
    }

    bool starts_atom() {
        const char c = peek();
        return c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    Term term() {
        Term acc = power();
        for (;;) {
            if (accept('*')) {
                acc = mul(acc, unary_power());
            } else if (accept('/')) {
                const Term d = unary_power();
                if (!d.is_constant() || d.constant() == 0.0) fail("division by a non-constant or zero");
                acc = mul(acc, constant_term(1.0 / d.constant()));
            } else if (starts_atom()) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    // factor after '*' or '/': allows "x*-2"
    Term unary_power() {
        if (accept('-')) {
            Term t = unary_power();
            for (auto& c : t.p) c = -c;
            return t;
        }
        return power();
    }

    Term power() {
        Term base = atom();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("'^' needs a nonnegative integer exponent");
        int n = 0;
        std::from_chars(s_.data() + start, s_.data() + pos_, n);
        if (n > 64) fail("exponent too large");
        Term r = constant_term(1.0);
        for (int k = 0; k < n; ++k) r = mul(r, base);
        return r;
    }

    Term atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Term t = expr();
            if (!accept(')')) fail("missing ')'");
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (id == "i") return constant_term({0.0, 1.0});
            if (id == "x" || id == "z") {
                if (var_ != 0 && var_ != id[0]) fail("mixes x and z");
                var_ = id[0];
                return {{0.0, 1.0}};
            }
            if (id == "exp") {
                if (!accept('(')) fail("exp needs '('");
                const Term q = expr();
                if (!accept(')')) fail("missing ')' after exp argument");
                if (q.alpha != 0.0 || q.beta != 0.0) fail("nested exp");
                if (q.p.size() > 3) fail("exp argument must have degree <= 2");
                auto coef = [&q](std::size_t k) { return k < q.p.size() ? q.p[k] : cplx(0.0); };
                return {{std::exp(coef(0))}, coef(2), coef(1)};
            }
            pos_ = start;
            fail("unknown name '" + std::string(id) + "'");
        }
        fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }

    Term number() {
        std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits();
            else
                pos_ = save; // "2exp(...)": not an exponent
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc() || ptr != s_.data() + pos_) fail("bad number");
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            !(pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return constant_term({0.0, v});
        }
        return constant_term(v);
    }
};

std::string trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ',') {
            out.push_back(trimmed(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trimmed(cur));
    for (const auto& s : out)
        if (s.empty()) throw ParseError("empty entry in list '" + v + "'");
    return out;
}

// --- output tables -----------------------------------------------------------------

using Cell = std::variant<std::monostate, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&out](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>)
                        out << format_double(v);
                    else if constexpr (std::is_same_v<V, std::string>)
                        out << csv_field(v);
                    else if constexpr (std::is_same_v<V, bool>)
                        out << (v ? "true" : "false");
                },
                row[i]);
        }
        out << '\n';
    }
}

void write_json(const std::string& subcommand, const Table& t, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["subcommand"] = subcommand;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>)
                        obj[t.columns[i]] = nullptr;
                    else if constexpr (std::is_same_v<V, double>) {
                        if (std::isfinite(v))
                            obj[t.columns[i]] = v;
                        else
                            obj[t.columns[i]] = format_double(v);
                    } else
                        obj[t.columns[i]] = v;
                },
                row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

// --- subcommands ---------------------------------------------------------------------

bargmann::Method parse_method(const std::string& m, bargmann::Method fallback) {
    if (m.empty()) return fallback;
    if (m == "exact") return bargmann::Method::Exact;
    if (m == "series") return bargmann::Method::Series;
    if (m == "quadrature") return bargmann::Method::Quadrature;
    throw ParseError("unknown method '" + m + "' (exact | series | quadrature)");
}

std::vector<cplx> parse_points(const std::vector<std::string>& items) {
    std::vector<cplx> out;
    for (const auto& s : items) out.push_back(parse_complex(s));
    return out;
}

ops::Operator parse_operator(const RunConfig& c) {
    if (c.op.empty()) throw UsageError("--op is required");
    const auto kind = ops::parse_kind(c.op);
    if (!kind) throw ParseError("unknown operator '" + c.op + "'");
    return ops::Operator(*kind, c.a.value_or(1.0));
}

void push_complex(std::vector<Cell>& row, cplx v) {
    row.emplace_back(v.real());
    row.emplace_back(v.imag());
}

double mismatch(cplx v, cplx ref) { return std::abs(v - ref) / std::max(1.0, std::abs(ref)); }

int solve(const RunConfig& c, Table& t, std::ostream& err) {
    const ops::Operator op = parse_operator(c);
    const Side side = op.side();
    const PolyGauss init = parse_init(c.init.empty() ? throw UsageError("--init is required") : c.init, side);
    if (!init.is_zero() && init.side() != side)
        throw UsageError("init lives on the " + std::string(side_name(init.side())) + " side but " + c.op +
                         " acts on the " + std::string(side_name(side)) + " side");
    if (c.times.empty()) throw UsageError("--t is required");
    std::vector<cplx> points;
    if (side == Side::Real) {
        if (!c.zs.empty()) throw UsageError(c.op + " takes real probes (--x)");
        points = parse_points(c.xs);
        for (cplx p : points)
            if (p.imag() != 0.0) throw UsageError("--x values must be real");
    } else {
        points = parse_points(c.zs.empty() ? c.xs : c.zs);
    }
    if (points.empty()) throw UsageError(side == Side::Real ? "--x is required" : "--z is required");
    const auto method =
        parse_method(c.method, op.kind() == ops::Kind::HarmonicComplex ? bargmann::Method::Series
                                                                       : bargmann::Method::Exact);

    if (side == Side::Real)
        t.columns = {"t", "x", "value_re", "value_im", "check_re", "check_im", "defect", "ok"};
    else
        t.columns = {"t", "z_re", "z_im", "value_re", "value_im", "check_re", "check_im", "defect", "ok"};
    int status = 0;
    for (double time : c.times) {
        const heat::HeatProblem problem{op, time, init};
        std::optional<PolyGauss> route;
        try {
            route = heat::conjugation_image(problem);
        } catch (const std::exception& e) {
            err << "t=" << format_double(time) << ": transform route unavailable (" << e.what() << ")\n";
        }
        for (cplx p : points) {
            const cplx v = heat::solution_value(problem, p, method, c.order);
            std::vector<Cell> row{time};
            if (side == Side::Real)
                row.emplace_back(p.real());
            else
                push_complex(row, p);
            push_complex(row, v);
            if (route) {
                const cplx chk = (*route)(p);
                const double d = mismatch(v, chk);
                push_complex(row, chk);
                row.emplace_back(d);
                row.emplace_back(d <= c.tolerance);
                if (!(d <= c.tolerance)) status = 1;
            } else {
                row.insert(row.end(), 4, std::monostate{});
            }
            t.rows.push_back(std::move(row));
        }
    }
    return status;
}

int transform(const RunConfig& c, Table& t) {
    if (c.init.empty()) throw UsageError("--init is required");
    const PolyGauss f = parse_init(c.init, c.zs.empty() ? Side::Real : Side::Complex);
    const bargmann::TransformSpec spec{c.a.value_or(1.0), c.order};
    t.columns = {"direction", "point_re", "point_im", "value_re", "value_im", "check_re", "check_im", "defect", "ok"};
    int status = 0;
    auto emit = [&](const char* dir, cplx p, cplx v, cplx chk) {
        std::vector<Cell> row{std::string(dir)};
        push_complex(row, p);
        push_complex(row, v);
        push_complex(row, chk);
        const double d = mismatch(v, chk);
        row.emplace_back(d);
        row.emplace_back(d <= c.tolerance);
        if (!(d <= c.tolerance)) status = 1;
        t.rows.push_back(std::move(row));
    };
    if (f.side() == Side::Real) {
        const auto points = parse_points(c.zs.empty() ? c.xs : c.zs);
        if (points.empty()) throw UsageError("--z is required for a forward transform");
        const PolyGauss image = bargmann::forward_image(f, spec);
        for (cplx z : points) emit("forward", z, image(z), bargmann::forward_quadrature(f, spec, z));
    } else {
        if (!c.zs.empty() && c.xs.empty()) throw UsageError("an inverse transform takes real probes (--x)");
        const auto points = parse_points(c.xs);
        if (points.empty()) throw UsageError("--x is required for an inverse transform");
        const PolyGauss pre = bargmann::inverse_image(f, spec);
        const auto method = parse_method(c.method, bargmann::Method::Quadrature);
        for (cplx x : points) {
            if (x.imag() != 0.0) throw UsageError("--x values must be real");
            emit("inverse", x, pre(x.real()), bargmann::inverse(f, spec, x.real(), method));
        }
    }
    return status;
}

int kernel(const RunConfig& c, Table& t) {
    if (c.times.empty()) throw UsageError("--t is required");
    std::string family = c.kernel;
    if (family.empty()) family = c.op == "harmonic-complex" ? "complex-harmonic" : "mehler";
    const double a = c.a.value_or(1.0);
    if (family == "mehler") {
        const auto xs = parse_points(c.xs);
        const auto ss = c.ss.empty() ? std::vector<cplx>{0.0} : parse_points(c.ss);
        if (xs.empty()) throw UsageError("--x is required");
        const auto form = c.alt_constants ? heat::MehlerForm::HyperbolicUnhalved : heat::MehlerForm::Product;
        t.columns = {"t", "x", "s", "value"};
        for (double time : c.times)
            for (cplx x : xs)
                for (cplx s : ss)
                    t.rows.push_back({time, x.real(), s.real(), heat::mehler_kernel(a, time, x.real(), s.real(), form)});
        return 0;
    }
    if (family == "complex-harmonic") {
        const auto zs = parse_points(c.zs.empty() ? c.xs : c.zs);
        const auto ws = c.ws.empty() ? std::vector<cplx>{0.0} : parse_points(c.ws);
        if (zs.empty()) throw UsageError("--z is required");
        const auto pre = c.alt_constants ? heat::Prefactor::TwoI : heat::Prefactor::Reproducing;
        t.columns = {"t", "z_re", "z_im", "w_re", "w_im", "value_re", "value_im"};
        for (double time : c.times)
            for (cplx z : zs)
                for (cplx w : ws) {
                    std::vector<Cell> row{time};
                    push_complex(row, z);
                    push_complex(row, w);
                    push_complex(row, heat::harmonic_kernel_complex(a, time, z, w, pre));
                    t.rows.push_back(std::move(row));
                }
        return 0;
    }
    throw ParseError("unknown kernel '" + family + "' (mehler | complex-harmonic)");
}

int reports_table(const suites::Reports& reports, Table& t, std::ostream& err) {
    t.columns = {"check", "params", "defect", "tolerance", "pass"};
    int status = 0;
    for (const auto& r : reports) {
        t.rows.push_back({r.check, r.params, r.defect, r.tolerance, r.pass});
        err << (r.pass ? "pass " : "FAIL ") << r.check << " (" << r.seconds << " s)\n";
        if (!r.pass) status = 1;
    }
    return status;
}

suites::SuiteOptions suite_options(const RunConfig& c) { return {c.a, c.order, c.tolerance}; }

} // namespace

PolyGauss parse_init(std::string_view text, Side fallback) {
    const std::string s = trimmed(text);
    if (s.empty()) throw ParseError("empty init expression");
    if (s.rfind("real,", 0) == 0 || s.rfind("complex,", 0) == 0) return from_record(s);
    Parser p(s);
    const Term t = p.parse_all();
    const Side side = p.variable() == 'x' ? Side::Real : p.variable() == 'z' ? Side::Complex : fallback;
    for (cplx c : t.p)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw ParseError("init coefficient overflows");
    return PolyGauss(side, t.p, t.alpha, t.beta);
}

cplx parse_complex(std::string_view text) {
    const std::string s = trimmed(text);
    if (s.empty()) throw ParseError("empty number");
    Parser p(s);
    const Term t = p.parse_all();
    if (p.variable() != 0 || !t.is_constant()) throw ParseError("expected a constant, got '" + s + "'");
    return t.constant();
}

double parse_double(std::string_view text) {
    const std::string s = trimmed(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad number '" + s + "'");
    return v;
}

void apply_setting(const std::string& key, const std::string& value, RunConfig& c) {
    if (key == "subcommand")
        c.subcommand = value;
    else if (key == "op")
        c.op = value;
    else if (key == "a")
        c.a = parse_double(value);
    else if (key == "t") {
        c.times.clear();
        for (const auto& s : split_list(value)) c.times.push_back(parse_double(s));
    } else if (key == "x")
        c.xs = split_list(value);
    else if (key == "z")
        c.zs = split_list(value);
    else if (key == "s")
        c.ss = split_list(value);
    else if (key == "w")
        c.ws = split_list(value);
    else if (key == "init")
        c.init = value;
    else if (key == "kernel")
        c.kernel = value;
    else if (key == "method")
        c.method = value;
    else if (key == "suite")
        c.suite = value;
    else if (key == "quad-order") {
        const double v = parse_double(value);
        if (v != std::floor(v) || v < 1 || v > 300) throw ParseError("quad-order must be an integer in [1, 300]");
        c.order = static_cast<int>(v);
    } else if (key == "tolerance")
        c.tolerance = parse_double(value);
    else if (key == "format") {
        if (value == "csv")
            c.format = Format::Csv;
        else if (value == "json")
            c.format = Format::Json;
        else
            throw ParseError("unknown format '" + value + "' (csv | json)");
    } else if (key == "alt-constants") {
        if (value == "true" || value == "1")
            c.alt_constants = true;
        else if (value == "false" || value == "0")
            c.alt_constants = false;
        else
            throw ParseError("alt-constants must be true or false");
    } else
        throw ParseError("unknown config key '" + key + "'");
}

void apply_config_text(std::string_view text, RunConfig& c) {
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trimmed(line.substr(0, eq)), value = trimmed(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("config line " + std::to_string(line_no) + ": empty key or value");
        apply_setting(key, value, c);
    }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    Table table;
    int status = 0;
    try {
        if (c.subcommand == "solve")
            status = solve(c, table, err);
        else if (c.subcommand == "transform")
            status = transform(c, table);
        else if (c.subcommand == "kernel")
            status = kernel(c, table);
        else if (c.subcommand == "verify") {
            if (c.suite.empty()) throw UsageError("--suite is required");
            status = reports_table(suites::run_suite(c.suite, suite_options(c)), table, err);
        } else if (c.subcommand == "table")
            status = reports_table(suites::table(suite_options(c)), table, err);
        else
            throw UsageError("unknown subcommand '" + c.subcommand + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (c.format == Format::Json)
        write_json(c.subcommand, table, out);
    else
        write_csv(table, out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << c.subcommand << ": " << table.rows.size() << " rows in " << secs << " s\n";
    return status;
}

} // namespace bargheat::cli
