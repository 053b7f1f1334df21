#pragma once

#include "bargheat/polygauss.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bargheat::cli {

enum class Format { Csv, Json };

/// Everything one invocation needs. Subcommands: transform, solve, kernel,
/// verify, table.
struct RunConfig {
    std::string subcommand;
    std::string op;                 // operator name, see ops::parse_kind
    std::optional<double> a;        // defaults to 1 where needed
    std::vector<double> times;      // --t
    std::vector<std::string> xs;    // --x, real probes
    std::vector<std::string> zs;    // --z, complex probes
    std::vector<std::string> ss;    // --s, second Mehler argument
    std::vector<std::string> ws;    // --w, second complex-kernel argument
    std::string init;               // expression or PolyGauss record
    std::string kernel;             // mehler | complex-harmonic
    std::string method;             // exact | series | quadrature
    std::string suite;
    int order = 64;
    double tolerance = 1e-8;
    Format format = Format::Csv;
    bool alt_constants = false;     // 2i complex prefactor, unhalved Mehler form
};

/// Polynomial expressions in one variable (x or z) with complex literals
/// (2, -1.5e-3, 3i, 1+2i), + - * / ^, parentheses and exp(q) for q of degree
/// <= 2; or a PolyGauss record "real,..." / "complex,...". Without a
/// variable the side is `fallback`. ParseError on anything else.
PolyGauss parse_init(std::string_view text, Side fallback = Side::Real);

/// A constant expression such as "1-2i" or "0.5".
cplx parse_complex(std::string_view text);
/// Full-precision decimal; ParseError on trailing garbage.
double parse_double(std::string_view text);

/// Applies "key = value" lines ('#' starts a comment) to `config`. Keys are
/// the long flag names: op a t x z s w init kernel method suite quad-order
/// tolerance format alt-constants subcommand. List values are comma-separated.
void apply_config_text(std::string_view text, RunConfig& config);
void apply_setting(const std::string& key, const std::string& value, RunConfig& config);

/// Runs the subcommand. Returns 0 on success, 1 when a check fails, 2 on a
/// parse or usage error (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace bargheat::cli
