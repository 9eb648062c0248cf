#pragma once

// sp2kit command-line front end. The dispatcher writes to caller-provided
// streams so tests can drive it in-process.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sp2kit/sp2.hpp"

namespace sp2kit::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,     ///< parse or usage failure, missing file
    exit_domain = 2,    ///< input violates a mathematical invariant
    exit_overflow = 3,  ///< result leaves the floating-point range
};

/// Input matrices may miss unit determinant by this much before rejection.
inline constexpr double input_det_tolerance = 1e-8;

using Json = nlohmann::ordered_json;

/// Thrown for malformed command-line or file input (exit code 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "A,B,C,D" in row-major order.
std::array<double, 4> parse_matrix(std::string_view text);

/// "lo,hi"
std::array<double, 2> parse_range(std::string_view text);

struct Normalized {
    Mat2 matrix;
    double det_input;
    double det_correction;  ///< factor 1/sqrt(det) applied to every entry
};

/// Rescales a nearly unimodular matrix to unit determinant; throws
/// InvalidMatrix when |det - 1| > input_det_tolerance.
Normalized normalize_input(const std::array<double, 4>& entries);

/// Classification, normal form, Bargmann parameters and eigenvalues.
Json result_record(const Mat2& m, const Tolerances<double>& tol);

struct ChainElement {
    enum class Kind { rotation, boost_b, squeeze, raw } kind;
    double parameter = 0;               ///< theta, two_lambda or eta
    std::array<double, 4> matrix{};     ///< raw entries
};

struct ChainSpec {
    std::vector<ChainElement> elements;
    std::int64_t repeat = 1;
};

/// Schema: {"elements":[{"kind":"rotation","theta":t} | {"kind":"boost_b","two_lambda":l}
///          | {"kind":"squeeze","eta":e} | {"kind":"raw","matrix":[a,b,c,d]}, ...], "repeat":N}
ChainSpec parse_chain(const Json& j);

/// Left-to-right product of the unit cell.
Mat2 chain_product(const ChainSpec& spec);

/// JSON text with every floating-point number at 17 significant digits.
std::string format_json(const Json& j);

/// %.17g
std::string format_number(double v);

/// Runs one command line (args exclude the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sp2kit::cli
