#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sp2kit/oscillator.hpp"
#include "sp2kit/wigner.hpp"

namespace sp2kit::cli {

namespace {

double parse_double(std::string_view text, const char* what) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw UsageError(std::string(what) + " must be finite");
    }
    return v;
}

std::vector<double> parse_list(std::string_view text, const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_double(text.substr(start, comma - start), what));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Json entries(const Mat2& m) { return Json::array({m.a(), m.b(), m.c(), m.d()}); }

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

void write_form(Json& rec, const WignerForm<double>& form) {
    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Elliptic<double>>) {
                rec["phi"] = f.phi;
            } else if constexpr (std::is_same_v<F, Hyperbolic<double>>) {
                rec["chi"] = f.chi;
                rec["branch"] = to_string(f.branch);
            } else {
                rec["gamma"] = f.gamma;
                rec["side"] = to_string(f.side);
            }
        },
        form);
}

double wigner_parameter(const WignerForm<double>& form) {
    return std::visit(
        [](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Elliptic<double>>) {
                return f.phi;
            } else if constexpr (std::is_same_v<F, Hyperbolic<double>>) {
                return f.chi;
            } else {
                return 0.0;
            }
        },
        form);
}

void dump(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::number_float:
        out += std::isfinite(j.get<double>()) ? format_number(j.get<double>()) : "null";
        break;
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            break;
        }
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        out += "[";
        bool first = true;
        for (const auto& e : j) {
            out += first ? "" : ",";
            if (flat) {
                out += first ? "" : " ";
            } else {
                out += "\n" + inner;
            }
            dump(e, out, indent + 1);
            first = false;
        }
        out += flat ? "]" : "\n" + pad + "]";
        break;
    }
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            break;
        }
        out += "{";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            out += first ? "\n" : ",\n";
            out += inner + Json(key).dump() + ": ";
            dump(value, out, indent + 1);
            first = false;
        }
        out += "\n" + pad + "}";
        break;
    }
    default:
        out += j.dump();
        break;
    }
}

double resolve_tolerance(const CLI::Option* flag, double flag_value) {
    double eps = Tolerances<double>{}.parabolic;
    if (flag->count() > 0) {
        eps = flag_value;
    } else if (const char* env = std::getenv("SP2KIT_TOLERANCE"); env != nullptr && *env != '\0') {
        eps = parse_double(env, "SP2KIT_TOLERANCE");
    }
    if (!(eps >= 0) || !std::isfinite(eps)) {
        throw UsageError("tolerance must be a non-negative finite number");
    }
    return eps;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid JSON in '" + path + "': " + e.what());
    }
}

std::string csv_line(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        line += first ? "" : ",";
        line += f;
        first = false;
    }
    return line + "\n";
}

std::string cmd_decompose(const std::string& matrix, const Tolerances<double>& tol) {
    const auto raw = parse_matrix(matrix);
    const Normalized in = normalize_input(raw);
    Json rec = result_record(in.matrix, tol);
    Json out;
    out["input"] = Json::array({raw[0], raw[1], raw[2], raw[3]});
    out["det_input"] = in.det_input;
    out["det_correction"] = in.det_correction;
    out.update(rec);
    return format_json(out) + "\n";
}

std::string cmd_power(const std::string& matrix, std::uint64_t n, bool oracle, const Tolerances<double>& tol) {
    const Normalized in = normalize_input(parse_matrix(matrix));
    const NormalForm<double> nf = normal_form(in.matrix, tol);
    const Mat2 mn = power(nf, n);
    Json out;
    out["matrix"] = entries(in.matrix);
    out["det_correction"] = in.det_correction;
    out["n"] = n;
    out["class"] = to_string(nf.conjugacy());
    out["matrix_n"] = entries(mn);
    if (oracle) {
        out["oracle_max_abs_diff"] = max_abs_diff(mn, power_oracle(in.matrix, n));
    }
    return format_json(out) + "\n";
}

std::string cmd_chain(const std::string& path, bool csv, const Tolerances<double>& tol) {
    const ChainSpec spec = parse_chain(read_json_file(path));
    const Mat2 cell = chain_product(spec);
    const NormalForm<double> nf = normal_form(cell, tol);
    const auto repeat = static_cast<std::uint64_t>(spec.repeat);

    if (csv) {
        std::string text = csv_line({"n", "half_trace", "class"});
        for (std::uint64_t n = 1; n <= repeat; ++n) {
            const Mat2 mn = power(nf, n);
            text += csv_line({std::to_string(n), format_number(mn.half_trace()), to_string(classify(mn, tol))});
        }
        return text;
    }

    Json out = result_record(cell, tol);
    out["repeat"] = spec.repeat;
    out["power_result"] = entries(power(nf, repeat));
    Json table = Json::array();
    for (std::uint64_t n = 1; n <= repeat; ++n) {
        const Mat2 mn = power(nf, n);
        table.push_back(Json{{"n", n}, {"half_trace", mn.half_trace()}, {"class", to_string(classify(mn, tol))}});
    }
    out["trace_table"] = std::move(table);
    return format_json(out) + "\n";
}

std::vector<double> grid(const std::array<double, 2>& range, int steps) {
    if (range[0] == range[1] || steps == 1) {
        return {range[0]};
    }
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        g.push_back(i == steps - 1 ? range[1] : range[0] + (range[1] - range[0]) * i / (steps - 1));
    }
    return g;
}

std::string cmd_sweep(const std::string& theta_text, const std::string& lambda_text, int steps,
                      const Tolerances<double>& tol) {
    const auto theta_range = parse_range(theta_text);
    const auto lambda_range = parse_range(lambda_text);
    if (steps < 1) {
        throw UsageError("steps must be positive");
    }
    std::string text = csv_line({"theta", "lambda", "half_trace", "class", "phi_or_chi"});
    for (double theta : grid(theta_range, steps)) {
        for (double lambda : grid(lambda_range, steps)) {
            const Mat2 core = core_matrix(theta, lambda, Branch::plus);
            const NormalForm<double> nf = normal_form(core, tol);
            text += csv_line({format_number(theta), format_number(lambda), format_number(core.half_trace()),
                              to_string(nf.conjugacy()), format_number(wigner_parameter(nf.form))});
        }
    }
    return text;
}

std::string cmd_oscillator(double eta, int kmax) {
    std::string text = csv_line({"k", "coefficient", "cumulative_probability"});
    double cumulative = 0;
    for (const auto& c : oscillator::expansion(eta, kmax)) {
        cumulative += c.value * c.value;
        text += csv_line({std::to_string(c.k), format_number(c.value), format_number(cumulative)});
    }
    return text;
}

} // namespace

std::array<double, 4> parse_matrix(std::string_view text) {
    const std::vector<double> v = parse_list(text, "matrix entry");
    if (v.size() != 4) {
        throw UsageError("matrix needs exactly four entries A,B,C,D");
    }
    return {v[0], v[1], v[2], v[3]};
}

std::array<double, 2> parse_range(std::string_view text) {
    const std::vector<double> v = parse_list(text, "range bound");
    if (v.size() != 2) {
        throw UsageError("range needs two bounds lo,hi");
    }
    if (v[0] > v[1]) {
        throw UsageError("range lower bound exceeds upper bound");
    }
    return {v[0], v[1]};
}

Normalized normalize_input(const std::array<double, 4>& e) {
    const double det = e[0] * e[3] - e[1] * e[2];
    if (!(std::abs(det - 1) <= input_det_tolerance)) {
        std::ostringstream os;
        os << "matrix is not unimodular: det = " << format_number(det);
        throw InvalidMatrix(os.str());
    }
    const double f = 1 / std::sqrt(det);
    return {Mat2(e[0] * f, e[1] * f, e[2] * f, e[3] * f), det, f};
}

Json result_record(const Mat2& m, const Tolerances<double>& tol) {
    const NormalForm<double> nf = normal_form(m, tol);
    const BargmannParams<double> bp = decompose_bargmann(m);
    const EigenPair<double> ev = eigenvalues(m, tol);

    Json rec;
    rec["matrix"] = entries(m);
    rec["class"] = to_string(nf.conjugacy());
    write_form(rec, nf.form);
    rec["eta"] = nf.eta;
    rec["sigma"] = nf.sigma;
    rec["parity"] = to_string(nf.parity);
    rec["delta_nf"] = nf.delta;
    rec["G"] = entries(nf.G);
    rec["near_boundary"] = nf.near_boundary;
    rec["theta1"] = bp.theta1;
    rec["theta2"] = bp.theta2;
    rec["lambda"] = bp.lambda;
    rec["eigenvalues"] = Json{{"kind", to_string(ev.kind)},
                              {"plus", complex_pair(ev.e_plus)},
                              {"minus", complex_pair(ev.e_minus)}};
    rec["recomposed"] = entries(compose_bargmann(bp));
    rec["reconstructed"] = entries(reconstruct(nf));
    return rec;
}

ChainSpec parse_chain(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
        throw UsageError("chain spec needs an \"elements\" array");
    }
    ChainSpec spec;
    const auto number = [](const Json& obj, const char* key) {
        if (!obj.contains(key) || !obj[key].is_number()) {
            throw UsageError(std::string("chain element needs numeric \"") + key + "\"");
        }
        return obj[key].get<double>();
    };
    for (const auto& e : j["elements"]) {
        if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string()) {
            throw UsageError("chain element needs a \"kind\" string");
        }
        const std::string kind = e["kind"].get<std::string>();
        ChainElement el{};
        if (kind == "rotation") {
            el.kind = ChainElement::Kind::rotation;
            el.parameter = number(e, "theta");
        } else if (kind == "boost_b") {
            el.kind = ChainElement::Kind::boost_b;
            el.parameter = number(e, "two_lambda");
        } else if (kind == "squeeze") {
            el.kind = ChainElement::Kind::squeeze;
            el.parameter = number(e, "eta");
        } else if (kind == "raw") {
            el.kind = ChainElement::Kind::raw;
            if (!e.contains("matrix") || !e["matrix"].is_array() || e["matrix"].size() != 4) {
                throw UsageError("raw chain element needs a four-entry \"matrix\"");
            }
            for (std::size_t i = 0; i < 4; ++i) {
                if (!e["matrix"][i].is_number()) {
                    throw UsageError("raw matrix entries must be numbers");
                }
                el.matrix[i] = e["matrix"][i].get<double>();
            }
        } else {
            throw UsageError("unknown chain element kind '" + kind + "'");
        }
        spec.elements.push_back(el);
    }
    if (j.contains("repeat")) {
        if (!j["repeat"].is_number_integer()) {
            throw UsageError("\"repeat\" must be an integer");
        }
        spec.repeat = j["repeat"].get<std::int64_t>();
    }
    if (spec.repeat < 1) {
        throw InvalidMatrix("chain repeat must be at least 1");
    }
    return spec;
}

Mat2 chain_product(const ChainSpec& spec) {
    Mat2 m;
    for (const auto& e : spec.elements) {
        switch (e.kind) {
        case ChainElement::Kind::rotation: m *= rotation(e.parameter); break;
        case ChainElement::Kind::boost_b: m *= boost_b(e.parameter); break;
        case ChainElement::Kind::squeeze: m *= squeeze_s(e.parameter); break;
        case ChainElement::Kind::raw: m *= normalize_input(e.matrix).matrix; break;
        }
    }
    return m;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_json(const Json& j) {
    std::string out;
    dump(j, out, 0);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sp2kit: decompose, classify and exponentiate 2x2 unimodular (ABCD) matrices"};
    app.name("sp2kit");
    app.require_subcommand(1);

    double tolerance_value = 0;
    std::string output_path;
    CLI::Option* tolerance_flag =
        app.add_option("--tolerance", tolerance_value, "parabolic threshold on ||t| - 1| (env SP2KIT_TOLERANCE)");
    app.add_option("--output", output_path, "write results to this file instead of standard output");

    std::string matrix;
    auto* dec = app.add_subcommand("decompose", "classification, normal form and Bargmann parameters");
    dec->add_option("matrix", matrix, "entries A,B,C,D")->required();

    std::string power_matrix;
    std::uint64_t n = 0;
    bool oracle = false;
    auto* pw = app.add_subcommand("power", "n-th power through the normal form");
    pw->add_option("matrix", power_matrix, "entries A,B,C,D")->required();
    pw->add_option("n", n, "exponent")->required();
    pw->add_flag("--oracle", oracle, "compare against binary exponentiation");

    std::string chain_path;
    bool csv = false;
    auto* ch = app.add_subcommand("chain", "unit-cell product of a chain spec and its powers");
    ch->add_option("spec", chain_path, "path to the JSON chain spec")->required();
    ch->add_flag("--csv", csv, "emit the per-repeat trace table as CSV");

    std::string theta_range;
    std::string lambda_range;
    int steps = 0;
    auto* sw = app.add_subcommand("sweep", "classify core matrices over a (theta, lambda) grid");
    sw->add_option("--theta", theta_range, "lo,hi")->required();
    sw->add_option("--lambda", lambda_range, "lo,hi")->required();
    sw->add_option("--steps", steps, "grid points per axis")->required();

    double eta = 0;
    int kmax = 0;
    auto* osc = app.add_subcommand("oscillator", "expansion coefficients of the squeezed two-oscillator state");
    osc->add_option("--eta", eta, "squeeze parameter")->required();
    osc->add_option("--kmax", kmax, "largest index")->required();

    for (auto* sub : {dec, pw, ch, sw, osc}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        Tolerances<double> tol;
        tol.parabolic = resolve_tolerance(tolerance_flag, tolerance_value);

        std::string text;
        if (dec->parsed()) {
            text = cmd_decompose(matrix, tol);
        } else if (pw->parsed()) {
            text = cmd_power(power_matrix, n, oracle, tol);
        } else if (ch->parsed()) {
            text = cmd_chain(chain_path, csv, tol);
        } else if (sw->parsed()) {
            text = cmd_sweep(theta_range, lambda_range, steps, tol);
        } else if (osc->parsed()) {
            text = cmd_oscillator(eta, kmax);
        }

        if (output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file || !(file << text)) {
                throw UsageError("cannot write '" + output_path + "'");
            }
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_usage;
    } catch (const Overflow& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_overflow;
    } catch (const std::overflow_error& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_overflow;
    } catch (const InvalidMatrix& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_domain;
    } catch (const InvalidArgument& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_domain;
    } catch (const RangeError& e) {
        err << "sp2kit: " << e.what() << "\n";
        return exit_domain;
    }
}

} // namespace sp2kit::cli
