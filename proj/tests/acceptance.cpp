// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Extra arguments are test executables to run as part of the suite-time
// budget of the last criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "golden_compare.hpp"
#include "oracles.hpp"
#include "sp2kit/lorentz.hpp"
#include "sp2kit/oscillator.hpp"
#include "sp2kit/wigner.hpp"

using namespace sp2kit;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome bargmann_round_trip() {
    oracle::Rng rng(1001);
    const auto t0 = Clock::now();
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const BargmannParams<double> in{rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(0, 5)};
        const auto out = decompose_bargmann(compose_bargmann(in));
        worst = std::max({worst, std::abs(out.theta1 - in.theta1), std::abs(out.theta2 - in.theta2),
                          std::abs(out.lambda - in.lambda)});
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-10 && elapsed < 1.0, fmt("max error %.2e", worst) + fmt(", %.3f s", elapsed)};
}

Outcome normal_form_reconstruction() {
    oracle::Rng rng(1002);
    double worst = 0;
    int counted = 0;
    while (counted < 10000) {
        const Mat2 m = compose_bargmann(BargmannParams<double>{rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(0, 3)});
        const Mat2 sm = rng.sign() < 0 ? -m : m;
        if (std::abs(std::abs(sm.half_trace()) - 1) <= 1e-3) {
            continue;
        }
        ++counted;
        worst = std::max(worst, max_abs_diff(reconstruct(normal_form(sm)), sm));
    }
    return {worst <= 1e-10, fmt("max error %.2e", worst)};
}

Outcome eigenvalue_law() {
    oracle::Rng rng(1003);
    double worst = 0;
    int mismatches = 0;
    int per_class[3] = {0, 0, 0};
    for (int i = 0; i < 10000; ++i) {
        Mat2 m = Mat2::identity();
        if (i % 3 == 2) {
            // forced parabolic: tanh(lambda) = sin(theta)
            const double theta = rng.uniform(-1.2, 1.2);
            const Mat2 core = core_matrix(theta, std::atanh(std::sin(theta)));
            const Mat2 l = rotation(rng.uniform(-pi, pi));
            m = l * core * l.inverse();
        } else {
            m = compose_bargmann(BargmannParams<double>{rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(0, 3)});
        }
        if (rng.sign() < 0) {
            m = -m;
        }
        const Conjugacy c = classify(m);
        const auto e = eigenvalues(m);
        ++per_class[static_cast<int>(c)];
        worst = std::max(worst, std::abs(e.e_plus * e.e_minus - 1.0));
        const EigenKind expected = c == Conjugacy::elliptic     ? EigenKind::unit_complex
                                   : c == Conjugacy::hyperbolic ? EigenKind::real
                                                                : EigenKind::degenerate;
        if (e.kind != expected) {
            ++mismatches;
        }
    }
    const bool spans = per_class[0] > 0 && per_class[1] > 0 && per_class[2] > 0;
    std::ostringstream d;
    d << fmt("max |E+E- - 1| %.2e", worst) << ", " << mismatches << " class mismatches, classes " << per_class[0]
      << "/" << per_class[1] << "/" << per_class[2];
    return {worst <= 1e-12 && mismatches == 0 && spans, d.str()};
}

Outcome power_identity() {
    oracle::Rng rng(1004);
    double worst = 0;
    for (std::uint64_t n : {10ull, 1000ull, 1ull << 20}) {
        for (int i = 0; i < 100; ++i) {
            const Mat2 e = oracle::random_elliptic(rng);
            // n chi / 2 <= 600 keeps every entry finite; chi >= cap / 2 keeps
            // cosh(chi / 2) - 1 clear of the parabolic threshold
            const Mat2 h = oracle::random_hyperbolic(rng, std::min(3.0, 1200.0 / double(n)), 1.0, 0.5);
            const Mat2 p = oracle::random_parabolic(rng);
            for (const Mat2& m : {e, h, p}) {
                worst = std::max(worst, oracle::relative_diff(power(normal_form(m), n), power_oracle(m, n)));
            }
        }
    }

    // speed at n = 2^20: normal form (including the decomposition) vs naive
    // n-fold multiplication
    const std::uint64_t n = 1ull << 20;
    const Mat2 m = compose_bargmann(BargmannParams<double>{0.9, -0.2, 0.3});
    volatile double sink = 0;
    auto t0 = Clock::now();
    const int fast_reps = 1000;
    for (int r = 0; r < fast_reps; ++r) {
        sink = sink + power(normal_form(m), n).a();
    }
    const double fast = seconds_since(t0) / fast_reps;
    t0 = Clock::now();
    const int slow_reps = 10;
    for (int r = 0; r < slow_reps; ++r) {
        sink = sink + oracle::naive_power(m, n).a();
    }
    const double slow = seconds_since(t0) / slow_reps;
    const double speedup = slow / fast;
    return {worst <= 1e-8 && speedup >= 50,
            fmt("max relative error %.2e", worst) + fmt(", speedup %.0fx", speedup)};
}

Outcome isomorphism() {
    oracle::Rng rng(1005);
    auto random_m = [&] {
        return compose_bargmann(BargmannParams<double>{rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(0, 1.5)});
    };
    double hom = 0;
    for (int i = 0; i < 1000; ++i) {
        const Mat2 a = random_m();
        const Mat2 b = random_m();
        hom = std::max(hom, (lorentz4_of(a * b) - lorentz4_of(a) * lorentz4_of(b)).cwiseAbs().maxCoeff());
    }
    double norm = 0;
    for (int i = 0; i < 1000; ++i) {
        const FourVector<double> v = four_vector(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
        const FourVector<double> w = adjoint_action(random_m(), v);
        const double scale = std::max(v.squaredNorm(), w.squaredNorm());
        norm = std::max(norm, std::abs(minkowski_norm(w) - minkowski_norm(v)) / scale);
    }
    double fixed = 0;
    auto check = [&](const WignerForm<double>& w, double eta) {
        const FourVector<double> v0 = little_group_reference(w, eta);
        const FourVector<double> v1 = adjoint_action(little_group_element(w, eta), v0);
        fixed = std::max(fixed, (v1 - v0).cwiseAbs().maxCoeff() / v0.cwiseAbs().maxCoeff());
    };
    for (int i = 0; i < 100; ++i) {
        const double eta = rng.uniform(-2, 2);
        check(Elliptic<double>{rng.sign() * rng.uniform(0.05, 3.1)}, eta);
        check(Hyperbolic<double>{rng.uniform(0.05, 3), rng.sign() > 0 ? Branch::plus : Branch::minus}, eta);
        check(Parabolic<double>{rng.uniform(-3, 3), rng.sign() > 0 ? Side::lower : Side::upper}, eta);
    }
    return {hom <= 1e-11 && norm <= 1e-12 && fixed <= 1e-11,
            fmt("homomorphism %.2e", hom) + fmt(", norm %.2e", norm) + fmt(", fixed points %.2e", fixed)};
}

Outcome contraction_law() {
    double worst = 0;
    const Mat2 target(1.0, 0.0, 1.0, 1.0);
    for (double eta : {2.0, 4.0, 6.0, 8.0, 10.0}) {
        const double phi = 2 * std::asin(std::exp(-eta));
        const Mat2 m = squeeze_s(-eta) * rotation(phi) * squeeze_s(eta);
        const double expected = std::exp(-2 * eta);
        worst = std::max(worst, std::abs(max_abs_diff(m, target) - expected) / expected);
    }
    return {worst <= 1e-12, fmt("max relative deviation %.2e", worst)};
}

Outcome rational_fixture() {
    const Mat2 k = core_matrix(std::asin(0.6), std::log(2.0));
    const double err = std::max({std::abs(k.a() - 1), std::abs(k.b()), std::abs(k.c() - 1.5), std::abs(k.d() - 1)});
    return {err <= 1e-14, fmt("max error %.2e", err)};
}

Outcome oscillator_expansion() {
    double oracle_err = 0;
    for (double eta : {0.5, 1.0, 2.0}) {
        for (int k = 0; k <= 5; ++k) {
            oracle_err = std::max(oracle_err, std::abs(oscillator::overlap_oracle(k, k, eta) -
                                                       oscillator::expansion_coefficient(k, eta)));
        }
    }
    double tail_err = 0;
    for (double eta : {0.1, 0.5, 1.0, 1.5, 2.0}) {
        double sum = 0;
        for (int k = 0; k <= 20; ++k) {
            const double c = oscillator::expansion_coefficient(k, eta);
            sum += c * c;
            tail_err = std::max(tail_err, std::abs(1 - sum - std::pow(std::tanh(eta / 2), 2 * k + 2)));
        }
    }
    return {oracle_err <= 1e-6 && tail_err <= 1e-12,
            fmt("oracle %.2e", oracle_err) + fmt(", tail %.2e", tail_err)};
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

Outcome cli_contract(const std::vector<std::string>& suite, Clock::time_point started) {
    const std::string dir = SP2KIT_GOLDEN_DIR;
    int golden_failures = 0;
    std::vector<std::string> seen;
    const auto cases = golden::read_manifest(dir);
    for (const auto& c : cases) {
        const Run r = run_cli(c.args);
        if (r.code != 0 || !golden::matches(c, r.out, dir)) {
            ++golden_failures;
        }
        if (std::find(seen.begin(), seen.end(), c.args.at(0)) == seen.end()) {
            seen.push_back(c.args.at(0));
        }
    }

    const struct {
        std::vector<std::string> args;
        int code;
    } table[] = {
        {{"decompose", "1,0,1.5,1"}, 0},
        {{"decompose", "1,0,x,1"}, 1},
        {{"chain", dir + "/missing.json"}, 1},
        {{"sweep", "--theta", "1,0", "--lambda", "0,1", "--steps", "3"}, 1},
        {{"decompose", "1,1,1,1"}, 2},
        {{"oscillator", "--eta", "-1", "--kmax", "2"}, 2},
        {{"power", "5,4.8989794855663558,4.8989794855663558,5", "100000"}, 3},
    };
    int exit_failures = 0;
    for (const auto& row : table) {
        if (run_cli(row.args).code != row.code) {
            ++exit_failures;
        }
    }

    oracle::Rng rng(1009);
    int round_trip_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = compose_bargmann(BargmannParams<double>{rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(0, 3)});
        const std::string entries = cli::format_number(m.a()) + "," + cli::format_number(m.b()) + "," +
                                    cli::format_number(m.c()) + "," + cli::format_number(m.d());
        const Run r = run_cli({"decompose", entries});
        const auto j = golden::Json::parse(r.out);
        const auto input = j["input"].get<std::vector<double>>();
        const Mat2 back = compose_bargmann(
            BargmannParams<double>{j["theta1"].get<double>(), j["theta2"].get<double>(), j["lambda"].get<double>()});
        if (r.code != 0 || input != std::vector<double>{m.a(), m.b(), m.c(), m.d()} || max_abs_diff(back, m) > 1e-9) {
            ++round_trip_failures;
        }
    }

    int suite_failures = 0;
    for (const auto& exe : suite) {
        const std::string cmd = "\"" + exe + "\" > /dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) {
            ++suite_failures;
        }
    }
    const double elapsed = seconds_since(started);

    std::ostringstream d;
    d << cases.size() << " golden cases over " << seen.size() << " subcommands (" << golden_failures << " failed), "
      << exit_failures << " exit-code mismatches, " << round_trip_failures << " round-trip failures, " << suite.size()
      << " suites (" << suite_failures << " failed), " << fmt("%.1f s total", elapsed);
    const bool pass = golden_failures == 0 && seen.size() == 5 && exit_failures == 0 && round_trip_failures == 0 &&
                      suite_failures == 0 && elapsed < 30;
    return {pass, d.str()};
}

} // namespace

int main(int argc, char** argv) {
    const auto started = Clock::now();
    const std::vector<std::string> suite(argv + 1, argv + argc);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Bargmann round trip", bargmann_round_trip},
        {"normal-form reconstruction", normal_form_reconstruction},
        {"eigenvalue law", eigenvalue_law},
        {"power identity and speed", power_identity},
        {"Lorentz isomorphism", isomorphism},
        {"contraction law", contraction_law},
        {"parabolic rational fixture", rational_fixture},
        {"oscillator expansion", oscillator_expansion},
        {"CLI contract and suite time", [&] { return cli_contract(suite, started); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
