// Release gate: one PASS/FAIL line per acceptance criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "skeleton/skeleton.hpp"

namespace {

using namespace skeleton;

struct Outcome {
    bool passed = false;
    std::string summary;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_seconds;  ///< <= 0 means no limit
    std::function<Outcome()> run;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
    return buffer;
}

Outcome from_check(const CheckReport& r) {
    std::string summary = r.detail;
    for (std::size_t i = 0; i < r.computed.size() && i < 6; ++i) summary += (i ? ", " : (summary.empty() ? "" : "; ")) + format_double(r.computed[i]);
    return {r.passed, summary};
}

} // namespace

int main() {
    VerifyConfig config;  // N = 400, mesh 600

    const std::vector<Criterion> criteria = {
        {1, "Rosenthal constant (double >= 10 digits, double-double >= 16 digits)", 10.0,
         [] {
             const DoubleDouble reference = parse_double_double(kRosenthalCriticalCharge);
             const auto cp = z_critical_ub_theta(std::numbers::pi / 2.0);
             const auto ext = z_critical_ub_extended(mass_ratio_from_theta12(std::numbers::pi / 2.0));
             const double rel = std::abs(cp.z_c_ub - static_cast<double>(reference)) / static_cast<double>(reference);
             const double rel_ext = std::abs(static_cast<double>((ext.z_c_ub - reference) / reference));
             const double d = rel == 0.0 ? 17.0 : -std::log10(rel);
             const double d_ext = rel_ext == 0.0 ? 32.0 : -std::log10(rel_ext);
             return Outcome{d >= 10.0 && d_ext >= 16.0,
                            "Z_c^ub = " + format_double(cp.z_c_ub) + " (" + fmt("%.1f", d) + " digits), extended " +
                                to_string(ext.z_c_ub, 25) + " (" + fmt("%.1f", d_ext) + " digits)"};
         }},
        {2, "zero-charge mass threshold in [0.46, 0.50]", 60.0,
         [] {
             const double mu = zero_charge_mass_threshold();
             return Outcome{mu >= 0.46 && mu <= 0.50, "mu* = " + format_double(mu)};
         }},
        {3, "odd-sector eigenvector: residual <= 1e-4 at N = 400, f(0+) within 1e-6", 0.0,
         [&] { return from_check(check_odd_sector_eigenvector(config)); }},
        {4, "Hilbert-Schmidt norm in [1.0, 1.02]", 0.0, [&] { return from_check(check_hs_bound(config)); }},
        {5, "origin constant within 1e-3 (Richardson extrapolation)", 0.0, [] { return from_check(check_origin_constant()); }},
        {6, "sector positivity (PM, MP >= k - 1/sqrt2 - 1e-6; MM >= -1e-6)", 0.0,
         [&] { return from_check(check_sector_positivity(config)); }},
        {7, "parity blocks: signs and monotonicity in theta", 0.0,
         [&] {
             const auto signs = check_block_signs(config);
             const auto mono = check_block_monotonicity(config);
             return Outcome{signs.passed && mono.passed, mono.detail};
         }},
        {8, "K(0,0) > 0 => negative PP skeleton at threshold (N = 800) and a bound state", 0.0,
         [&] { return from_check(check_binding_chain(config)); }},
        {9, "finite-difference oracle within 5%, improving over two refinements", 300.0,
         [&] { return from_check(check_grid_oracle(config)); }},
        {10, "PP ground state k* changes < 1e-6 between N = 200 and 400", 0.0,
         [&] { return from_check(check_convergence_gate(config)); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = o.passed;
        if (c.time_limit_seconds > 0.0 && seconds > c.time_limit_seconds) {
            passed = false;
            o.summary += " [exceeded " + fmt("%.0f", c.time_limit_seconds) + " s]";
        }
        if (!passed) ++failures;
        std::printf("%s criterion %2d: %s -- %s (%.2f s)\n", passed ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    o.summary.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
