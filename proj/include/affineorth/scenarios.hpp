#pragma once

// Named verification scenarios: each binds a family of geometric checks to a
// pass/fail report with residuals, tolerances and reproducible seeds.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "affineorth/metrics.hpp"
#include "affineorth/rng.hpp"

namespace affineorth {

// Per-check tolerance table; the single source of truth for every scenario
// and for the acceptance suite. scale multiplies every entry uniformly.
struct Tolerances {
    double hopf_pullback = 1e-12;
    double hopf_negative_min = 1e-3;       // perturbed dilation must exceed this
    double deformation_compatibility = 1e-6;
    double flatness = 1e-8;
    double holonomy = 1e-6;
    double frame_offdiagonal = 1e-10;
    double frame_diagonal = 1e-8;
    double frame_bracket = 1e-6;
    double christoffel_identity = 1e-7;
    double christoffel_endpoint = 1e-9;
    double wrong_family_min = 1e-3;        // g_i·t control must exceed this
    double mixed_entries_min = 1e-4;       // distinct-entry control must exceed this
    double torsion = 1e-12;
    double curvature_match = 1e-12;
    double curvature_skew = 0.0;
    double euler_integral_rel = 1e-9;
    double omega_skew_min = 0.0;           // connection-matrix defect must exceed this
    double pfaffian_conjugation = 1e-10;
    double gauss_bonnet_flat = 1e-12;
    double gauss_bonnet_conformal = 1e-6;
    double gauss_bonnet_general = 1e-5;
    double grid_convergence = 1e-9;
    double scale = 1.0;
};

struct ScenarioConfig {
    int dim = 2;
    int probes = 100;
    std::uint64_t seed = 0;
    std::vector<double> k_values;   // empty: scenario default
    std::vector<double> t_values;   // empty: {0, 0.25, 0.5, 0.75, 1}
    int grid = 0;                   // 0: scenario default (64, Gauss-Bonnet 128)
    double frame_margin = 0.1;      // local-frame sub-chart margin ε
    int transport_steps = 1000;
    int metric_family_size = 5;
    Tolerances tolerances;
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail; // on failure: the probe point that attains the residual

    bool operator==(const CheckResult&) const = default;
};

struct VerificationReport {
    std::string scenario;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool overall = true;
    double runtime_ms = 0.0;
};

// Metric families used by the scenarios (also handy for tests).
DiagonalMetric random_conformal_torus_metric(Rng& rng);
DiagonalMetric distinct_entries_torus_metric();
DiagonalMetric conformal_bump_metric();   // e^{2u}·I, u = 0.3 sin θ₁ cos θ₂
DiagonalMetric stretched_torus_metric();  // diag(1 + 0.5 sin²θ₁, 1)

VerificationReport verify_hopf(const ScenarioConfig& cfg = {});
VerificationReport verify_torus_flat(const ScenarioConfig& cfg = {});
VerificationReport verify_local_frame(const ScenarioConfig& cfg = {});
VerificationReport verify_theorem1(const ScenarioConfig& cfg = {});
VerificationReport verify_quasi_metric(const ScenarioConfig& cfg = {});
VerificationReport verify_gauss_bonnet(const ScenarioConfig& cfg = {});

// All six, ordered by scenario name.
std::vector<VerificationReport> verify_all(const ScenarioConfig& cfg = {});

// Dispatch by scenario name ("hopf", "torus-flat", "local-frame", "theorem1",
// "quasi-metric", "gauss-bonnet"); throws PreconditionError on unknown names.
VerificationReport run_scenario(const std::string& name, const ScenarioConfig& cfg);

} // namespace affineorth
