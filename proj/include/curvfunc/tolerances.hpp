#pragma once

namespace curvfunc {

/// Central numerical tolerances. Construction checks are absolute (scaled by
/// the magnitude of the data), identity checks are relative.
struct Tolerances {
    double construction = 1e-12;        // tensor symmetry / Bianchi / trace checks
    double cross_identity_rel = 1e-11;  // identities tying two independent routes
    double contraction_consistency = 1e-10;  // (Rm, Ric, R) agreement on input
    double second_bianchi = 1e-11;      // divergence of E on homogeneous models
    double jacobi = 1e-12;              // structure-constant Jacobi identity
    double spd_floor = 1e-10;           // smallest admissible eigenvalue of Q
    double classify_residual = 1e-8;    // EL residual gate for classification
    double classify_einstein = 1e-10;   // |E| below which a metric counts as Einstein
    double classify_spectrum = 1e-8;    // Ricci-spectrum matching window
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tols{};
    return tols;
}

}  // namespace curvfunc
