#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "curvfunc/tolerances.hpp"

namespace curvfunc {

/// Symmetric bilinear form in an orthonormal frame (Ric, E, Schouten, ...).
/// Stored exactly symmetric; mutate through set() to keep it that way.
class Sym2 {
public:
    Sym2() : n_(0) {}
    explicit Sym2(int n) : n_(n), m_(Eigen::MatrixXd::Zero(n, n)) {}
    explicit Sym2(const Eigen::MatrixXd& m);

    static Sym2 identity(int n);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double v) { m_(i, j) = v; m_(j, i) = v; }

    const Eigen::MatrixXd& mat() const { return m_; }

    double trace() const { return m_.trace(); }
    double norm_sq() const { return m_.squaredNorm(); }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

    Sym2 operator+(const Sym2& o) const { return Sym2(Eigen::MatrixXd(m_ + o.m_)); }
    Sym2 operator-(const Sym2& o) const { return Sym2(Eigen::MatrixXd(m_ - o.m_)); }
    Sym2 operator*(double c) const { return Sym2(Eigen::MatrixXd(c * m_)); }

    /// Traceless part: this - (tr/n) id.
    Sym2 traceless() const;

private:
    int n_;
    Eigen::MatrixXd m_;
};

inline Sym2 operator*(double c, const Sym2& s) { return s * c; }

/// Rank-3 component array, flat storage, index (a,b,c) -> a*n*n + b*n + c.
/// Used for connection coefficients, nabla Ric, Cotton.
class Rank3 {
public:
    Rank3() : n_(0) {}
    explicit Rank3(int n) : n_(n), comps_(static_cast<size_t>(n) * n * n, 0.0) {}

    int dim() const { return n_; }
    double operator()(int a, int b, int c) const { return comps_[idx(a, b, c)]; }
    double& at(int a, int b, int c) { return comps_[idx(a, b, c)]; }

    double norm_sq() const;
    double max_abs() const;

private:
    size_t idx(int a, int b, int c) const {
        return (static_cast<size_t>(a) * n_ + b) * n_ + c;
    }
    int n_;
    std::vector<double> comps_;
};

/// Rank-4 tensor with full Riemann symmetries: antisymmetric in (i,j) and
/// (k,l), symmetric under pair exchange, first Bianchi identity. Stored
/// densely (n <= 8); symmetry is the builder's responsibility and is
/// validated by canonicalized().
class Riem4 {
public:
    Riem4() : n_(0) {}
    explicit Riem4(int n) : n_(n), comps_(static_cast<size_t>(n) * n * n * n, 0.0) {}

    /// Averages raw components over the symmetry group, then rejects inputs
    /// whose deviation from their own symmetrization or whose first-Bianchi
    /// defect exceeds the construction tolerance (scaled by magnitude).
    static Riem4 canonicalized(const Riem4& raw, double tol = default_tolerances().construction);

    int dim() const { return n_; }
    double operator()(int i, int j, int k, int l) const { return comps_[idx(i, j, k, l)]; }
    double& at(int i, int j, int k, int l) { return comps_[idx(i, j, k, l)]; }

    double norm_sq() const;
    double max_abs() const;

    double max_symmetry_violation() const;
    double max_bianchi_violation() const;

    Riem4 operator+(const Riem4& o) const;
    Riem4 operator-(const Riem4& o) const;
    Riem4 operator*(double c) const;

private:
    size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
    }
    int n_;
    std::vector<double> comps_;
};

/// Complete pointwise curvature package in an orthonormal frame.
struct CurvaturePoint {
    int n = 0;
    Riem4 Rm;
    Sym2 Ric;
    double R = 0.0;
    Sym2 E;        // traceless Ricci
    Riem4 W;       // Weyl part
    Sym2 A;        // Schouten tensor
    double sigma2A = 0.0;
    Eigen::MatrixXd coord_sectionals;  // sigma_ij = Rm_ijij, zero diagonal
};

/// (S ^ T)_ijkl = S_ik T_jl + S_jl T_ik - S_il T_jk - S_jk T_il.
Riem4 kulkarni_nomizu(const Sym2& S, const Sym2& T);

/// Ric_jl = sum_i Rm_ijil, R = tr Ric. Sign convention: the unit round
/// sphere has Rm_ijkl = d_ik d_jl - d_il d_jk, hence positive curvature.
std::pair<Sym2, double> ricci_contract(const Riem4& Rm);

/// Rm = W + (1/(n-2)) Ric ^ g - (R / (2(n-1)(n-2))) g ^ g with g = id.
/// W must be totally trace-free (checked to 1e-10 scaled).
Riem4 reconstruct_riemann(const Riem4& W, const Sym2& Ric, double R);

/// W = Rm - (1/(n-2)) E ^ g - (R / (2n(n-1))) g ^ g; totally trace-free.
/// Rejects (Rm, Ric, R) whose re-contraction disagrees beyond tolerance.
Riem4 weyl_part(const Riem4& Rm, const Sym2& Ric, double R);

/// Schouten tensor A = (Ric - R/(2(n-1)) g)/(n-2) and
/// sigma2(A) = ((tr A)^2 - |A|^2)/2.
std::pair<Sym2, double> schouten_sigma2(const Sym2& Ric, double R);

/// Assembles the full package from Rm and validates construction invariants.
CurvaturePoint make_curvature_point(const Riem4& Rm);

struct SectionalMin {
    double value = 0.0;
    bool exact = false;  // n = 3 uses the closed form; n >= 4 is sampled
};

struct MinSectionalOptions {
    int starts = 64;          // random starts for the n >= 4 sampler
    std::uint64_t seed = 0;   // deterministic sampling
    int max_i터 = 0;          // unused placeholder
};

/// Minimum sectional curvature. n = 3: exact via K(v-perp) = R/2 - Ric(v,v).
/// n >= 4: sampled lower bound (alternating smallest-eigenvector descent over
/// orthonormal pairs, coordinate planes plus seeded random starts).
SectionalMin min_sectional(const Riem4& Rm, const MinSectionalOptions& opts = {});

// Contractions shared with the Euler-Lagrange module.

/// (Rm : S)_ij = sum_{k,l} Rm_ikjl S_kl.
Sym2 curvature_action(const Riem4& Rm, const Sym2& S);

/// B_ij = sum_{k,p,q} Rm_ikpq Rm_jkpq.
Sym2 riemann_square(const Riem4& Rm);

/// sum_{i,j,k,l} Rm_ikjl E_ij E_kl.
double curvature_quadratic(const Riem4& Rm, const Sym2& E);

}  // namespace curvfunc
