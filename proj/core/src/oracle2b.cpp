#include "envelope/oracle2b.hpp"

#include "envelope/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace envelope {

namespace {

struct Tridiagonal {
    std::vector<double> diag;
    double off;
};

Tridiagonal discretise(double mu, std::span<const TermKind> potential, double r_max, int points) {
    const double h = r_max / (points + 1);
    Tridiagonal m{std::vector<double>(static_cast<std::size_t>(points)), -0.5 / (mu * h * h)};
    for (int i = 0; i < points; ++i) {
        const double r = (i + 1) * h;
        double v = 0.0;
        for (const auto& term : potential) v += term_value(term, r);
        m.diag[static_cast<std::size_t>(i)] = 1.0 / (mu * h * h) + v;
    }
    return m;
}

// Number of eigenvalues strictly below e.
int sturm_count(const Tridiagonal& m, double e) {
    const double off2 = m.off * m.off;
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < m.diag.size(); ++i) {
        q = m.diag[i] - e - (i == 0 ? 0.0 : off2 / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

double lowest_eigenvalue(const Tridiagonal& m) {
    const double dmin = *std::min_element(m.diag.begin(), m.diag.end());
    double lo = dmin - 2.0 * std::abs(m.off);
    double hi = dmin;
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (sturm_count(m, mid) >= 1 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Inverse iteration with a shift just below the lowest level; A - sigma I is
// positive definite so the Thomas sweep needs no pivoting.
std::vector<double> lowest_eigenvector(const Tridiagonal& m, double e) {
    const std::size_t n = m.diag.size();
    const double sigma = e - 1e-9 * (1.0 + std::abs(e));
    std::vector<double> x(n, 1.0), c(n), d(n);
    for (int sweep = 0; sweep < 3; ++sweep) {
        c[0] = m.off / (m.diag[0] - sigma);
        d[0] = x[0] / (m.diag[0] - sigma);
        for (std::size_t i = 1; i < n; ++i) {
            const double denom = m.diag[i] - sigma - m.off * c[i - 1];
            c[i] = m.off / denom;
            d[i] = (x[i] - m.off * d[i - 1]) / denom;
        }
        x[n - 1] = d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
        double norm = 0.0;
        for (double v : x) norm = std::max(norm, std::abs(v));
        for (double& v : x) v /= norm;
    }
    return x;
}

} // namespace

RadialGroundState radial_ground_state(double mu, std::span<const TermKind> potential, RadialGrid grid) {
    if (!(mu > 0.0)) throw DomainError("reduced mass must be > 0");
    if (!(grid.r_max > 0.0)) throw DomainError("r_max must be > 0");
    if (grid.points < 2000) throw DomainError("radial grid needs at least 2000 points");
    if (potential.empty()) throw DomainError("radial oracle needs at least one potential term");
    for (const auto& term : potential) {
        if (is_kinetic(term)) throw DomainError("radial oracle potential cannot be a kinetic kind");
        validate_term(term);
    }

    const auto coarse = discretise(mu, potential, grid.r_max, grid.points);
    const auto fine = discretise(mu, potential, grid.r_max, 2 * grid.points + 1);
    const double e_coarse = lowest_eigenvalue(coarse);
    const double e_fine = lowest_eigenvalue(fine);

    double v_edge = 0.0;
    for (const auto& term : potential) v_edge += term_value(term, grid.r_max);
    if (e_fine >= v_edge) throw UnboundSpectrumError("no level below the potential at r_max; the system does not bind");

    const auto u = lowest_eigenvector(fine, e_fine);
    const std::size_t tail_start = u.size() - u.size() / 20;
    double tail = 0.0;
    for (std::size_t i = tail_start; i < u.size(); ++i) tail = std::max(tail, std::abs(u[i]));
    if (tail > 1e-8) throw DomainError("wavefunction tail at r_max exceeds 1e-8 of its peak; enlarge r_max");

    return {(4.0 * e_fine - e_coarse) / 3.0, e_coarse, e_fine, tail};
}

double ground_energy(double mu, std::span<const TermKind> potential, RadialGrid grid) {
    return radial_ground_state(mu, potential, grid).energy;
}

double ground_energy(double mu, const TermKind& potential, RadialGrid grid) {
    return ground_energy(mu, std::span<const TermKind>(&potential, 1), grid);
}

} // namespace envelope
