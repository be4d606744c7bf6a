#pragma once

#include <vector>

#include "seshadri/ratmat.hpp"
#include "seshadri/rational.hpp"

namespace seshadri::interp {

/// k points of P^n with exact rational homogeneous coordinates. Each point
/// carries a designated affine chart (the coordinate of largest absolute
/// value, ties to the lowest index) fixing local coordinates y_1..y_n: the
/// remaining homogeneous coordinates in ascending index order.
struct PointConfiguration {
    int ambient_dim = 2;
    std::vector<std::vector<Rat>> points;
    long seed = 0;
    std::vector<int> charts;

    int count() const { return static_cast<int>(points.size()); }

    /// Validates pairwise distinctness and assigns charts.
    static PointConfiguration from_points(int ambient_dim,
                                          std::vector<std::vector<Rat>> pts,
                                          long seed = 0);

    /// Seeded configuration with integer coordinates in [-10^6, 10^6].
    /// Genericity is never assumed; callers certify it through the rank
    /// conditions of each computation.
    static PointConfiguration random(int ambient_dim, int k, unsigned long seed);

    /// Configuration restricted to the first `count` points.
    PointConfiguration prefix(int count) const;
};

/// Graded-lex exponent vectors of total degree d in n+1 variables
/// (descending lex within the degree); length binom(d+n, n).
std::vector<std::vector<int>> monomial_basis(int n, int d);

/// All exponent vectors of total degree exactly deg in nvars variables,
/// descending lex. Used for jet targets and exceptional coordinates.
std::vector<std::vector<int>> homogeneous_exponents(int nvars, int deg);

/// Taylor coefficient of y^alpha at point `point` (in its chart) of the
/// degree-d form with coordinates `form` over monomial_basis(n, d).
Rat jet_coefficient(const PointConfiguration& pts, int point,
                    const std::vector<int>& alpha, int d,
                    const std::vector<Rat>& form);

/// Vanishing order of a nonzero form at a point; throws ZeroSectionError on
/// the zero form.
int vanishing_order(const PointConfiguration& pts, int point, int d,
                    const std::vector<Rat>& form);

/// Matrix of Taylor-coefficient functionals: one row per (point, jet alpha)
/// with |alpha| < mult_requirements[i], grouped by point, ordered by jet
/// degree then graded-lex. Kernel = forms of degree d vanishing to order
/// >= mult_requirements[i] at each point.
RatMat conditions_matrix(const PointConfiguration& pts, int d,
                         const std::vector<int>& mult_requirements);

struct LinearSystem {
    int ambient_dim = 2;
    int degree = 0;
    std::vector<int> mult_requirements;
    RatMat matrix;
    std::vector<std::vector<Rat>> kernel_basis;

    int h0() const { return static_cast<int>(kernel_basis.size()); }
};

LinearSystem linear_system(const PointConfiguration& pts, int d,
                           const std::vector<int>& mult_requirements);

int h0_linear_system(const PointConfiguration& pts, int d,
                     const std::vector<int>& mult_requirements);

struct EvaluationVerdict {
    bool surjective = false;
    int corank = 0;
};

/// Surjectivity of the jet-evaluation map sending degree-d forms to the
/// direct sum of jets of order <= m_i at P_i.
EvaluationVerdict evaluation_surjective(const PointConfiguration& pts, int d,
                                        const std::vector<int>& mults);

struct JetLabel {
    int point = 0;
    std::vector<int> alpha;

    int degree() const;
};

/// Basis of degree-d forms split by vanishing behaviour: b0 vanishes to
/// order >= m_i + 1 everywhere; b[i][j] realizes the single monomial jet
/// jet_labels[i][j] at P_i and the zero jet at the other points; b_tilde[i]
/// indexes the members of b[i] whose jet has degree exactly m_i.
struct SectionBasisSplit {
    int ambient_dim = 2;
    int degree = 0;
    std::vector<int> mults;
    std::vector<std::vector<Rat>> b0;
    std::vector<std::vector<std::vector<Rat>>> b;
    std::vector<std::vector<JetLabel>> jet_labels;
    std::vector<std::vector<int>> b_tilde;

    int points() const { return static_cast<int>(mults.size()); }
    int total_size() const;
};

/// Requires evaluation_surjective; throws SurjectivityRequiredError
/// otherwise. Both cardinality invariants are asserted on the result.
SectionBasisSplit basis_split(const PointConfiguration& pts, int d,
                              const std::vector<int>& mults);

/// b0 together with b_tilde[j] for j <= i and the full b[j] for j > i
/// (1-based i): a basis of the system with mult >= m_j imposed at the first
/// i points.
std::vector<std::vector<Rat>> select_subbasis_for_blowup(
    const SectionBasisSplit& split, int i);

}  // namespace seshadri::interp
