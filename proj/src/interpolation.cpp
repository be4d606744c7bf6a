#include "seshadri/interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "seshadri/errors.hpp"

namespace seshadri::interp {

namespace {

bool projectively_equal(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    // p ~ q iff all 2x2 minors vanish.
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] * q[j] != p[j] * q[i]) return false;
    return true;
}

int pick_chart(const std::vector<Rat>& p) {
    int best = -1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (best < 0 || cmp(abs(p[i]), abs(p[best])) > 0) best = static_cast<int>(i);
    }
    return best;
}

}  // namespace

PointConfiguration PointConfiguration::from_points(int ambient_dim,
                                                   std::vector<std::vector<Rat>> pts,
                                                   long seed) {
    if (ambient_dim < 1) throw InvalidParameterError("ambient_dim must be positive");
    PointConfiguration cfg;
    cfg.ambient_dim = ambient_dim;
    cfg.seed = seed;
    for (auto& p : pts) {
        if (static_cast<int>(p.size()) != ambient_dim + 1)
            throw InvalidConfigurationError("point needs n+1 homogeneous coordinates");
        const int chart = pick_chart(p);
        if (chart < 0) throw InvalidConfigurationError("point has all-zero coordinates");
        cfg.charts.push_back(chart);
        cfg.points.push_back(std::move(p));
    }
    for (int i = 0; i < cfg.count(); ++i)
        for (int j = i + 1; j < cfg.count(); ++j)
            if (projectively_equal(cfg.points[i], cfg.points[j]))
                throw InvalidConfigurationError("coincident points P" + std::to_string(i + 1) +
                                                ", P" + std::to_string(j + 1));
    return cfg;
}

PointConfiguration PointConfiguration::random(int ambient_dim, int k, unsigned long seed) {
    // Raw mt19937_64 output reduced mod the range keeps draws identical
    // across platforms (distributions are not portable).
    std::mt19937_64 rng(seed);
    auto draw = [&]() -> long {
        const unsigned long span = 2000001;  // [-10^6, 10^6]
        return static_cast<long>(rng() % span) - 1000000;
    };
    std::vector<std::vector<Rat>> pts;
    for (int i = 0; i < k; ++i) {
        for (int attempt = 0;; ++attempt) {
            std::vector<Rat> p;
            for (int c = 0; c <= ambient_dim; ++c) p.emplace_back(draw());
            const bool zero = std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; });
            bool clash = false;
            for (const auto& q : pts)
                if (!zero && projectively_equal(p, q)) clash = true;
            if (!zero && !clash) {
                pts.push_back(std::move(p));
                break;
            }
            if (attempt > 0)
                throw InvalidConfigurationError("seeded configuration degenerate twice");
        }
    }
    PointConfiguration cfg = from_points(ambient_dim, std::move(pts), static_cast<long>(seed));
    cfg.seed = static_cast<long>(seed);
    return cfg;
}

PointConfiguration PointConfiguration::prefix(int count) const {
    if (count < 0 || count > this->count()) throw IndexError("prefix length out of range");
    PointConfiguration cfg;
    cfg.ambient_dim = ambient_dim;
    cfg.seed = seed;
    cfg.points.assign(points.begin(), points.begin() + count);
    cfg.charts.assign(charts.begin(), charts.begin() + count);
    return cfg;
}

std::vector<std::vector<int>> homogeneous_exponents(int nvars, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // Descending lex: fill left to right, largest leading exponent first.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

std::vector<std::vector<int>> monomial_basis(int n, int d) {
    if (n < 1) throw InvalidParameterError("n must be positive");
    if (d < 0) throw InvalidParameterError("degree must be nonnegative");
    return homogeneous_exponents(n + 1, d);
}

namespace {

// Normalized affine coordinates of the point in its chart: the chart entry
// becomes 1, the others p_j / p_chart in ascending index order.
std::vector<Rat> local_coords(const PointConfiguration& pts, int point) {
    const auto& p = pts.points[point];
    const int chart = pts.charts[point];
    std::vector<Rat> loc;
    for (size_t j = 0; j < p.size(); ++j) {
        if (static_cast<int>(j) == chart) continue;
        loc.push_back(p[j] / p[chart]);
    }
    return loc;
}

// Taylor coefficient of y^alpha of the dehomogenized monomial x^expo at the
// point: prod_j binom(e_j, a_j) loc_j^(e_j - a_j) over the local variables.
Rat monomial_jet_coeff(const std::vector<int>& expo, const std::vector<int>& alpha,
                       const std::vector<Rat>& loc, int chart) {
    Rat coeff(1);
    int li = 0;
    for (size_t j = 0; j < expo.size(); ++j) {
        if (static_cast<int>(j) == chart) continue;
        const int e = expo[j];
        const int a = alpha[li];
        if (a > e) return Rat(0);
        coeff *= binomial(e, a);
        if (coeff == 0) return coeff;
        coeff *= rat_pow(loc[li], e - a);
        ++li;
    }
    return coeff;
}

std::vector<Rat> jet_row(const PointConfiguration& pts, int point,
                         const std::vector<int>& alpha, int d) {
    const auto basis = monomial_basis(pts.ambient_dim, d);
    const auto loc = local_coords(pts, point);
    const int chart = pts.charts[point];
    std::vector<Rat> row;
    row.reserve(basis.size());
    for (const auto& expo : basis)
        row.push_back(monomial_jet_coeff(expo, alpha, loc, chart));
    return row;
}

}  // namespace

Rat jet_coefficient(const PointConfiguration& pts, int point,
                    const std::vector<int>& alpha, int d,
                    const std::vector<Rat>& form) {
    if (point < 0 || point >= pts.count()) throw IndexError("point index out of range");
    const auto row = jet_row(pts, point, alpha, d);
    if (row.size() != form.size())
        throw DimensionMismatchError("form length does not match monomial basis");
    Rat v(0);
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0 && form[i] != 0) v += row[i] * form[i];
    return v;
}

int vanishing_order(const PointConfiguration& pts, int point, int d,
                    const std::vector<Rat>& form) {
    const bool zero = std::all_of(form.begin(), form.end(), [](const Rat& c) { return c == 0; });
    if (zero) throw ZeroSectionError("vanishing order of the zero form");
    for (int r = 0; r <= d; ++r) {
        for (const auto& alpha : homogeneous_exponents(pts.ambient_dim, r))
            if (jet_coefficient(pts, point, alpha, d, form) != 0) return r;
    }
    // A nonzero degree-d form has order <= d in any chart.
    throw InvariantViolationError("nonzero form with vanishing order beyond its degree");
}

RatMat conditions_matrix(const PointConfiguration& pts, int d,
                         const std::vector<int>& mult_requirements) {
    if (d < 0) throw InvalidParameterError("degree must be nonnegative");
    if (static_cast<int>(mult_requirements.size()) != pts.count())
        throw DimensionMismatchError("one multiplicity per point required");
    for (int m : mult_requirements)
        if (m < 1) throw InvalidParameterError("mult requirements must be >= 1");

    const int n = pts.ambient_dim;
    RatMat mat(0, 0);
    for (int i = 0; i < pts.count(); ++i) {
        for (int r = 0; r < mult_requirements[i]; ++r)
            for (const auto& alpha : homogeneous_exponents(n, r))
                mat.append_row(jet_row(pts, i, alpha, d));
    }
    if (mat.rows() == 0) mat = RatMat(0, static_cast<int>(monomial_basis(n, d).size()));
    return mat;
}

LinearSystem linear_system(const PointConfiguration& pts, int d,
                           const std::vector<int>& mult_requirements) {
    LinearSystem sys;
    sys.ambient_dim = pts.ambient_dim;
    sys.degree = d;
    sys.mult_requirements = mult_requirements;
    sys.matrix = conditions_matrix(pts, d, mult_requirements);
    sys.kernel_basis = nullspace(sys.matrix);
    return sys;
}

int h0_linear_system(const PointConfiguration& pts, int d,
                     const std::vector<int>& mult_requirements) {
    return linear_system(pts, d, mult_requirements).h0();
}

EvaluationVerdict evaluation_surjective(const PointConfiguration& pts, int d,
                                        const std::vector<int>& mults) {
    if (static_cast<int>(mults.size()) != pts.count())
        throw DimensionMismatchError("one multiplicity per point required");
    for (int m : mults)
        if (m < 0) throw InvalidParameterError("mults must be nonnegative");
    const int n = pts.ambient_dim;
    std::vector<int> orders;
    long target = 0;
    for (int m : mults) {
        orders.push_back(m + 1);
        target += binomial_l(m + n, n);
    }
    const int rk = rank(conditions_matrix(pts, d, orders));
    EvaluationVerdict v;
    v.surjective = (rk == target);
    v.corank = static_cast<int>(target - rk);
    return v;
}

int JetLabel::degree() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

int SectionBasisSplit::total_size() const {
    int t = static_cast<int>(b0.size());
    for (const auto& bi : b) t += static_cast<int>(bi.size());
    return t;
}

SectionBasisSplit basis_split(const PointConfiguration& pts, int d,
                              const std::vector<int>& mults) {
    const EvaluationVerdict v = evaluation_surjective(pts, d, mults);
    if (!v.surjective)
        throw SurjectivityRequiredError("jet evaluation deficient (corank " +
                                        std::to_string(v.corank) + "); increase d");
    const int n = pts.ambient_dim;
    const int k = pts.count();

    std::vector<int> orders;
    for (int m : mults) orders.push_back(m + 1);
    const RatMat mat = conditions_matrix(pts, d, orders);

    SectionBasisSplit split;
    split.ambient_dim = n;
    split.degree = d;
    split.mults = mults;
    split.b0 = nullspace(mat);
    split.b.resize(k);
    split.jet_labels.resize(k);
    split.b_tilde.resize(k);

    RatSolver solver(mat);
    int row = 0;
    for (int i = 0; i < k; ++i) {
        for (int r = 0; r <= mults[i]; ++r) {
            for (const auto& alpha : homogeneous_exponents(n, r)) {
                std::vector<Rat> target(mat.rows(), Rat(0));
                target[row] = 1;
                auto f = solver.solve(target);
                if (!f)
                    throw InvariantViolationError("surjective evaluation with unsolvable jet");
                if (r == mults[i])
                    split.b_tilde[i].push_back(static_cast<int>(split.b[i].size()));
                split.b[i].push_back(std::move(*f));
                split.jet_labels[i].push_back(JetLabel{i, alpha});
                ++row;
            }
        }
    }

    // Cardinalities forced by exactness of the jet sequence.
    const long total = binomial_l(d + n, n);
    if (split.total_size() != total)
        throw InvariantViolationError("basis split has wrong cardinality");
    for (int i = 0; i < k; ++i) {
        if (static_cast<long>(split.b[i].size()) != binomial_l(mults[i] + n, n) ||
            static_cast<long>(split.b_tilde[i].size()) != binomial_l(mults[i] + n - 1, n - 1))
            throw InvariantViolationError("jet block has wrong cardinality");
    }
    return split;
}

std::vector<std::vector<Rat>> select_subbasis_for_blowup(
    const SectionBasisSplit& split, int i) {
    if (i < 0 || i > split.points()) throw IndexError("stage index out of range");
    std::vector<std::vector<Rat>> out = split.b0;
    for (int j = 0; j < split.points(); ++j) {
        if (j < i) {
            for (int idx : split.b_tilde[j]) out.push_back(split.b[j][idx]);
        } else {
            for (const auto& f : split.b[j]) out.push_back(f);
        }
    }
    return out;
}

}  // namespace seshadri::interp
