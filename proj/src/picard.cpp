#include "seshadri/picard.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seshadri/errors.hpp"

namespace seshadri::picard {

namespace {

void check_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.ambient_dim != 2 || b.ambient_dim != 2)
        throw DimensionMismatchError("intersection form implemented for ambient_dim 2");
    if (a.points() != b.points())
        throw DimensionMismatchError("classes live on blow-ups at different point counts");
}

void check_cremona_indices(int k, int i, int j, int l) {
    if (k < 3) throw InvalidTransformError("Cremona transform needs k >= 3");
    if (i == j || j == l || i == l)
        throw InvalidTransformError("Cremona indices must be distinct");
    if (i < 0 || j < 0 || l < 0 || i >= k || j >= k || l >= k)
        throw InvalidTransformError("Cremona index out of range");
}

std::string witness_label(const CurveClass& c) {
    if (c.degree == 0) {
        for (size_t i = 0; i < c.mults.size(); ++i)
            if (c.mults[i] == -1) return "E" + std::to_string(i + 1);
        return "";
    }
    std::vector<long> pos;
    for (long m : c.mults) pos.push_back(m);
    const long npts = std::count_if(pos.begin(), pos.end(), [](long m) { return m > 0; });
    std::ostringstream os;
    switch (c.degree) {
        case 1: os << "line"; break;
        case 2: os << "conic"; break;
        case 3: os << "cubic"; break;
        case 4: os << "quartic"; break;
        case 5: os << "quintic"; break;
        case 6: os << "sextic"; break;
        default: os << "degree-" << c.degree << " curve"; break;
    }
    os << " through " << npts << " points";
    return os.str();
}

}  // namespace

DivisorClass CurveClass::as_divisor() const {
    DivisorClass d;
    d.degree = degree;
    d.mults.assign(mults.begin(), mults.end());
    return d;
}

CurveClass CurveClass::exceptional(int k, int i) {
    CurveClass c;
    c.degree = 0;
    c.mults.assign(k, 0);
    c.mults[i] = -1;
    c.label = "E" + std::to_string(i + 1);
    return c;
}

long CurveClass::mult_sum() const {
    return std::accumulate(mults.begin(), mults.end(), 0L);
}

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
    check_same_lattice(a, b);
    Rat r = a.degree * b.degree;
    for (int i = 0; i < a.points(); ++i) r -= a.mults[i] * b.mults[i];
    return r;
}

Rat seshadri_ratio(const DivisorClass& L, const CurveClass& c) {
    for (const Rat& m : L.mults)
        if (m != 0) throw PreconditionError("seshadri_ratio expects a pullback class (zero mults)");
    const long s = c.mult_sum();
    if (s <= 0) throw NotAnObstructionError("curve class has no multiplicity at the points");
    Rat r = L.degree * c.degree;
    r /= s;
    return r;
}

DivisorClass cremona(const DivisorClass& c, int i, int j, int l) {
    check_cremona_indices(c.points(), i, j, l);
    DivisorClass out = c;
    const Rat t = c.degree - c.mults[i] - c.mults[j] - c.mults[l];
    out.degree = c.degree + t;
    out.mults[i] = c.mults[i] + t;
    out.mults[j] = c.mults[j] + t;
    out.mults[l] = c.mults[l] + t;
    return out;
}

CurveClass cremona(const CurveClass& c, int i, int j, int l) {
    check_cremona_indices(static_cast<int>(c.mults.size()), i, j, l);
    CurveClass out = c;
    const long t = c.degree - c.mults[i] - c.mults[j] - c.mults[l];
    out.degree = c.degree + t;
    out.mults[i] = c.mults[i] + t;
    out.mults[j] = c.mults[j] + t;
    out.mults[l] = c.mults[l] + t;
    out.label.clear();
    return out;
}

DivisorClass canonical_class(int k) {
    DivisorClass d;
    d.degree = -3;
    d.mults.assign(k, Rat(-1));
    return d;
}

DivisorClass uniform_class(int k, const Rat& eps) {
    DivisorClass d;
    d.degree = 1;
    d.mults.assign(k, eps);
    return d;
}

namespace {

struct Reduction {
    DivisorClass reduced;
    std::vector<CremonaStep> word;
};

// Repeated Cremona at the three largest mults (ties to lowest index) until
// the degree stops dropping. Terminates: the Weyl orbit is finite and the
// degree strictly decreases at every step.
Reduction cremona_reduce(const DivisorClass& c) {
    Reduction r{c, {}};
    const int k = c.points();
    for (;;) {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const int cmp_ab = cmp(r.reduced.mults[a], r.reduced.mults[b]);
            if (cmp_ab != 0) return cmp_ab > 0;
            return a < b;
        });
        int i = order[0], j = order[1], l = order[2];
        if (i > j) std::swap(i, j);
        if (j > l) std::swap(j, l);
        if (i > j) std::swap(i, j);
        const Rat t = r.reduced.degree - r.reduced.mults[i] - r.reduced.mults[j] -
                      r.reduced.mults[l];
        if (t >= 0) return r;
        r.reduced = cremona(r.reduced, i, j, l);
        r.word.push_back({i, j, l});
    }
}

// Pairing of the reduced class against E_i equals the pairing of the input
// against the transported class, so transporting E_argmin recovers an
// explicit violating curve in the original coordinates.
CurveClass transport_exceptional(int k, int index, const std::vector<CremonaStep>& word) {
    CurveClass c = CurveClass::exceptional(k, index);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        c = cremona(c, it->i, it->j, it->l);
    c.label = witness_label(c);
    return c;
}

NefResult nef_result(NefCertificate cert) {
    NefResult r;
    r.verdict = NefResult::Verdict::nef;
    r.certificate = std::move(cert);
    return r;
}

NefResult not_nef_result(CurveClass witness) {
    NefResult r;
    r.verdict = NefResult::Verdict::not_nef;
    r.witness = std::move(witness);
    return r;
}

// k <= 2: the cone is spanned by E_i together with the ruling H - E_1
// (k = 1) or the line H - E_1 - E_2 (k = 2); no reduction is available.
NefResult nef_small_k(const DivisorClass& c) {
    const int k = c.points();
    struct Check {
        Rat value;
        CurveClass witness;
    };
    std::vector<Check> checks;
    if (k == 0) {
        CurveClass line;
        line.degree = 1;
        line.label = "line";
        checks.push_back({c.degree, line});
    }
    for (int i = 0; i < k; ++i)
        checks.push_back({c.mults[i], CurveClass::exceptional(k, i)});
    if (k == 1) {
        CurveClass fiber;
        fiber.degree = 1;
        fiber.mults = {1};
        fiber.label = "line through P1";
        checks.push_back({c.degree - c.mults[0], fiber});
    } else if (k == 2) {
        CurveClass line;
        line.degree = 1;
        line.mults = {1, 1};
        line.label = "line through P1,P2";
        checks.push_back({c.degree - c.mults[0] - c.mults[1], line});
    }
    int worst = -1;
    for (size_t i = 0; i < checks.size(); ++i) {
        if (checks[i].value >= 0) continue;
        if (worst < 0 || checks[i].value < checks[worst].value) worst = static_cast<int>(i);
    }
    if (worst >= 0) return not_nef_result(checks[worst].witness);
    NefCertificate cert;
    cert.kind = NefCertificate::Kind::direct;
    return nef_result(std::move(cert));
}

// Candidate obstructions for k >= 9: integral classes of degree <= bound,
// non-increasing mults aligned with the mults of c sorted descending,
// subject to C^2 >= -1, arithmetic genus >= 0 and nonnegative virtual
// dimension (C^2 - K.C)/2 >= 0. Enumeration is lexicographic per degree, so
// the first violator found is the lexicographically least one.
struct CandidateSearch {
    const DivisorClass& c;
    int k;
    std::vector<int> point_order;  // indices of c.mults sorted descending
    std::vector<Rat> sorted_mults;
    std::vector<long> stack;

    explicit CandidateSearch(const DivisorClass& cls) : c(cls), k(cls.points()) {
        point_order.resize(k);
        std::iota(point_order.begin(), point_order.end(), 0);
        std::sort(point_order.begin(), point_order.end(), [&](int a, int b) {
            const int r = cmp(c.mults[a], c.mults[b]);
            if (r != 0) return r > 0;
            return a < b;
        });
        for (int i : point_order) sorted_mults.push_back(c.mults[i]);
    }

    std::optional<CurveClass> violator_up_to(int degree_bound) {
        for (long d = 1; d <= degree_bound; ++d) {
            stack.clear();
            if (auto w = descend(d, 0, 0, 0)) return w;
        }
        return std::nullopt;
    }

    std::optional<CurveClass> descend(long d, int pos, long s, long s2) {
        if (s2 > d * d + 1) return std::nullopt;
        if (pos == k) return leaf(d, s, s2);
        const long cap = pos == 0 ? d : stack[pos - 1];
        for (long m = 0; m <= cap; ++m) {
            stack.push_back(m);
            auto w = descend(d, pos + 1, s + m, s2 + m * m);
            stack.pop_back();
            if (w) return w;
        }
        return std::nullopt;
    }

    std::optional<CurveClass> leaf(long d, long s, long s2) {
        if (s == 0) return std::nullopt;
        const long self = d * d - s2;
        if (self < -1) return std::nullopt;
        const long kc = -3 * d + s;
        if (2 + self + kc < 0) return std::nullopt;   // p_a >= 0
        if (self - kc < 0) return std::nullopt;       // virtual dim >= 0
        Rat pairing = Rat(d) * c.degree;
        for (int i = 0; i < k; ++i) pairing -= sorted_mults[i] * stack[i];
        if (pairing >= 0) return std::nullopt;
        CurveClass w;
        w.degree = d;
        w.mults.assign(k, 0);
        for (int i = 0; i < k; ++i) w.mults[point_order[i]] = stack[i];
        w.label = witness_label(w);
        return w;
    }
};

}  // namespace

NefResult is_nef_general(const DivisorClass& c, int degree_bound) {
    if (degree_bound < 0) throw InvalidParameterError("degree_bound must be nonnegative");
    if (c.ambient_dim != 2)
        throw DimensionMismatchError("nef test implemented for ambient_dim 2");
    const int k = c.points();

    if (k <= 2) return nef_small_k(c);

    if (k <= 8) {
        Reduction red = cremona_reduce(c);
        int argmin = 0;
        for (int i = 1; i < k; ++i)
            if (red.reduced.mults[i] < red.reduced.mults[argmin]) argmin = i;
        if (red.reduced.mults[argmin] < 0)
            return not_nef_result(transport_exceptional(k, argmin, red.word));
        // Standard form with nonnegative entries pairs nonnegatively against
        // every (-1)-class: split the class into point triples.
        NefCertificate cert;
        cert.kind = NefCertificate::Kind::cremona_reduction;
        cert.word = std::move(red.word);
        cert.reduced = std::move(red.reduced);
        return nef_result(std::move(cert));
    }

    // k >= 9: exceptional and line checks first, then the bounded search.
    for (int i = 0; i < k; ++i)
        if (c.mults[i] < 0) return not_nef_result(CurveClass::exceptional(k, i));
    if (c.degree < 0) {
        CurveClass line;
        line.degree = 1;
        line.mults.assign(k, 0);
        line.label = "line";
        return not_nef_result(line);
    }
    CandidateSearch search(c);
    if (auto w = search.violator_up_to(degree_bound)) return not_nef_result(*w);
    NefResult r;
    r.verdict = NefResult::Verdict::unknown_up_to;
    r.degree_bound = degree_bound;
    return r;
}

SeshadriBounds seshadri_constant_general(int k, int degree_bound) {
    if (k < 1) throw InvalidParameterError("k must be positive");
    if (degree_bound < 0) throw InvalidParameterError("degree_bound must be nonnegative");

    // The line through P1 always caps the constant at 1, so the probe loop
    // can start from a witnessed upper bound and walk down.
    Rat lo = 0;
    NefCertificate lo_cert;
    lo_cert.kind = NefCertificate::Kind::direct;
    CurveClass hi_witness;
    hi_witness.degree = 1;
    hi_witness.mults.assign(k, 0);
    hi_witness.mults[0] = 1;
    hi_witness.label = "line through P1";
    Rat hi = 1;

    bool lo_conditional = false;
    for (int iter = 0; iter < 100000; ++iter) {
        if (lo == hi) break;
        const Rat t = hi;  // probing the cap either certifies it or lowers it
        NefResult r = is_nef_general(uniform_class(k, t), degree_bound);
        switch (r.verdict) {
            case NefResult::Verdict::nef:
                lo = t;
                lo_cert = *r.certificate;
                lo_conditional = false;
                break;
            case NefResult::Verdict::unknown_up_to: {
                lo = t;
                lo_cert = NefCertificate{};
                lo_cert.kind = NefCertificate::Kind::obstruction_search;
                lo_cert.degree_bound = degree_bound;
                lo_conditional = true;
                break;
            }
            case NefResult::Verdict::not_nef: {
                const Rat ratio = seshadri_ratio(uniform_class(k, 0), *r.witness);
                hi = ratio;
                hi_witness = *r.witness;
                break;
            }
        }
    }

    SeshadriBounds b;
    b.lower = lo;
    b.upper = hi;
    b.lower_witness = lo_cert;
    b.upper_witness = hi_witness;
    b.exact = (lo == hi) && !lo_conditional;
    return b;
}

bool downward_closure_check(const DivisorClass& c, const DivisorClass& cprime,
                            int degree_bound) {
    if (c.points() != cprime.points())
        throw PreconditionError("classes must share the point count");
    NefResult base = is_nef_general(c, degree_bound);
    if (!base.is_nef())
        throw PreconditionError("downward closure requires a nef base class");
    for (int i = 0; i < c.points(); ++i) {
        if (cprime.mults[i] <= 0 || cprime.mults[i] > c.mults[i])
            throw PreconditionError("scaled mults must satisfy 0 < m' <= m");
    }
    if (cprime.degree != c.degree)
        throw PreconditionError("scaled class must keep the pullback degree");
    return !is_nef_general(cprime, degree_bound).is_not_nef();
}

}  // namespace seshadri::picard
