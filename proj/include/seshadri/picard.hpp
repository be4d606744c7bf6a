#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri::picard {

/// Class d*H - sum_i m_i E_i on the blow-up of P^n at k points, rational
/// coefficients. The intersection form is implemented for n = 2 only.
struct DivisorClass {
    Rat degree;
    std::vector<Rat> mults;
    int ambient_dim = 2;

    int points() const { return static_cast<int>(mults.size()); }
};

/// Integral curve class d*H - sum_i m_i E_i. Plane-curve classes have
/// degree >= 1 and nonnegative mults; the exceptional curve E_i is encoded
/// as degree 0 with a single mult of -1 (its divisor-class coordinates).
struct CurveClass {
    long degree = 0;
    std::vector<long> mults;
    std::string label;

    DivisorClass as_divisor() const;
    static CurveClass exceptional(int k, int i);
    long mult_sum() const;
};

/// Intersection number on Bl_k(P^2): a.d*b.d - sum a.m[i]*b.m[i].
Rat intersect(const DivisorClass& a, const DivisorClass& b);

/// Upper bound on the Seshadri constant contributed by c:
/// (L.degree * c.degree) / sum(c.mults). L must have all mults zero.
Rat seshadri_ratio(const DivisorClass& L, const CurveClass& c);

/// Quadratic Cremona transform based at points i, j, l. Involutive, preserves
/// the intersection form and the canonical class.
DivisorClass cremona(const DivisorClass& c, int i, int j, int l);
CurveClass cremona(const CurveClass& c, int i, int j, int l);

struct CremonaStep {
    int i, j, l;
};

/// Why a class is nef. For k <= 8 the certificate is the Cremona word
/// bringing the class to standard form (degree at least the three largest
/// mults) with nonnegative entries; for k >= 9 only the absence of
/// obstructions up to a degree bound is certified.
struct NefCertificate {
    enum class Kind { direct, cremona_reduction, obstruction_search };
    Kind kind = Kind::direct;
    std::vector<CremonaStep> word;
    std::optional<DivisorClass> reduced;
    int degree_bound = 0;
};

struct NefResult {
    enum class Verdict { nef, not_nef, unknown_up_to };
    Verdict verdict;
    std::optional<NefCertificate> certificate;  // nef
    std::optional<CurveClass> witness;          // not_nef
    int degree_bound = 0;                       // unknown_up_to

    bool is_nef() const { return verdict == Verdict::nef; }
    bool is_not_nef() const { return verdict == Verdict::not_nef; }
};

/// Nef test at k general points. Exact for k <= 8 (Cremona reduction with
/// witness transport); for k >= 9 searches integral candidate classes of
/// degree <= degree_bound and reports the first (lexicographically least)
/// violator or unknown_up_to.
NefResult is_nef_general(const DivisorClass& c, int degree_bound = 20);

struct SeshadriBounds {
    Rat lower;
    Rat upper;
    NefCertificate lower_witness;
    CurveClass upper_witness;
    bool exact = false;

    /// True when the lower bound rests on an obstruction search only.
    bool conditional() const {
        return lower_witness.kind == NefCertificate::Kind::obstruction_search;
    }
};

/// Multipoint Seshadri constant of O(1) on P^2 at k general points, uniform
/// weights. Exact for k <= 8; certified bracket for k >= 9.
SeshadriBounds seshadri_constant_general(int k, int degree_bound = 20);

/// Lemma-style closure check: given nef c and 0 < c'.mults <= c.mults,
/// returns whether c' avoids every obstruction found (never false for
/// general points when the precondition holds).
bool downward_closure_check(const DivisorClass& c, const DivisorClass& cprime,
                            int degree_bound = 20);

DivisorClass canonical_class(int k);
DivisorClass uniform_class(int k, const Rat& eps);

}  // namespace seshadri::picard
