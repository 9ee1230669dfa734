#pragma once

#include "cbethe/dvf.hpp"
#include "cbethe/evaluate.hpp"
#include "cbethe/rootdata.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cbethe {

// Denominator factor Q_color(u + shift): poles at u = u_k^{(color)} - shift.
struct PoleSite {
    int color = 1;
    Rational shift;
    friend bool operator==(const PoleSite&, const PoleSite&) = default;
};

std::vector<PoleSite> scan_poles(const QExpr& e);

// Shape of the sampled root assignments: N_a roots per color, N inhomogeneities.
struct SampleShape {
    int roots_per_color = 2;
    int inhomogeneities = 2;
};

struct CancellationReport {
    PoleSite site;
    std::vector<int> participants;              // monomial indices in the normalized expression
    std::vector<std::pair<int, int>> pairs;     // (X, Y) with Res Y / Res X = R (or 1/R)
    std::vector<int> vanishing;                 // participants whose residue is identically 0
    std::vector<int> leftovers;
    bool group_pass = false;                    // leftovers certified as one group
    bool pass = false;
    std::string note;
};

CancellationReport exact_cancellation_check(const QExpr& e, const AlgebraId& g, Vacuum vacuum,
                                            const PoleSite& site, std::uint64_t seed, int samples,
                                            SampleShape shape = {});

struct NumericResidue {
    double total = 0;     // |sum of residues|
    double max_term = 0;  // largest single |residue|
    double relative = 0;
    int restarts = 0;
    bool pass = false;
};

inline constexpr double kNumericTolerance = 1e-8;

// Newton-solves the single BAE R(u_1^{(b)}) = -1 with all other roots random,
// then sums the residues at the site.
NumericResidue numeric_total_residue(const QExpr& e, const AlgebraId& g, Vacuum vacuum, const PoleSite& site,
                                     std::uint64_t seed, PhiMode phi = {}, SampleShape shape = {});

enum class VerifyMode { Exact, Numeric, Both };

struct SiteReport {
    PoleSite site;
    std::optional<CancellationReport> exact;
    std::optional<NumericResidue> numeric;
    bool pass = false;
};

struct DvfReport {
    std::string check;
    VerifyMode mode = VerifyMode::Exact;
    std::vector<SiteReport> sites;
    // Deformed family only: the Q_1(u + c/2 - s + 1) site of the prefactor.
    std::optional<bool> prefactor_divisible;
    std::optional<bool> prefactor_site_clear;
    bool pass = false;
};

DvfReport verify_dvf(const QExpr& e, const AlgebraId& g, Vacuum vacuum, VerifyMode mode, std::uint64_t seed,
                     int samples, const std::string& name = "dvf");
// Residue of the deformation prefactor's own pole, computed on the unmerged
// product, vanishes at `samples` random points.
bool prefactor_site_clear(int s, const Rational& c, std::uint64_t seed, int samples);
DvfReport verify_spec(const DvfSpec& spec, VerifyMode mode, std::uint64_t seed, int samples);

struct FixtureMatch {
    bool structural = false;
    bool sampled = false;
    bool pass = false;
};

FixtureMatch fixture_match(const Rational& c, std::uint64_t seed);

// ---- functional relations ----

struct InstanceResult {
    std::string name;
    std::string kind;  // "sampled", "structural", "recursion", "probe"
    int samples = 0;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::string id;
    std::string algebra;
    std::vector<InstanceResult> instances;
    bool pass = false;
};

// Ids: product-t1, deformed-bilinear, special-1..special-8, tsys1, tsys-a2, tsys-mid,
// tsys-even, tsys-odd, tsys-last, tsys-probe, eq-c2-1, eq-c2-2, dotfun1, dotfun2, hiro,
// vani, alta, c2-sl12. Groups: i, ii, iii, tsys, v, all.
std::vector<std::string> relation_ids(const AlgebraId& g);
std::vector<std::string> expand_relation(const std::string& id_or_group, const AlgebraId& g);
RelationReport relation_check(const std::string& id, const AlgebraId& g, std::uint64_t seed, int samples);

// Relative size of the T-system numerator at zeros of its divisor.
inline constexpr double kProbeTolerance = 1e-6;

using PointFn = std::function<Rational(const RootAssignment&, const Rational&)>;

// u -> evaluate(e, A, u + shift)
PointFn at(const QExpr& e, const Rational& shift = 0);
PointFn times(PointFn a, PointFn b);
PointFn plus(PointFn a, PointFn b);

// lhs == rhs exactly at `samples` random (roots, u) points; pole hits resample.
InstanceResult sampled_equality(const std::string& name, const AlgebraId& g, const PointFn& lhs,
                                const PointFn& rhs, std::uint64_t seed, int samples);

}  // namespace cbethe
