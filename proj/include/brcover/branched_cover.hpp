#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brcover/exact_linalg.hpp"
#include "brcover/homology_model.hpp"
#include "brcover/plumbing.hpp"

namespace brcover {

/// A component B_i of π⁻¹(B).
struct BranchComponent {
    std::string label;
    long multiplicity = 1;
    Integer euler_characteristic;
};

struct CoverSpec {
    ManifoldModel base;
    long degree = 1;
    /// The branch locus B in the base, over the base class basis.
    SmoothedSurface branch;
    std::vector<BranchComponent> components;
    bool preimage_connected = false;
    bool injective_on_preimage = false;
    /// How the cover was chosen when the construction allows several.
    std::string construction_note;

    void validate() const;
};

/// A constructed cover: the data it was built from, the resulting model and,
/// when known, the plumbing lattice carrying its spherical generators.
struct CoverBuild {
    CoverSpec spec;
    ManifoldModel cover;
    std::optional<PlumbingGraph> spherical_lattice;
    long double_points = 0;
};

// ---------------------------------------------------------------------------
// Report types

/// A pass/fail verdict, with the numbers behind it and the operation that produced them.
struct Check {
    std::string name;
    bool pass = false;
    std::string evidence;
    std::string source;
};

/// Whether a class vanishes on every installed spherical generator.
struct VanishingFinding {
    bool vanishes = false;
    std::string evidence;
    std::string source;
};

struct PairingRow {
    std::string generator;
    Rational omega;
    Integer c1;
};

using ParameterValue = std::variant<long, Rational, bool, std::string>;

struct Parameter {
    std::string name;
    ParameterValue value;
};

struct CoverReport {
    std::string family;
    std::vector<Parameter> parameters;
    Integer cover_euler;
    std::optional<std::size_t> cover_b1;
    std::optional<Integer> pi_lower_bound;
    VanishingFinding omega_vanishes_on_pi;
    VanishingFinding c1_vanishes_on_pi;
    std::vector<PairingRow> chern_pairings;
    std::vector<Check> formula_cross_checks;
    bool kaehler = false;
    std::vector<std::string> assumptions;

    bool all_pass() const;
    void add_check(std::string name, bool pass, std::string evidence, std::string source);
};

// ---------------------------------------------------------------------------
// Lifting formulas

/// ⟨[ω], π_* gen⟩, which equals ⟨[ω̃], gen⟩ for ω̃ with [ω̃] = π*[ω].
/// Throws IncompleteModelError when the generator carries no pushforward data.
Rational lift_omega_pairing(const CoverSpec& spec, const SphericalGenerator& gen);

/// ⟨c1(ω), π_* gen⟩ + Σ (1 − d_i) · (B_i · gen).
Integer lift_chern_pairing(const CoverSpec& spec, const SphericalGenerator& gen);

/// χ(X̃) = d·χ(X) − Σ (d_i − 1)·χ(B_i).
Integer riemann_hurwitz_euler(const CoverSpec& spec);

/// Lower bound on dim Π(X̃) from k smoothed double points: k(d−1) when π is
/// injective on π⁻¹(B), otherwise kd − ℓ with ℓ the number of components over
/// the double-point balls.
Integer pi_dimension_bound(long k, long d, bool injective, std::optional<long> ell = std::nullopt);

// ---------------------------------------------------------------------------
// Family builders

/// The d-fold cyclic cover of a grid base (product F1 × F2 or Kodaira–Thurston)
/// branched along the smoothed grid, with a (d−1)-sphere Milnor chain installed
/// at every double point. Throws NoSuchCoverError if the branch class is not
/// divisible by d, DomainError if the base does not carry a grid basis with
/// surfaces of genus (g1, g2).
CoverBuild build_cyclic_cover(const ManifoldModel& base, const SurfaceConfig& cfg, bool kaehler);

/// ⟨α̃1..α̃4 | α̃1⟩: H1 of the collapsed Kodaira–Thurston cover.
H1Presentation kodaira_thurston_cover_presentation(const SurfaceConfig& cfg);
std::size_t kodaira_thurston_cover_b1(const SurfaceConfig& cfg);

/// Runs every formula cross-check on a constructed cover and fills the
/// invariants and pairings of a report. Family-specific verdicts are added by callers.
CoverReport assess_cover(const CoverBuild& build, std::string family);

struct Tower {
    CoverBuild stage1;
    CoverBuild stage2;
    CoverReport stage1_report;
    CoverReport stage2_report;
    /// Label of Ŝ among the stage-2 generators.
    std::string witness_label;
};

/// Double cover X̃ of T⁴ branched over the smoothed 4-double-point grid, then a
/// d-fold cover X̂ of X̃ branched over two parallel copies of the torus T̃.
/// Throws DomainError for d < 2.
Tower build_tower7(long d);

}  // namespace brcover
