#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brcover/exact_linalg.hpp"

namespace brcover {

/// Coordinates of a 2-dimensional class over a model's named class basis.
using ClassVector = std::vector<Integer>;

/// Parameters of a grid configuration in F1 × F2 (or in a torus bundle with a
/// section): m1·d "vertical" surfaces pt × F2 and m2·d "horizontal" surfaces
/// F1 × pt. Class index 0 is horizontal, index 1 is vertical.
struct SurfaceConfig {
    long g1 = 1;
    long g2 = 1;
    long m1 = 1;
    long m2 = 1;
    long d = 2;
    /// ⟨[ω], horizontal⟩ and ⟨[ω], vertical⟩.
    std::pair<Rational, Rational> omega_areas{Rational(1), Rational(1)};

    /// Throws DomainError unless m1, m2 ≥ 1, d ≥ 2, g1, g2 ≥ 1 and both areas are positive.
    void validate() const;
    long double_points() const { return m1 * m2 * d * d; }
};

struct ImmersedComponent {
    long genus = 0;
    ClassVector homology_class;
    std::string label;
};

/// A transverse double point between two components (the same index twice
/// for a self-crossing).
struct DoublePoint {
    std::size_t first = 0;
    std::size_t second = 0;
    bool positive = true;
};

/// A generically immersed surface B*.
struct ImmersedConfig {
    std::vector<ImmersedComponent> components;
    std::vector<DoublePoint> double_points;
    /// Intersection form of the ambient class basis.
    IntMatrix ambient_pairing;

    std::size_t double_point_count() const { return double_points.size(); }
    bool all_positive() const;
    void validate() const;
};

/// The embedded surface obtained by smoothing every double point of B*.
struct SmoothedSurface {
    Integer euler_characteristic;
    std::optional<Integer> genus;  // set only when connected
    ClassVector homology_class;
    bool connected = false;
    Integer self_intersection;
};

/// A class in Π of a cover, with the pairing data its constructor knows.
struct SphericalGenerator {
    std::string label;
    Rational omega_pairing;
    Integer c1_pairing;
    /// B_i · generator, one entry per branch component of the cover.
    std::vector<Integer> branch_intersections;
    /// π_* of the class vanishes in the base.
    bool pushforward_zero = false;
    /// π_* over the base class basis, when not known to vanish.
    std::optional<ClassVector> pushforward;
};

struct H1Presentation {
    std::size_t generators = 0;
    std::vector<std::vector<long>> relators;

    std::size_t b1() const { return abelianized_b1(generators, relators); }
};

/// Homological shadow of a closed oriented 4-manifold. Only a named partial
/// class basis is kept; it suffices for every pairing evaluated here.
struct ManifoldModel {
    std::string name;
    Integer euler_characteristic;
    /// Absent when H1 of the manifold is not determined by the construction.
    std::optional<H1Presentation> h1;
    std::optional<std::size_t> h2_rank_known;
    std::vector<std::string> class_basis_labels;
    IntMatrix class_pairing;
    RationalVector omega_class;
    RationalVector c1_class;
    std::vector<SphericalGenerator> spherical_generators;
    bool pi2_trivial = false;
    /// [ω] vanishes on all of Π (known a priori, not only on the stored generators).
    bool omega_aspherical = false;
    bool kaehler = false;

    std::optional<std::size_t> b1() const;
    /// Throws DimensionError when basis, pairing and class lengths disagree.
    void validate() const;
};

/// m1·d vertical and m2·d horizontal surfaces, every vertical crossing every
/// horizontal once positively.
ImmersedConfig grid_immersion(const SurfaceConfig& cfg);

SmoothedSurface smooth_double_points(const ImmersedConfig& b);

/// (m2·d, m1·d) in the (horizontal, vertical) basis.
ClassVector branch_class(const SurfaceConfig& cfg);

ManifoldModel product_base_model(const SurfaceConfig& cfg, bool kaehler);

/// The Kodaira–Thurston manifold as a T²-bundle over T² with a section.
/// Basis index 0 is the section, index 1 the fiber, so the grid roles match
/// the product case (sections horizontal, fibers vertical).
ManifoldModel kodaira_thurston_model(const std::pair<Rational, Rational>& areas);

/// Genus of the surface representing basis class `index`, read off by
/// adjunction from c1 and the self-pairing.
Integer basis_surface_genus(const ManifoldModel& model, std::size_t index);

}  // namespace brcover
