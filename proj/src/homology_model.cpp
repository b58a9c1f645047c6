#include "brcover/homology_model.hpp"

#include <numeric>

namespace brcover {

void SurfaceConfig::validate() const
{
    if (m1 < 1 || m2 < 1) throw DomainError("multiplicities m1, m2 must be >= 1");
    if (d < 2) throw DomainError("cover degree d must be >= 2, got " + std::to_string(d));
    if (g1 < 1 || g2 < 1) throw DomainError("grid surfaces need nonzero genus (g1, g2 >= 1)");
    if (sgn(omega_areas.first) <= 0 || sgn(omega_areas.second) <= 0)
        throw DomainError("omega areas must be strictly positive");
}

bool ImmersedConfig::all_positive() const
{
    for (const auto& p : double_points)
        if (!p.positive) return false;
    return true;
}

void ImmersedConfig::validate() const
{
    if (!ambient_pairing.is_square()) throw DimensionError("ambient pairing must be square");
    for (const auto& c : components) {
        if (c.homology_class.size() != ambient_pairing.rows())
            throw DimensionError("component '" + c.label + "' class has wrong ambient dimension");
        if (c.genus < 0) throw DomainError("negative genus on component '" + c.label + "'");
    }
    for (const auto& p : double_points)
        if (p.first >= components.size() || p.second >= components.size())
            throw DomainError("double point refers to a missing component");
}

ImmersedConfig grid_immersion(const SurfaceConfig& cfg)
{
    cfg.validate();
    ImmersedConfig b;
    b.ambient_pairing = IntMatrix::from_rows({{0, 1}, {1, 0}});
    const long verticals = cfg.m1 * cfg.d;
    const long horizontals = cfg.m2 * cfg.d;
    for (long i = 0; i < verticals; ++i)
        b.components.push_back({cfg.g2, {Integer(0), Integer(1)}, "V" + std::to_string(i + 1)});
    for (long j = 0; j < horizontals; ++j)
        b.components.push_back({cfg.g1, {Integer(1), Integer(0)}, "H" + std::to_string(j + 1)});
    for (long i = 0; i < verticals; ++i)
        for (long j = 0; j < horizontals; ++j)
            b.double_points.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(verticals + j), true});
    return b;
}

SmoothedSurface smooth_double_points(const ImmersedConfig& b)
{
    b.validate();
    SmoothedSurface s;
    const std::size_t dim = b.ambient_pairing.rows();
    s.homology_class.assign(dim, Integer(0));

    Integer chi = 0;
    for (const auto& c : b.components) {
        chi += 2 - 2 * c.genus;
        for (std::size_t i = 0; i < dim; ++i) s.homology_class[i] += c.homology_class[i];
    }
    chi -= 2 * static_cast<long>(b.double_point_count());
    s.euler_characteristic = chi;
    s.self_intersection = bilinear(s.homology_class, b.ambient_pairing, s.homology_class);

    // Smoothing a crossing joins the two sheets through it.
    std::vector<std::size_t> parent(b.components.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t pieces = b.components.size();
    for (const auto& p : b.double_points) {
        const std::size_t ra = find(p.first), rb = find(p.second);
        if (ra != rb) {
            parent[ra] = rb;
            --pieces;
        }
    }
    s.connected = pieces == 1;
    if (s.connected) s.genus = 1 - chi / 2;
    return s;
}

ClassVector branch_class(const SurfaceConfig& cfg)
{
    cfg.validate();
    return {Integer(cfg.m2 * cfg.d), Integer(cfg.m1 * cfg.d)};
}

std::optional<std::size_t> ManifoldModel::b1() const
{
    if (!h1) return std::nullopt;
    return h1->b1();
}

void ManifoldModel::validate() const
{
    const std::size_t n = class_basis_labels.size();
    if (omega_class.size() != n || c1_class.size() != n)
        throw DimensionError("model '" + name + "': omega/c1 classes must match the class basis length");
    if (class_pairing.rows() != n || class_pairing.cols() != n)
        throw DimensionError("model '" + name + "': class pairing must be square over the class basis");
    if (!class_pairing.is_symmetric()) throw DomainError("model '" + name + "': class pairing must be symmetric");
    if (h1)
        for (const auto& r : h1->relators)
            if (r.size() != h1->generators) throw DimensionError("model '" + name + "': ragged H1 relator");
}

ManifoldModel product_base_model(const SurfaceConfig& cfg, bool kaehler)
{
    cfg.validate();
    ManifoldModel x;
    x.name = "F1 x F2 (g1=" + std::to_string(cfg.g1) + ", g2=" + std::to_string(cfg.g2) + ")";
    x.euler_characteristic = Integer((2 - 2 * cfg.g1) * (2 - 2 * cfg.g2));
    x.h1 = H1Presentation{static_cast<std::size_t>(2 * cfg.g1 + 2 * cfg.g2), {}};
    x.h2_rank_known = static_cast<std::size_t>(2 + 4 * cfg.g1 * cfg.g2);
    x.class_basis_labels = {"F1 x pt (horizontal)", "pt x F2 (vertical)"};
    x.class_pairing = IntMatrix::from_rows({{0, 1}, {1, 0}});
    x.omega_class = RationalVector{cfg.omega_areas.first, cfg.omega_areas.second};
    // c1 = pr1*c1(F1) + pr2*c1(F2); both factors have trivial normal bundle.
    x.c1_class = RationalVector{Rational(2 - 2 * cfg.g1), Rational(2 - 2 * cfg.g2)};
    x.pi2_trivial = true;
    x.omega_aspherical = true;
    x.kaehler = kaehler;
    return x;
}

ManifoldModel kodaira_thurston_model(const std::pair<Rational, Rational>& areas)
{
    if (sgn(areas.first) <= 0 || sgn(areas.second) <= 0)
        throw DomainError("omega areas must be strictly positive");
    ManifoldModel x;
    x.name = "Kodaira-Thurston manifold";
    x.euler_characteristic = 0;
    // α1..α4 descend from the x_i axes. The monodromy (x1,x2) -> (x1+x2,x2)
    // gives α2 = α1 + α2, i.e. the relator (α1 + α2) − α2.
    const std::vector<long> alpha1{1, 0, 0, 0};
    const std::vector<long> alpha2{0, 1, 0, 0};
    std::vector<long> relator(4);
    for (std::size_t i = 0; i < 4; ++i) relator[i] = (alpha1[i] + alpha2[i]) - alpha2[i];
    x.h1 = H1Presentation{4, {relator}};
    x.h2_rank_known = 4;  // χ = 2 − 2·b1 + b2 with χ = 0, b1 = 3
    x.class_basis_labels = {"section x1=x2=0", "fiber (x1,x2)-torus"};
    x.class_pairing = IntMatrix::from_rows({{0, 1}, {1, 0}});
    x.omega_class = RationalVector{areas.first, areas.second};
    x.c1_class = RationalVector{Rational(0), Rational(0)};
    x.pi2_trivial = true;
    x.omega_aspherical = true;
    x.kaehler = false;
    return x;
}

Integer basis_surface_genus(const ManifoldModel& model, std::size_t index)
{
    model.validate();
    if (index >= model.class_basis_labels.size()) throw DomainError("basis index out of range");
    const Rational c1 = model.c1_class[index];
    if (c1.get_den() != 1) throw DomainError("c1 pairing with a basis surface must be integral");
    // χ(Σ) = ⟨c1, Σ⟩ − Σ·Σ
    const Integer chi = c1.get_num() - model.class_pairing(index, index);
    return 1 - chi / 2;
}

}  // namespace brcover
