#include "brcover/branched_cover.hpp"

#include <algorithm>
#include <sstream>

namespace brcover {

namespace {

const char* const kPushforwardAssumption =
    "pushforward and branch-intersection data of spherical generators are supplied by the constructor "
    "from the local model (spheres over 4-balls around double points push forward to zero); they are "
    "not computed from a triangulation";

Rational omega_of_pushforward(const CoverSpec& spec, bool pushforward_zero, const std::optional<ClassVector>& pf,
                              const std::string& label)
{
    if (pushforward_zero) return Rational(0);
    if (!pf) throw IncompleteModelError("generator '" + label + "' carries no pushforward data");
    return spec.base.omega_class.pair(*pf);
}

Integer c1_of_pushforward(const CoverSpec& spec, bool pushforward_zero, const std::optional<ClassVector>& pf,
                          const std::string& label)
{
    if (pushforward_zero) return Integer(0);
    if (!pf) throw IncompleteModelError("generator '" + label + "' carries no pushforward data");
    const Rational r = spec.base.c1_class.pair(*pf);
    if (r.get_den() != 1) throw IncompleteModelError("non-integral c1 pairing for '" + label + "'");
    return r.get_num();
}

Integer branch_correction(const CoverSpec& spec, const std::vector<Integer>& intersections, const std::string& label)
{
    if (intersections.size() != spec.components.size()) {
        throw IncompleteModelError("generator '" + label + "' has " + std::to_string(intersections.size()) +
                                   " branch intersections, cover has " + std::to_string(spec.components.size()) +
                                   " branch components");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < intersections.size(); ++i) s += (1 - spec.components[i].multiplicity) * intersections[i];
    return s;
}

std::string str(const Integer& x) { return x.get_str(); }

}  // namespace

void CoverSpec::validate() const
{
    base.validate();
    if (degree < 1) throw DomainError("cover degree must be >= 1");
    if (branch.homology_class.size() != base.class_basis_labels.size())
        throw DimensionError("branch class must be expressed over the base class basis");
    for (const auto& c : components) {
        if (c.multiplicity < 1) throw DomainError("branch multiplicity must be >= 1 on '" + c.label + "'");
        if (injective_on_preimage && c.multiplicity != degree)
            throw DomainError("pi injective on pi^-1(B) forces every multiplicity to equal the degree");
    }
}

bool CoverReport::all_pass() const
{
    return std::all_of(formula_cross_checks.begin(), formula_cross_checks.end(), [](const Check& c) { return c.pass; });
}

void CoverReport::add_check(std::string name, bool pass, std::string evidence, std::string source)
{
    formula_cross_checks.push_back({std::move(name), pass, std::move(evidence), std::move(source)});
}

// ---------------------------------------------------------------------------

Rational lift_omega_pairing(const CoverSpec& spec, const SphericalGenerator& gen)
{
    return omega_of_pushforward(spec, gen.pushforward_zero, gen.pushforward, gen.label);
}

Integer lift_chern_pairing(const CoverSpec& spec, const SphericalGenerator& gen)
{
    const Integer correction = branch_correction(spec, gen.branch_intersections, gen.label);
    return c1_of_pushforward(spec, gen.pushforward_zero, gen.pushforward, gen.label) + correction;
}

Integer riemann_hurwitz_euler(const CoverSpec& spec)
{
    Integer chi = spec.degree * spec.base.euler_characteristic;
    for (const auto& c : spec.components) chi -= (c.multiplicity - 1) * c.euler_characteristic;
    return chi;
}

Integer pi_dimension_bound(long k, long d, bool injective, std::optional<long> ell)
{
    if (k < 0) throw DomainError("double point count must be nonnegative");
    if (d < 2) throw DomainError("cover degree must be >= 2 for a spherical bound");
    if (injective) {
        // Each ball then has a single preimage component.
        if (ell && *ell != k) throw DomainError("injective cover has exactly k preimage components over the balls");
        return Integer(k) * (d - 1);
    }
    if (!ell) throw DomainError("non-injective bound needs the number of preimage components over the balls");
    if (*ell < k || Integer(*ell) > Integer(k) * d)
        throw DomainError("preimage component count must lie in [k, k*d]");
    return Integer(k) * d - *ell;
}

// ---------------------------------------------------------------------------

CoverBuild build_cyclic_cover(const ManifoldModel& base, const SurfaceConfig& cfg, bool kaehler)
{
    cfg.validate();
    base.validate();
    if (base.class_basis_labels.size() != 2 || base.class_pairing != IntMatrix::from_rows({{0, 1}, {1, 0}}))
        throw DomainError("base '" + base.name + "' does not carry a horizontal/vertical grid basis");
    if (basis_surface_genus(base, 0) != cfg.g1 || basis_surface_genus(base, 1) != cfg.g2) {
        throw DomainError("grid genera (" + std::to_string(cfg.g1) + "," + std::to_string(cfg.g2) +
                          ") do not match the basis surfaces of '" + base.name + "'");
    }

    const ImmersedConfig immersed = grid_immersion(cfg);
    const SmoothedSurface branch = smooth_double_points(immersed);
    const ClassVector expected = branch_class(cfg);
    if (branch.homology_class != expected) throw Error("smoothed grid class disagrees with branch_class");
    for (const auto& coord : expected) {
        if (!mpz_divisible_ui_p(coord.get_mpz_t(), static_cast<unsigned long>(cfg.d))) {
            throw NoSuchCoverError("branch class coordinate " + str(coord) + " is not divisible by d = " +
                                   std::to_string(cfg.d));
        }
    }

    CoverBuild out;
    out.double_points = static_cast<long>(immersed.double_point_count());

    CoverSpec& spec = out.spec;
    spec.base = base;
    spec.degree = cfg.d;
    spec.branch = branch;
    spec.components = {{"B~ = pi^-1(B)", cfg.d, branch.euler_characteristic}};
    spec.preimage_connected = branch.connected;
    spec.injective_on_preimage = true;
    spec.construction_note = std::to_string(cfg.d) + "-fold cyclic cover with multiplicity " + std::to_string(cfg.d) +
                             " along pi^-1(B)";
    spec.validate();

    // One Milnor chain M(2,2,d) over each double point.
    std::vector<PlumbingGraph> chains;
    chains.reserve(immersed.double_point_count());
    for (std::size_t i = 0; i < immersed.double_point_count(); ++i) {
        const auto& p = immersed.double_points[i];
        const std::string prefix = "dp#" + std::to_string(i + 1) + " (" + immersed.components[p.first].label + "." +
                                   immersed.components[p.second].label + ") sphere";
        chains.push_back(milnor_fiber_2_2_d(cfg.d, prefix));
    }
    out.spherical_lattice = disjoint_union(chains);

    ManifoldModel& cover = out.cover;
    for (const auto& v : out.spherical_lattice->vertices()) {
        SphericalGenerator g;
        g.label = v.label;
        g.pushforward_zero = true;
        g.branch_intersections = {Integer(0)};
        g.omega_pairing = lift_omega_pairing(spec, g);
        g.c1_pairing = lift_chern_pairing(spec, g);
        cover.spherical_generators.push_back(std::move(g));
    }

    cover.name = std::to_string(cfg.d) + "-fold cyclic cover of " + base.name;
    cover.euler_characteristic = riemann_hurwitz_euler(spec);
    // H1 is generated by lifts of cycles on B* and the base relations lift
    // trivially, so the cover carries the base presentation.
    cover.h1 = base.h1;

    // π*PD[B] = d·PD[B~] and π_*[B~] = [B], so B~·B~ = B·B / d.
    if (!mpz_divisible_ui_p(branch.self_intersection.get_mpz_t(), static_cast<unsigned long>(cfg.d)))
        throw NoSuchCoverError("B.B = " + str(branch.self_intersection) + " is not divisible by d");
    const Integer lifted_square = branch.self_intersection / cfg.d;
    const std::optional<ClassVector> branch_pushforward = branch.homology_class;
    cover.class_basis_labels = {"B~ = pi^-1(B)"};
    cover.class_pairing = IntMatrix(1, 1, {lifted_square});
    cover.omega_class = RationalVector{omega_of_pushforward(spec, false, branch_pushforward, "B~")};
    cover.c1_class = RationalVector{Rational(c1_of_pushforward(spec, false, branch_pushforward, "B~") +
                                             branch_correction(spec, {lifted_square}, "B~"))};
    cover.pi2_trivial = out.double_points == 0 && base.pi2_trivial;
    cover.omega_aspherical = base.omega_aspherical;
    cover.kaehler = kaehler;
    cover.validate();
    return out;
}

H1Presentation kodaira_thurston_cover_presentation(const SurfaceConfig& cfg)
{
    if (cfg.d < 2 || cfg.m1 < 1 || cfg.m2 < 1) throw DomainError("need d >= 2 and m1, m2 >= 1");
    // Lifts α~1..α~4 of cycles on B*; the surface realizing α2 = α1 + α2 misses
    // B* and lifts, giving α~2 = α~1 + α~2.
    const std::vector<long> lhs{0, 1, 0, 0};
    const std::vector<long> rhs{1, 1, 0, 0};
    std::vector<long> relator(4);
    for (std::size_t i = 0; i < 4; ++i) relator[i] = rhs[i] - lhs[i];
    return H1Presentation{4, {relator}};
}

std::size_t kodaira_thurston_cover_b1(const SurfaceConfig& cfg)
{
    return kodaira_thurston_cover_presentation(cfg).b1();
}

// ---------------------------------------------------------------------------

CoverReport assess_cover(const CoverBuild& build, std::string family)
{
    const CoverSpec& spec = build.spec;
    const ManifoldModel& cover = build.cover;
    spec.validate();
    cover.validate();

    CoverReport r;
    r.family = std::move(family);
    r.kaehler = cover.kaehler;
    r.cover_euler = cover.euler_characteristic;
    r.cover_b1 = cover.b1();
    r.assumptions.push_back(kPushforwardAssumption);
    if (!spec.construction_note.empty()) r.assumptions.push_back("cover choice: " + spec.construction_note);

    // Euler characteristic, two routes.
    const Integer rh = riemann_hurwitz_euler(spec);
    r.add_check("cover_euler_is_riemann_hurwitz", rh == cover.euler_characteristic,
                "chi(cover) = " + str(cover.euler_characteristic) + ", d*chi(X) - sum (d_i-1) chi(B_i) = " + str(rh),
                "riemann_hurwitz_euler");
    Integer complement = spec.degree * (spec.base.euler_characteristic - spec.branch.euler_characteristic);
    for (const auto& c : spec.components) complement += c.euler_characteristic;
    r.add_check("riemann_hurwitz_vs_complement", complement == rh,
                "d*chi(X-B) + sum chi(B_i) = " + str(complement) + " vs " + str(rh), "riemann_hurwitz_euler");

    // Adjunction on the branch surface: χ(B) = ⟨c1, B⟩ − B·B.
    {
        const Rational c1b = spec.base.c1_class.pair(spec.branch.homology_class);
        const Integer bb = bilinear(spec.branch.homology_class, spec.base.class_pairing, spec.branch.homology_class);
        const bool ok = c1b.get_den() == 1 && bb == spec.branch.self_intersection &&
                        spec.branch.euler_characteristic == c1b.get_num() - bb;
        r.add_check("adjunction_on_branch_locus", ok,
                    "chi(B) = " + str(spec.branch.euler_characteristic) + ", <c1,B> - B.B = " +
                        format_rational(c1b) + " - " + str(bb),
                    "smooth_double_points");
    }
    if (cover.class_basis_labels.size() == 1 && spec.components.size() == 1) {
        const Rational c1 = cover.c1_class[0];
        const Integer sq = cover.class_pairing(0, 0);
        const bool ok = c1.get_den() == 1 && spec.components[0].euler_characteristic == c1.get_num() - sq;
        r.add_check("adjunction_on_lifted_branch", ok,
                    "chi(B~) = " + str(spec.components[0].euler_characteristic) + ", <c1~,B~> - B~.B~ = " +
                        format_rational(c1) + " - " + str(sq),
                    "lift_chern_pairing");
    }

    // Pairings on spherical generators.
    std::size_t omega_mismatch = 0, c1_mismatch = 0, omega_nonzero = 0, c1_nonzero = 0, projection_bad = 0;
    for (const auto& g : cover.spherical_generators) {
        r.chern_pairings.push_back({g.label, g.omega_pairing, g.c1_pairing});
        if (lift_omega_pairing(spec, g) != g.omega_pairing) ++omega_mismatch;
        if (lift_chern_pairing(spec, g) != g.c1_pairing) ++c1_mismatch;
        if (sgn(g.omega_pairing) != 0) ++omega_nonzero;
        if (sgn(g.c1_pairing) != 0) ++c1_nonzero;

        // Projection formula: (π_* g)·B = Σ d_i (B_i·g).
        Integer lhs = 0;
        if (!g.pushforward_zero) {
            if (!g.pushforward) throw IncompleteModelError("generator '" + g.label + "' carries no pushforward data");
            lhs = bilinear(*g.pushforward, spec.base.class_pairing, spec.branch.homology_class);
        }
        Integer rhs = 0;
        for (std::size_t i = 0; i < spec.components.size(); ++i)
            rhs += spec.components[i].multiplicity * g.branch_intersections.at(i);
        if (lhs != rhs) ++projection_bad;
    }
    const std::size_t n = cover.spherical_generators.size();
    const std::string of_n = " of " + std::to_string(n) + " generators";
    r.add_check("lift_omega_reevaluation", omega_mismatch == 0,
                std::to_string(omega_mismatch) + of_n + " differ from <[omega], pi_* gen>", "lift_omega_pairing");
    r.add_check("lift_chern_reevaluation", c1_mismatch == 0,
                std::to_string(c1_mismatch) + of_n + " differ from <c1, pi_* gen> + sum (1-d_i) B_i.gen",
                "lift_chern_pairing");
    r.add_check("projection_formula", projection_bad == 0,
                std::to_string(projection_bad) + of_n + " violate (pi_* gen).B = sum d_i (B_i.gen)",
                "lift_chern_pairing");

    r.omega_vanishes_on_pi = {omega_nonzero == 0,
                              std::to_string(omega_nonzero) + of_n + " pair nontrivially with [omega~]",
                              "lift_omega_pairing"};
    r.c1_vanishes_on_pi = {c1_nonzero == 0, std::to_string(c1_nonzero) + of_n + " pair nontrivially with c1(omega~)",
                           "lift_chern_pairing"};

    // Vanishing predicted from the base alone.
    if (spec.base.omega_aspherical) {
        r.add_check("aspherical_base_predicts_omega_vanishing", omega_nonzero == 0,
                    "[omega] vanishes on Pi(base); " + std::to_string(omega_nonzero) + of_n + " pair nontrivially",
                    "lift_omega_pairing");
    } else {
        r.add_check("aspherical_base_predicts_omega_vanishing", true,
                    "hypothesis not met ([omega] not known to vanish on Pi(base)); no prediction", "lift_omega_pairing");
    }
    if (spec.base.pi2_trivial && spec.preimage_connected) {
        r.add_check("aspherical_base_predicts_c1_vanishing", c1_nonzero == 0,
                    "pi_2(base) = 0 and pi^-1(B) connected; " + std::to_string(c1_nonzero) + of_n +
                        " pair nontrivially",
                    "lift_chern_pairing");
    } else {
        r.add_check("aspherical_base_predicts_c1_vanishing", true,
                    "hypothesis not met (pi_2(base) = 0 and connected pi^-1(B) required); no prediction",
                    "lift_chern_pairing");
    }

    if (build.spherical_lattice) {
        const PlumbingGraph& lattice = *build.spherical_lattice;
        const auto blocks = connected_components(lattice);
        std::size_t degenerate = 0;
        std::ostringstream dets;
        for (const auto& b : blocks) {
            const Integer dt = det(intersection_matrix(b));
            if (sgn(dt) == 0) ++degenerate;
        }
        if (!blocks.empty()) dets << "|det| of first block = " << abs(det(intersection_matrix(blocks.front())));
        r.add_check("milnor_chains_nondegenerate", degenerate == 0,
                    std::to_string(blocks.size()) + " chains, " + std::to_string(degenerate) + " singular; " +
                        dets.str(),
                    "det");

        const std::size_t lattice_r = lattice_rank(lattice);
        std::optional<long> ell;
        if (!spec.injective_on_preimage) ell = static_cast<long>(blocks.size());
        const Integer bound = pi_dimension_bound(build.double_points, spec.degree, spec.injective_on_preimage, ell);
        r.pi_lower_bound = bound;
        r.add_check("pi_bound_equals_lattice_rank", bound == Integer(static_cast<unsigned long>(lattice_r)),
                    "bound " + str(bound) + ", rank of installed lattice " + std::to_string(lattice_r),
                    "pi_dimension_bound");
        r.add_check("generators_match_lattice", lattice.size() == n,
                    std::to_string(n) + " generators, " + std::to_string(lattice.size()) + " lattice vertices",
                    "milnor_fiber_2_2_d");
    }
    return r;
}

// ---------------------------------------------------------------------------

Tower build_tower7(long d)
{
    if (d < 2) throw DomainError("tower degree d must be >= 2, got " + std::to_string(d));
    Tower t;

    // Stage 1: the four tori z_i = ±1/4 in T⁴ meet in the 4 points (±1/4, ±1/4).
    SurfaceConfig grid;
    grid.g1 = grid.g2 = 1;
    grid.m1 = grid.m2 = 1;
    grid.d = 2;
    ManifoldModel torus = product_base_model(grid, true);
    torus.name = "T^4 = C^2/Z^4";
    torus.class_basis_labels = {"{z2 = c} torus (horizontal)", "{z1 = c} torus (vertical)"};
    t.stage1 = build_cyclic_cover(torus, grid, true);
    t.stage1.spec.construction_note = "double cover of T^4 branched along the smoothed 4-point grid, trivial over T";
    t.stage1_report = assess_cover(t.stage1, "tower7 stage 1: X~ -> T^4");
    t.stage1_report.add_check("four_double_points", t.stage1.double_points == 4,
                              "k = " + std::to_string(t.stage1.double_points), "grid_immersion");
    t.stage1_report.add_check("omega_vanishes_on_pi", t.stage1_report.omega_vanishes_on_pi.vanishes,
                              t.stage1_report.omega_vanishes_on_pi.evidence, "lift_omega_pairing");
    t.stage1_report.add_check("c1_vanishes_on_pi", t.stage1_report.c1_vanishes_on_pi.vanishes,
                              t.stage1_report.c1_vanishes_on_pi.evidence, "lift_chern_pairing");

    // S: the sphere formed by the two lifts of the vanishing-cycle disk at (1/4, 1/4).
    const SphericalGenerator& sphere = t.stage1.cover.spherical_generators.front();
    const Integer sphere_square = intersection_matrix(*t.stage1.spherical_lattice)(0, 0);

    // T~: a lift of the torus z2 = conj(z1), disjoint from B. c1(T⁴) = 0, so
    // <c1~, T~> reduces to (1 - 2)·(B~·T~) = 0.
    for (const auto& c : torus.c1_class.coords())
        if (sgn(c) != 0) throw Error("stage-1 base is expected to have c1 = 0");
    const Integer b_tilde_dot_t_tilde = 0;
    const Integer c1_on_t_tilde = (1 - t.stage1.spec.degree) * b_tilde_dot_t_tilde;
    const Rational t_tilde_area = 1;

    ManifoldModel x_tilde;
    x_tilde.name = "X~ (double cover of T^4)";
    x_tilde.euler_characteristic = t.stage1.cover.euler_characteristic;
    x_tilde.h1 = t.stage1.cover.h1;
    x_tilde.class_basis_labels = {"S (sphere over (1/4,1/4))", "T~ (lift of z2 = conj z1)"};
    x_tilde.class_pairing = IntMatrix(2, 2, {sphere_square, Integer(1), Integer(1), Integer(0)});
    x_tilde.omega_class = RationalVector{sphere.omega_pairing, t_tilde_area};
    x_tilde.c1_class = RationalVector{Rational(sphere.c1_pairing), Rational(c1_on_t_tilde)};
    x_tilde.pi2_trivial = false;
    x_tilde.omega_aspherical = t.stage1.spec.base.omega_aspherical && t.stage1_report.omega_vanishes_on_pi.vanishes;
    x_tilde.kaehler = false;

    // Stage 2: branched along two parallel copies of T~, each of multiplicity d.
    CoverSpec& spec2 = t.stage2.spec;
    spec2.base = x_tilde;
    spec2.degree = d;
    spec2.branch.euler_characteristic = 0;
    spec2.branch.homology_class = {Integer(0), Integer(2)};
    spec2.branch.connected = false;
    spec2.branch.self_intersection = bilinear(spec2.branch.homology_class, x_tilde.class_pairing,
                                              spec2.branch.homology_class);
    spec2.components = {{"B1 (over T~')", d, Integer(0)}, {"B2 (over T~'')", d, Integer(0)}};
    spec2.preimage_connected = false;
    spec2.injective_on_preimage = true;
    spec2.construction_note = "cyclic " + std::to_string(d) +
                              "-fold cover sending the two meridians to opposite generators of Z/" +
                              std::to_string(d);
    spec2.validate();

    // Ŝ -> S is the d-fold cover of the sphere branched at its two points on
    // the branch locus; it meets each B_i once with agreeing signs.
    SphericalGenerator s_hat;
    s_hat.label = "S^ (lift of S)";
    s_hat.pushforward = ClassVector{Integer(d), Integer(0)};
    s_hat.branch_intersections = {Integer(1), Integer(1)};
    s_hat.omega_pairing = lift_omega_pairing(spec2, s_hat);
    s_hat.c1_pairing = lift_chern_pairing(spec2, s_hat);
    t.witness_label = s_hat.label;

    ManifoldModel& x_hat = t.stage2.cover;
    x_hat.name = "X^ (" + std::to_string(d) + "-fold cover of X~)";
    x_hat.euler_characteristic = riemann_hurwitz_euler(spec2);
    x_hat.class_pairing = IntMatrix(0, 0);
    x_hat.spherical_generators = {s_hat};
    x_hat.omega_aspherical = x_tilde.omega_aspherical;
    x_hat.kaehler = false;

    t.stage2_report = assess_cover(t.stage2, "tower7 stage 2: X^ -> X~");
    t.stage2_report.assumptions.push_back(
        "b1(X^) and dim Pi(X^) are not determined by the construction; only S^ is installed");
    t.stage2_report.assumptions.push_back(
        "T~ is made symplectic by a small perturbation of omega; its area is recorded as 1");
    t.stage2_report.add_check("omega_vanishes_on_pi", t.stage2_report.omega_vanishes_on_pi.vanishes,
                              t.stage2_report.omega_vanishes_on_pi.evidence, "lift_omega_pairing");
    const Integer expected = 2 * (1 - d);
    t.stage2_report.add_check("c1_pairing_equals_2(1-d)", s_hat.c1_pairing == expected,
                              "<c1(omega^), S^> = " + str(s_hat.c1_pairing) + ", 2(1-d) = " + str(expected),
                              "lift_chern_pairing");
    t.stage2_report.add_check("c1_pairing_nonzero", sgn(s_hat.c1_pairing) != 0,
                              "<c1(omega^), S^> = " + str(s_hat.c1_pairing), "lift_chern_pairing");
    return t;
}

}  // namespace brcover
