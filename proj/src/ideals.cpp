#include "gwa/ideals.hpp"

#include <algorithm>

#include "gwa/rng.hpp"

namespace gwa {

bool ideal_equal(const PrimitiveIdeal& a, const PrimitiveIdeal& b) {
    return closed_equal(a.closure, b.closure);
}

namespace {

GaussianRational scale_step(const GaussianRational& b, std::int64_t k) {
    return b * GaussianRational(Rational(BigInt(k)));
}

PrimitiveIdeal ideal_from_closure(ClosedSet closure) {
    PrimitiveIdeal ideal;
    for (int i = 0; i < closure.rank(); ++i) {
        const ClosedComponent& comp = closure.components[i];
        if (comp.full) continue;
        if (comp.values.empty()) throw InvalidInput("empty closure has no vanishing ideal");
        ideal.generators.emplace_back(i + 1, comp.values);
    }
    ideal.closure = std::move(closure);
    return ideal;
}

}  // namespace

std::vector<DirectionOption> direction_options(const GwaSpec& spec, int i) {
    std::vector<DirectionOption> options;
    options.push_back({});  // unconstrained
    const auto roots = spec.t(i).root_set();
    for (const auto& z_low : roots) {
        for (const auto& z_up : roots) {
            auto gap = lattice_offset(z_up, z_low, spec.step(i));
            if (!gap || *gap <= 0) continue;
            // Adjacent means no further zero of t_i strictly between the two
            // on the lattice z_low + Z*b_i.
            bool adjacent = true;
            for (const auto& mid : roots) {
                auto k = lattice_offset(mid, z_low, spec.step(i));
                if (k && *k > 0 && *k < *gap) adjacent = false;
            }
            if (!adjacent) continue;
            DirectionOption opt;
            opt.unbounded = false;
            opt.z_low = z_low;
            opt.z_up = z_up;
            for (std::int64_t k = 1; k <= *gap; ++k)
                opt.values.push_back(z_low + scale_step(spec.step(i), k));
            std::sort(opt.values.begin(), opt.values.end(), canonical_less);
            options.push_back(std::move(opt));
        }
    }
    std::sort(options.begin() + 1, options.end(),
              [](const DirectionOption& a, const DirectionOption& b) {
                  if (a.z_low == b.z_low) return canonical_less(a.z_up, b.z_up);
                  return canonical_less(a.z_low, b.z_low);
              });
    return options;
}

PrimitiveIdeal annihilator_of_simple(const GwaSpec& spec, const WeightPoint& a) {
    return ideal_from_closure(zariski_closure(spec, support_of_simple(spec, a)));
}

std::vector<PrimitiveIdeal> enumerate_primitive_ideals(const GwaSpec& spec) {
    std::vector<std::vector<DirectionOption>> per_direction;
    per_direction.reserve(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) per_direction.push_back(direction_options(spec, i));

    std::vector<PrimitiveIdeal> ideals;
    std::vector<std::size_t> pick(spec.rank(), 0);
    for (;;) {
        ClosedSet closure;
        closure.components.resize(spec.rank());
        for (int i = 0; i < spec.rank(); ++i) {
            const DirectionOption& opt = per_direction[i][pick[i]];
            if (!opt.unbounded) closure.components[i] = {false, opt.values};
        }
        PrimitiveIdeal ideal = ideal_from_closure(std::move(closure));
        bool seen = std::any_of(ideals.begin(), ideals.end(), [&](const PrimitiveIdeal& other) {
            return ideal_equal(ideal, other);
        });
        if (!seen) ideals.push_back(std::move(ideal));

        int i = spec.rank() - 1;
        while (i >= 0 && pick[i] + 1 == per_direction[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    return ideals;
}

WeightPoint duflo_refine(const GwaSpec& spec, const WeightPoint& a) {
    BreakData breaks = break_positions(spec, a);
    WeightPoint refined(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) {
        const DirectionBreaks& dir = breaks.directions[i - 1];
        if (dir.k_up.is_finite()) {
            // Move to the upper break; it is a zero of t_i inside supp L(m_a).
            refined[i - 1] = a[i - 1] + scale_step(spec.step(i), dir.k_up.get());
            continue;
        }
        // No break above: take the first root that is minimal within its
        // lattice class, so the refined direction stays unconstrained.
        const auto roots = spec.t(i).root_set();
        const GaussianRational* chosen = nullptr;
        for (const auto& z : roots) {
            bool minimal = true;
            for (const auto& other : roots) {
                auto k = lattice_offset(other, z, spec.step(i));
                if (k && *k < 0) minimal = false;
            }
            if (minimal) {
                chosen = &z;
                break;
            }
        }
        if (!chosen) throw InvalidInput("no minimal root in any lattice class");
        refined[i - 1] = *chosen;
    }
    return refined;
}

bool verify_annihilation(const GwaSpec& spec, const PrimitiveIdeal& ideal, const WeightPoint& a) {
    SupportRect supp = support_of_simple(spec, a);
    for (const auto& gen : ideal.generators) {
        int i = gen.variable_index;
        const SupportInterval& iv = supp.intervals[i - 1];
        if (!iv.is_finite()) return false;  // finitely many roots cannot cover it
        for (std::int64_t k = iv.lo.get(); k <= iv.hi.get(); ++k) {
            GaussianRational x = a[i - 1] + scale_step(spec.step(i), k);
            if (!evaluate_at(gen, x).is_zero()) return false;
        }
    }
    // Cross-check through the windowed module model.
    WindowModule w =
        realize_window(spec, a, default_window(spec, a, ModuleVariant::Simple), ModuleVariant::Simple);
    for (const auto& gen : ideal.generators) {
        RingElement poly = expand(gen, spec.rank());
        for (const auto& alpha : w.basis()) {
            WindowVector v{{alpha, GaussianRational(1)}};
            if (!apply_ring(w, poly, v).empty()) return false;
        }
    }
    return true;
}

WeightPoint sample_weight_point(const GwaSpec& spec, DetRng& rng) {
    WeightPoint a(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) {
        const auto roots = spec.t(i).root_set();
        const GaussianRational& z = roots[static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(roots.size()) - 1))];
        GaussianRational x = z + scale_step(spec.step(i), rng.range(-5, 5));
        if (rng.chance(1, 4)) x += spec.step(i) / GaussianRational(7);  // off the lattice
        a[i - 1] = x;
    }
    return a;
}

namespace {

std::string point_str(const WeightPoint& a) {
    std::string s;
    for (const auto& c : a) {
        if (!s.empty()) s += ",";
        s += c.str();
    }
    return s;
}

/// Deterministic probes: every combination of one root per direction (these
/// orbits carry the maximal break patterns), capped to keep checks quick.
std::vector<WeightPoint> probe_points(const GwaSpec& spec) {
    std::vector<WeightPoint> probes{WeightPoint(spec.rank(), GaussianRational(0))};
    std::vector<std::vector<GaussianRational>> roots;
    std::size_t total = 1;
    for (int i = 1; i <= spec.rank(); ++i) {
        roots.push_back(spec.t(i).root_set());
        total *= roots.back().size();
    }
    if (total > 64) return probes;
    std::vector<std::size_t> pick(spec.rank(), 0);
    for (;;) {
        WeightPoint a(spec.rank());
        for (int i = 0; i < spec.rank(); ++i) a[i] = roots[i][pick[i]];
        probes.push_back(std::move(a));
        int i = spec.rank() - 1;
        while (i >= 0 && pick[i] + 1 == roots[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    return probes;
}

}  // namespace

CheckReport check_conditions(const GwaSpec& spec, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw InvalidInput("sample count must be at least 1");
    CheckReport report;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.all_pass = report.all_pass && pass;
        report.entries.push_back({std::move(name), pass, std::move(detail)});
    };

    add("A1 graded by the adjoint weight decomposition", true,
        "holds for every GWA of this class: [T_i, r a^alpha] = alpha_i b_i r a^alpha");
    add("A2 graded components cyclic over the base ring", true,
        "the translation action is free, so A_alpha = R.a^alpha");
    add("A3 graded left noetherian", true, "the base ring is a polynomial ring");

    std::int64_t bound = 1;
    for (int i = 1; i <= spec.rank(); ++i) bound *= 1 + spec.t(i).degree();
    report.length_bound = bound;

    DetRng rng(seed);
    std::vector<WeightPoint> points = probe_points(spec);
    for (int s = 0; s < sample_count; ++s) points.push_back(sample_weight_point(spec, rng));

    // A4: uniformly bounded composition length.
    bool a4 = true;
    std::string a4_witness;
    for (const auto& a : points) {
        std::int64_t len = composition_length(spec, a);
        if (len > report.max_length_seen) {
            report.max_length_seen = len;
            a4_witness = point_str(a);
        }
        if (len > bound) a4 = false;
    }
    add("A4 uniformly bounded length", a4,
        "bound " + std::to_string(bound) + ", max observed " +
            std::to_string(report.max_length_seen) + " at (" + a4_witness + ")");

    // A5: finitely many closures.
    std::vector<PrimitiveIdeal> ideals = enumerate_primitive_ideals(spec);
    report.closure_count = static_cast<std::int64_t>(ideals.size());
    bool a5_complete = true;
    std::string a5_witness;
    for (const auto& a : points) {
        PrimitiveIdeal ideal = annihilator_of_simple(spec, a);
        bool found = std::any_of(ideals.begin(), ideals.end(), [&](const PrimitiveIdeal& other) {
            return ideal_equal(ideal, other);
        });
        if (!found && a5_complete) {
            a5_complete = false;
            a5_witness = point_str(a);
        }
    }
    add("A5 finitely many closures", a5_complete,
        a5_complete ? std::to_string(ideals.size()) + " distinct closures"
                    : "closure at (" + a5_witness + ") missing from the enumeration");

    // A6: translation-closure identity on sampled (point, tau) pairs.
    bool a6 = true;
    std::string a6_witness;
    for (const auto& a : points) {
        SupportRect supp = support_of_simple(spec, a);
        ClosedSet closure = zariski_closure(spec, supp);
        for (int rep = 0; rep < 4 && a6; ++rep) {
            std::vector<std::int64_t> tau(spec.rank());
            for (auto& t : tau) t = rng.range(-4, 4);
            SupportRect shifted = support_translate(spec, supp, tau);
            ClosedSet shifted_closure = zariski_closure(spec, shifted);
            ClosedSet lhs = closed_intersect(shifted_closure, closure);
            auto inter = support_intersect(spec, shifted, supp);
            bool ok = inter ? closed_equal(zariski_closure(spec, *inter), lhs) : lhs.is_empty();
            if (!ok) {
                a6 = false;
                a6_witness = point_str(a);
            }
        }
        if (!a6) break;
    }
    add("A6 closure of intersection equals intersection of closures", a6,
        a6 ? "verified on all sampled translates" : "failed at (" + a6_witness + ")");

    return report;
}

}  // namespace gwa
