#include "gwa/weights.hpp"

#include <algorithm>

namespace gwa {

std::int64_t ExtInt::get() const {
    if (!is_finite()) throw InvalidInput("infinite bound has no integer value");
    return value;
}

ExtInt ExtInt::operator+(std::int64_t d) const {
    return is_finite() ? finite(value + d) : *this;
}

bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.kind == ExtInt::Kind::NegInf) return b.kind != ExtInt::Kind::NegInf;
    if (a.kind == ExtInt::Kind::PosInf) return false;
    if (b.kind == ExtInt::Kind::PosInf) return true;
    if (b.kind == ExtInt::Kind::NegInf) return false;
    return a.value < b.value;
}

std::string ExtInt::str() const {
    if (kind == Kind::NegInf) return "-inf";
    if (kind == Kind::PosInf) return "+inf";
    return std::to_string(value);
}

ExtInt ext_min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
ExtInt ext_max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

bool SupportInterval::contains(std::int64_t k) const {
    return lo <= ExtInt::finite(k) && ExtInt::finite(k) <= hi;
}

bool SupportRect::contains(const std::vector<std::int64_t>& alpha) const {
    if (alpha.size() != intervals.size()) throw InvalidInput("offset vector has wrong rank");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!intervals[i].contains(alpha[i])) return false;
    return true;
}

bool SupportRect::is_finite() const {
    return std::all_of(intervals.begin(), intervals.end(),
                       [](const SupportInterval& iv) { return iv.is_finite(); });
}

std::int64_t SupportRect::point_count() const {
    std::int64_t count = 1;
    for (const auto& iv : intervals) count *= iv.hi.get() - iv.lo.get() + 1;
    return count;
}

bool ClosedSet::is_empty() const {
    return std::any_of(components.begin(), components.end(),
                       [](const ClosedComponent& c) { return !c.full && c.values.empty(); });
}

bool ClosedSet::is_full() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ClosedComponent& c) { return c.full; });
}

BreakData break_positions(const GwaSpec& spec, const WeightPoint& a) {
    if (static_cast<int>(a.size()) != spec.rank())
        throw InvalidInput("weight point has wrong rank");
    BreakData data;
    data.directions.resize(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) {
        DirectionBreaks& dir = data.directions[i - 1];
        for (const auto& z : spec.t(i).root_set()) {
            if (auto k = lattice_offset(z, a[i - 1], spec.step(i))) dir.offsets.push_back(*k);
        }
        std::sort(dir.offsets.begin(), dir.offsets.end());
        dir.offsets.erase(std::unique(dir.offsets.begin(), dir.offsets.end()),
                          dir.offsets.end());
        for (std::int64_t k : dir.offsets) {
            if (k < 0)
                dir.k_low = ext_max(dir.k_low, ExtInt::finite(k));
            else if (!dir.k_up.is_finite())
                dir.k_up = ExtInt::finite(k);
        }
    }
    return data;
}

SupportRect support_of_verma(const GwaSpec& spec, const WeightPoint& a) {
    if (static_cast<int>(a.size()) != spec.rank())
        throw InvalidInput("weight point has wrong rank");
    return {a, std::vector<SupportInterval>(spec.rank())};
}

SupportRect support_of_simple(const GwaSpec& spec, const WeightPoint& a) {
    BreakData breaks = break_positions(spec, a);
    SupportRect rect{a, {}};
    rect.intervals.reserve(spec.rank());
    for (const auto& dir : breaks.directions)
        rect.intervals.push_back({dir.k_low + 1, dir.k_up});
    return rect;
}

ClosedSet zariski_closure(const GwaSpec& spec, const SupportRect& s) {
    if (static_cast<int>(s.base.size()) != spec.rank() || s.rank() != spec.rank())
        throw InvalidInput("support rectangle has wrong rank");
    ClosedSet closure;
    closure.components.resize(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) {
        const SupportInterval& iv = s.intervals[i - 1];
        if (!(iv.lo <= iv.hi)) throw InvalidInput("empty support rectangle");
        if (!iv.is_finite()) continue;  // infinite coordinate set closes to the full line
        ClosedComponent& comp = closure.components[i - 1];
        comp.full = false;
        for (std::int64_t k = iv.lo.get(); k <= iv.hi.get(); ++k)
            comp.values.push_back(s.base[i - 1] +
                                  spec.step(i) * GaussianRational(Rational(BigInt(k))));
        std::sort(comp.values.begin(), comp.values.end(), canonical_less);
    }
    return closure;
}

ClosedSet closed_intersect(const ClosedSet& x, const ClosedSet& y) {
    if (x.rank() != y.rank()) throw InvalidInput("closed sets of different rank");
    ClosedSet out;
    out.components.resize(x.rank());
    for (int i = 0; i < x.rank(); ++i) {
        const ClosedComponent& cx = x.components[i];
        const ClosedComponent& cy = y.components[i];
        ClosedComponent& c = out.components[i];
        if (cx.full && cy.full) continue;
        c.full = false;
        if (cx.full) {
            c.values = cy.values;
        } else if (cy.full) {
            c.values = cx.values;
        } else {
            for (const auto& v : cx.values)
                if (std::find(cy.values.begin(), cy.values.end(), v) != cy.values.end())
                    c.values.push_back(v);
        }
    }
    return out;
}

bool closed_equal(const ClosedSet& x, const ClosedSet& y) {
    if (x.rank() != y.rank()) throw InvalidInput("closed sets of different rank");
    if (x.is_empty() || y.is_empty()) return x.is_empty() && y.is_empty();
    return x.components == y.components;
}

bool closed_subset(const ClosedSet& x, const ClosedSet& y) {
    if (x.rank() != y.rank()) throw InvalidInput("closed sets of different rank");
    if (x.is_empty()) return true;
    for (int i = 0; i < x.rank(); ++i) {
        const ClosedComponent& cx = x.components[i];
        const ClosedComponent& cy = y.components[i];
        if (cy.full) continue;
        if (cx.full) return false;
        for (const auto& v : cx.values)
            if (std::find(cy.values.begin(), cy.values.end(), v) == cy.values.end()) return false;
    }
    return true;
}

SupportRect support_translate(const GwaSpec& spec, const SupportRect& s,
                              const std::vector<std::int64_t>& tau) {
    if (static_cast<int>(tau.size()) != spec.rank() || s.rank() != spec.rank())
        throw InvalidInput("translation vector has wrong rank");
    SupportRect out = s;
    for (int i = 1; i <= spec.rank(); ++i)
        out.base[i - 1] += spec.step(i) * GaussianRational(Rational(BigInt(tau[i - 1])));
    return out;
}

std::optional<SupportRect> support_intersect(const GwaSpec& spec, const SupportRect& s1,
                                             const SupportRect& s2) {
    if (s1.rank() != spec.rank() || s2.rank() != spec.rank())
        throw InvalidInput("support rectangle has wrong rank");
    // Rebase s2 onto s1's base point; disjoint lattice cosets cannot meet.
    std::vector<std::int64_t> delta(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) {
        auto k = lattice_offset(s2.base[i - 1], s1.base[i - 1], spec.step(i));
        if (!k) return std::nullopt;
        delta[i - 1] = *k;
    }
    SupportRect out{s1.base, {}};
    out.intervals.reserve(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) {
        SupportInterval iv;
        iv.lo = ext_max(s1.intervals[i].lo, s2.intervals[i].lo + delta[i]);
        iv.hi = ext_min(s1.intervals[i].hi, s2.intervals[i].hi + delta[i]);
        if (!(iv.lo <= iv.hi)) return std::nullopt;
        out.intervals.push_back(iv);
    }
    return out;
}

}  // namespace gwa
