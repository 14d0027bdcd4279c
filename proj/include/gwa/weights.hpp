#ifndef GWA_WEIGHTS_HPP
#define GWA_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/algebra.hpp"

namespace gwa {

/// A point a of k^n, identifying the maximal ideal (T_1-a_1, ..., T_n-a_n).
using WeightPoint = EvalPoint;

/// Integer extended with the two infinities, for interval ends and extreme
/// break offsets.
struct ExtInt {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    std::int64_t value = 0;

    static ExtInt neg_inf() { return {Kind::NegInf, 0}; }
    static ExtInt pos_inf() { return {Kind::PosInf, 0}; }
    static ExtInt finite(std::int64_t v) { return {Kind::Finite, v}; }

    bool is_finite() const { return kind == Kind::Finite; }
    std::int64_t get() const;

    ExtInt operator+(std::int64_t d) const;

    friend bool operator==(const ExtInt& a, const ExtInt& b) = default;
    friend bool operator<(const ExtInt& a, const ExtInt& b);
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a == b || a < b; }

    /// "-inf", "+inf" or the decimal value (the CLI serialization).
    std::string str() const;
};

ExtInt ext_min(const ExtInt& a, const ExtInt& b);
ExtInt ext_max(const ExtInt& a, const ExtInt& b);

/// Break offsets of one direction: the integers k with t_i(a_i + k b_i) = 0.
struct DirectionBreaks {
    std::vector<std::int64_t> offsets;  // sorted, distinct
    ExtInt k_low = ExtInt::neg_inf();   // max{k in offsets : k < 0}, or -inf
    ExtInt k_up = ExtInt::pos_inf();    // min{k in offsets : k >= 0}, or +inf
};

struct BreakData {
    std::vector<DirectionBreaks> directions;
};

/// Lattice interval [lo, hi] of alpha-offsets in one direction; lo may be
/// -inf and hi may be +inf, and lo <= hi always holds.
struct SupportInterval {
    ExtInt lo = ExtInt::neg_inf();
    ExtInt hi = ExtInt::pos_inf();

    bool contains(std::int64_t k) const;
    bool is_finite() const { return lo.is_finite() && hi.is_finite(); }

    friend bool operator==(const SupportInterval& a, const SupportInterval& b) = default;
};

/// Product-shaped set of lattice weights {a + alpha.b : lo_i <= alpha_i <= hi_i}.
struct SupportRect {
    WeightPoint base;
    std::vector<SupportInterval> intervals;

    int rank() const { return static_cast<int>(intervals.size()); }
    bool contains(const std::vector<std::int64_t>& alpha) const;
    bool is_finite() const;
    /// Number of lattice points; only valid when finite.
    std::int64_t point_count() const;

    friend bool operator==(const SupportRect& a, const SupportRect& b) = default;
};

/// One coordinate of a canonical Zariski-closed product set: either the full
/// affine line or a finite set of values (sorted, distinct).
struct ClosedComponent {
    bool full = true;
    std::vector<GaussianRational> values;  // canonical order, used iff !full

    friend bool operator==(const ClosedComponent& a, const ClosedComponent& b) = default;
};

/// Canonical product of closed coordinate sets in k^n. The constrained index
/// set J is {i : component i is finite}.
struct ClosedSet {
    std::vector<ClosedComponent> components;

    int rank() const { return static_cast<int>(components.size()); }
    bool is_empty() const;
    /// All components full lines, i.e. the closure is the whole space.
    bool is_full() const;
};

// ---- break geometry ----

/// Offsets of the zeros of t_i on the lattice a_i + Z*b_i, per direction.
BreakData break_positions(const GwaSpec& spec, const WeightPoint& a);

/// supp M(m_a): the whole orbit a + Z^n.b.
SupportRect support_of_verma(const GwaSpec& spec, const WeightPoint& a);

/// supp L(m_a): per direction the interval [k_low+1, k_up] between the
/// nearest breaks around the base point, with infinities propagated.
SupportRect support_of_simple(const GwaSpec& spec, const WeightPoint& a);

// ---- closures ----

/// Zariski closure of a nonempty support rectangle: a direction is a finite
/// value set iff both interval ends are finite, otherwise the full line.
ClosedSet zariski_closure(const GwaSpec& spec, const SupportRect& s);

ClosedSet closed_intersect(const ClosedSet& x, const ClosedSet& y);
bool closed_equal(const ClosedSet& x, const ClosedSet& y);
bool closed_subset(const ClosedSet& x, const ClosedSet& y);

/// Shift the rectangle by the lattice vector tau (base moves by tau.b).
SupportRect support_translate(const GwaSpec& spec, const SupportRect& s,
                              const std::vector<std::int64_t>& tau);

/// Intersection of two rectangles; nullopt when empty or when the bases lie
/// on different lattice cosets.
std::optional<SupportRect> support_intersect(const GwaSpec& spec, const SupportRect& s1,
                                             const SupportRect& s2);

}  // namespace gwa

#endif
