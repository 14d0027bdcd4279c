#ifndef GWA_MODULES_HPP
#define GWA_MODULES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gwa/weights.hpp"

namespace gwa {

/// Offset vector alpha in Z^n, indexing the weight a + alpha.b.
using OffsetVector = std::vector<std::int64_t>;

enum class GenKind { X, Y };

enum class ModuleVariant { Verma, Simple };

/// The break offsets of each direction cut Z into segments; cells are the
/// products of one segment per direction. Each cell is the support of
/// exactly one simple subquotient of M(m_a). A directed edge between
/// neighboring cells means the corresponding generator action crosses the
/// break wall with a nonzero coefficient: crossing break k upward is allowed
/// iff k >= 0, downward iff k < 0.
class CellDecomposition {
   public:
    CellDecomposition(const GwaSpec& spec, const WeightPoint& a);

    int rank() const { return static_cast<int>(segments_.size()); }
    const WeightPoint& base() const { return base_; }
    const BreakData& breaks() const { return breaks_; }
    const std::vector<std::vector<SupportInterval>>& segments() const { return segments_; }

    int cell_count() const { return cell_count_; }
    /// Segment index per direction for the given cell id.
    std::vector<int> cell_index(int cell) const;
    int cell_id(const std::vector<int>& index) const;
    SupportRect cell_support(int cell) const;
    /// Cell containing a given offset vector.
    int cell_of(const OffsetVector& alpha) const;
    /// Id of the cell containing alpha = 0.
    int center_cell() const;

    /// Directed edges (from, to) between adjacent cells.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

   private:
    WeightPoint base_;
    BreakData breaks_;
    std::vector<std::vector<SupportInterval>> segments_;
    std::vector<std::pair<int, int>> edges_;
    int cell_count_ = 1;
};

/// All submodules of M(m_a), each given by the sorted ids of the cells in
/// its support. Contains the empty set and the full cell set; listed in
/// inclusion-compatible order (by size, then lexicographically).
struct SubmoduleLattice {
    std::vector<std::vector<int>> submodules;

    int count() const { return static_cast<int>(submodules.size()); }
    bool includes(int outer, int inner) const;
};

CellDecomposition cells(const GwaSpec& spec, const WeightPoint& a);

/// Exhaustive enumeration of reachability-closed cell sets. Rejects cell
/// counts above the exhaustive-search limit (20) with a size error.
SubmoduleLattice enumerate_submodules(const GwaSpec& spec, const WeightPoint& a);

/// One support rectangle per cell, in cell-id order.
std::vector<SupportRect> simple_subquotients(const GwaSpec& spec, const WeightPoint& a);

/// Composition length of M(m_a) = number of cells.
std::int64_t composition_length(const GwaSpec& spec, const WeightPoint& a);

/// L(m_a) is a highest weight module iff its support is bounded above in
/// every direction (equivalently all X_i act locally nilpotently).
bool is_highest_weight_module(const GwaSpec& spec, const WeightPoint& a);

/// L(m_a) has highest weight m_a itself iff t_i(a_i) = 0 for all i.
bool has_highest_weight_generator(const GwaSpec& spec, const WeightPoint& a);

/// Scalar by which X_i or Y_i moves the weight basis vector at alpha
/// (X_i: v_alpha -> c.v_{alpha+e_i}, Y_i: v_alpha -> c.v_{alpha-e_i}).
GaussianRational action_coefficient(const GwaSpec& spec, const WeightPoint& a,
                                    const OffsetVector& alpha, int i, GenKind gen);

/// Finite box of offsets, one closed interval per direction.
struct WindowBox {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    int rank() const { return static_cast<int>(lo.size()); }
    bool contains(const OffsetVector& alpha) const;
};

/// Sparse vector in a windowed weight-module model; keys are offsets.
using WindowVector = std::map<OffsetVector, GaussianRational>;

/// Exact finite model of M(m_a) (variant Verma) or L(m_a) (variant Simple)
/// on a finite box of lattice offsets. Basis vectors are the weight vectors
/// v_alpha; generators act by the scalar ladder coefficients and T_i acts
/// diagonally by the weight coordinates. In the Simple variant, actions
/// leaving supp L(m_a) give zero.
class WindowModule {
   public:
    WindowModule(GwaSpec spec, WeightPoint a, WindowBox box, ModuleVariant variant);

    const GwaSpec& spec() const { return spec_; }
    const WeightPoint& base() const { return base_; }
    const WindowBox& box() const { return box_; }
    ModuleVariant variant() const { return variant_; }
    const SupportRect& simple_support() const { return support_; }

    /// True when alpha indexes a basis vector (inside the box, and inside
    /// supp L for the Simple variant).
    bool has_basis_vector(const OffsetVector& alpha) const;
    /// All basis offsets in lexicographic order.
    std::vector<OffsetVector> basis() const;
    WeightPoint weight_of(const OffsetVector& alpha) const;

   private:
    GwaSpec spec_;
    WeightPoint base_;
    WindowBox box_;
    ModuleVariant variant_;
    SupportRect support_;  // supp L(m_a); consulted by the Simple variant
};

WindowModule realize_window(const GwaSpec& spec, const WeightPoint& a, const WindowBox& box,
                            ModuleVariant variant);

/// Default CLI window: the support box of the requested variant padded by 2
/// in finite directions, clamped to radius 10 in infinite ones, and enlarged
/// to cover every break offset.
WindowBox default_window(const GwaSpec& spec, const WeightPoint& a, ModuleVariant variant);

/// Apply a single generator; throws WindowOverflow when a nonzero image
/// leaves the box.
WindowVector apply_generator(const WindowModule& w, int i, GenKind gen, const WindowVector& v);

/// Apply a base-ring element (acts diagonally through the weights).
WindowVector apply_ring(const WindowModule& w, const RingElement& r, const WindowVector& v);

/// Apply a normal-form algebra element, one generator step at a time.
WindowVector apply_element(const WindowModule& w, const GwaElement& u, const WindowVector& v);

/// Saturate with the raising operators, then strip trailing root factors of
/// each t_i until a single weight vector remains; returns its weight. The
/// result is the top corner of supp L(m_a), is killed by every X_i, and has
/// t_i vanishing at it in all directions. Requires the Simple variant, a
/// nonzero vector, and a box reaching the top corner.
WeightPoint find_top_vector(const WindowModule& w, const WindowVector& v);

}  // namespace gwa

#endif
