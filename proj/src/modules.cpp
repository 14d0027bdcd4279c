#include "gwa/modules.hpp"

#include <algorithm>
#include <cstdlib>

namespace gwa {

CellDecomposition::CellDecomposition(const GwaSpec& spec, const WeightPoint& a)
    : base_(a), breaks_(break_positions(spec, a)) {
    segments_.resize(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) {
        const auto& K = breaks_.directions[i].offsets;
        std::vector<SupportInterval>& segs = segments_[i];
        ExtInt lo = ExtInt::neg_inf();
        for (std::int64_t k : K) {
            segs.push_back({lo, ExtInt::finite(k)});
            lo = ExtInt::finite(k + 1);
        }
        segs.push_back({lo, ExtInt::pos_inf()});
        cell_count_ *= static_cast<int>(segs.size());
    }
    // Directed wall crossings between neighboring cells.
    for (int cell = 0; cell < cell_count_; ++cell) {
        std::vector<int> idx = cell_index(cell);
        for (int i = 0; i < spec.rank(); ++i) {
            ExtInt wall_up = segments_[i][idx[i]].hi;
            if (wall_up.is_finite() && wall_up.get() >= 0) {
                std::vector<int> up = idx;
                ++up[i];
                edges_.push_back({cell, cell_id(up)});
            }
            ExtInt wall_down = segments_[i][idx[i]].lo;
            if (wall_down.is_finite() && wall_down.get() - 1 < 0) {
                std::vector<int> down = idx;
                --down[i];
                edges_.push_back({cell, cell_id(down)});
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<int> CellDecomposition::cell_index(int cell) const {
    std::vector<int> idx(rank());
    for (int i = 0; i < rank(); ++i) {
        int radix = static_cast<int>(segments_[i].size());
        idx[i] = cell % radix;
        cell /= radix;
    }
    return idx;
}

int CellDecomposition::cell_id(const std::vector<int>& index) const {
    int cell = 0;
    for (int i = rank() - 1; i >= 0; --i)
        cell = cell * static_cast<int>(segments_[i].size()) + index[i];
    return cell;
}

SupportRect CellDecomposition::cell_support(int cell) const {
    std::vector<int> idx = cell_index(cell);
    SupportRect rect{base_, {}};
    for (int i = 0; i < rank(); ++i) rect.intervals.push_back(segments_[i][idx[i]]);
    return rect;
}

int CellDecomposition::cell_of(const OffsetVector& alpha) const {
    if (static_cast<int>(alpha.size()) != rank())
        throw InvalidInput("offset vector has wrong rank");
    std::vector<int> idx(rank());
    for (int i = 0; i < rank(); ++i) {
        const auto& segs = segments_[i];
        int j = 0;
        while (!segs[j].contains(alpha[i])) ++j;
        idx[i] = j;
    }
    return cell_id(idx);
}

int CellDecomposition::center_cell() const { return cell_of(OffsetVector(rank(), 0)); }

bool SubmoduleLattice::includes(int outer, int inner) const {
    const auto& big = submodules.at(outer);
    const auto& small = submodules.at(inner);
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

CellDecomposition cells(const GwaSpec& spec, const WeightPoint& a) {
    return CellDecomposition(spec, a);
}

SubmoduleLattice enumerate_submodules(const GwaSpec& spec, const WeightPoint& a) {
    CellDecomposition decomp(spec, a);
    const int m = decomp.cell_count();
    if (m > 20)
        throw SizeLimitError("cell count " + std::to_string(m) +
                             " exceeds the exhaustive enumeration limit of 20");
    std::vector<std::uint32_t> out_mask(m, 0);
    for (const auto& [from, to] : decomp.edges()) out_mask[from] |= 1u << to;

    SubmoduleLattice lattice;
    for (std::uint32_t set = 0; set < (1u << m); ++set) {
        bool closed = true;
        for (int c = 0; c < m && closed; ++c)
            if (set & (1u << c)) closed = (out_mask[c] & ~set) == 0;
        if (!closed) continue;
        std::vector<int> cells_in;
        for (int c = 0; c < m; ++c)
            if (set & (1u << c)) cells_in.push_back(c);
        lattice.submodules.push_back(std::move(cells_in));
    }
    std::sort(lattice.submodules.begin(), lattice.submodules.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x < y;
              });
    return lattice;
}

std::vector<SupportRect> simple_subquotients(const GwaSpec& spec, const WeightPoint& a) {
    CellDecomposition decomp(spec, a);
    std::vector<SupportRect> out;
    out.reserve(decomp.cell_count());
    for (int c = 0; c < decomp.cell_count(); ++c) out.push_back(decomp.cell_support(c));
    return out;
}

std::int64_t composition_length(const GwaSpec& spec, const WeightPoint& a) {
    return CellDecomposition(spec, a).cell_count();
}

bool is_highest_weight_module(const GwaSpec& spec, const WeightPoint& a) {
    BreakData breaks = break_positions(spec, a);
    return std::all_of(breaks.directions.begin(), breaks.directions.end(),
                       [](const DirectionBreaks& d) { return d.k_up.is_finite(); });
}

bool has_highest_weight_generator(const GwaSpec& spec, const WeightPoint& a) {
    BreakData breaks = break_positions(spec, a);
    return std::all_of(breaks.directions.begin(), breaks.directions.end(),
                       [](const DirectionBreaks& d) { return d.k_up == ExtInt::finite(0); });
}

GaussianRational action_coefficient(const GwaSpec& spec, const WeightPoint& a,
                                    const OffsetVector& alpha, int i, GenKind gen) {
    if (static_cast<int>(alpha.size()) != spec.rank() ||
        static_cast<int>(a.size()) != spec.rank())
        throw InvalidInput("offset vector has wrong rank");
    if (i < 1 || i > spec.rank()) throw InvalidInput("direction out of range");
    std::int64_t ai = alpha[i - 1];
    auto weight_at = [&](std::int64_t k) {
        return a[i - 1] + spec.step(i) * GaussianRational(Rational(BigInt(k)));
    };
    if (gen == GenKind::X)
        return ai >= 0 ? GaussianRational(1) : spec.t_at(i, weight_at(ai));
    return ai <= 0 ? GaussianRational(1) : spec.t_at(i, weight_at(ai - 1));
}

bool WindowBox::contains(const OffsetVector& alpha) const {
    if (alpha.size() != lo.size()) throw InvalidInput("offset vector has wrong rank");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] < lo[i] || alpha[i] > hi[i]) return false;
    return true;
}

WindowModule::WindowModule(GwaSpec spec, WeightPoint a, WindowBox box, ModuleVariant variant)
    : spec_(std::move(spec)),
      base_(std::move(a)),
      box_(std::move(box)),
      variant_(variant),
      support_(support_of_simple(spec_, base_)) {
    if (box_.rank() != spec_.rank() || static_cast<int>(base_.size()) != spec_.rank())
        throw InvalidInput("window box has wrong rank");
    for (int i = 0; i < spec_.rank(); ++i)
        if (box_.lo[i] > box_.hi[i]) throw InvalidInput("empty window box");
}

bool WindowModule::has_basis_vector(const OffsetVector& alpha) const {
    if (!box_.contains(alpha)) return false;
    return variant_ == ModuleVariant::Verma || support_.contains(alpha);
}

std::vector<OffsetVector> WindowModule::basis() const {
    std::vector<OffsetVector> out;
    OffsetVector alpha = box_.lo;
    while (true) {
        if (has_basis_vector(alpha)) out.push_back(alpha);
        int i = spec_.rank() - 1;
        while (i >= 0 && alpha[i] == box_.hi[i]) {
            alpha[i] = box_.lo[i];
            --i;
        }
        if (i < 0) break;
        ++alpha[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeightPoint WindowModule::weight_of(const OffsetVector& alpha) const {
    WeightPoint w(spec_.rank());
    for (int i = 1; i <= spec_.rank(); ++i)
        w[i - 1] = base_[i - 1] + spec_.step(i) * GaussianRational(Rational(BigInt(alpha[i - 1])));
    return w;
}

WindowModule realize_window(const GwaSpec& spec, const WeightPoint& a, const WindowBox& box,
                            ModuleVariant variant) {
    return WindowModule(spec, a, box, variant);
}

WindowBox default_window(const GwaSpec& spec, const WeightPoint& a, ModuleVariant variant) {
    BreakData breaks = break_positions(spec, a);
    SupportRect supp = variant == ModuleVariant::Simple ? support_of_simple(spec, a)
                                                        : support_of_verma(spec, a);
    WindowBox box;
    for (int i = 0; i < spec.rank(); ++i) {
        const SupportInterval& iv = supp.intervals[i];
        std::int64_t lo = iv.lo.is_finite() ? iv.lo.get() - 2 : -10;
        std::int64_t hi = iv.hi.is_finite() ? iv.hi.get() + 2 : 10;
        const auto& K = breaks.directions[i].offsets;
        if (!K.empty()) {
            lo = std::min(lo, K.front() - 2);
            hi = std::max(hi, K.back() + 2);
        }
        box.lo.push_back(lo);
        box.hi.push_back(hi);
    }
    return box;
}

WindowVector apply_generator(const WindowModule& w, int i, GenKind gen, const WindowVector& v) {
    if (i < 1 || i > w.spec().rank()) throw InvalidInput("direction out of range");
    WindowVector out;
    for (const auto& [alpha, coeff] : v) {
        if (coeff.is_zero()) continue;
        if (!w.has_basis_vector(alpha)) throw InvalidInput("vector outside the window basis");
        GaussianRational c = action_coefficient(w.spec(), w.base(), alpha, i, gen);
        if (c.is_zero()) continue;
        OffsetVector target = alpha;
        target[i - 1] += gen == GenKind::X ? 1 : -1;
        if (w.variant() == ModuleVariant::Simple && !w.simple_support().contains(target))
            continue;  // the action leaves supp L and gives zero in the quotient
        if (!w.box().contains(target))
            throw WindowOverflow("action image leaves the window box");
        auto [it, inserted] = out.try_emplace(target, coeff * c);
        if (!inserted) {
            it->second += coeff * c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

WindowVector apply_ring(const WindowModule& w, const RingElement& r, const WindowVector& v) {
    WindowVector out;
    for (const auto& [alpha, coeff] : v) {
        if (coeff.is_zero()) continue;
        GaussianRational c = evaluate(r, w.weight_of(alpha));
        if (c.is_zero()) continue;
        out.emplace(alpha, coeff * c);
    }
    return out;
}

WindowVector apply_element(const WindowModule& w, const GwaElement& u, const WindowVector& v) {
    if (u.rank() != w.spec().rank()) throw InvalidInput("element rank does not match the window");
    WindowVector result;
    for (const auto& [beta, r] : u.components()) {
        WindowVector tmp = v;
        for (int i = 1; i <= w.spec().rank(); ++i) {
            GenKind gen = beta[i - 1] > 0 ? GenKind::X : GenKind::Y;
            for (std::int64_t step = 0; step < std::abs(beta[i - 1]) && !tmp.empty(); ++step)
                tmp = apply_generator(w, i, gen, tmp);
        }
        tmp = apply_ring(w, r, tmp);
        for (const auto& [alpha, c] : tmp) {
            auto [it, inserted] = result.try_emplace(alpha, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) result.erase(it);
            }
        }
    }
    return result;
}

WeightPoint find_top_vector(const WindowModule& w, const WindowVector& v) {
    const GwaSpec& spec = w.spec();
    if (w.variant() != ModuleVariant::Simple)
        throw InvalidInput("find_top_vector requires the simple-variant window");
    if (!is_highest_weight_module(spec, w.base()))
        throw InvalidInput("L(m_a) is not a highest weight module");
    BreakData breaks = break_positions(spec, w.base());
    for (int i = 0; i < spec.rank(); ++i)
        if (w.box().hi[i] < breaks.directions[i].k_up.get())
            throw InvalidInput("window does not reach the top corner of the support");
    if (v.empty()) throw InvalidInput("starting vector must be nonzero");

    // Saturate with the raising operators: X_i commute, so one pass suffices.
    WindowVector current = v;
    for (int i = 1; i <= spec.rank(); ++i) {
        for (;;) {
            WindowVector next = apply_generator(w, i, GenKind::X, current);
            if (next.empty()) break;
            current = std::move(next);
        }
    }

    // Strip trailing root factors of each t_i while the result stays nonzero;
    // the factor that finally kills it names the weight coordinate.
    for (int i = 1; i <= spec.rank(); ++i) {
        const auto& roots = spec.t(i).roots;
        bool killed = false;
        for (std::size_t r = roots.size(); r-- > 0;) {
            RingElement factor = RingElement::variable(spec.rank(), i) -
                                 RingElement::constant(spec.rank(), roots[r]);
            WindowVector next = apply_ring(w, factor, current);
            if (next.empty()) {
                killed = true;
                break;
            }
            current = std::move(next);
        }
        if (!killed) throw InvalidInput("t_i does not annihilate the saturated vector");
    }
    if (current.size() != 1)
        throw InvalidInput("saturation did not end in a single weight vector");
    return w.weight_of(current.begin()->first);
}

}  // namespace gwa
