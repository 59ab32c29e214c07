#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "mixedvol/rational.hpp"

namespace mixedvol {

using Exponent = long long;
using ExponentVector = std::vector<Exponent>;

inline Exponent total_degree(const ExponentVector& m) {
    Exponent sum = 0;
    for (Exponent e : m) sum += e;
    return sum;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

/// All exponent vectors in num_vars variables of the given total degree, in
/// lexicographic order.
inline std::vector<ExponentVector> monomials_of_degree(int num_vars, Exponent degree) {
    std::vector<ExponentVector> out;
    ExponentVector current(num_vars, 0);
    std::function<void(int, Exponent)> walk = [&](int var, Exponent left) {
        if (var == num_vars - 1) {
            current[var] = left;
            out.push_back(current);
            return;
        }
        for (Exponent e = 0; e <= left; ++e) {
            current[var] = e;
            walk(var + 1, left - e);
        }
    };
    if (num_vars == 0) return out;
    walk(0, degree);
    return out;
}

namespace detail {

struct GenOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const Exponent da = total_degree(a);
        const Exponent db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Deduplicated pairwise sums of two exponent-vector sets. Uses a dense mark
// grid when the bounding box is small enough, which is what keeps large
// equigenerated products (powers of graded pieces) affordable.
inline std::vector<ExponentVector> sumset(const std::vector<ExponentVector>& xs,
                                          const std::vector<ExponentVector>& ys) {
    const size_t d = xs[0].size();
    std::vector<Exponent> box(d, 0);
    for (size_t i = 0; i < d; ++i) {
        Exponent mx = 0, my = 0;
        for (const auto& x : xs) mx = std::max(mx, x[i]);
        for (const auto& y : ys) my = std::max(my, y[i]);
        box[i] = mx + my + 1;
    }
    constexpr long long kDenseCap = 1LL << 26;
    long long cells = 1;
    bool dense = true;
    for (size_t i = 0; i < d; ++i) {
        if (cells > kDenseCap / box[i]) { dense = false; break; }
        cells *= box[i];
    }

    std::vector<ExponentVector> out;
    if (dense) {
        std::vector<uint8_t> marks(cells, 0);
        std::vector<long long> stride(d, 1);
        for (size_t i = 1; i < d; ++i) stride[i] = stride[i - 1] * box[i - 1];
        std::vector<long long> ybase(ys.size());
        for (size_t j = 0; j < ys.size(); ++j) {
            long long idx = 0;
            for (size_t i = 0; i < d; ++i) idx += ys[j][i] * stride[i];
            ybase[j] = idx;
        }
        long long marked = 0;
        for (const auto& x : xs) {
            long long xidx = 0;
            for (size_t i = 0; i < d; ++i) xidx += x[i] * stride[i];
            for (long long yb : ybase) {
                uint8_t& cell = marks[xidx + yb];
                if (!cell) { cell = 1; ++marked; }
            }
        }
        out.reserve(marked);
        for (long long idx = 0; idx < cells; ++idx) {
            if (!marks[idx]) continue;
            ExponentVector m(d);
            long long rest = idx;
            for (size_t i = 0; i < d; ++i) {
                m[i] = rest % box[i];
                rest /= box[i];
            }
            out.push_back(std::move(m));
        }
    } else {
        std::set<ExponentVector> seen;
        for (const auto& x : xs) {
            for (const auto& y : ys) seen.insert(exponent_add(x, y));
        }
        out.assign(seen.begin(), seen.end());
    }
    return out;
}

}  // namespace detail

/// A monomial ideal in a fixed polynomial ring, held as its unique minimal
/// generating antichain sorted by (total degree, lex). The empty list is the
/// zero ideal; the single generator x^0 is the whole ring.
class MonomialIdeal {
  public:
    static MonomialIdeal from_generators(int num_vars, std::vector<ExponentVector> gens) {
        if (num_vars <= 0) throw std::invalid_argument("need at least one variable");
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != num_vars) {
                throw std::invalid_argument("generator arity mismatch");
            }
            for (Exponent e : g) {
                if (e < 0) throw std::invalid_argument("negative exponent");
            }
        }
        MonomialIdeal out;
        out.num_vars_ = num_vars;
        out.gens_ = minimalize(std::move(gens));
        return out;
    }

    static MonomialIdeal zero(int num_vars) { return from_generators(num_vars, {}); }

    static MonomialIdeal ring(int num_vars) {
        return from_generators(num_vars, {ExponentVector(num_vars, 0)});
    }

    /// The maximal ideal (x_1, ..., x_n).
    static MonomialIdeal maximal(int num_vars) {
        std::vector<ExponentVector> gens;
        for (int i = 0; i < num_vars; ++i) {
            ExponentVector e(num_vars, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return from_generators(num_vars, std::move(gens));
    }

    /// m^k, generated by all monomials of degree exactly k.
    static MonomialIdeal mpower(int num_vars, Exponent k) {
        if (k < 0) throw std::invalid_argument("negative power of the maximal ideal");
        return from_generators(num_vars, monomials_of_degree(num_vars, k));
    }

    int num_vars() const { return num_vars_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_ring() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }

    bool contains(const ExponentVector& m) const {
        if (static_cast<int>(m.size()) != num_vars_) {
            throw std::invalid_argument("monomial arity mismatch");
        }
        const Exponent deg = total_degree(m);
        for (const auto& g : gens_) {
            if (total_degree(g) > deg) break;  // gens sorted by degree
            if (divides(g, m)) return true;
        }
        return false;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

  private:
    MonomialIdeal() = default;

    static std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
        std::sort(gens.begin(), gens.end(), detail::GenOrder{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        // Distinct generators of equal degree never divide each other, so
        // only strictly smaller degrees need checking; equigenerated sets
        // pass through untouched.
        std::vector<ExponentVector> minimal;
        std::vector<Exponent> degrees;
        for (auto& g : gens) {
            const Exponent deg = total_degree(g);
            bool redundant = false;
            for (size_t i = 0; i < minimal.size() && degrees[i] < deg; ++i) {
                if (divides(minimal[i], g)) { redundant = true; break; }
            }
            if (!redundant) {
                degrees.push_back(deg);
                minimal.push_back(std::move(g));
            }
        }
        return minimal;
    }

    int num_vars_ = 0;
    std::vector<ExponentVector> gens_;
};

inline void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("ideals live in different rings");
    }
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.num_vars());
    return MonomialIdeal::from_generators(
        a.num_vars(), detail::sumset(a.generators(), b.generators()));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::from_generators(a.num_vars(), std::move(gens));
}

/// A^k by repeated squaring; A^0 is the whole ring.
inline MonomialIdeal power(const MonomialIdeal& a, Exponent k) {
    if (k < 0) throw std::invalid_argument("negative ideal power");
    MonomialIdeal result = MonomialIdeal::ring(a.num_vars());
    MonomialIdeal base = a;
    Exponent e = k;
    while (e > 0) {
        if (e & 1) result = product(result, base);
        if (e > 1) base = product(base, base);
        e >>= 1;
    }
    return result;
}

inline bool contains_monomial(const MonomialIdeal& a, const ExponentVector& m) {
    return a.contains(m);
}

/// Largest degree among the minimal generators.
inline Exponent max_gen_degree(const MonomialIdeal& a) {
    if (a.is_zero()) throw std::invalid_argument("zero ideal has no generator degree");
    Exponent best = 0;
    for (const auto& g : a.generators()) best = std::max(best, total_degree(g));
    return best;
}

/// True iff A contains a power of every variable (equivalently, contains
/// some power of the maximal ideal).
inline bool is_m_primary(const MonomialIdeal& a) {
    const int d = a.num_vars();
    for (int k = 0; k < d; ++k) {
        bool found = false;
        for (const auto& g : a.generators()) {
            bool pure = true;
            for (int i = 0; i < d; ++i) {
                if (i != k && g[i] > 0) { pure = false; break; }
            }
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

/// Minimal c with m^c contained in A, by testing successive powers.
inline Exponent smallest_mpower_inside(const MonomialIdeal& a) {
    if (!is_m_primary(a)) {
        throw std::invalid_argument("ideal does not contain a power of the maximal ideal");
    }
    if (a.is_ring()) return 0;
    const int d = a.num_vars();
    // A degree bound: the sum of the minimal pure-power exponents always works.
    Exponent limit = 1;
    for (int k = 0; k < d; ++k) {
        Exponent best = 0;
        for (const auto& g : a.generators()) {
            bool pure = true;
            for (int i = 0; i < d; ++i) {
                if (i != k && g[i] > 0) { pure = false; break; }
            }
            if (pure && (best == 0 || g[k] < best)) best = g[k];
        }
        limit += best;
    }
    for (Exponent c = 1; c <= limit; ++c) {
        bool all_in = true;
        for (const auto& m : monomials_of_degree(d, c)) {
            if (!a.contains(m)) { all_in = false; break; }
        }
        if (all_in) return c;
    }
    throw std::logic_error("no power of the maximal ideal fit inside the bound");
}

/// dim_k of the monomial span of A \ B up to the degree bound, by direct
/// enumeration of the box |m| <= bound. Requires B to be a subideal of A, so
/// the count equals the vector-space dimension of (A/B) truncated at the
/// bound.
inline long long quotient_dim(const MonomialIdeal& a, const MonomialIdeal& b,
                              Exponent degree_bound) {
    check_same_ring(a, b);
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    for (const auto& g : b.generators()) {
        if (!a.contains(g)) {
            throw std::invalid_argument("second ideal is not contained in the first");
        }
    }
    long long count = 0;
    for (Exponent deg = 0; deg <= degree_bound; ++deg) {
        for (const auto& m : monomials_of_degree(a.num_vars(), deg)) {
            if (a.contains(m) && !b.contains(m)) ++count;
        }
    }
    return count;
}

/// Number of monomials of A at each total degree 0..max_level, computed by
/// seeding generators at their degree and propagating marks one level at a
/// time over the projection that drops the last exponent.
inline std::vector<long long> count_monomials_by_level(const MonomialIdeal& a,
                                                       Exponent max_level) {
    if (max_level < 0) throw std::invalid_argument("negative level bound");
    const int d = a.num_vars();
    std::vector<long long> counts(max_level + 1, 0);
    if (a.is_zero()) return counts;

    Exponent first_level = max_level + 1;
    for (const auto& g : a.generators()) first_level = std::min(first_level, total_degree(g));
    if (first_level > max_level) return counts;

    const int pd = d - 1;  // projected dimensionality
    constexpr long long kDenseCap = 1LL << 26;
    long long cells = 1;
    bool dense = true;
    for (int i = 0; i < pd; ++i) {
        if (cells > kDenseCap / (max_level + 1)) { dense = false; break; }
        cells *= (max_level + 1);
    }

    if (dense) {
        std::vector<uint8_t> marks(cells, 0);
        std::vector<long long> stride(pd, 1);
        for (int i = 1; i < pd; ++i) stride[i] = stride[i - 1] * (max_level + 1);
        long long marked = 0;

        auto seed = [&](const ExponentVector& g) {
            long long idx = 0;
            for (int i = 0; i < pd; ++i) idx += g[i] * stride[i];
            if (!marks[idx]) { marks[idx] = 1; ++marked; }
        };

        size_t next_gen = 0;
        const auto& gens = a.generators();
        for (Exponent level = first_level; level <= max_level; ++level) {
            if (level > first_level) {
                // In-place downward sweep: a cell inherits a mark from the
                // previous level (last-variable bump) or from a neighbour one
                // step below in any projected direction.
                std::vector<Exponent> coord(pd, 0);
                const Exponent cap = level > max_level ? max_level : level;
                // Only cells with coordinate sum <= level can be reachable.
                std::function<void(int, long long, Exponent)> sweep =
                    [&](int axis, long long base, Exponent left) {
                    if (axis < 0) {
                        if (marks[base]) return;
                        for (int i = 0; i < pd; ++i) {
                            if (coord[i] > 0 && marks[base - stride[i]]) {
                                marks[base] = 1;
                                ++marked;
                                return;
                            }
                        }
                        return;
                    }
                    const Exponent hi = std::min<Exponent>(left, cap);
                    for (Exponent v = hi; v >= 0; --v) {
                        coord[axis] = v;
                        sweep(axis - 1, base + v * stride[axis], left - v);
                    }
                };
                sweep(pd - 1, 0, level);
            }
            while (next_gen < gens.size() && total_degree(gens[next_gen]) <= level) {
                if (total_degree(gens[next_gen]) == level) seed(gens[next_gen]);
                ++next_gen;
            }
            counts[level] = marked;
        }
    } else {
        std::set<ExponentVector> current;
        size_t next_gen = 0;
        const auto& gens = a.generators();
        for (Exponent level = first_level; level <= max_level; ++level) {
            if (level > first_level) {
                std::set<ExponentVector> grown = current;  // last-variable bump
                for (const auto& u : current) {
                    for (int i = 0; i < pd; ++i) {
                        ExponentVector v = u;
                        ++v[i];
                        grown.insert(std::move(v));
                    }
                }
                current = std::move(grown);
            }
            while (next_gen < gens.size() && total_degree(gens[next_gen]) <= level) {
                if (total_degree(gens[next_gen]) == level) {
                    current.insert(ExponentVector(gens[next_gen].begin(),
                                                  gens[next_gen].end() - 1));
                }
                ++next_gen;
            }
            counts[level] = static_cast<long long>(current.size());
        }
    }
    return counts;
}

/// Number of monomials of A with total degree <= bound.
inline long long count_ideal_monomials_up_to(const MonomialIdeal& a, Exponent bound) {
    const std::vector<long long> counts = count_monomials_by_level(a, bound);
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

/// The monomials of A with total degree <= bound, lex-sorted per degree
/// (desk-scale enumeration helper for level-set materialization).
inline std::vector<ExponentVector> monomials_in_ideal_up_to(const MonomialIdeal& a,
                                                            Exponent bound) {
    std::vector<ExponentVector> out;
    for (Exponent deg = 0; deg <= bound; ++deg) {
        for (auto& m : monomials_of_degree(a.num_vars(), deg)) {
            if (a.contains(m)) out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace mixedvol
