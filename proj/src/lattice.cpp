#include "k3cr3/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace k3cr3 {

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < gram.size(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

Lattice make_lattice(std::vector<std::vector<long long>> gram) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw std::invalid_argument("gram matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix must be symmetric");
    return Lattice{std::move(gram)};
}

Int lattice_determinant(const Lattice& l) {
    // Bareiss fraction-free elimination
    const int n = l.rank();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = l.gram[i][j];
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

AbelianGroup discriminant_group(const Lattice& l) {
    if (lattice_determinant(l) == 0) throw std::invalid_argument("degenerate form");
    std::vector<std::vector<Int>> a(l.rank(), std::vector<Int>(l.rank()));
    for (int i = 0; i < l.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j) a[i][j] = l.gram[i][j];
    std::vector<long long> facs;
    for (const Int& d : smith_invariants(a))
        if (d > 1) facs.push_back(static_cast<long long>(d));
    return facs.empty() ? trivial_group() : canonicalize(facs);
}

Lattice scale(const Lattice& l, long long k) {
    if (k < 1) throw std::invalid_argument("scale factor must be positive");
    Lattice out = l;
    for (auto& row : out.gram)
        for (auto& v : row) v *= k * k;
    return out;
}

bool finite_index_compatible(const Int& det_sub, const Int& det_sup) {
    if (det_sup == 0) return false;
    if (det_sub % det_sup != 0) return false;
    Int q = det_sub / det_sup;
    if (q <= 0) return false;
    Int r = boost::multiprecision::sqrt(q);
    return r * r == q;
}

std::pair<int, int> signature(const Lattice& l) {
    const int n = l.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = l.gram[i][j];
    int pos = 0, neg = 0;
    for (int c = 0; c < n; ++c) {
        if (a[c][c] == 0) {
            int sw = -1;
            for (int r = c + 1; r < n; ++r)
                if (a[r][r] != 0) { sw = r; break; }
            if (sw >= 0) {
                std::swap(a[c], a[sw]);
                for (int r = 0; r < n; ++r) std::swap(a[r][c], a[r][sw]);
            } else {
                int off = -1;
                for (int r = c + 1; r < n; ++r)
                    if (a[r][c] != 0) { off = r; break; }
                if (off < 0) throw std::invalid_argument("degenerate form");
                // add row+column `off` into `c` to create a nonzero pivot
                for (int k = 0; k < n; ++k) a[c][k] += a[off][k];
                for (int r = 0; r < n; ++r) a[r][c] += a[r][off];
            }
        }
        const Rational p = a[c][c];
        if (p > 0) ++pos; else ++neg;
        for (int r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / p;
            for (int k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
        }
        for (int k = c + 1; k < n; ++k) {
            const Rational f = a[c][k] / p;
            for (int r = 0; r < n; ++r) a[r][k] -= f * a[r][c];
        }
    }
    return {pos, neg};
}

namespace {

long long scale_index_between(const Lattice& inner, const Lattice& outer) {
    if (inner.rank() != outer.rank()) throw std::invalid_argument("rank mismatch");
    long long mu2 = 0;
    for (int i = 0; i < inner.rank(); ++i)
        for (int j = 0; j < inner.rank(); ++j) {
            long long oi = outer.gram[i][j];
            long long ii = inner.gram[i][j];
            if (oi == 0) {
                if (ii != 0) throw std::invalid_argument("inner is not a scale of outer");
                continue;
            }
            if (ii % oi != 0) throw std::invalid_argument("inner is not a scale of outer");
            long long q = ii / oi;
            if (mu2 == 0) mu2 = q;
            else if (mu2 != q) throw std::invalid_argument("inner is not a scale of outer");
        }
    if (mu2 == 0) mu2 = 1;  // outer (and inner) identically zero off the checked entries
    long long mu = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(mu2))));
    while (mu * mu < mu2) ++mu;
    while (mu * mu > mu2) --mu;
    if (mu < 1 || mu * mu != mu2) throw std::invalid_argument("inner is not a scale of outer");
    return mu;
}

}  // namespace

SandwichReport sandwich_feasible(const Lattice& inner, const Lattice& outer,
                                 const DiagonalFamily& family) {
    scale_index_between(inner, outer);  // validates the precondition
    const Int det_inner = lattice_determinant(inner);
    const Int det_outer = lattice_determinant(outer);
    Int tail_det = 1;
    for (long long t : family.tail) tail_det *= t;
    if (family.stride == 0 || tail_det == 0)
        throw std::invalid_argument("degenerate middle family");

    SandwichReport rep;
    const Int abs_inner = abs(det_inner);
    for (long long a = 1;; ++a) {
        Int det_mid = Int(family.stride) * a * tail_det;
        if (abs(det_mid) > abs_inner) break;  // a finite-index sublattice determinant divides
        rep.exhausted_bound = a;
        if (finite_index_compatible(det_inner, det_mid) &&
            finite_index_compatible(det_mid, det_outer)) {
            rep.feasible = true;
            rep.witness = a;
            return rep;
        }
    }
    return rep;
}

SandwichReport orbit_class_lattice_check(long long mu, long long orbit_size,
                                         long long curve_self_int,
                                         const Lattice& invariant_gram) {
    if (curve_self_int != -2 * orbit_size)
        throw std::invalid_argument("orbit divisor self-intersection must be -2 * orbit size");
    // gcd of the values of the quadratic form: generated by the diagonal and
    // twice the off-diagonal entries
    long long stride = 0;
    const int n = invariant_gram.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            stride = std::gcd(stride, i == j ? invariant_gram.gram[i][i]
                                             : 2 * invariant_gram.gram[i][j]);
    if (stride == 0) stride = 1;
    DiagonalFamily family{stride, {curve_self_int}};
    return sandwich_feasible(scale(invariant_gram, mu), invariant_gram, family);
}

}  // namespace k3cr3
