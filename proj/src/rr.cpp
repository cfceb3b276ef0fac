#include "k3cr3/rr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3cr3 {

namespace {

void check_point(const BasketPoint& p) {
    if (p.r < 2) throw std::invalid_argument("basket point index must be >= 2");
    if (p.b < 1 || 2 * p.b > p.r) throw std::invalid_argument("basket weight out of (0, r/2]");
    if (std::gcd(p.b, p.r) != 1) throw std::invalid_argument("basket weight not coprime to index");
    if (p.n < 1) throw std::invalid_argument("basket multiplicity must be >= 1");
}

long long mod_inverse(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("weight not invertible mod index");
    return (t % m + m) % m;
}

}  // namespace

BasketPoint normalize_point(int r, int a, int n) {
    long long b = mod_inverse(((a % r) + r) % r, r);
    if (2 * b > r) b = r - b;
    BasketPoint p{r, static_cast<int>(b), n};
    check_point(p);
    return p;
}

int Basket::point_count() const {
    int n = 0;
    for (const BasketPoint& p : points) n += p.n;
    return n;
}

Rational Basket::miyaoka_sum() const {
    Rational s = 0;
    for (const BasketPoint& p : points)
        s += Rational(p.n) * (Rational(p.r) - Rational(1, p.r));
    return s;
}

Rational Basket::anticanonical_cube(int h0) const {
    Rational s = 2 * (h0 - 3);
    for (const BasketPoint& p : points) s += 2 * p.n * genus_contribution(p.r, p.b);
    return s;
}

std::string Basket::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) os << " + ";
        os << points[i].n << "x(" << points[i].r << "," << points[i].b << ")";
    }
    return os.str();
}

Basket make_basket(std::vector<BasketPoint> points) {
    for (const BasketPoint& p : points) check_point(p);
    std::sort(points.begin(), points.end(),
              [](const BasketPoint& a, const BasketPoint& b) {
                  return std::tie(a.r, a.b) < std::tie(b.r, b.b);
              });
    std::vector<BasketPoint> merged;
    for (const BasketPoint& p : points) {
        if (!merged.empty() && merged.back().r == p.r && merged.back().b == p.b)
            merged.back().n += p.n;
        else
            merged.push_back(p);
    }
    return Basket{std::move(merged)};
}

Rational c_q(int r, int b, int i) {
    check_point({r, b, 1});
    if (i < 0 || i >= r) throw std::invalid_argument("divisor type out of range");
    Rational s = Rational(-static_cast<long long>(i) * (static_cast<long long>(r) * r - 1), 12LL * r);
    for (int j = 1; j < i; ++j) {
        long long bj = (static_cast<long long>(b) * j) % r;
        s += Rational(bj * (r - bj), 2LL * r);
    }
    return s;
}

Rational genus_contribution(int r, int b) {
    check_point({r, b, 1});
    return Rational(static_cast<long long>(b) * (r - b), 2LL * r);
}

bool miyaoka_valid(const Basket& basket) {
    return basket.miyaoka_sum() < 24;
}

std::vector<Basket> enumerate_baskets(int h0, int fano_index) {
    if (fano_index != 1)
        throw std::invalid_argument("only Fano index 1 is enumerable; higher indices are fixtures");

    // point classes in lexicographic (r, b) order; r - 1/r < 24 caps r at 24
    std::vector<BasketPoint> classes;
    for (int r = 2; r <= 24; ++r)
        for (int b = 1; 2 * b <= r; ++b)
            if (std::gcd(b, r) == 1) classes.push_back({r, b, 1});

    std::vector<Basket> out;
    std::vector<BasketPoint> cur;
    auto rec = [&](auto&& self, std::size_t i, Rational msum) -> void {
        if (i == classes.size()) {
            if (!cur.empty()) {
                Basket b{cur};
                if (b.anticanonical_cube(h0) > 0) out.push_back(b);
            }
            return;
        }
        const auto [r, bw, unused] = classes[i];
        const Rational w = Rational(r) - Rational(1, r);
        self(self, i + 1, msum);
        Rational acc = msum;
        for (int n = 1;; ++n) {
            acc += w;
            if (!(acc < 24)) break;
            cur.push_back({r, bw, n});
            self(self, i + 1, acc);
            cur.pop_back();
        }
    };
    rec(rec, 0, Rational(0));

    std::sort(out.begin(), out.end(), [](const Basket& a, const Basket& b) {
        const Rational ma = a.miyaoka_sum(), mb = b.miyaoka_sum();
        if (ma != mb) return ma < mb;
        return a.points < b.points;
    });
    return out;
}

FixtureReport validate_fixture(const Basket& basket) {
    FixtureReport rep;
    for (const BasketPoint& p : basket.points) {
        try {
            check_point(p);
        } catch (const std::invalid_argument& e) {
            rep.pass = false;
            rep.failures.push_back(e.what());
        }
    }
    if (!miyaoka_valid(basket)) {
        rep.pass = false;
        rep.failures.push_back("Miyaoka sum reaches 24");
    }
    return rep;
}

const std::vector<HigherIndexFixture>& higher_index_fixtures() {
    auto B = [](std::initializer_list<BasketPoint> ps) {
        return make_basket(std::vector<BasketPoint>(ps));
    };
    static const std::vector<HigherIndexFixture> rows = {
        // index 2
        {2, B({normalize_point(3, 1, 2), normalize_point(7, 3, 2)}),
         {"2 x (1/3)(1,2,2)", "2 x (1/7)(3,4,2)"}, {"8,4,2"}},
        {2, B({normalize_point(3, 1, 4), normalize_point(5, 1, 2)}),
         {"4 x (1/3)(1,2,2)", "2 x (1/5)(1,4,2)"}, {"8,4,2"}},
        {2, B({normalize_point(5, 2, 2), normalize_point(7, 1, 2)}),
         {"2 x (1/5)(2,3,2)", "2 x (1/7)(1,6,2)"}, {"8,4,2"}},
        {2, B({normalize_point(11, 4, 2)}), {"2 x (1/11)(4,7,2)"}, {"8,4,2"}},
        {2, B({normalize_point(5, 1, 2), normalize_point(7, 3, 2)}),
         {"2 x (1/5)(1,4,2)", "2 x (1/7)(3,4,2)"}, {"8,4,2"}},
        {2, B({normalize_point(3, 1, 3), normalize_point(5, 1, 3)}),
         {"3 x (1/3)(1,2,2)", "3 x (1/5)(1,4,2)"}, {"3,3,6"}},
        {2, B({normalize_point(7, 3, 3)}), {"3 x (1/7)(3,4,2)"}, {"3,3,6"}},
        {2, B({normalize_point(3, 1, 2), normalize_point(9, 4, 2)}),
         {"2 x (1/3)(1,2,2)", "2 x (1/9)(4,5,2)"}, {"8,4,2"}},
        // index 3
        {3, B({normalize_point(5, 1, 4)}), {"4 x (1/5)(1,4,3)"}, {"8,4,2", "2,2,2,4"}},
        {3, B({normalize_point(2, 1, 2), normalize_point(8, 1, 2)}),
         {"2 x (1/2)(1,1,1)", "2 x (1/8)(1,7,3)"}, {"8,4,2"}},
        {3, B({normalize_point(2, 1, 4), normalize_point(7, 1, 2)}),
         {"4 x (1/2)(1,1,1)", "2 x (1/7)(1,6,3)"}, {"8,4,2"}},
        // index 4
        {4, B({normalize_point(9, 2, 2)}), {"2 x (1/9)(2,7,4)"}, {"8,4,2"}},
        {4, B({normalize_point(7, 1, 3)}), {"3 x (1/7)(1,6,4)"}, {"3,3,6"}},
        {4, B({normalize_point(3, 1, 4), normalize_point(5, 1, 2)}),
         {"4 x (1/3)(1,2,1)", "2 x (1/5)(1,4,4)"}, {"8,4,2"}},
        {4, B({normalize_point(5, 2, 2), normalize_point(7, 1, 2)}),
         {"2 x (1/5)(2,3,4)", "2 x (1/7)(1,6,4)"}, {"8,4,2"}},
    };
    return rows;
}

}  // namespace k3cr3
