#pragma once

#include "k3cr3/util.hpp"

#include <string>
#include <vector>

namespace k3cr3 {

// A class of terminal cyclic quotient points (1/r)(1,-1,b) with multiplicity.
struct BasketPoint {
    int r = 2;  // index, >= 2
    int b = 1;  // weight, gcd(b,r)=1 and 0 < b <= r/2
    int n = 1;  // multiplicity

    auto operator<=>(const BasketPoint&) const = default;
};

// Normalizes a printed point (1/r)(a, r-a, w) to the (r, b) form with
// b = a^{-1} mod r folded into (0, r/2].
BasketPoint normalize_point(int r, int a, int n);

struct Basket {
    std::vector<BasketPoint> points;  // sorted by (r, b), equal classes merged

    int point_count() const;          // N, the number of basket points
    Rational miyaoka_sum() const;     // sum n * (r - 1/r)
    Rational anticanonical_cube(int h0) const;  // 2(h0 - 3) + 2 sum n * t(r,b)
    std::string str() const;

    auto operator<=>(const Basket&) const = default;
};

// Validates point invariants, merges equal (r,b) classes, sorts.
Basket make_basket(std::vector<BasketPoint> points);

// Per-point Riemann-Roch correction c_Q(D) for D of local type i(1/r)(a,-a,1)
// with ab = 1 mod r:  -i (r^2-1)/(12 r) + sum_{j<i} bj(r-bj)/(2r).
Rational c_q(int r, int b, int i);

// The term t(r,b) = b(r-b)/(2r) subtracted per point in
// h^0(-K) = 3 + (-K)^3/2 - sum n*t. Equals (r^2-1)/(12r) - c_q(r,b,r-1); the
// test suite re-derives it through c_q.
Rational genus_contribution(int r, int b);

bool miyaoka_valid(const Basket& basket);  // strict: sum n(r - 1/r) < 24

// All baskets with miyaoka_valid, positive anticanonical degree at the given
// h^0, and valid points. Finite: each point adds at least 3/2 to the Miyaoka
// sum, so N <= 15 and r <= 24. Sorted by (miyaoka sum, points).
// Only fano_index = 1 is enumerable; higher indices are fixture-validated.
std::vector<Basket> enumerate_baskets(int h0 = 1, int fano_index = 1);

struct FixtureReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Checks the basket-point invariants and the Miyaoka bound.
FixtureReport validate_fixture(const Basket& basket);

// Published basket rows for Fano indices 2..4. The third printed weight is
// opaque metadata; points are stored normalized.
struct HigherIndexFixture {
    int fano_index;
    Basket basket;
    std::vector<std::string> printed;  // e.g. "2 x (1/11)(4,7,2)"
    std::vector<std::string> groups;   // possibilities for H
};

const std::vector<HigherIndexFixture>& higher_index_fixtures();

}  // namespace k3cr3
