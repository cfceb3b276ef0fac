#include "k3cr3/abelian.hpp"

#include "k3cr3/util.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cr3 {

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.empty()) return out;
    out.reserve(lam.front());
    for (int col = 1; col <= lam.front(); ++col) {
        int rows = 0;
        for (int part : lam)
            if (part >= col) ++rows;
        out.push_back(rows);
    }
    return out;
}

bool diagram_contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (outer[i] < inner[i]) return false;
    return true;
}

long long AbelianGroup::order() const {
    long long n = 1;
    for (const auto& [p, lam] : prime_parts)
        for (int e : lam)
            for (int i = 0; i < e; ++i) n *= p;
    return n;
}

int AbelianGroup::rank() const {
    std::size_t r = 0;
    for (const auto& [p, lam] : prime_parts) r = std::max(r, lam.size());
    return static_cast<int>(r);
}

long long AbelianGroup::exponent() const {
    long long e = 1;
    for (const auto& [p, lam] : prime_parts) {
        long long q = 1;
        for (int i = 0; i < lam.front(); ++i) q *= p;
        e *= q;
    }
    return e;
}

std::vector<long long> AbelianGroup::invariant_factors() const {
    if (trivial()) return {1};
    const int r = rank();
    std::vector<long long> facs(r, 1);
    for (const auto& [p, lam] : prime_parts)
        for (std::size_t row = 0; row < lam.size(); ++row) {
            // largest invariant factor takes the largest exponent
            long long q = 1;
            for (int i = 0; i < lam[row]; ++i) q *= p;
            facs[r - 1 - static_cast<int>(row)] *= q;
        }
    return facs;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    auto facs = invariant_factors();
    for (std::size_t i = 0; i < facs.size(); ++i) {
        if (i) os << ',';
        os << facs[i];
    }
    return os.str();
}

AbelianGroup canonicalize(const std::vector<long long>& factors) {
    AbelianGroup g;
    for (long long f : factors) {
        if (f < 1) throw std::invalid_argument("group factor must be positive");
        long long m = f;
        for (long long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            g.prime_parts[p].push_back(e);
        }
        if (m > 1) g.prime_parts[m].push_back(1);
    }
    for (auto& [p, lam] : g.prime_parts)
        std::sort(lam.begin(), lam.end(), std::greater<int>());
    return g;
}

AbelianGroup trivial_group() { return {}; }

AbelianGroup cyclic_group(long long n) { return canonicalize({n}); }

AbelianGroup parse_group(const std::string& text) {
    std::vector<long long> facs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("bad group literal: " + text);
        facs.push_back(v);
    }
    if (facs.empty()) throw std::invalid_argument("empty group literal");
    return canonicalize(facs);
}

AbelianGroup p_part(const AbelianGroup& g, long long p) {
    AbelianGroup out;
    auto it = g.prime_parts.find(p);
    if (it != g.prime_parts.end()) out.prime_parts.emplace(*it);
    return out;
}

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out = a;
    for (const auto& [p, lam] : b.prime_parts) {
        auto& dst = out.prime_parts[p];
        dst.insert(dst.end(), lam.begin(), lam.end());
        std::sort(dst.begin(), dst.end(), std::greater<int>());
    }
    return out;
}

bool embeds_in(const AbelianGroup& a, const AbelianGroup& b) {
    for (const auto& [p, lam] : a.prime_parts) {
        auto it = b.prime_parts.find(p);
        if (it == b.prime_parts.end()) return false;
        if (!diagram_contains(conjugate(it->second), conjugate(lam))) return false;
    }
    return true;
}

AbelianGroup quotient_by_cyclic(const std::vector<long long>& gen_orders,
                                const std::vector<long long>& element) {
    if (element.size() != gen_orders.size())
        throw std::invalid_argument("element length does not match generators");
    const std::size_t n = gen_orders.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gen_orders[i] < 1) throw std::invalid_argument("generator order must be positive");
        if (element[i] < 0 || element[i] >= gen_orders[i])
            throw std::invalid_argument("residue out of range");
    }
    std::vector<std::vector<Int>> rel(n + 1, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = gen_orders[i];
    for (std::size_t j = 0; j < n; ++j) rel[n][j] = element[j];
    std::vector<long long> facs;
    for (const Int& d : smith_invariants(rel))
        if (d > 1) facs.push_back(static_cast<long long>(d));
    return facs.empty() ? trivial_group() : canonicalize(facs);
}

AbelianGroup fermat_group(const std::vector<std::pair<long long, long long>>& weights,
                          long long degree) {
    std::vector<long long> orders;
    for (const auto& [a, r] : weights) {
        if (a < 1 || r < 1) throw std::invalid_argument("bad weight block");
        if (degree % a != 0) throw std::invalid_argument("weight does not divide degree");
        for (long long i = 0; i < r; ++i) orders.push_back(degree / a);
    }
    std::vector<long long> ones;
    for (long long o : orders) ones.push_back(o > 1 ? 1 : 0);
    return quotient_by_cyclic(orders, ones);
}

}  // namespace k3cr3
