#include "k3cr3/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace k3cr3 {
namespace {

using Mask = std::vector<std::uint64_t>;

struct ExplicitGroup {
    std::vector<long long> comp_orders;      // cyclic component orders
    std::vector<std::vector<long long>> elems;
    int n = 0;

    explicit ExplicitGroup(const AbelianGroup& g) {
        for (const auto& [p, lam] : g.prime_parts)
            for (int e : lam) {
                long long q = 1;
                for (int i = 0; i < e; ++i) q *= p;
                comp_orders.push_back(q);
            }
        if (comp_orders.empty()) comp_orders.push_back(1);
        n = 1;
        for (long long o : comp_orders) n = static_cast<int>(n * o);
        elems.reserve(n);
        std::vector<long long> cur(comp_orders.size(), 0);
        for (int i = 0; i < n; ++i) {
            elems.push_back(cur);
            for (std::size_t c = 0; c < cur.size(); ++c) {
                if (++cur[c] < comp_orders[c]) break;
                cur[c] = 0;
            }
        }
    }

    int index_of(const std::vector<long long>& e) const {
        int idx = 0;
        long long mul = 1;
        for (std::size_t c = 0; c < comp_orders.size(); ++c) {
            idx += static_cast<int>(e[c] * mul);
            mul *= comp_orders[c];
        }
        return idx;
    }

    int add(int a, int b) const {
        std::vector<long long> s(comp_orders.size());
        for (std::size_t c = 0; c < comp_orders.size(); ++c)
            s[c] = (elems[a][c] + elems[b][c]) % comp_orders[c];
        return index_of(s);
    }

    int scale(int a, long long k) const {
        std::vector<long long> s(comp_orders.size());
        for (std::size_t c = 0; c < comp_orders.size(); ++c)
            s[c] = (elems[a][c] * k) % comp_orders[c];
        return index_of(s);
    }

    long long order_of(int a) const {
        long long o = 1;
        for (std::size_t c = 0; c < comp_orders.size(); ++c)
            o = std::lcm(o, comp_orders[c] / std::gcd(comp_orders[c], elems[a][c]));
        return o;
    }
};

bool mask_get(const Mask& m, int i) { return m[i >> 6] >> (i & 63) & 1; }
void mask_set(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }

// <H, g> for a subgroup mask H: union of the cosets H + k*g.
Mask span_with(const ExplicitGroup& G, const Mask& h, int g) {
    Mask out = h;
    long long ord = G.order_of(g);
    for (long long k = 1; k < ord; ++k) {
        int kg = G.scale(g, k);
        for (int x = 0; x < G.n; ++x)
            if (mask_get(h, x)) mask_set(out, G.add(x, kg));
    }
    return out;
}

int mask_count(const Mask& m) {
    int c = 0;
    for (std::uint64_t w : m) c += __builtin_popcountll(w);
    return c;
}

// Classify an abelian group presented as a torsion-count profile:
// counts[k] = #{x : p^k x = 0} determines the conjugate partition.
AbelianGroup class_from_counts(long long n, const std::function<long long(long long, int)>& killed) {
    AbelianGroup out;
    if (n == 1) return out;
    AbelianGroup fac = canonicalize({n});
    for (const auto& [p, lam] : fac.prime_parts) {
        Partition conj_rows;
        long long prev = 0;
        long long pk = 1;
        for (int k = 1;; ++k) {
            pk *= p;
            long long cnt = killed(p, k);
            long long ek = 0;
            while (cnt > 1) { cnt /= p; ++ek; }
            if (ek == prev) break;
            conj_rows.push_back(static_cast<int>(ek - prev));
            prev = ek;
        }
        out.prime_parts[p] = conjugate(conj_rows);
    }
    return out;
}

AbelianGroup classify_subgroup(const ExplicitGroup& G, const Mask& h) {
    long long n = mask_count(h);
    return class_from_counts(n, [&](long long p, int k) {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        long long cnt = 0;
        for (int x = 0; x < G.n; ++x)
            if (mask_get(h, x) && G.scale(x, pk) == 0) ++cnt;
        return cnt;
    });
}

AbelianGroup classify_quotient(const ExplicitGroup& G, const Mask& h) {
    long long hs = mask_count(h);
    long long n = G.n / hs;
    return class_from_counts(n, [&](long long p, int k) {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        long long cnt = 0;
        for (int x = 0; x < G.n; ++x)
            if (mask_get(h, G.scale(x, pk))) ++cnt;
        return cnt / hs;
    });
}

}  // namespace

SubgroupScan scan_subgroups(const AbelianGroup& g, long long max_order) {
    if (g.order() > max_order) throw OracleBoundExceeded(g.order(), max_order);
    ExplicitGroup G(g);

    std::set<Mask> seen;
    Mask trivial(static_cast<std::size_t>((G.n + 63) / 64), 0);
    mask_set(trivial, 0);
    seen.insert(trivial);
    std::vector<Mask> work{trivial};
    while (!work.empty()) {
        Mask h = std::move(work.back());
        work.pop_back();
        for (int x = 1; x < G.n; ++x) {
            if (mask_get(h, x)) continue;
            Mask h2 = span_with(G, h, x);
            if (seen.insert(h2).second) work.push_back(h2);
        }
    }

    SubgroupScan scan;
    scan.entries.reserve(seen.size());
    for (const Mask& h : seen)
        scan.entries.push_back({classify_subgroup(G, h), classify_quotient(G, h)});
    std::sort(scan.entries.begin(), scan.entries.end());
    return scan;
}

OracleResult brute_force_subgroup_quotient(const AbelianGroup& g, const AbelianGroup& sub,
                                           long long max_order) {
    OracleResult res;
    for (const auto& e : scan_subgroups(g, max_order).entries)
        if (e.sub == sub) {
            res.exists = true;
            res.quotients.insert(e.quot);
        }
    return res;
}

bool brute_force_has_subgroup(const AbelianGroup& g, const AbelianGroup& sub,
                              long long max_order) {
    return brute_force_subgroup_quotient(g, sub, max_order).exists;
}

bool brute_force_extension_exists(const AbelianGroup& sub, const AbelianGroup& quot,
                                  const AbelianGroup& total, long long max_order) {
    for (const auto& [p, lam] : total.prime_parts) {
        AbelianGroup tp = p_part(total, p);
        AbelianGroup sp = p_part(sub, p);
        AbelianGroup qp = p_part(quot, p);
        if (sp.order() * qp.order() != tp.order()) return false;
        bool ok = false;
        for (const auto& e : scan_subgroups(tp, max_order).entries)
            if (e.sub == sp && e.quot == qp) { ok = true; break; }
        if (!ok) return false;
    }
    // primes present in sub or quot but absent from total
    long long rest = sub.order() * quot.order();
    for (const auto& [p, lam] : total.prime_parts)
        rest /= p_part(sub, p).order() * p_part(quot, p).order();
    return rest == 1;
}

}  // namespace k3cr3
