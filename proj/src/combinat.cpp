#include "vsyz/combinat.hpp"

#include <algorithm>

namespace vsyz {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Exps> monomial_basis(int n, int d) {
    std::vector<Exps> out;
    Exps cur(n + 1, 0);
    // depth-first with largest exponents first gives descending lex directly
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == n) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

bool dominates_vec(const Exps& lhs, const Exps& rhs) {
    size_t m = std::max(lhs.size(), rhs.size());
    long long sl = 0, sr = 0;
    for (size_t i = 0; i < m; ++i) {
        sl += i < lhs.size() ? lhs[i] : 0;
        sr += i < rhs.size() ? rhs[i] : 0;
        if (sl < sr) return false;
    }
    return sl == sr;
}

bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw std::invalid_argument("dominance compares partitions of equal weight");
    return dominates_vec(lhs.parts, rhs.parts);
}

std::set<Exps> dominant_weights(const std::set<Exps>& ws) {
    std::set<Exps> out;
    for (const auto& w : ws) {
        bool maximal = true;
        for (const auto& u : ws)
            if (u != w && dominates_vec(u, w)) { maximal = false; break; }
        if (maximal) out.insert(w);
    }
    return out;
}

std::pair<Exps, int> sort_multidegree(const Exps& a) {
    Exps s(a);
    std::sort(s.begin(), s.end(), std::greater<int>());
    // orbit size = (n+1)! / prod(multiplicities!)
    long long fact = 1;
    for (size_t i = 2; i <= s.size(); ++i) fact *= (long long)i;
    long long denom = 1;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        for (size_t k = 2; k <= j - i; ++k) denom *= (long long)k;
        i = j;
    }
    return {s, (int)(fact / denom)};
}

std::vector<std::pair<Exps, int>> canonical_multidegrees(int n, int tot) {
    std::vector<std::pair<Exps, int>> out;
    Exps cur(n + 1, 0);
    auto rec = [&](auto&& self, int var, int rem, int cap) -> void {
        if (var == n) {
            if (rem <= cap) {
                cur[var] = rem;
                out.push_back({cur, sort_multidegree(cur).second});
            }
            return;
        }
        int lo = (rem + (n - var)) / (n - var + 1);  // ceil(rem / vars left)
        for (int e = std::min(rem, cap); e >= lo; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e, e);
        }
    };
    rec(rec, 0, tot, tot);
    return out;
}

}  // namespace vsyz
