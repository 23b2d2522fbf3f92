#ifndef VSYZ_MULTIDEGREE_HPP
#define VSYZ_MULTIDEGREE_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vsyz {

/// Exponent vector over n+1 variables. Used both as a multidegree (a grading
/// group element of Z^{n+1}) and as a monomial of C[x_0..x_n].
using Exps = std::vector<int>;

inline int total(const Exps& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline Exps add(const Exps& a, const Exps& b) {
    Exps r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Exps sub(const Exps& a, const Exps& b) {
    Exps r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline bool nonneg(const Exps& a) {
    for (int x : a) if (x < 0) return false;
    return true;
}

/// componentwise a <= b
inline bool leq(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i) if (a[i] > b[i]) return false;
    return true;
}

/// Weakly decreasing exponent vector indexing a Schur module.
struct Partition {
    Exps parts;

    Partition() = default;
    explicit Partition(Exps p) : parts(std::move(p)) {
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    int weight() const { return total(parts); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// Finite multiset of multidegrees: multigraded Hilbert series of a
/// finite-dimensional Z^{n+1}-graded vector space. Keys iterate lex-descending
/// so begin() is the lex-leading term.
struct GradedMultiset {
    std::map<Exps, long long, std::greater<Exps>> entries;

    void insert(const Exps& a, long long m) {
        if (m == 0) return;
        auto it = entries.find(a);
        if (it == entries.end()) entries.emplace(a, m);
        else if ((it->second += m) == 0) entries.erase(it);
    }
    long long at(const Exps& a) const {
        auto it = entries.find(a);
        return it == entries.end() ? 0 : it->second;
    }
    long long dimension() const {
        long long s = 0;
        for (auto& [a, m] : entries) s += m;
        return s;
    }
    bool empty() const { return entries.empty(); }
};

}  // namespace vsyz

#endif
