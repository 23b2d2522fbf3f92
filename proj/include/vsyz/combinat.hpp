#ifndef VSYZ_COMBINAT_HPP
#define VSYZ_COMBINAT_HPP

#include <cstdint>
#include <set>
#include <utility>

#include "vsyz/multidegree.hpp"

namespace vsyz {

long long binom(long long n, long long k);

/// All exponent vectors of total degree d in n+1 variables, descending lex.
/// Size is C(n+d, d).
std::vector<Exps> monomial_basis(int n, int d);

/// Prefix-sum dominance for weights of equal total. Works on arbitrary integer
/// vectors, not only partitions; padded with zeros on length mismatch.
bool dominates_vec(const Exps& lhs, const Exps& rhs);

/// Dominance order on partitions of equal weight; throws on weight mismatch.
bool dominates(const Partition& lhs, const Partition& rhs);

/// Maximal elements of a weight set under prefix-sum dominance.
std::set<Exps> dominant_weights(const std::set<Exps>& ws);

/// Canonical S_3-orbit representative (entries sorted descending) and the
/// number of distinct permutations of a.
std::pair<Exps, int> sort_multidegree(const Exps& a);

/// Canonical multidegrees (a_0 >= ... >= a_n >= 0) of the given total,
/// with orbit sizes; descending lex order.
std::vector<std::pair<Exps, int>> canonical_multidegrees(int n, int tot);

}  // namespace vsyz

#endif
