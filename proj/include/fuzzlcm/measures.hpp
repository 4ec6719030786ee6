#pragma once

#include "fuzzlcm/fuzzy_set.hpp"

namespace fuzzlcm {

/// Root-mean-square distance sqrt((1/n) sum (p_i - q_i)^2). Symmetric,
/// zero iff equal, bounded by 1 for grade vectors.
double dm_distance(const FuzzySetVector& p, const FuzzySetVector& q);

/// 1 / (1 + dm_distance). In (0,1], equals 1 iff p = q.
double sm_from_dm(const FuzzySetVector& p, const FuzzySetVector& q);

/// Similarity measures 17..25. A 0/0 ratio term counts as perfect local
/// agreement (contributes 1), so SM(p,p) = 1 holds throughout.
///
///   17: 1 - sum|p-q| / sum(p+q)
///   18: mean(1 - |p-q|)
///   19: 1 - max|p-q|
///   20: sum(p*q) / max(sum p^2, sum q^2)
///   21: sum min / sum max
///   22: mean(min/max)
///   23: max(min(p,q))
///   24: mean of Godel biimplications of (p,q) and their complements
///   25: cosine similarity of (grade, co-grade) pairs with nu = 1 - mu
double similarity(int measure_id, const FuzzySetVector& p, const FuzzySetVector& q);

} // namespace fuzzlcm
