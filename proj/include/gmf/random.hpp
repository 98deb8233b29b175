#pragma once

// Seeded generators of homogeneous test data.

#include "gmf/free_module.hpp"

#include <random>

namespace gmf {

using Rng = std::mt19937_64;

/// Random homogeneous polynomial of weighted degree e with small coefficients;
/// each monomial is present with probability `density`.
template <Coefficient K>
Polynomial<K> random_homogeneous(const GradedRing& ring, int e, Rng& rng, double density = 0.6, int bound = 3) {
    std::vector<Term<K>> terms;
    std::bernoulli_distribution keep(density);
    for (const auto& m : ring.monomials_of_degree(e))
        if (keep(rng)) terms.push_back({m, random_coefficient<K>(ring.field(), rng, bound)});
    return Polynomial<K>::from_terms(std::move(terms));
}

/// Random homogeneous matrix source -> target of degree δ.
template <Coefficient K>
GradedMatrix<K> random_matrix(const GradedRing& ring, const GradedFreeModule& source, const GradedFreeModule& target,
                              int degree, Rng& rng, double density = 0.6) {
    GradedMatrix<K> m(source, target, degree);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_homogeneous<K>(ring, m.entry_degree(i, j), rng, density);
    return m;
}

}  // namespace gmf
