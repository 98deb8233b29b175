#pragma once

#include "gmf/mf.hpp"

#include <gtest/gtest.h>

namespace gmf::test {

template <Coefficient K>
struct Ctx {
    GradedRing ring;
    std::optional<Polynomial<K>> W;

    Ctx(std::vector<std::string> vars, std::vector<int> weights, Field f, const char* potential = nullptr)
        : ring(std::move(vars), std::move(weights), f) {
        if (potential) W = P(potential);
    }

    Polynomial<K> P(const std::string& s) const { return parse_polynomial<K>(s, ring); }

    GradedMatrix<K> mat(std::vector<int> src, std::vector<int> tgt, int deg, std::vector<std::string> rows) const {
        std::vector<Polynomial<K>> e;
        for (auto& s : rows) e.push_back(P(s));
        return GradedMatrix<K>(GradedFreeModule(std::move(src)), GradedFreeModule(std::move(tgt)), deg, std::move(e));
    }

    // relations given column by column
    ModulePresentation<K> module(std::vector<int> gens, std::vector<std::vector<std::string>> cols, bool overA = true) const {
        std::vector<int> src;
        std::vector<Polynomial<K>> entries(gens.size() * cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::optional<int> d;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                auto p = P(cols[c][i]);
                if (!p.is_zero() && !d) d = *p.degree() + gens[i];
                entries[i * cols.size() + c] = p;
            }
            src.push_back(d.value_or(0));
        }
        GradedFreeModule G(gens);
        GradedMatrix<K> R(GradedFreeModule(src), G, 0, std::move(entries));
        return ModulePresentation<K>(ring, G, R, overA ? W : std::nullopt);
    }

    ModulePresentation<K> residue_field() const {
        std::vector<std::vector<std::string>> cols;
        for (std::size_t i = 0; i < ring.num_vars(); ++i) cols.push_back({ring.names()[i]});
        return module({0}, cols, W.has_value());
    }

    MatrixFactorization<K> mf(std::vector<int> P1, std::vector<int> P0, std::vector<std::string> p1,
                              std::vector<std::string> p0) const {
        int d = *W->degree();
        return MatrixFactorization<K>(ring, *W, mat(P1, P0, 0, std::move(p1)), mat(P0, P1, d, std::move(p0)));
    }

    ModulePresentation<K> free(std::vector<int> gens) const { return ModulePresentation<K>::free(ring, GradedFreeModule(gens), W); }
};

inline Ctx<Rational> qq(std::vector<std::string> vars, const char* W = nullptr) {
    std::vector<int> w(vars.size(), 1);
    return Ctx<Rational>(std::move(vars), std::move(w), Field::rationals(), W);
}

template <Coefficient K>
std::vector<std::string> entries(const GradedMatrix<K>& m, const GradedRing& ring) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_string(m(i, j), ring));
    return out;
}

}  // namespace gmf::test
