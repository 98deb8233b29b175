#pragma once

// Problem files: ring, potential, named modules and matrix factorizations.

#include "gmf/gmf.hpp"

#include <json.hpp>

#include <fstream>
#include <map>

namespace gmf::cli {

using json = nlohmann::ordered_json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("problem file is not valid JSON: ") + e.what());
    }
}

inline const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::vector<int> read_ints(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(where + ": expected an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

inline Field read_field(const json& ring) {
    if (!ring.contains("field")) return Field::rationals();
    const auto& f = ring.at("field");
    if (f.is_string() && (f == "QQ" || f == "Q")) return Field::rationals();
    if (f.is_number_integer() && f.get<long long>() > 1) return Field::prime_field(f.get<std::uint64_t>());
    throw InputError("ring.field must be \"QQ\" or a prime");
}

inline Field problem_field(const json& doc) { return read_field(require(doc, "ring", "problem")); }

inline std::string expr_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(where + ": matrix entries must be expression strings");
}

template <Coefficient K>
class Problem {
public:
    explicit Problem(const json& doc) : doc_(doc), ring_(read_ring(doc)) {
        if (doc.contains("potential") && !doc.at("potential").is_null()) {
            W_ = parse(doc.at("potential"), "potential");
            if (W_->is_zero() || !W_->is_homogeneous()) throw InputError("potential must be nonzero and homogeneous");
        }
        for (const char* key : {"modules", "mfs"})
            if (doc.contains(key) && !doc.at(key).is_object()) throw InputError(std::string(key) + " must be an object");
    }

    const GradedRing& ring() const { return ring_; }
    const std::optional<Polynomial<K>>& potential() const { return W_; }
    const Polynomial<K>& require_potential() const {
        if (!W_) throw InputError("this command needs a potential");
        return *W_;
    }

    std::vector<std::string> module_names() const { return names("modules"); }
    std::vector<std::string> mf_names() const { return names("mfs"); }

    ModulePresentation<K> module(const std::string& name) const {
        const auto& spec = entry("modules", name);
        std::string where = "module '" + name + "'";
        auto gens = read_ints(require(spec, "genDegrees", where), where + ".genDegrees");
        bool overA = spec.value("overA", W_.has_value());
        if (overA && !W_) throw InputError(where + ": overA needs a potential");
        std::vector<std::vector<Polynomial<K>>> rows;
        if (spec.contains("relations")) {
            const auto& rel = spec.at("relations");
            if (!rel.is_array() || rel.size() != gens.size())
                throw InputError(where + ": relations must have one row per generator");
            for (const auto& row : rel) {
                if (!row.is_array()) throw InputError(where + ": relation rows must be arrays");
                std::vector<Polynomial<K>> r;
                for (const auto& e : row) r.push_back(parse(e, where));
                rows.push_back(std::move(r));
            }
        }
        std::size_t ncols = rows.empty() ? 0 : rows[0].size();
        for (const auto& r : rows)
            if (r.size() != ncols) throw InputError(where + ": relation rows have different lengths");
        std::vector<int> src;
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < ncols; ++c) {
            std::optional<int> d;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& p = rows[i][c];
                if (p.is_zero()) continue;
                if (!p.is_homogeneous()) throw InputError(where + ": relation entry (" + std::to_string(i) + "," + std::to_string(c) + ") is not homogeneous");
                int deg = *p.degree() + gens[i];
                if (d && *d != deg)
                    throw InputError(where + ": relation column " + std::to_string(c) + " is not homogeneous");
                d = deg;
            }
            if (!d) continue;
            src.push_back(*d);
            keep.push_back(c);
        }
        std::vector<Polynomial<K>> entries;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (auto c : keep) entries.push_back(rows[i][c]);
        GradedFreeModule G(gens);
        GradedMatrix<K> R(GradedFreeModule(src), G, 0, std::move(entries));
        return ModulePresentation<K>(ring_, G, R, overA ? W_ : std::nullopt);
    }

    /// Shape-checked factorization; entries and composites are not validated here.
    MatrixFactorization<K> raw_mf(const std::string& name) const {
        const auto& W = require_potential();
        const auto& spec = entry("mfs", name);
        std::string where = "mf '" + name + "'";
        auto P1 = read_ints(require(spec, "P1", where), where + ".P1");
        auto P0 = read_ints(require(spec, "P0", where), where + ".P0");
        auto p1 = matrix(require(spec, "p1", where), P1, P0, 0, where + ".p1");
        auto p0 = matrix(require(spec, "p0", where), P0, P1, *W.degree(), where + ".p0");
        return MatrixFactorization<K>(ring_, W, p1, p0);
    }

    MatrixFactorization<K> mf(const std::string& name) const {
        auto X = raw_mf(name);
        auto rep = mf_validate(X);
        if (!rep.valid) throw MathError("mf '" + name + "' is not a matrix factorization: " + rep.failures.front());
        return X;
    }

private:
    static GradedRing read_ring(const json& doc) {
        const auto& r = require(doc, "ring", "problem");
        const auto& vars = require(r, "variables", "ring");
        if (!vars.is_array()) throw InputError("ring.variables must be an array of names");
        std::vector<std::string> names;
        for (const auto& v : vars) {
            if (!v.is_string()) throw InputError("ring.variables must be an array of names");
            names.push_back(v.get<std::string>());
        }
        std::vector<int> weights = r.contains("weights") ? read_ints(r.at("weights"), "ring.weights")
                                                         : std::vector<int>(names.size(), 1);
        return GradedRing(names, weights, read_field(r));
    }

    Polynomial<K> parse(const json& v, const std::string& where) const {
        try {
            return parse_polynomial<K>(expr_text(v, where), ring_);
        } catch (const ParseError& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    GradedMatrix<K> matrix(const json& rows, const std::vector<int>& src, const std::vector<int>& tgt, int deg,
                           const std::string& where) const {
        if (!rows.is_array() || rows.size() != tgt.size())
            throw InputError(where + ": expected " + std::to_string(tgt.size()) + " rows");
        std::vector<Polynomial<K>> e;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != src.size())
                throw InputError(where + ": expected " + std::to_string(src.size()) + " columns per row");
            for (const auto& x : row) e.push_back(parse(x, where));
        }
        return GradedMatrix<K>(GradedFreeModule(src), GradedFreeModule(tgt), deg, std::move(e));
    }

    std::vector<std::string> names(const char* key) const {
        std::vector<std::string> out;
        if (doc_.contains(key))
            for (auto it = doc_.at(key).begin(); it != doc_.at(key).end(); ++it) out.push_back(it.key());
        return out;
    }

    const json& entry(const char* key, const std::string& name) const {
        if (!doc_.contains(key) || !doc_.at(key).contains(name))
            throw InputError(std::string("unknown ") + (std::string(key) == "mfs" ? "mf" : "module") + " '" + name + "'");
        return doc_.at(key).at(name);
    }

    json doc_;
    GradedRing ring_;
    std::optional<Polynomial<K>> W_;
};

}  // namespace gmf::cli
