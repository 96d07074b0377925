#ifndef CYV_BOTT_HPP
#define CYV_BOTT_HPP

// Cohomology of homogeneous bundles V(alpha) = Sigma^beta S (x) Sigma^gamma Q^*
// on G(r,n) by Bott's algorithm: add rho = (n, ..., 1) to alpha = (beta, gamma);
// a repeated entry kills everything, otherwise the single nonzero group sits
// in degree l = number of inversions, with highest weight sort(alpha+rho) - rho.
//
// Weights are normalized so that O(d) on G(r,n) has beta = (d, ..., d); on
// P^(n-1) = G(1,n) this gives H^0(O(d)) of dimension binom(n-1+d, d).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyv/error.hpp"
#include "cyv/rational.hpp"
#include "cyv/symfunc/weyl.hpp"

namespace cyv::bott {

struct BottInput {
    int n = 0;
    int r = 0;
    Weight beta;
    Weight gamma;

    void validate() const {
        if (!(0 < r && r < n)) fail(ErrorCode::BadDimensions, "need 0 < r < n");
        if (static_cast<int>(beta.entries.size()) != r) fail(ErrorCode::BadDimensions, "beta must have length r");
        if (static_cast<int>(gamma.entries.size()) != n - r) fail(ErrorCode::BadDimensions, "gamma must have length n - r");
        if (!beta.is_dominant()) fail(ErrorCode::NotDominantInBlock, "beta " + beta.to_string() + " is not weakly decreasing");
        if (!gamma.is_dominant()) fail(ErrorCode::NotDominantInBlock, "gamma " + gamma.to_string() + " is not weakly decreasing");
    }
    std::string to_string() const { return "G(" + std::to_string(r) + "," + std::to_string(n) + ") " + beta.to_string() + ";" + gamma.to_string(); }
};

struct BottOutcome {
    bool vanishes = true;
    int degree = 0;
    Weight weight;
    Integer dimension = 0;

    static BottOutcome all_vanish() { return {}; }
    friend bool operator==(const BottOutcome& a, const BottOutcome& b) {
        if (a.vanishes || b.vanishes) return a.vanishes == b.vanishes;
        return a.degree == b.degree && a.weight == b.weight && a.dimension == b.dimension;
    }
    std::string to_string() const {
        if (vanishes) return "all cohomology vanishes";
        return "H^" + std::to_string(degree) + " of dimension " + dimension.get_str() + ", weight " + weight.to_string();
    }
};

inline BottOutcome bott_cohomology(const BottInput& in) {
    in.validate();
    std::vector<int> v(in.beta.entries);
    v.insert(v.end(), in.gamma.entries.begin(), in.gamma.entries.end());
    for (int i = 0; i < in.n; ++i) v[static_cast<std::size_t>(i)] += in.n - i;

    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return BottOutcome::all_vanish();
            if (v[i] < v[j]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    for (int i = 0; i < in.n; ++i) v[static_cast<std::size_t>(i)] -= in.n - i;

    BottOutcome out;
    out.vanishes = false;
    out.degree = inversions;
    out.weight = Weight{v};
    out.dimension = weyl_dimension(out.weight, in.n);
    return out;
}

/// Tensor with O(t): shifts every beta entry by t.
inline BottInput twist_by_hyperplane(BottInput in, int t) {
    for (int& b : in.beta.entries) b += t;
    return in;
}

/// Serre-dual input V^* (x) K with K = O(-n).
inline BottInput serre_dual(const BottInput& in) {
    BottInput d = in;
    d.beta.entries.assign(in.beta.entries.rbegin(), in.beta.entries.rend());
    d.gamma.entries.assign(in.gamma.entries.rbegin(), in.gamma.entries.rend());
    for (int& b : d.beta.entries) b = -b - in.n;
    for (int& g : d.gamma.entries) g = -g;
    return d;
}

struct Verdict {
    enum class Kind { AllTermsVanish, SingleSurvivor, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::size_t term = 0;        // index of the survivor
    BottOutcome outcome;         // its cohomology
    int target_degree = 0;       // degree where the target's cohomology lives
    std::vector<BottOutcome> per_term;

    std::string kind_name() const {
        switch (kind) {
            case Kind::AllTermsVanish: return "AllTermsVanish";
            case Kind::SingleSurvivor: return "SingleSurvivor";
            case Kind::Inconclusive: return "Inconclusive";
        }
        return "?";
    }
};

/// Reads off the cohomology of a sheaf F from a locally free resolution
///   0 -> T_0 -> T_1 -> ... -> T_m -> F -> 0,
/// listed in that order. T_i sits in homological position m - i, so
/// H^l(T_i) can only feed H^(l - (m - i))(F). Differentials are never chased:
/// more than one nonvanishing term gives Inconclusive.
inline Verdict complex_vanishing(const std::vector<BottInput>& terms) {
    if (terms.empty()) fail(ErrorCode::EmptyComplex, "complex has no terms");
    Verdict v;
    const int m = static_cast<int>(terms.size()) - 1;
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        v.per_term.push_back(bott_cohomology(terms[i]));
        if (!v.per_term.back().vanishes) survivors.push_back(i);
    }
    if (survivors.empty()) {
        v.kind = Verdict::Kind::AllTermsVanish;
        return v;
    }
    if (survivors.size() == 1) {
        const std::size_t i = survivors.front();
        const int target = v.per_term[i].degree - (m - static_cast<int>(i));
        if (target >= 0) {
            v.kind = Verdict::Kind::SingleSurvivor;
            v.term = i;
            v.outcome = v.per_term[i];
            v.target_degree = target;
            return v;
        }
    }
    v.kind = Verdict::Kind::Inconclusive;
    return v;
}

inline nlohmann::json to_json(const BottOutcome& o) {
    if (o.vanishes) return {{"vanishes", true}};
    return {{"vanishes", false}, {"degree", o.degree}, {"weight", o.weight.entries}, {"dimension", o.dimension.get_str()}};
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j{{"verdict", v.kind_name()}};
    if (v.kind == Verdict::Kind::SingleSurvivor) {
        j["term"] = v.term;
        j["target_degree"] = v.target_degree;
        j["outcome"] = to_json(v.outcome);
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& o : v.per_term) terms.push_back(to_json(o));
    j["terms"] = terms;
    return j;
}

}  // namespace cyv::bott

#endif  // CYV_BOTT_HPP
