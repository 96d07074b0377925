#ifndef CYV_CHOW_JSON_HPP
#define CYV_CHOW_JSON_HPP

#include <nlohmann/json.hpp>

#include "cyv/chow/ring.hpp"
#include "cyv/rational.hpp"

namespace cyv::chow {

nlohmann::json to_json(const RingClass& c);

inline nlohmann::json ring_to_json(const Ring& ring) {
    switch (ring.kind()) {
        case Ring::Kind::Point: return {{"kind", "point"}};
        case Ring::Kind::Grassmannian: return {{"kind", "grassmannian"}, {"k", ring.k()}, {"n", ring.n()}};
        case Ring::Kind::ProjBundle: {
            nlohmann::json chern = nlohmann::json::array();
            for (const auto& c : ring.bundle_chern()) chern.push_back(to_json(c)["terms"]);
            return {{"kind", "proj_bundle"}, {"base", ring_to_json(*ring.base())}, {"rank", ring.rank()}, {"chern", chern}};
        }
    }
    return nullptr;
}

namespace detail {

inline nlohmann::json terms_to_json(const RingClass& c) {
    nlohmann::json terms = nlohmann::json::array();
    const bool flat = c.ring()->depth() <= 1;
    for (const auto& [key, coeff] : c.terms()) {
        nlohmann::json t;
        t["partition"] = key.partition.parts();
        if (flat)
            t["h"] = key.h.empty() ? 0 : key.h.front();
        else
            t["h"] = key.h;
        t["coeff"] = cyv::to_string(coeff);
        terms.push_back(std::move(t));
    }
    return terms;
}

inline RingClass terms_from_json(const RingPtr& ring, const nlohmann::json& terms) {
    if (!terms.is_array()) fail(ErrorCode::WrongShape, "terms must be an array");
    RingClass out(ring);
    const int depth = ring->depth();
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("partition") || !t.contains("coeff") || !t["coeff"].is_string())
            fail(ErrorCode::WrongShape, "term needs partition and coeff");
        BasisKey key{Partition(t["partition"].get<std::vector<int>>()), {}};
        if (depth == 1) {
            key.h.push_back(t.value("h", 0));
        } else if (depth > 1) {
            key.h = t.at("h").get<std::vector<int>>();
            if (static_cast<int>(key.h.size()) != depth) fail(ErrorCode::WrongShape, "h list has the wrong length");
        } else if (t.value("h", 0) != 0) {
            fail(ErrorCode::WrongShape, "h must be 0 outside projective bundles");
        }
        // Validate the key against the basis.
        const Ring* layer = ring.get();
        for (int i = depth - 1; i >= 0; --i) {
            int j = key.h[static_cast<std::size_t>(i)];
            if (j < 0 || j >= layer->rank()) fail(ErrorCode::WrongShape, "H-power outside normal form");
            layer = layer->base().get();
        }
        if (layer->kind() == Ring::Kind::Grassmannian && !key.partition.fits_box(layer->k(), layer->n() - layer->k()))
            fail(ErrorCode::WrongShape, "partition outside the box");
        if (layer->kind() == Ring::Kind::Point && !key.partition.empty())
            fail(ErrorCode::WrongShape, "point ring has no partitions");
        out.add_term(key, parse_rational(t["coeff"].get<std::string>()));
    }
    return out;
}

}  // namespace detail

inline nlohmann::json to_json(const RingClass& c) {
    return {{"ring", ring_to_json(*c.ring())}, {"terms", detail::terms_to_json(c)}};
}

inline RingPtr ring_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return Ring::point();
    if (kind == "grassmannian") return Ring::grassmannian(j.at("k").get<int>(), j.at("n").get<int>());
    if (kind == "proj_bundle") {
        RingPtr base = ring_from_json(j.at("base"));
        std::vector<RingClass> chern;
        for (const auto& t : j.at("chern")) chern.push_back(detail::terms_from_json(base, t));
        return Ring::proj_bundle(base, std::move(chern), j.at("rank").get<int>());
    }
    fail(ErrorCode::WrongShape, "unknown ring kind '" + kind + "'");
}

inline RingClass class_from_json(const nlohmann::json& j) {
    return detail::terms_from_json(ring_from_json(j.at("ring")), j.at("terms"));
}

}  // namespace cyv::chow

#endif  // CYV_CHOW_JSON_HPP
