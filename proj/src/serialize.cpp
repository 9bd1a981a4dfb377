#include "erl/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace erl {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json system_to_json(const PermutationSystem& sys) {
    ordered_json cycles = ordered_json::array();
    for (const Cycle& c : sys.cycles) {
        cycles.push_back(ordered_json{{"id", c.id}, {"length", c.length()}, {"points", c.points}});
    }
    return ordered_json{{"cycles", std::move(cycles)}, {"infinity", sys.infinity_point}};
}

PermutationSystem system_from_json(const ordered_json& j) {
    PermutationSystem sys;
    sys.infinity_point = j.at("infinity").get<std::size_t>();
    std::size_t max_label = sys.infinity_point;
    for (const auto& jc : j.at("cycles")) {
        Cycle c;
        c.id = jc.at("id").get<std::size_t>();
        c.points = jc.at("points").get<std::vector<std::size_t>>();
        if (c.points.empty()) {
            throw std::invalid_argument("cycle without points");
        }
        if (jc.at("length").get<std::size_t>() != c.points.size()) {
            throw std::invalid_argument("cycle length disagrees with point list");
        }
        for (std::size_t p : c.points) {
            max_label = std::max(max_label, p);
        }
        sys.cycles.push_back(std::move(c));
    }
    sys.point_count = max_label + 1;
    return sys;
}

}  // namespace

std::string serialize_triple(const RealizationTriple& triple) {
    ordered_json j;
    j["horizon"] = triple.horizon;
    ordered_json target = ordered_json::array();
    for (const ExactInt& v : triple.target.entries()) {
        target.push_back(v.get_str());
    }
    j["target"] = std::move(target);
    j["X"] = system_to_json(triple.X);
    j["Y"] = system_to_json(triple.Y);
    ordered_json phi = ordered_json::array();
    for (std::size_t x = 0; x < triple.phi.point_map.size(); ++x) {
        phi.push_back(ordered_json::array({x, triple.phi.point_map[x]}));
    }
    j["phi"] = std::move(phi);
    return j.dump(2) + "\n";
}

RealizationTriple parse_triple(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    RealizationTriple triple;
    triple.horizon = j.at("horizon").get<std::size_t>();
    std::vector<ExactInt> target;
    for (const auto& jt : j.at("target")) {
        if (jt.is_string()) {
            target.emplace_back(jt.get<std::string>());
        } else {
            target.emplace_back(jt.get<long>());
        }
    }
    triple.target = Sequence(std::move(target));
    triple.X = system_from_json(j.at("X"));
    triple.Y = system_from_json(j.at("Y"));
    triple.phi.point_map.assign(triple.X.point_count, triple.Y.infinity_point);
    for (const auto& edge : j.at("phi")) {
        std::size_t src = edge.at(0).get<std::size_t>();
        std::size_t dst = edge.at(1).get<std::size_t>();
        if (src >= triple.phi.point_map.size()) {
            throw std::invalid_argument("phi edge with unknown source point");
        }
        triple.phi.point_map[src] = dst;
    }
    return triple;
}

}  // namespace erl
