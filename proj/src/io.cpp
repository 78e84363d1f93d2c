#include "nega/io.hpp"

#include <stdexcept>

#include "nega/gray.hpp"

namespace nega {

using nlohmann::json;

json spec_to_json(const IdealSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    if (spec.a) j["a"] = spec.a->to_string();
    if (spec.b) j["b"] = spec.b->to_string();
    return j;
}

IdealSpec spec_from_json(const json& j, int m) {
    if (!j.contains("family")) throw std::invalid_argument("ideal spec JSON: missing family");
    const Family fam = family_from_name(j.at("family").get<std::string>());
    std::optional<F2Poly> a, b;
    if (j.contains("a")) a = F2Poly::from_string(j.at("a").get<std::string>());
    if (j.contains("b")) b = F2Poly::from_string(j.at("b").get<std::string>());
    return make_ideal_spec(fam, std::move(a), std::move(b), m);
}

json code_to_json(const NegacyclicCode& code) {
    json j;
    j["n"] = code.n;
    j["components"] = json::array();
    for (const auto& c : code.components) j["components"].push_back(spec_to_json(c));
    return j;
}

NegacyclicCode code_from_json(const json& j, const FactorizationContext& ctx) {
    if (!j.contains("n") || !j.contains("components"))
        throw std::invalid_argument("code JSON: need n and components");
    if (j.at("n").get<int>() != ctx.n) throw std::invalid_argument("code JSON: n mismatch");
    const auto& comps = j.at("components");
    if (static_cast<int>(comps.size()) != ctx.r())
        throw std::invalid_argument("code JSON: need one component per factor");
    std::vector<IdealSpec> specs;
    for (int i = 0; i < ctx.r(); ++i) specs.push_back(spec_from_json(comps[i], ctx.m(i)));
    return assemble(ctx, std::move(specs));
}

json z4_code_to_json(const Z4LinearCode& code, bool with_binary) {
    json j;
    j["length"] = code.length;
    j["k1"] = code.k1();
    j["k2"] = code.k2();
    j["gens4"] = json::array();
    for (const auto& r : code.gens4) j["gens4"].push_back(r);
    j["gens2"] = json::array();
    for (const auto& r : code.gens2) j["gens2"].push_back(r);
    if (with_binary) {
        json b = json::array();
        for (const auto& r : code.gens4) b.push_back(z4_to_binary_gray(r));
        for (const auto& r : code.gens2) b.push_back(z4_to_binary_gray(r));
        j["binary_gens"] = std::move(b);
    }
    return j;
}

}  // namespace nega
