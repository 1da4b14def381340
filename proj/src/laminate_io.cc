#include "trilam/laminate_io.hh"

namespace trilam {

namespace {

nlohmann::json stress_json(const SymTensor2 &t) {
    const auto c = to_cartesian(t);
    return nlohmann::json::array({c[0], c[1], c[2]});
}

SymTensor2 stress_from(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 3)
        throw SpecError("laminate json: stress must be a [s11, s22, s12] triple");
    return from_cartesian(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

nlohmann::json to_json(const LaminateNode &node) {
    if (node.kind == LaminateNode::Kind::Leaf) {
        return {{"kind", "phase"}, {"id", node.phase}, {"stress", stress_json(node.stress)}};
    }
    return {{"kind", "layer"},
            {"normal", node.normal == Axis::e1 ? "e1" : "e2"},
            {"fraction", node.fraction},
            {"a", to_json(*node.a)},
            {"b", to_json(*node.b)}};
}

nlohmann::json to_json(const SGCell &cell) {
    return {{"kind", "sg"},
            {"beta", {cell.beta1, cell.beta2, cell.beta3, cell.beta4}},
            {"fields",
             {{"tau11", stress_json(cell.tau11)},
              {"tau12", stress_json(cell.tau12)},
              {"tau2", stress_json(cell.tau2)}}}};
}

LaminateNode laminate_from_json(const nlohmann::json &j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "phase") {
        const int id = j.at("id").get<int>();
        if (id < 1 || id > 3) throw SpecError("laminate json: phase id must be 1, 2 or 3");
        SymTensor2 t = stress_from(j.at("stress"));
        if (id == 3) t = SymTensor2{};
        return LaminateNode::leaf(id, t);
    }
    if (kind == "layer") {
        const std::string normal = j.at("normal").get<std::string>();
        if (normal != "e1" && normal != "e2")
            throw SpecError("laminate json: normal must be \"e1\" or \"e2\"");
        return LaminateNode::layer(normal == "e1" ? Axis::e1 : Axis::e2,
                                   j.at("fraction").get<double>(),
                                   laminate_from_json(j.at("a")),
                                   laminate_from_json(j.at("b")));
    }
    throw SpecError("laminate json: unknown node kind '" + kind + "'");
}

}  // namespace trilam
