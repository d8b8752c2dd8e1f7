#include "anvm/json_io.hpp"

namespace anvm {
namespace io {

json scalar_to_json(const Scalar& s) {
    // always the full "p/q" form, q > 0 in lowest terms
    if (s.is_rational())
        return s.rational().get_num().get_str() + "/" + s.rational().get_den().get_str();
    json j;
    j["decimal"] = s.flt().to_string();
    j["precision_bits"] = s.flt().precision();
    return j;
}

Scalar scalar_from_json(const json& j, unsigned defaultPrec) {
    if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_object()) {
        unsigned prec = j.value("precision_bits", defaultPrec);
        return Scalar(BigFloat::from_decimal(j.at("decimal").get<std::string>(), prec));
    }
    throw std::invalid_argument("scalar: expected \"p/q\", integer, or {decimal, precision_bits}");
}

std::vector<Scalar> scalars_from_json(const json& arr, unsigned defaultPrec) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of scalars");
    std::vector<Scalar> v;
    for (const auto& e : arr) v.push_back(scalar_from_json(e, defaultPrec));
    return v;
}

json scalars_to_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

json model_to_json(const ModelParams& p) {
    json j;
    j["kind"] = p.kind == ModelKind::Rational ? "rational" : "trig";
    if (p.gamma) j["gamma"] = scalar_to_json(*p.gamma);
    j["rank"] = p.rank;
    return j;
}

ModelParams model_from_json(const json& j) {
    ModelParams p;
    std::string kind = j.value("kind", "rational");
    if (kind == "rational")
        p.kind = ModelKind::Rational;
    else if (kind == "trig" || kind == "trigonometric")
        p.kind = ModelKind::Trigonometric;
    else
        throw std::invalid_argument("model.kind must be \"rational\" or \"trig\"");
    p.rank = j.value("rank", 1);
    if (j.contains("gamma")) p.gamma = scalar_from_json(j.at("gamma"));
    if (j.contains("precision_bits")) p.prec = j.at("precision_bits").get<unsigned>();
    p.validate();
    return p;
}

std::string norm_to_string(Norm n) { return n == Norm::UnitA ? "unit_a" : "unit_b"; }

Norm norm_from_string(const std::string& s) {
    if (s == "unit_a") return Norm::UnitA;
    if (s == "unit_b") return Norm::UnitB;
    throw std::invalid_argument("norm must be \"unit_a\" or \"unit_b\"");
}

namespace {

json edge_to_json(const EdgeCondition& e) {
    json j;
    if (e.is_fixed) {
        j["fixed"] = e.colour;
    } else {
        json w = json::object();
        for (const auto& [c, coeff] : e.weights) w[std::to_string(c)] = scalar_to_json(coeff);
        j["weighted"] = w;
    }
    return j;
}

EdgeCondition edge_from_json(const json& j) {
    if (j.contains("fixed")) return EdgeCondition::fixed(j.at("fixed").get<int>());
    if (j.contains("weighted")) {
        std::vector<std::pair<Colour, Scalar>> w;
        for (const auto& [key, val] : j.at("weighted").items())
            w.emplace_back(std::stoi(key), scalar_from_json(val));
        std::sort(w.begin(), w.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return EdgeCondition::weighted(std::move(w));
    }
    throw std::invalid_argument("edge condition must have \"fixed\" or \"weighted\"");
}

const char* side_name(EdgeRef::Side s) {
    switch (s) {
        case EdgeRef::Side::RowLeft: return "left";
        case EdgeRef::Side::RowRight: return "right";
        case EdgeRef::Side::ColBottom: return "bottom";
        case EdgeRef::Side::ColTop: return "top";
    }
    return "?";
}

EdgeRef::Side side_from_name(const std::string& s) {
    if (s == "left") return EdgeRef::Side::RowLeft;
    if (s == "right") return EdgeRef::Side::RowRight;
    if (s == "bottom") return EdgeRef::Side::ColBottom;
    if (s == "top") return EdgeRef::Side::ColTop;
    throw std::invalid_argument("edge side must be left/right/bottom/top");
}

json edge_ref_to_json(const EdgeRef& e) {
    return json{{"side", side_name(e.side)}, {"index", e.index}};
}

EdgeRef edge_ref_from_json(const json& j) {
    return {side_from_name(j.at("side").get<std::string>()), j.at("index").get<int>()};
}

}  // namespace

Lattice lattice_from_json(const json& j) {
    Lattice lat;
    lat.model = j.contains("model") ? model_from_json(j.at("model")) : ModelParams::rational(1);
    lat.norm = norm_from_string(j.value("norm", "unit_a"));
    for (const auto& r : j.at("rows"))
        lat.rows.push_back({scalar_from_json(r.at("rapidity")), EdgeCondition::fixed(0),
                            EdgeCondition::fixed(0)});
    for (const auto& c : j.at("cols"))
        lat.cols.push_back({scalar_from_json(c.at("rapidity")), EdgeCondition::fixed(0),
                            EdgeCondition::fixed(0), c.value("antifund", false)});
    const auto& b = j.at("boundary");
    auto fill = [&](const char* key, size_t count, auto set) {
        const auto& arr = b.at(key);
        if (arr.size() != count)
            throw std::invalid_argument(std::string("boundary.") + key + " has wrong length");
        for (size_t i = 0; i < count; ++i) set(i, edge_from_json(arr[i]));
    };
    fill("left", lat.rows.size(), [&](size_t i, EdgeCondition e) { lat.rows[i].left = e; });
    fill("right", lat.rows.size(), [&](size_t i, EdgeCondition e) { lat.rows[i].right = e; });
    fill("bottom", lat.cols.size(), [&](size_t i, EdgeCondition e) { lat.cols[i].bottom = e; });
    fill("top", lat.cols.size(), [&](size_t i, EdgeCondition e) { lat.cols[i].top = e; });
    if (j.contains("active")) {
        for (const auto& row : j.at("active")) {
            std::vector<bool> r;
            for (const auto& v : row) r.push_back(v.get<bool>());
            lat.active.push_back(std::move(r));
        }
    }
    if (b.contains("constraint")) {
        const auto& cj = b.at("constraint");
        if (cj.contains("ties"))
            for (const auto& t : cj.at("ties"))
                lat.ties.push_back({edge_ref_from_json(t.at(0)), edge_ref_from_json(t.at(1))});
        if (cj.contains("count")) {
            const auto& k = cj.at("count");
            SignedCountConstraint cc;
            for (const auto& e : k.at("group_a")) cc.group_a.push_back(edge_ref_from_json(e));
            cc.colour_a = k.at("colour_a").get<int>();
            for (const auto& e : k.at("group_b")) cc.group_b.push_back(edge_ref_from_json(e));
            cc.colour_b = k.at("colour_b").get<int>();
            cc.target = k.at("target").get<int>();
            std::string sign = k.value("sign", "none");
            cc.sign = sign == "group_a" ? SignedCountConstraint::SignOn::GroupA
                      : sign == "group_b" ? SignedCountConstraint::SignOn::GroupB
                                          : SignedCountConstraint::SignOn::None;
            lat.constraint = cc;
        }
    }
    return lat;
}

json lattice_to_json(const Lattice& lat) {
    json j;
    json rows = json::array(), cols = json::array();
    for (const auto& r : lat.rows) rows.push_back({{"rapidity", scalar_to_json(r.rapidity)}});
    for (const auto& c : lat.cols) {
        json cj{{"rapidity", scalar_to_json(c.rapidity)}};
        if (c.antifund) cj["antifund"] = true;
        cols.push_back(cj);
    }
    j["rows"] = rows;
    j["cols"] = cols;
    j["model"] = model_to_json(lat.model);
    j["norm"] = norm_to_string(lat.norm);
    json b;
    json left = json::array(), right = json::array(), bottom = json::array(), top = json::array();
    for (const auto& r : lat.rows) {
        left.push_back(edge_to_json(r.left));
        right.push_back(edge_to_json(r.right));
    }
    for (const auto& c : lat.cols) {
        bottom.push_back(edge_to_json(c.bottom));
        top.push_back(edge_to_json(c.top));
    }
    b["left"] = left;
    b["right"] = right;
    b["top"] = top;
    b["bottom"] = bottom;
    if (!lat.ties.empty() || lat.constraint) {
        json cj;
        if (!lat.ties.empty()) {
            json ties = json::array();
            for (const auto& [a, bb] : lat.ties)
                ties.push_back(json::array({edge_ref_to_json(a), edge_ref_to_json(bb)}));
            cj["ties"] = ties;
        }
        if (lat.constraint) {
            const auto& cc = *lat.constraint;
            json k;
            json ga = json::array(), gb = json::array();
            for (const auto& e : cc.group_a) ga.push_back(edge_ref_to_json(e));
            for (const auto& e : cc.group_b) gb.push_back(edge_ref_to_json(e));
            k["group_a"] = ga;
            k["colour_a"] = cc.colour_a;
            k["group_b"] = gb;
            k["colour_b"] = cc.colour_b;
            k["target"] = cc.target;
            k["sign"] = cc.sign == SignedCountConstraint::SignOn::GroupA   ? "group_a"
                        : cc.sign == SignedCountConstraint::SignOn::GroupB ? "group_b"
                                                                           : "none";
            cj["count"] = k;
        }
        b["constraint"] = cj;
    }
    j["boundary"] = b;
    if (!lat.active.empty()) {
        json act = json::array();
        for (const auto& row : lat.active) {
            json r = json::array();
            for (bool v : row) r.push_back(v);
            act.push_back(r);
        }
        j["active"] = act;
    }
    return j;
}

json partition_value_to_json(const PartitionValue& pv) {
    json j;
    j["value"] = scalar_to_json(pv.value);
    j["provenance"] = to_string(pv.provenance);
    j["model"] = pv.model == ModelKind::Rational ? "rational" : "trig";
    j["norm"] = norm_to_string(pv.norm);
    return j;
}

a2::Spec a2_spec_from_json(const json& j) {
    a2::Spec s;
    s.x2s = scalars_from_json(j.value("x2s", json::array()));
    s.x1s = scalars_from_json(j.value("x1s", json::array()));
    s.b1s = scalars_from_json(j.value("b1s", json::array()));
    s.b2s = scalars_from_json(j.value("b2s", json::array()));
    s.ys = scalars_from_json(j.value("ys", json::array()));
    s.zs = scalars_from_json(j.value("zs", json::array()));
    return s;
}

bethe::Variant bethe_variant_from_string(const std::string& s) {
    if (s == "a1-fundamental") return bethe::Variant::A1Fundamental;
    if (s == "a1-antifundamental") return bethe::Variant::A1AntiFundamental;
    if (s == "a2-nested") return bethe::Variant::A2Nested;
    throw std::invalid_argument("variant must be a1-fundamental | a1-antifundamental | a2-nested");
}

json bethe_system_to_json(const bethe::System& sys) {
    json j;
    j["variant"] = sys.variant == bethe::Variant::A1Fundamental        ? "a1-fundamental"
                   : sys.variant == bethe::Variant::A1AntiFundamental ? "a1-antifundamental"
                                                                       : "a2-nested";
    j["ys"] = scalars_to_json(sys.ys);
    j["zs"] = scalars_to_json(sys.zs);
    j["counts"] = json::array({sys.count1, sys.count2});
    json sols = json::array();
    for (const auto& s : sys.solutions) {
        json sj;
        sj["roots"] = scalars_to_json(s.roots1);
        if (!s.roots2.empty()) sj["roots2"] = scalars_to_json(s.roots2);
        sj["residuals"] = scalars_to_json(s.residuals);
        sj["exact"] = s.exact;
        sols.push_back(sj);
    }
    j["solutions"] = sols;
    j["no_finite_solution"] = sys.no_finite_solution;
    if (!sys.note.empty()) j["note"] = sys.note;
    return j;
}

}  // namespace io
}  // namespace anvm
