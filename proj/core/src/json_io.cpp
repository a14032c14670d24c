#include "octagrid/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace octagrid {

namespace {

Json vertex_to_json(Vertex v) { return Json::array({v.x, v.y}); }

Vertex vertex_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
        throw std::invalid_argument(std::string(what) + " must be an [x, y] integer pair");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

int color_from_json(const Json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw std::invalid_argument("color must be a non-negative integer");
    }
    return j.get<int>();
}

EdgeClass class_from_string(const std::string& s) {
    if (s == "H") return EdgeClass::Horizontal;
    if (s == "V") return EdgeClass::Vertical;
    if (s == "R") return EdgeClass::RightSlanting;
    if (s == "L") return EdgeClass::LeftSlanting;
    throw std::invalid_argument("edge class must be one of \"H\", \"V\", \"R\", \"L\"");
}

std::pair<int, int> hk_from_json(const Json& j) {
    if (!j.contains("h") || !j.contains("k")) {
        throw std::invalid_argument("document must carry \"h\" and \"k\"");
    }
    const int h = j.at("h").get<int>();
    const int k = j.at("k").get<int>();
    if (h < 0 || k < 0) throw std::invalid_argument("h and k must be non-negative");
    return {h, k};
}

Json edge_to_json(const Edge& e, int color) {
    Json out;
    out["a"] = vertex_to_json(e.a);
    out["b"] = vertex_to_json(e.b);
    out["color"] = color;
    return out;
}

}  // namespace

Json labeling_to_json(const Labeling& lab) {
    Json out;
    out["h"] = lab.h;
    out["k"] = lab.k;
    out["edges"] = Json::array();
    for (const auto& [e, c] : lab.assignment) {
        out["edges"].push_back(edge_to_json(e, c));
    }
    return out;
}

Labeling labeling_from_json(const Json& j) {
    Labeling lab;
    std::tie(lab.h, lab.k) = hk_from_json(j);
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw std::invalid_argument("labeling document must carry an \"edges\" array");
    }
    for (const Json& entry : j.at("edges")) {
        const Vertex a = vertex_from_json(entry.at("a"), "edge endpoint \"a\"");
        const Vertex b = vertex_from_json(entry.at("b"), "edge endpoint \"b\"");
        const Edge e(a, b);
        const int color = color_from_json(entry.at("color"));
        if (!lab.assignment.emplace(e, color).second) {
            throw std::invalid_argument("duplicate edge " + to_string(e) + " in labeling");
        }
    }
    return lab;
}

Json periodic_to_json(const PeriodicLabeling& plab) {
    Json out;
    out["h"] = plab.h;
    out["k"] = plab.k;
    out["period"] = Json::array({plab.px, plab.py});
    out["labels"] = Json::array();
    constexpr std::array<EdgeClass, 4> classes = {
        EdgeClass::Horizontal, EdgeClass::Vertical, EdgeClass::RightSlanting,
        EdgeClass::LeftSlanting};
    for (int y = 0; y < plab.py; ++y) {
        for (int x = 0; x < plab.px; ++x) {
            for (EdgeClass cls : classes) {
                Json entry;
                entry["anchor"] = Json::array({x, y});
                entry["class"] = std::string(1, edge_class_letter(cls));
                entry["color"] = plab.label_at({x, y}, cls);
                out["labels"].push_back(entry);
            }
        }
    }
    return out;
}

PeriodicLabeling periodic_from_json(const Json& j) {
    PeriodicLabeling plab;
    std::tie(plab.h, plab.k) = hk_from_json(j);
    if (!j.contains("period") || !j.at("period").is_array() || j.at("period").size() != 2) {
        throw std::invalid_argument("periodic document must carry \"period\": [px, py]");
    }
    plab.px = j.at("period")[0].get<int>();
    plab.py = j.at("period")[1].get<int>();
    if (plab.px < 6 || plab.py < 6) {
        throw std::invalid_argument("period must be at least 6 in each axis");
    }
    if (!j.contains("labels") || !j.at("labels").is_array()) {
        throw std::invalid_argument("periodic document must carry a \"labels\" array");
    }
    const std::size_t expected = static_cast<std::size_t>(4 * plab.px * plab.py);
    plab.labels.assign(expected, -1);
    for (const Json& entry : j.at("labels")) {
        const Vertex anchor = vertex_from_json(entry.at("anchor"), "label \"anchor\"");
        if (anchor.x < 0 || anchor.x >= plab.px || anchor.y < 0 || anchor.y >= plab.py) {
            throw std::invalid_argument("label anchor " + to_string(anchor) +
                                        " outside the fundamental domain");
        }
        const EdgeClass cls = class_from_string(entry.at("class").get<std::string>());
        int& slot = plab.label_at(anchor, cls);
        if (slot != -1) {
            throw std::invalid_argument("duplicate label for anchor " + to_string(anchor));
        }
        slot = color_from_json(entry.at("color"));
    }
    for (int v : plab.labels) {
        if (v == -1) {
            throw std::invalid_argument(
                "periodic document must label all 4*px*py fundamental-domain edges");
        }
    }
    return plab;
}

bool is_periodic_document(const Json& j) { return j.is_object() && j.contains("period"); }

Json violations_to_json(const ViolationReport& report) {
    Json out;
    out["valid"] = report.empty();
    out["violation_count"] = report.size();
    out["violations"] = Json::array();
    for (const Violation& v : report) {
        Json entry;
        entry["e1"] = Json::array({vertex_to_json(v.e1.a), vertex_to_json(v.e1.b)});
        entry["e2"] = Json::array({vertex_to_json(v.e2.a), vertex_to_json(v.e2.b)});
        entry["distance"] = v.distance;
        entry["required_gap"] = v.required_gap;
        entry["actual_gap"] = v.actual_gap;
        out["violations"].push_back(entry);
    }
    return out;
}

Json lemma_report_to_json(const LemmaReport& report) {
    Json out;
    out["pass"] = report.pass();
    out["claims"] = Json::array();
    for (const ClaimResult& c : report.claims) {
        Json entry;
        entry["claim_id"] = c.claim_id;
        entry["scenario_count"] = c.scenario_count;
        entry["min_excluded_found"] = c.min_excluded_found;
        entry["paper_min"] = c.paper_min;
        entry["pass"] = c.pass;
        out["claims"].push_back(entry);
    }
    return out;
}

Json audit_to_json(const PigeonholeAudit& audit) {
    Json out;
    out["palette_max"] = audit.palette_max;
    out["unused_colors"] = audit.unused_colors;
    out["demanded"] = audit.demanded;
    out["holes"] = audit.holes;
    out["implied_missing"] = audit.implied_missing;
    out["implied_lower_bound"] = audit.implied_lower_bound;
    out["distinct_colors_caveat"] = audit.distinct_colors_caveat;
    if (audit.palette_max == 27) {
        out["x_set_distinct"] = audit.x_set_distinct;
        out["demand_by_x"] = audit.demand_by_x;
    }
    return out;
}

namespace {

template <typename Cert>
Json certificate_common(const Cert& cert) {
    Json out;
    out["verdict"] = to_string(cert.verdict);
    out["n"] = cert.max_color;
    out["nodes"] = cert.nodes_explored;
    out["depth"] = cert.max_depth;
    out["elapsed_ms"] = cert.elapsed_ms;
    return out;
}

}  // namespace

Json certificate_to_json(const SearchCertificate& cert) {
    Json out = certificate_common(cert);
    if (cert.witness) out["witness"] = labeling_to_json(*cert.witness);
    return out;
}

Json certificate_to_json(const PeriodicSearchCertificate& cert) {
    Json out = certificate_common(cert);
    out["period"] = Json::array({cert.px, cert.py});
    if (cert.witness) out["witness"] = periodic_to_json(*cert.witness);
    return out;
}

Json min_span_to_json(const MinSpanResult& result) {
    Json out;
    out["verdict"] = to_string(result.verdict);
    if (result.verdict == Verdict::Sat) out["span"] = result.span;
    out["lower_bound"] = result.lower_bound;
    if (result.upper_bound) out["upper_bound"] = *result.upper_bound;
    out["total_nodes"] = result.total_nodes;
    out["certificate"] = certificate_to_json(result.certificate);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);  // nlohmann reports the byte position on failure
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace octagrid
