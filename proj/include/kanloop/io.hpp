// JSON serialization: complex descriptions, homology summaries, group
// elements as arrays of [re, im] pairs, realization points, validation
// reports, and energy traces.

#ifndef KANLOOP_IO_HPP
#define KANLOOP_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kanloop/energy.hpp"
#include "kanloop/homology.hpp"

namespace kanloop {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Complex schema:
// {
//   "cells":   {"1": ["x","y"], "2": ["r"], ...},
//   "attach2": {"r": "x*y*x^-1*y^-1"},
//   "attach3": {"c": [{"z": "x1", "rel": 1, "sign": 1}, ...]},
//   "attach4": {"c": "v1*w1_2^-1"},
//   "general_attach": {"c": "..."}
// }
// Word strings use the textual word syntax; relator indices are 1-based.
// ---------------------------------------------------------------------------

inline Json complex_to_json(const ReducedCWComplex& y) {
    Json j;
    j["cells"] = Json::object();
    for (const auto& [d, names] : y.cells) j["cells"][std::to_string(d)] = names;
    Json a2 = Json::object();
    for (const auto& [n, w] : y.attach2) a2[n] = to_string(w);
    j["attach2"] = a2;
    Json a3 = Json::object();
    for (const auto& [n, id] : y.attach3) {
        Json terms = Json::array();
        for (const IdentityTerm& t : id.terms)
            terms.push_back({{"z", to_string(t.conjugator)}, {"rel", t.relator}, {"sign", t.sign}});
        a3[n] = terms;
    }
    j["attach3"] = a3;
    Json a4 = Json::object();
    for (const auto& [n, w] : y.attach4) a4[n] = to_string(w);
    j["attach4"] = a4;
    if (!y.general_attach.empty()) {
        Json ga = Json::object();
        for (const auto& [n, w] : y.general_attach) ga[n] = to_string(w);
        j["general_attach"] = ga;
    }
    return j;
}

inline ReducedCWComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells"))
        throw ParseError("complex JSON needs a 'cells' object");
    ReducedCWComplex y;
    std::map<std::string, int> dim_of;
    for (const auto& [key, names] : j.at("cells").items()) {
        int d = 0;
        try {
            d = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("cell dimension key '" + key + "' is not a number");
        }
        for (const auto& n : names) {
            y.cells[d].push_back(n.get<std::string>());
            dim_of[n.get<std::string>()] = d;
        }
    }
    DegreeResolver deg = [&dim_of](const std::string& name) {
        auto it = dim_of.find(name);
        if (it == dim_of.end()) throw ParseError("unknown cell name " + name + " in word");
        return it->second - 1;
    };
    if (j.contains("attach2"))
        for (const auto& [n, w] : j.at("attach2").items())
            y.attach2[n] = parse_word(w.get<std::string>(), deg);
    if (j.contains("attach3"))
        for (const auto& [n, terms] : j.at("attach3").items()) {
            IdentitySequence id;
            for (const auto& t : terms) {
                IdentityTerm term;
                term.conjugator = parse_word(t.at("z").get<std::string>(), deg);
                term.relator = t.at("rel").get<int>();
                term.sign = t.at("sign").get<int>();
                if (term.sign != 1 && term.sign != -1)
                    throw ParseError("identity term sign must be +-1");
                id.terms.push_back(std::move(term));
            }
            y.attach3[n] = std::move(id);
        }
    if (j.contains("attach4"))
        for (const auto& [n, w] : j.at("attach4").items())
            y.attach4[n] = parse_word(w.get<std::string>(),
                                      [](const std::string&) { return 2; });
    if (j.contains("general_attach"))
        for (const auto& [n, w] : j.at("general_attach").items())
            y.general_attach[n] = parse_word(w.get<std::string>(), deg);
    return y;
}

inline ReducedCWComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ParseError("invalid JSON in " + path + ": " + ex.what());
    }
    return complex_from_json(j);
}

// ---------------------------------------------------------------------------
// Homology output: {"0": {"betti": 4, "torsion": []}, ...}
// ---------------------------------------------------------------------------

inline Json homology_to_json(const std::vector<HomologySummary>& hs) {
    Json j = Json::object();
    for (const HomologySummary& h : hs)
        j[std::to_string(h.degree)] = {{"betti", h.betti}, {"torsion", h.torsion}};
    return j;
}

// ---------------------------------------------------------------------------
// Matrices as row-major arrays of [re, im] pairs; U(1) elements are 1x1.
// ---------------------------------------------------------------------------

inline Json element_to_json(const GroupElement& g) {
    auto pair = [](const Complex& z) { return Json::array({z.real(), z.imag()}); };
    if (g.group == Group::U1) return Json::array({Json::array({pair(g.m[0])})});
    return Json::array({Json::array({pair(g.m[0]), pair(g.m[1])}),
                        Json::array({pair(g.m[2]), pair(g.m[3])})});
}

inline GroupElement element_from_json(const Json& j, Group group) {
    auto entry = [](const Json& p) {
        if (!p.is_array() || p.size() != 2) throw ParseError("matrix entry must be [re, im]");
        return Complex(p[0].get<double>(), p[1].get<double>());
    };
    GroupElement g;
    g.group = group;
    if (group == Group::U1) {
        g.m[0] = entry(j.at(0).at(0));
        return g;
    }
    if (!j.is_array() || j.size() != 2 || j.at(0).size() != 2 || j.at(1).size() != 2)
        throw ParseError("expected a 2x2 matrix");
    g.m = {entry(j.at(0).at(0)), entry(j.at(0).at(1)), entry(j.at(1).at(0)), entry(j.at(1).at(1))};
    return g;
}

inline Group group_from_name(const std::string& name) {
    if (name == "u1") return Group::U1;
    if (name == "su2") return Group::SU2;
    if (name == "so3") return Group::SO3;
    throw ParseError("unknown group '" + name + "' (expected u1, su2 or so3)");
}

// ---------------------------------------------------------------------------
// Realization points: per degree, row-major grid arrays of generator tuples.
// ---------------------------------------------------------------------------

inline Json point_to_json(const RealizationPoint& p) {
    Json j;
    j["group"] = group_name(p.group);
    j["grid"] = p.m;
    j["top"] = p.top;
    Json degrees = Json::object();
    for (int q = 0; q <= p.top; ++q) {
        Json layer = Json::array();
        for (const auto& tuple : p.values[static_cast<std::size_t>(q)]) {
            Json t = Json::array();
            for (const GroupElement& g : tuple) t.push_back(element_to_json(g));
            layer.push_back(std::move(t));
        }
        degrees[std::to_string(q)] = std::move(layer);
    }
    j["degrees"] = std::move(degrees);
    return j;
}

inline RealizationPoint point_from_json(const Json& j) {
    RealizationPoint p;
    p.group = group_from_name(j.at("group").get<std::string>());
    p.m = j.at("grid").get<int>();
    p.top = j.at("top").get<int>();
    p.values.resize(static_cast<std::size_t>(p.top) + 1);
    for (int q = 0; q <= p.top; ++q) {
        const Json& layer = j.at("degrees").at(std::to_string(q));
        for (const Json& tuple : layer) {
            std::vector<GroupElement> t;
            for (const Json& g : tuple) t.push_back(element_from_json(g, p.group));
            p.values[static_cast<std::size_t>(q)].push_back(std::move(t));
        }
    }
    return p;
}

inline Json report_to_json(const ValidationReport& r) {
    return Json{{"pass", r.pass()},
                {"boundary", Json{{"pass", r.boundary_pass},
                                  {"max_violation", r.max_boundary_violation},
                                  {"checks", r.boundary_checks}}},
                {"recursion", Json{{"pass", r.recursion_pass},
                                   {"max_violation", r.max_recursion_violation},
                                   {"checks", r.recursion_checks}}}};
}

inline std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::ostringstream out;
    out << "step,energy,grad_norm\n";
    out.precision(17);
    for (const TraceRow& r : trace) out << r.step << ',' << r.energy << ',' << r.grad_norm << '\n';
    return out.str();
}

inline std::string matrix_to_csv(const IntMatrix& a) {
    std::ostringstream out;
    for (const auto& row : a) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << row[j];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace kanloop

#endif  // KANLOOP_IO_HPP
