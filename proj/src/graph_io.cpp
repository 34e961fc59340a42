#include "sgm/graph_io.hpp"

#include <sstream>

#include <json.hpp>

namespace sgm {

using nlohmann::json;

namespace {

const char* role_name(CutRole r) {
    switch (r) {
        case CutRole::s1: return "s1";
        case CutRole::s2: return "s2";
        case CutRole::t1: return "t1";
        default: return "t2";
    }
}

CutRole parse_role(const std::string& s) {
    if (s == "s1") return CutRole::s1;
    if (s == "s2") return CutRole::s2;
    if (s == "t1") return CutRole::t1;
    if (s == "t2") return CutRole::t2;
    throw ParseError("unknown cut role '" + s + "'");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string graph_to_json(const SignedGraph& g) {
    json out;
    out["vertices"] = g.vertices();
    out["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        out["edges"].push_back({{"label", e.label},
                                {"ends", {g.vertices()[e.u], g.vertices()[e.v]}},
                                {"sign", e.negative() ? "-" : "+"},
                                {"directions", {e.dir_u, e.dir_v}}});
    }
    return out.dump(2) + "\n";
}

SignedGraph graph_from_json(const std::string& text) {
    json in = parse_json(text);
    try {
        SignedGraph g(in.at("vertices").get<std::vector<std::string>>());
        for (const auto& je : in.at("edges")) {
            auto ends = je.at("ends").get<std::vector<std::string>>();
            if (ends.size() != 2) throw ParseError("an edge needs exactly two ends");
            std::string sign = je.at("sign").get<std::string>();
            if (sign != "+" && sign != "-") throw ParseError("edge sign must be '+' or '-'");
            Edge e;
            e.label = je.at("label").get<std::string>();
            e.u = g.vertex_index(ends[0]);
            e.v = g.vertex_index(ends[1]);
            e.sign = sign == "-" ? Sign::negative : Sign::positive;
            if (je.contains("directions")) {
                auto d = je.at("directions").get<std::vector<int>>();
                if (d.size() != 2) throw ParseError("an edge needs two directions");
                e.dir_u = d[0];
                e.dir_v = d[1];
            } else if (e.is_loop()) {
                e.dir_u = e.dir_v = -1;
            } else if (e.negative()) {
                e.dir_u = e.dir_v = 1;
            }
            g.add_edge(std::move(e));
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string graph_to_dot(const SignedGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << dot_quote(name) << " {\n";
    for (const auto& v : g.vertices()) out << "  " << dot_quote(v) << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << dot_quote(g.vertices()[e.u]) << " -- " << dot_quote(g.vertices()[e.v])
            << " [label=" << dot_quote(e.label);
        if (e.negative()) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string split_to_json(const CylinderSplit& s) {
    json out{{"s1", s.s1}, {"s2", s.s2}, {"t1", s.t1}, {"t2", s.t2}};
    out["side"] = s.side;
    out["roles"] = json::array();
    for (const auto& [key, role] : s.roles) {
        out["roles"].push_back({{"edge", key.first}, {"end", key.second}, {"role", role_name(role)}});
    }
    return out.dump(2) + "\n";
}

CylinderSplit split_from_json(const std::string& text) {
    json in = parse_json(text);
    try {
        CylinderSplit s;
        s.s1 = in.at("s1").get<std::string>();
        s.s2 = in.at("s2").get<std::string>();
        s.t1 = in.at("t1").get<std::string>();
        s.t2 = in.at("t2").get<std::string>();
        if (in.contains("side")) s.side = in.at("side").get<std::map<std::string, int>>();
        if (in.contains("roles")) {
            for (const auto& r : in.at("roles")) {
                s.roles[{r.at("edge").get<std::string>(), r.at("end").get<int>()}] =
                    parse_role(r.at("role").get<std::string>());
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad split JSON: ") + e.what());
    }
}

}  // namespace sgm
