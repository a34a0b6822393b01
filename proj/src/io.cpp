#include "carc/io.hpp"

#include <charconv>
#include <sstream>

#include "carc/error.hpp"

namespace carc {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(Errc::malformed_input, "malformed input: " + what);
}

int get_int(const json& obj, const char* key) {
    if (!obj.contains(key))
        malformed(std::string("missing key \"") + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        malformed(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::pair<int, int> get_pair(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        malformed(std::string(what) + " entries must be 2-element integer arrays");
    return {v[0].get<int>(), v[1].get<int>()};
}

const char* role_name(int r) {
    static const char* names[] = {"i", "j", "k", "l"};
    return names[r];
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(Errc::invalid_ordering, "bad ordering entry '" + std::string(s) + "'");
    return value;
}

} // namespace

RPartiteGraph graph_from_json(const json& doc) {
    if (!doc.is_object())
        malformed("graph document must be an object");
    const int n = get_int(doc, "n");
    const int r = get_int(doc, "r");
    if (!doc.contains("part") || !doc["part"].is_array())
        malformed("missing array \"part\"");
    std::vector<Part> part;
    for (const auto& p : doc["part"]) {
        if (!p.is_number_integer())
            malformed("\"part\" entries must be integers");
        part.push_back(p.get<int>());
    }
    if (!doc.contains("edges") || !doc["edges"].is_array())
        malformed("missing array \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"])
        edges.push_back(get_pair(e, "\"edges\""));
    std::optional<std::vector<HostEdge>> host;
    if (doc.contains("host_edges")) {
        if (!doc["host_edges"].is_array())
            malformed("\"host_edges\" must be an array");
        host.emplace();
        for (const auto& e : doc["host_edges"])
            host->push_back(get_pair(e, "\"host_edges\""));
    }
    return RPartiteGraph(n, r, std::move(part), std::move(edges), std::move(host));
}

RPartiteGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
    return graph_from_json(doc);
}

json to_json(const RPartiteGraph& g) {
    json doc;
    doc["n"] = g.order();
    doc["r"] = g.part_count();
    doc["part"] = g.parts();
    doc["edges"] = json::array();
    for (auto [u, w] : g.edges())
        doc["edges"].push_back({u, w});
    if (g.host_edges()) {
        doc["host_edges"] = json::array();
        for (auto [a, b] : *g.host_edges())
            doc["host_edges"].push_back({a, b});
    }
    return doc;
}

std::string serialize_graph(const RPartiteGraph& g) { return to_json(g).dump(); }

ArcModel model_from_json(const json& doc) {
    if (!doc.is_object())
        malformed("model document must be an object");
    ArcModel m;
    m.n_positions = get_int(doc, "n_positions");
    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        malformed("missing array \"arcs\"");
    const auto& arcs = doc["arcs"];
    m.arcs.resize(arcs.size());
    std::vector<char> seen(arcs.size(), 0);
    for (const auto& a : arcs) {
        if (!a.is_object())
            malformed("arc entries must be objects");
        const int v = get_int(a, "v");
        if (v < 1 || static_cast<std::size_t>(v) > arcs.size())
            throw Error(Errc::vertex_set_mismatch, "arc vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v - 1)]++)
            throw Error(Errc::vertex_set_mismatch, "vertex " + std::to_string(v) + " has two arcs");
        m.arcs[static_cast<std::size_t>(v - 1)] = {get_int(a, "start"), get_int(a, "end")};
    }
    check_model(m);
    return m;
}

json to_json(const ArcModel& m) {
    json doc;
    doc["n_positions"] = m.n_positions;
    doc["arcs"] = json::array();
    for (int v = 1; v <= m.vertex_count(); ++v)
        doc["arcs"].push_back({{"v", v}, {"start", m.arc(v).start}, {"end", m.arc(v).end}});
    return doc;
}

json to_json(const ViolationWitness& w, const std::string& pattern_id) {
    json doc;
    doc["base_edge"] = {w.p, w.q};
    doc["inner"] = w.inner;
    doc["outer"] = w.outer;
    doc["template"] = std::string(1, template_name(w.kind()));
    doc["pattern_id"] = pattern_id;
    return doc;
}

json to_json(const PatternConfig& c) {
    json doc;
    doc["colors"] = c.colors;
    doc["edges"] = json::array();
    for (std::size_t p = 0; p < kRolePairs.size(); ++p)
        if (c.edges & (1u << p))
            doc["edges"].push_back({role_name(kRolePairs[p][0]), role_name(kRolePairs[p][1])});
    doc["figure"] = c.figure;
    doc["id"] = c.id();
    return doc;
}

json to_json(const Decision& d) {
    json doc;
    doc["answer"] = d.yes ? "yes" : "no";
    if (d.ordering)
        doc["ordering"] = d.ordering->sequence();
    if (d.model)
        doc["model"] = to_json(*d.model);
    doc["orderings_searched"] = d.orderings_searched;
    doc["mode"] = d.mode == SearchMode::sequential ? "seq" : "par";
    return doc;
}

json to_json(const HarnessReport& r) {
    json doc;
    doc["agree"] = r.agree;
    doc["gtc_exists"] = r.gtc_exists;
    doc["r_circular_exists"] = r.r_circular_exists;
    doc["pattern_free_exists"] = r.pattern_free_exists;
    doc["orderings_checked"] = r.orderings_checked;
    doc["passing_orderings"] = r.passing_orderings;
    doc["round_trips"] = r.round_trips;
    if (!r.agree)
        doc["disagreement"] = r.disagreement;
    return doc;
}

std::string format_scan(const ScanResult& s) {
    std::ostringstream os;
    os << s.owner << ": anchor=";
    if (s.anchor)
        os << *s.anchor;
    else
        os << "none";
    os << " reached=[";
    for (std::size_t k = 0; k < s.reached.size(); ++k)
        os << (k ? "," : "") << s.reached[k];
    os << "] terminal=";
    if (s.terminal)
        os << *s.terminal;
    else
        os << s.owner;
    return os.str();
}

CircularOrdering parse_ordering(std::string_view text) {
    std::vector<int> seq;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = parse_int(item.substr(0, dots));
            const int hi = parse_int(item.substr(dots + 2));
            if (hi < lo)
                throw Error(Errc::invalid_ordering, "empty range in ordering");
            for (int v = lo; v <= hi; ++v)
                seq.push_back(v);
        } else {
            seq.push_back(parse_int(item));
        }
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return CircularOrdering(std::move(seq));
}

} // namespace carc
