#include "dehnrw/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dehnrw/errors.hpp"

namespace dehnrw {

EdgeIncidences edge_incidences(const Diagram& d) {
    std::map<int, std::vector<Dart>> seen;
    for (int c = 0; c < d.num_crossings(); ++c)
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings[c].edges[s];
            if (e < 1) throw ParseError("edge label " + std::to_string(e) + " is not positive");
            seen[e].push_back({c, s});
        }
    EdgeIncidences out;
    for (auto& [e, darts] : seen) {
        if (darts.size() != 2)
            throw ParseError("edge label " + std::to_string(e) + " appears " +
                             std::to_string(darts.size()) + " times, expected 2");
        out[e] = {darts[0], darts[1]};
    }
    return out;
}

Diagram parse_pd(const std::string& text) {
    // Strip comments, then scan X[a,b,c,d] groups.
    std::string clean;
    clean.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            clean += '\n';
        } else {
            clean += text[i];
        }
    }

    Diagram d;
    size_t i = 0;
    auto skip_filler = [&](bool also_comma) {
        while (i < clean.size() &&
               (std::isspace(static_cast<unsigned char>(clean[i])) ||
                (also_comma && clean[i] == ',')))
            ++i;
    };
    while (true) {
        skip_filler(true);
        if (i >= clean.size()) break;
        char c = clean[i];
        if (c != 'X' && c != 'x')
            throw ParseError(std::string("expected 'X[' at '") + clean.substr(i, 8) + "'");
        ++i;
        skip_filler(false);
        if (i >= clean.size() || clean[i] != '[') throw ParseError("expected '[' after X");
        ++i;
        Crossing cr;
        for (int k = 0; k < 4; ++k) {
            skip_filler(k > 0);
            size_t start = i;
            while (i < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i]))) ++i;
            if (i == start) throw ParseError("expected edge label in X[...]");
            cr.edges[k] = std::stoi(clean.substr(start, i - start));
        }
        skip_filler(false);
        if (i >= clean.size() || clean[i] != ']') throw ParseError("expected ']' closing X[...]");
        ++i;
        cr.over_pair = 1;
        d.crossings.push_back(cr);
    }
    if (d.crossings.empty()) throw ParseError("no crossings in PD input");
    edge_incidences(d); // label multiplicity check
    return d;
}

Diagram parse_diagram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
        throw ParseError("JSON diagram needs a \"crossings\" array");
    Diagram d;
    for (const auto& jc : j["crossings"]) {
        if (!jc.contains("edges") || !jc["edges"].is_array() || jc["edges"].size() != 4)
            throw ParseError("each crossing needs an \"edges\" array of 4 labels");
        Crossing cr;
        for (int k = 0; k < 4; ++k) cr.edges[k] = jc["edges"][k].get<int>();
        cr.over_pair = jc.value("over", 1);
        if (cr.over_pair != 0 && cr.over_pair != 1)
            throw ParseError("crossing \"over\" must be 0 or 1");
        d.crossings.push_back(cr);
    }
    if (j.contains("unbounded")) d.unbounded = j["unbounded"].get<int>();
    if (d.crossings.empty()) throw ParseError("no crossings in JSON input");
    edge_incidences(d);
    return d;
}

std::string builtin_pd(const std::string& name) {
    // Both diagrams come from closed alternating braids: the trefoil from
    // the standard 2-strand braid, the figure-eight from (s1 s2^-1)^2.
    if (name == "trefoil") return "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    if (name == "figure8") return "X[4,2,5,1] X[2,7,3,8] X[8,6,1,5] X[6,3,7,4]";
    throw ParseError("unknown built-in diagram '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"trefoil", "figure8"}; }

namespace {

Dart other_end(const EdgeIncidences& inc, int edge, Dart here) {
    const auto& pair = inc.at(edge);
    return pair[0] == here ? pair[1] : pair[0];
}

} // namespace

Faces faces(const Diagram& d) {
    const int n = d.num_crossings();
    EdgeIncidences inc = edge_incidences(d);

    std::vector<std::array<int, 4>> discovery(n, {-1, -1, -1, -1});
    std::vector<std::vector<Dart>> face_corners;

    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (discovery[c][s] != -1) continue;
            int id = static_cast<int>(face_corners.size());
            std::vector<Dart> walk;
            Dart cur{c, s};
            do {
                discovery[cur.crossing][cur.slot] = id;
                walk.push_back(cur);
                int e = d.crossings[cur.crossing].edges[(cur.slot + 1) % 4];
                cur = other_end(inc, e, {cur.crossing, (cur.slot + 1) % 4});
            } while (!(cur.crossing == c && cur.slot == s));
            face_corners.push_back(std::move(walk));
        }

    int count = static_cast<int>(face_corners.size());
    if (count != n + 2)
        throw HypothesisError("face walk found " + std::to_string(count) +
                              " regions, expected " + std::to_string(n + 2) +
                              " (diagram is not a planar knot projection)");

    int unbounded = 0;
    if (d.unbounded) {
        unbounded = *d.unbounded;
        if (unbounded < 0 || unbounded >= count)
            throw ParseError("unbounded region id " + std::to_string(unbounded) +
                             " out of range");
    } else {
        for (int r = 1; r < count; ++r)
            if (face_corners[r].size() > face_corners[unbounded].size()) unbounded = r;
    }

    // Relabel: chosen region becomes 0, the rest keep discovery order.
    std::vector<int> newid(count);
    newid[unbounded] = 0;
    int next = 1;
    for (int r = 0; r < count; ++r)
        if (r != unbounded) newid[r] = next++;

    Faces f;
    f.num_regions = count;
    f.unbounded_discovery_id = unbounded;
    f.corners.resize(count);
    for (int r = 0; r < count; ++r) f.corners[newid[r]] = std::move(face_corners[r]);
    f.region_at.resize(n);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) f.region_at[c][s] = newid[discovery[c][s]];
    return f;
}

RegionAdjacency region_adjacency(const Diagram& d, const Faces& f) {
    EdgeIncidences inc = edge_incidences(d);
    RegionAdjacency adj;
    for (const auto& [e, darts] : inc) {
        int r1 = f.region_at[darts[0].crossing][darts[0].slot];
        int r2 = f.region_at[darts[1].crossing][darts[1].slot];
        adj.edge_sides[e] = {r1, r2};
        adj.shared_edges[std::minmax(r1, r2)]++;
    }
    return adj;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

int component_count(const Diagram& d) {
    EdgeIncidences inc = edge_incidences(d);
    const int n = d.num_crossings();
    std::set<Dart> visited;
    int orbits = 0;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            Dart start{c, s};
            if (visited.count(start)) continue;
            ++orbits;
            Dart cur = start;
            do {
                visited.insert(cur);
                int out_slot = (cur.slot + 2) % 4;
                int e = d.crossings[cur.crossing].edges[out_slot];
                cur = other_end(inc, e, {cur.crossing, out_slot});
            } while (!(cur == start));
        }
    // Each closed curve is traversed once in each direction.
    return orbits / 2;
}

ValidationReport validate(const Diagram& d) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
        rep.ok = rep.ok && pass;
    };

    EdgeIncidences inc = edge_incidences(d);

    bool planar = false;
    Faces f;
    try {
        f = faces(d);
        planar = true;
        add("planar", true,
            std::to_string(f.num_regions) + " regions for " +
                std::to_string(d.num_crossings()) + " crossings");
    } catch (const HypothesisError& e) {
        add("planar", false, e.what());
    }

    {
        bool kink_free = true;
        std::string detail;
        for (const auto& [e, darts] : inc)
            if (darts[0].crossing == darts[1].crossing) {
                kink_free = false;
                detail = "edge " + std::to_string(e) + " returns to crossing " +
                         std::to_string(darts[0].crossing);
                break;
            }
        add("no-kinks", kink_free, detail);
    }

    {
        bool alternating = true;
        std::string detail;
        for (const auto& [e, darts] : inc) {
            bool over0 = d.crossings[darts[0].crossing].is_over_slot(darts[0].slot);
            bool over1 = d.crossings[darts[1].crossing].is_over_slot(darts[1].slot);
            if (over0 == over1) {
                alternating = false;
                detail = "edge " + std::to_string(e) + " is " +
                         (over0 ? "over" : "under") + " at both ends";
                break;
            }
        }
        add("alternating", alternating, detail);
    }

    {
        int comps = component_count(d);
        add("single-component", comps == 1,
            std::to_string(comps) + " strand component(s)");
    }

    if (planar) {
        RegionAdjacency adj = region_adjacency(d, f);
        bool common = true;
        std::string detail;
        for (const auto& [pair, cnt] : adj.shared_edges) {
            if (pair.first == pair.second) {
                common = false;
                detail = "region " + std::to_string(pair.first) +
                         " lies on both sides of an edge";
                break;
            }
            if (cnt > 1) {
                common = false;
                detail = "regions " + std::to_string(pair.first) + " and " +
                         std::to_string(pair.second) + " share " +
                         std::to_string(cnt) + " edges";
                break;
            }
        }
        if (common)
            for (int c = 0; c < d.num_crossings() && common; ++c) {
                std::set<int> rs(f.region_at[c].begin(), f.region_at[c].end());
                if (rs.size() != 4) {
                    common = false;
                    detail = "crossing " + std::to_string(c) +
                             " touches fewer than 4 distinct regions";
                }
            }
        add("common", common, detail);

        // Two-color the region adjacency graph.
        std::vector<int> color(f.num_regions, -1);
        bool bipartite = true;
        std::string detail2;
        std::queue<int> q;
        color[0] = 0;
        q.push(0);
        int seen = 1;
        while (!q.empty() && bipartite) {
            int r = q.front();
            q.pop();
            for (const auto& [pair, cnt] : adj.shared_edges) {
                if (cnt < 1) continue;
                int nb = -1;
                if (pair.first == r) nb = pair.second;
                else if (pair.second == r) nb = pair.first;
                else continue;
                if (color[nb] == -1) {
                    color[nb] = 1 - color[r];
                    ++seen;
                    q.push(nb);
                } else if (color[nb] == color[r]) {
                    bipartite = false;
                    detail2 = "regions " + std::to_string(r) + " and " +
                              std::to_string(nb) + " are adjacent with equal color";
                    break;
                }
            }
        }
        if (bipartite && seen != f.num_regions) {
            bipartite = false;
            detail2 = "region adjacency graph is disconnected";
        }
        add("checkerboard", bipartite, detail2);
    } else {
        add("common", false, "skipped: planarity failed");
        add("checkerboard", false, "skipped: planarity failed");
    }

    return rep;
}

std::vector<std::array<int, 4>> corner_incidence(const Diagram& d, const Faces& f) {
    std::vector<std::array<int, 4>> out(d.num_crossings());
    for (int c = 0; c < d.num_crossings(); ++c) {
        // First corner counterclockwise after the incoming under-strand slot.
        int start = d.crossings[c].over_pair == 1 ? 0 : 1;
        for (int k = 0; k < 4; ++k) out[c][k] = f.region_at[c][(start + k) % 4];
    }
    return out;
}

} // namespace dehnrw
