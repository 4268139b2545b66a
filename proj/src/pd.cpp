#include "wsum/pd.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace wsum {

namespace {

struct Tok {
    std::string s;
    int col;
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (isspace((unsigned char)line[i])) { ++i; continue; }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !isspace((unsigned char)line[j])) ++j;
        out.push_back({line.substr(i, j - i), (int)i + 1});
        i = j;
    }
    return out;
}

long parse_int(const Tok& t, int line, const std::string& what) {
    try {
        size_t pos = 0;
        long v = std::stol(t.s, &pos);
        if (pos != t.s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, t.col, "expected integer " + what + ", got '" + t.s + "'");
    }
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    struct RawCrossing {
        long id;
        int sign;
        std::array<EdgeId, 4> slot;
        int line;
    };
    std::vector<RawCrossing> raw;
    AmbientSpec amb;
    bool have_ambient = false;
    std::map<long, int> cross_index;

    auto parse_anchor = [&](const Tok& t, int ln) -> FaceAnchor {
        // (<crossing>,<QUAD>)
        const std::string& s = t.s;
        if (s.size() < 5 || s.front() != '(' || s.back() != ')')
            throw ParseError(ln, t.col, "expected face spec (crossing,QUAD)");
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw ParseError(ln, t.col, "expected ',' in face spec");
        long cid;
        try {
            cid = std::stol(s.substr(1, comma - 1));
        } catch (...) {
            throw ParseError(ln, t.col, "bad crossing id in face spec");
        }
        auto q = quadrant_from_name(s.substr(comma + 1, s.size() - comma - 2));
        if (!q) throw ParseError(ln, t.col, "bad quadrant in face spec");
        FaceAnchor a;
        a.c = (CrossingId)cid;  // remapped after all crossings are read
        a.q = *q;
        return a;
    };

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].s;
        if (head.size() > 1 && head[0] == 'X') {
            long id;
            try {
                id = std::stol(head.substr(1));
            } catch (...) {
                throw ParseError(lineno, toks[0].col, "bad crossing id '" + head + "'");
            }
            if (cross_index.count(id))
                throw ParseError(lineno, toks[0].col, "duplicate crossing id " + std::to_string(id));
            std::vector<std::pair<std::string, EdgeId>> fields;
            std::optional<int> declared_sign;
            for (size_t i = 1; i < toks.size(); ++i) {
                auto eq = toks[i].s.find('=');
                if (eq == std::string::npos)
                    throw ParseError(lineno, toks[i].col, "expected key=value, got '" + toks[i].s + "'");
                std::string key = toks[i].s.substr(0, eq);
                std::string val = toks[i].s.substr(eq + 1);
                if (key == "sign") {
                    if (val == "+1" || val == "+") declared_sign = 1;
                    else if (val == "-1" || val == "-") declared_sign = -1;
                    else throw ParseError(lineno, toks[i].col, "sign must be +1 or -1");
                    continue;
                }
                if (key != "u_in" && key != "o_in" && key != "u_out" && key != "o_out")
                    throw ParseError(lineno, toks[i].col, "unknown slot '" + key + "'");
                long e;
                try {
                    e = std::stol(val);
                } catch (...) {
                    throw ParseError(lineno, toks[i].col, "bad edge id '" + val + "'");
                }
                fields.emplace_back(key, (EdgeId)e);
            }
            if (fields.size() != 4)
                throw ParseError(lineno, toks[0].col, "crossing needs exactly 4 slot fields");
            std::vector<std::string> order;
            for (auto& [k, e] : fields) order.push_back(k);
            int sign;
            if (order == std::vector<std::string>{"u_in", "o_in", "u_out", "o_out"}) sign = -1;
            else if (order == std::vector<std::string>{"u_in", "o_out", "u_out", "o_in"}) sign = +1;
            else
                throw ParseError(lineno, toks[0].col,
                                 "slot fields must be written in ccw order from u_in "
                                 "(u_in,o_in,u_out,o_out or u_in,o_out,u_out,o_in)");
            if (declared_sign && *declared_sign != sign)
                throw ParseError(lineno, toks[0].col,
                                 "declared sign contradicts slot order");
            RawCrossing rc;
            rc.id = id;
            rc.sign = sign;
            rc.line = lineno;
            for (auto& [k, e] : fields) {
                Slot s = k == "u_in" ? UIn : k == "o_in" ? OIn : k == "u_out" ? UOut : OOut;
                rc.slot[s] = e;
            }
            cross_index[id] = (int)raw.size();
            raw.push_back(rc);
        } else if (head == "ambient") {
            if (toks.size() < 2) throw ParseError(lineno, toks[0].col, "ambient needs a kind");
            have_ambient = true;
            if (toks[1].s == "sphere") {
                amb.kind = AmbientKind::Sphere;
            } else if (toks[1].s == "annulus") {
                amb.kind = AmbientKind::Annulus;
                for (size_t i = 2; i < toks.size(); ++i) {
                    auto eq = toks[i].s.find('=');
                    if (eq == std::string::npos)
                        throw ParseError(lineno, toks[i].col, "expected origin=... or inf=...");
                    std::string key = toks[i].s.substr(0, eq);
                    Tok vt{toks[i].s.substr(eq + 1), toks[i].col + (int)eq + 1};
                    if (key == "origin") amb.origin_anchor = parse_anchor(vt, lineno);
                    else if (key == "inf") amb.inf_anchor = parse_anchor(vt, lineno);
                    else throw ParseError(lineno, toks[i].col, "unknown ambient field '" + key + "'");
                }
                if (!amb.origin_anchor || !amb.inf_anchor)
                    throw ParseError(lineno, toks[0].col, "annulus ambient needs origin and inf");
            } else if (toks[1].s == "torus") {
                amb.kind = AmbientKind::Torus;
            } else {
                throw ParseError(lineno, toks[1].col, "unknown ambient '" + toks[1].s + "'");
            }
        } else if (head == "edge") {
            if (toks.size() != 3) throw ParseError(lineno, toks[0].col, "edge <id> class=<p>,<q>");
            long e = parse_int(toks[1], lineno, "edge id");
            auto eq = toks[2].s.find('=');
            if (eq == std::string::npos || toks[2].s.substr(0, eq) != "class")
                throw ParseError(lineno, toks[2].col, "expected class=<p>,<q>");
            std::string val = toks[2].s.substr(eq + 1);
            auto comma = val.find(',');
            if (comma == std::string::npos)
                throw ParseError(lineno, toks[2].col, "expected class=<p>,<q>");
            long p, q;
            try {
                p = std::stol(val.substr(0, comma));
                q = std::stol(val.substr(comma + 1));
            } catch (...) {
                throw ParseError(lineno, toks[2].col, "bad class pair");
            }
            amb.edge_class[(EdgeId)e] = {p, q};
        } else {
            throw ParseError(lineno, toks[0].col, "unknown directive '" + head + "'");
        }
    }
    if (raw.empty()) throw ParseError(lineno, 1, "no crossings");
    if (!have_ambient) amb.kind = AmbientKind::Sphere;

    std::vector<Crossing> cs;
    for (auto& rc : raw) {
        Crossing c;
        c.sign = rc.sign;
        c.slot = rc.slot;
        cs.push_back(c);
    }
    // remap face-anchor crossing ids to indices
    auto remap = [&](std::optional<FaceAnchor>& a) {
        if (!a) return;
        auto it = cross_index.find(a->c);
        if (it == cross_index.end())
            throw ParseError(lineno, 1, "face spec names unknown crossing " + std::to_string(a->c));
        a->c = it->second;
    };
    remap(amb.origin_anchor);
    remap(amb.inf_anchor);
    try {
        return Diagram(std::move(cs), std::move(amb));
    } catch (const DiagramError& e) {
        throw ParseError(lineno, 1, e.what());
    }
}

std::string write_pd(const Diagram& d) {
    std::ostringstream os;
    for (CrossingId c = 0; c < d.num_crossings(); ++c) {
        auto& cr = d.crossings()[c];
        os << "X" << c;
        for (Slot s : ccw_slots(cr.sign)) {
            const char* name = s == UIn ? "u_in" : s == OIn ? "o_in" : s == UOut ? "u_out" : "o_out";
            os << " " << name << "=" << cr.slot[s];
        }
        os << "\n";
    }
    auto& amb = d.ambient();
    if (amb.kind == AmbientKind::Sphere) {
        os << "ambient sphere\n";
    } else if (amb.kind == AmbientKind::Annulus) {
        auto wr = [&](const FaceAnchor& a) {
            std::ostringstream t;
            t << "(" << a.c << "," << quadrant_name(a.q) << ")";
            return t.str();
        };
        os << "ambient annulus origin=" << wr(*amb.origin_anchor) << " inf="
           << wr(*amb.inf_anchor) << "\n";
    } else {
        os << "ambient torus\n";
        for (auto& [e, pq] : amb.edge_class)
            if (pq.first != 0 || pq.second != 0)
                os << "edge " << e << " class=" << pq.first << "," << pq.second << "\n";
    }
    return os.str();
}

Diagram load_pd_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_pd(ss.str());
}

}  // namespace wsum
