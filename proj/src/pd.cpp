#include "khtor/pd.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace khtor {

namespace {

enum class Role : uint8_t { unknown, in, out };

Role opposite(Role r) { return r == Role::in ? Role::out : Role::in; }

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string strip_comments(const std::string& text) {
    std::string out;
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        if (!in_comment) out.push_back(ch);
    }
    return out;
}

// Tokenized bracket reader for PD[...] / TANGLE[...] style text.
class BracketReader {
public:
    explicit BracketReader(const std::string& text) : s_(strip_comments(text)), pos_(0) {}

    void expect_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0)
            throw pd_error("expected '" + w + "' in PD input");
        pos_ += w.size();
    }
    bool try_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    void expect_char(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw pd_error(std::string("expected '") + c + "' in PD input");
        ++pos_;
    }
    bool try_char(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int read_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw pd_error("expected integer in PD input");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    void expect_end() {
        skip_ws();
        if (pos_ != s_.size()) throw pd_error("trailing characters after PD expression");
    }

private:
    std::string s_;
    size_t pos_;
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
};

struct ParsedBody {
    std::vector<std::array<int, 4>> tuples;
    int unknots = 0;
};

// Reads the bracketed list "X[..],X[..],U[k]" after the opening '['.
ParsedBody read_body(BracketReader& r) {
    ParsedBody body;
    if (r.try_char(']')) return body;
    do {
        if (r.try_word("X")) {
            r.expect_char('[');
            std::array<int, 4> t{};
            for (int i = 0; i < 4; ++i) {
                t[i] = r.read_int();
                if (i < 3) r.expect_char(',');
            }
            r.expect_char(']');
            body.tuples.push_back(t);
        } else if (r.try_word("U")) {
            r.expect_char('[');
            int k = r.read_int();
            r.expect_char(']');
            if (k < 0) throw pd_error("U[k] requires k >= 0");
            body.unknots += k;
        } else {
            throw pd_error("expected X[...] or U[k]");
        }
    } while (r.try_char(','));
    r.expect_char(']');
    return body;
}

struct SlotTable {
    // label -> slots where it occurs
    std::map<int, std::vector<int>> slots;
};

SlotTable collect_slots(const std::vector<std::array<int, 4>>& tuples) {
    SlotTable st;
    for (size_t c = 0; c < tuples.size(); ++c)
        for (int p = 0; p < 4; ++p) st.slots[tuples[c][p]].push_back(make_slot(static_cast<int>(c), p));
    return st;
}

// Labels occurring exactly once, sorted ascending; throws on labels seen
// more than twice.
std::vector<int> single_labels(const SlotTable& st) {
    std::vector<int> singles;
    for (const auto& [label, slots] : st.slots) {
        if (slots.size() > 2)
            throw pd_error("arc " + std::to_string(label) + " occurs " +
                           std::to_string(slots.size()) + " times");
        if (slots.size() == 1) singles.push_back(label);
    }
    return singles;
}

// Merge cyclically adjacent sorted singles pairwise, starting at `offset`;
// each merged pair becomes one arc named by the smaller label.
std::vector<std::array<int, 4>> merge_singles(std::vector<std::array<int, 4>> tuples,
                                              const std::vector<int>& singles, size_t offset) {
    const size_t k = singles.size();
    for (size_t i = 0; i < k; i += 2) {
        int from = singles[(offset + i) % k];
        int to = singles[(offset + i + 1) % k];
        int keep = std::min(from, to), drop = std::max(from, to);
        for (auto& t : tuples)
            for (int& a : t)
                if (a == drop) a = keep;
    }
    return tuples;
}

// Strict solver: the written convention (under-strand enters at position 0)
// is taken as given; only the over-strand directions are unknown.  Returns
// over_in_at_d per crossing.
std::vector<bool> solve_orientation_strict(const std::vector<std::array<int, 4>>& tuples) {
    const int n = static_cast<int>(tuples.size());
    SlotTable st = collect_slots(tuples);
    for (const auto& [label, slots] : st.slots)
        if (slots.size() != 2)
            throw pd_error("arc " + std::to_string(label) + " occurs " +
                           std::to_string(slots.size()) + " times");

    std::vector<Role> role(4 * n, Role::unknown);
    std::vector<int> partner(4 * n, -1);
    for (const auto& [label, slots] : st.slots) {
        partner[slots[0]] = slots[1];
        partner[slots[1]] = slots[0];
    }

    std::vector<int> stack;
    auto set_role = [&](int slot, Role r) {
        if (role[slot] == r) return;
        if (role[slot] != Role::unknown) throw pd_error("orientation inconsistency");
        role[slot] = r;
        stack.push_back(slot);
    };

    auto propagate = [&]() {
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            // arc constraint: the other end has the opposite role
            int q = partner[s];
            if (role[q] == role[s]) throw pd_error("orientation inconsistency");
            if (role[q] == Role::unknown) {
                role[q] = opposite(role[s]);
                stack.push_back(q);
            }
            // crossing constraint for over slots (positions 1 and 3)
            int pos = slot_pos(s);
            if (pos == 1 || pos == 3) {
                int sib = make_slot(slot_crossing(s), pos == 1 ? 3 : 1);
                if (role[sib] == role[s]) throw pd_error("orientation inconsistency");
                if (role[sib] == Role::unknown) {
                    role[sib] = opposite(role[s]);
                    stack.push_back(sib);
                }
            }
        }
    };

    for (int c = 0; c < n; ++c) {
        set_role(make_slot(c, 0), Role::in);
        set_role(make_slot(c, 2), Role::out);
    }
    propagate();

    // Components that never pass under leave their over directions free;
    // resolve deterministically, lowest crossing first, over-in at d.
    for (int c = 0; c < n; ++c) {
        if (role[make_slot(c, 1)] == Role::unknown) {
            role[make_slot(c, 1)] = Role::out;
            role[make_slot(c, 3)] = Role::in;
            stack.push_back(make_slot(c, 1));
            stack.push_back(make_slot(c, 3));
            propagate();
        }
    }

    std::vector<bool> over_in_at_d(n);
    for (int c = 0; c < n; ++c) over_in_at_d[c] = (role[make_slot(c, 3)] == Role::in);
    return over_in_at_d;
}

// Reorienting solver: strand directions are free; tuples may be rotated by
// two to restore the under-in-first convention.  Used when assembling
// diagrams from cut-and-glue constructions.
struct ReorientResult {
    std::vector<std::array<int, 4>> tuples;
    std::vector<bool> over_in_at_d;
};

ReorientResult solve_orientation_reorient(std::vector<std::array<int, 4>> tuples) {
    const int n = static_cast<int>(tuples.size());
    SlotTable st = collect_slots(tuples);
    for (const auto& [label, slots] : st.slots)
        if (slots.size() != 2)
            throw pd_error("arc " + std::to_string(label) + " occurs " +
                           std::to_string(slots.size()) + " times");

    std::vector<int> partner(4 * n, -1);
    for (const auto& [label, slots] : st.slots) {
        partner[slots[0]] = slots[1];
        partner[slots[1]] = slots[0];
    }
    auto passage = [&](int slot) {
        int pos = slot_pos(slot);
        return make_slot(slot_crossing(slot), pos ^ 2);
    };

    // Walk each strand circle once, assigning roles along the travel
    // direction.  Seed: the smallest unvisited label, leaving from its
    // lower-numbered slot.
    std::vector<Role> role(4 * n, Role::unknown);
    for (const auto& [label, slots] : st.slots) {
        if (role[slots[0]] != Role::unknown) continue;
        int start = std::min(slots[0], slots[1]);
        int s = start;
        do {
            role[s] = Role::out;           // we leave the crossing along this arc
            int arrive = partner[s];       // arc delivers us here
            role[arrive] = Role::in;
            s = passage(arrive);           // pass through the crossing
        } while (s != start);
    }

    std::vector<bool> over_in_at_d(n);
    for (int c = 0; c < n; ++c) {
        auto& t = tuples[c];
        if (role[make_slot(c, 0)] == Role::out) {
            std::swap(t[0], t[2]);
            std::swap(t[1], t[3]);
            std::swap(role[make_slot(c, 0)], role[make_slot(c, 2)]);
            std::swap(role[make_slot(c, 1)], role[make_slot(c, 3)]);
        }
        over_in_at_d[c] = (role[make_slot(c, 3)] == Role::in);
    }
    return {std::move(tuples), std::move(over_in_at_d)};
}

}  // namespace

void LinkDiagram::build(std::vector<std::array<int, 4>> tuples, int unknots, bool reorient) {
    if (unknots < 0) throw pd_error("negative unknot count");
    unknots_ = unknots;
    if (tuples.empty()) {
        if (unknots_ == 0) throw pd_error("empty diagram");
        strand_components_ = 0;
        return;
    }

    std::vector<bool> over_dirs;
    if (reorient) {
        auto res = solve_orientation_reorient(std::move(tuples));
        tuples = std::move(res.tuples);
        over_dirs = std::move(res.over_in_at_d);
    } else {
        SlotTable st0 = collect_slots(tuples);
        std::vector<int> singles = single_labels(st0);
        if (!singles.empty()) {
            // Sequential closure of once-used labels: try both alternating
            // matchings of the sorted singles; a candidate counts only if the
            // whole diagram validates (orientation and planarity included).
            if (singles.size() % 2 != 0) throw pd_error("odd number of once-used arc labels");
            for (size_t offset : {size_t{1}, size_t{0}}) {
                try {
                    build(merge_singles(tuples, singles, offset), unknots, false);
                    return;
                } catch (const pd_error&) {
                    // try the other matching
                }
            }
            throw pd_error("orientation inconsistency: once-used labels cannot be closed up");
        }
        over_dirs = solve_orientation_strict(tuples);
    }

    const int n = static_cast<int>(tuples.size());
    crossings_.resize(n);
    for (int c = 0; c < n; ++c) {
        crossings_[c].arcs = tuples[c];
        crossings_[c].over_in_at_d = over_dirs[c];
    }

    // dense arc indexing
    SlotTable st = collect_slots(tuples);
    for (const auto& [label, slots] : st.slots) {
        arc_index_[label] = static_cast<int>(arc_labels_.size());
        arc_labels_.push_back(label);
    }
    crossing_arc_idx_.resize(n);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) crossing_arc_idx_[c][p] = arc_index_.at(tuples[c][p]);

    // heads and tails
    arc_tail_.assign(arc_labels_.size(), -1);
    arc_head_.assign(arc_labels_.size(), -1);
    for (int c = 0; c < n; ++c) {
        auto set_end = [&](int pos, bool is_in) {
            int idx = crossing_arc_idx_[c][pos];
            int& slotref = is_in ? arc_head_[idx] : arc_tail_[idx];
            if (slotref != -1) throw pd_error("orientation inconsistency");
            slotref = make_slot(c, pos);
        };
        set_end(0, true);
        set_end(2, false);
        set_end(1, !crossings_[c].over_in_at_d);
        set_end(3, crossings_[c].over_in_at_d);
    }

    // strand components: arcs joined through crossings (under pair, over pair)
    DisjointSet ds(static_cast<int>(arc_labels_.size()));
    for (int c = 0; c < n; ++c) {
        ds.unite(crossing_arc_idx_[c][0], crossing_arc_idx_[c][2]);
        ds.unite(crossing_arc_idx_[c][1], crossing_arc_idx_[c][3]);
    }
    std::map<int, int> comp_of_root;
    arc_comp_.resize(arc_labels_.size());
    for (size_t i = 0; i < arc_labels_.size(); ++i) {
        int r = ds.find(static_cast<int>(i));
        auto [it, inserted] = comp_of_root.try_emplace(r, static_cast<int>(comp_of_root.size()));
        arc_comp_[i] = it->second;
    }
    strand_components_ = static_cast<int>(comp_of_root.size());

    // Planarity of the rotation system: per connected 4-valent graph
    // component, V - E + F must equal 2.
    DisjointSet graph(n);
    for (const auto& [label, slots] : st.slots)
        graph.unite(slot_crossing(slots[0]), slot_crossing(slots[1]));
    std::map<int, std::array<int, 2>> ve;  // root -> {V, F}
    for (int c = 0; c < n; ++c) ve[graph.find(c)][0]++;
    for (const auto& orbit : faces()) ve[graph.find(slot_crossing(orbit[0]))][1]++;
    for (const auto& [root, vf] : ve) {
        int V = vf[0], F = vf[1], E = 2 * V;  // 4-valent: E = 2V per component
        if (V - E + F != 2)
            throw pd_error("non-planar rotation system (V-E+F = " +
                           std::to_string(V - E + F) + ", expected 2)");
    }
}

LinkDiagram LinkDiagram::from_tuples(std::vector<std::array<int, 4>> tuples, int unknots) {
    LinkDiagram d;
    d.build(std::move(tuples), unknots, /*reorient=*/false);
    return d;
}

LinkDiagram assemble_diagram(std::vector<std::array<int, 4>> tuples, int unknots) {
    LinkDiagram d;
    d.build(std::move(tuples), unknots, /*reorient=*/true);
    return d;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign();
    return w;
}

int LinkDiagram::arc_index(int label) const {
    auto it = arc_index_.find(label);
    if (it == arc_index_.end()) throw pd_error("arc " + std::to_string(label) + " not present");
    return it->second;
}

LinkDiagram LinkDiagram::mirrored() const {
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (const auto& c : crossings_) {
        const auto& a = c.arcs;
        if (c.over_in_at_d)
            tuples.push_back({a[3], a[0], a[1], a[2]});
        else
            tuples.push_back({a[1], a[2], a[3], a[0]});
    }
    return from_tuples(std::move(tuples), unknots_);
}

std::vector<std::vector<int>> LinkDiagram::faces() const {
    const int n = crossing_count();
    std::vector<int> partner(4 * n, -1);
    std::map<int, int> first_slot;
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int label = crossings_[c].arcs[p];
            int s = make_slot(c, p);
            auto [it, inserted] = first_slot.try_emplace(label, s);
            if (!inserted) {
                partner[it->second] = s;
                partner[s] = it->second;
            }
        }
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(4 * n, false);
    for (int s0 = 0; s0 < 4 * n; ++s0) {
        if (seen[s0]) continue;
        std::vector<int> orbit;
        int s = s0;
        while (!seen[s]) {
            seen[s] = true;
            orbit.push_back(s);
            int arrive = partner[s];
            s = make_slot(slot_crossing(arrive), (slot_pos(arrive) + 1) & 3);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::string LinkDiagram::serialize() const {
    std::ostringstream os;
    os << "PD[";
    bool first = true;
    for (const auto& c : crossings_) {
        if (!first) os << ",";
        first = false;
        os << "X[" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << "," << c.arcs[3] << "]";
    }
    if (unknots_ > 0) {
        if (!first) os << ",";
        os << "U[" << unknots_ << "]";
    }
    os << "]";
    return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
    BracketReader r(text);
    r.expect_word("PD");
    r.expect_char('[');
    ParsedBody body = read_body(r);
    r.expect_end();
    return LinkDiagram::from_tuples(std::move(body.tuples), body.unknots);
}

std::string serialize_pd(const LinkDiagram& d) { return d.serialize(); }

LinkDiagram parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw pd_error(std::string("bad JSON diagram: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings"))
        throw pd_error("JSON diagram must be an object with a \"crossings\" array");
    std::vector<std::array<int, 4>> tuples;
    for (const auto& row : j["crossings"]) {
        if (!row.is_array() || row.size() != 4)
            throw pd_error("each crossing must be an array of 4 arc labels");
        tuples.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
    }
    int unknots = j.value("unknots", 0);
    return LinkDiagram::from_tuples(std::move(tuples), unknots);
}

std::string serialize_json(const LinkDiagram& d) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : d.crossings())
        j["crossings"].push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
    j["unknots"] = d.unknot_count();
    return j.dump();
}

LinkDiagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pd_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t i = 0;
    std::string stripped = strip_comments(text);
    while (i < stripped.size() && std::isspace(static_cast<unsigned char>(stripped[i]))) ++i;
    if (i < stripped.size() && stripped[i] == '{') return parse_json(text);
    return parse_pd(text);
}

Tangle::Tangle(std::vector<std::array<int, 4>> tuples, std::array<int, 4> ports)
    : tuples_(std::move(tuples)), ports_(ports) {
    std::map<int, int> occ;
    for (const auto& t : tuples_)
        for (int a : t) occ[a]++;
    std::map<int, int> port_occ;
    for (int p : ports_) port_occ[p]++;
    for (const auto& [label, k] : occ) {
        int total = k + (port_occ.count(label) ? port_occ[label] : 0);
        if (total != 2)
            throw pd_error("tangle arc " + std::to_string(label) + " has " +
                           std::to_string(total) + " ends (expected 2)");
    }
    for (const auto& [label, k] : port_occ)
        if (!occ.count(label) && k != 2)
            throw pd_error("tangle boundary arc " + std::to_string(label) +
                           " has " + std::to_string(k) + " ends (expected 2)");
}

int Tangle::max_label() const {
    int m = 0;
    for (const auto& t : tuples_)
        for (int a : t) m = std::max(m, a);
    for (int p : ports_) m = std::max(m, p);
    return m;
}

namespace {

struct GlueOut {
    std::vector<std::array<int, 4>> tuples;
    int unknots;
};

GlueOut merge_glued_labels(std::vector<std::array<int, 4>> tuples, int unknots,
                           const std::vector<std::pair<int, int>>& gluings) {
    std::map<int, int> merge;
    auto canon = [&](int x) {
        while (merge.count(x)) x = merge[x];
        return x;
    };
    for (auto [x, y] : gluings) {
        x = canon(x);
        y = canon(y);
        if (x == y) {
            // both ends of an already-joined strand: a closed circle
            bool in_tuples = false;
            for (const auto& tup : tuples)
                for (int a : tup)
                    if (canon(a) == x) in_tuples = true;
            if (!in_tuples) ++unknots;
            continue;
        }
        merge[std::max(x, y)] = std::min(x, y);
    }
    for (auto& tup : tuples)
        for (int& a : tup) a = canon(a);
    return {std::move(tuples), unknots};
}

}  // namespace

LinkDiagram glue_and_assemble(std::vector<std::array<int, 4>> tuples, int unknots,
                              const std::vector<std::pair<int, int>>& gluings) {
    GlueOut g = merge_glued_labels(std::move(tuples), unknots, gluings);
    return assemble_diagram(std::move(g.tuples), g.unknots);
}

LinkDiagram glue_preserving_orientation(std::vector<std::array<int, 4>> tuples, int unknots,
                                        const std::vector<std::pair<int, int>>& gluings) {
    GlueOut g = merge_glued_labels(std::move(tuples), unknots, gluings);
    return LinkDiagram::from_tuples(std::move(g.tuples), g.unknots);
}

LinkDiagram Tangle::numerator_closure() const {
    return glue_and_assemble(tuples_, 0, {{ports_[0], ports_[1]}, {ports_[3], ports_[2]}});
}

LinkDiagram Tangle::denominator_closure() const {
    // NW glues to SW and NE to SE, tail to head on both caps, so the induced
    // orientation survives
    return glue_preserving_orientation(tuples_, 0, {{ports_[0], ports_[3]}, {ports_[1], ports_[2]}});
}

std::string Tangle::serialize() const {
    std::ostringstream os;
    os << "TANGLE[B[" << ports_[0] << "," << ports_[1] << "," << ports_[2] << "," << ports_[3]
       << "]";
    for (const auto& t : tuples_)
        os << ",X[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
    os << "]";
    return os.str();
}

Tangle parse_tangle(const std::string& text) {
    BracketReader r(text);
    r.expect_word("TANGLE");
    r.expect_char('[');
    bool have_ports = false;
    std::array<int, 4> ports{};
    std::vector<std::array<int, 4>> tuples;
    if (!r.try_char(']')) {
        do {
            if (r.try_word("B")) {
                if (have_ports) throw pd_error("duplicate B[...] in tangle");
                r.expect_char('[');
                for (int i = 0; i < 4; ++i) {
                    ports[i] = r.read_int();
                    if (i < 3) r.expect_char(',');
                }
                r.expect_char(']');
                have_ports = true;
            } else if (r.try_word("X")) {
                r.expect_char('[');
                std::array<int, 4> t{};
                for (int i = 0; i < 4; ++i) {
                    t[i] = r.read_int();
                    if (i < 3) r.expect_char(',');
                }
                r.expect_char(']');
                tuples.push_back(t);
            } else {
                throw pd_error("expected B[...] or X[...] in tangle");
            }
        } while (r.try_char(','));
        r.expect_char(']');
    }
    r.expect_end();
    if (!have_ports) throw pd_error("tangle needs a B[nw,ne,se,sw] boundary declaration");
    return Tangle(std::move(tuples), ports);
}

}  // namespace khtor
