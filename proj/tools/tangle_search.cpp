// Generates 2-string tangle candidates of the birth-plus-saddle form: two
// vertical strands, a split circle (around both strands, around one, or
// free-standing), and a band from the left strand whose path may weave past
// the strands and through the circle's own arcs.  Keeps candidates whose
// numerator closure has trivial Alexander polynomial, whose denominator
// closure has vanishing Conway polynomial, whose joins into small knots
// preserve the Alexander polynomial, and which are certifiably nontrivial
// through the Jones polynomial or Khovanov homology of a closure.  The same
// machinery reports on the satellite pattern.  Used offline to derive the
// data assets shipped with the library.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khtor/alexander.hpp"
#include "khtor/construct.hpp"
#include "khtor/khovanov.hpp"
#include "skein_oracle.hpp"

using namespace khtor;

namespace {

const char* kLeftTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

// Wall kinds in the chain, left to right.  Wall k separates regions k and
// k+1 (regions 0..4).
enum WallKind { kStrandL, kStrandR, kCircleLeft, kCircleRight };

struct Layout {
    std::vector<WallKind> chain;
    bool root_right;  // band leaves the left strand toward the right
    std::string name;
};

std::vector<Layout> layouts() {
    std::vector<Layout> out;
    for (bool rr : {true, false}) {
        out.push_back({{kCircleLeft, kStrandL, kStrandR, kCircleRight}, rr, "both"});
        out.push_back({{kCircleLeft, kStrandL, kCircleRight, kStrandR}, rr, "left"});
        out.push_back({{kStrandL, kCircleLeft, kStrandR, kCircleRight}, rr, "right"});
        out.push_back({{kStrandL, kCircleLeft, kCircleRight, kStrandR}, rr, "free"});
    }
    return out;
}

struct Step {
    enum Kind { kWall, kTwist } kind = kWall;
    int wall = 0;      // chain index (wall steps)
    bool band_over = false;  // band passes over the crossed strand
    bool twist_pos = false;  // twist handedness
};

struct Spec {
    const Layout* layout = nullptr;
    std::vector<Step> steps;
    bool circle_over = true;  // the circle lies over the strands it crosses
    bool attach_ccw = true;   // traversal direction around the circle
    int attach_site = 0;      // 0 top arc, 1 bottom arc (vertical attaches)
    bool attach_vertical = false;
};

struct Xing {
    int id = 0;
    bool vertical_under = true;
    bool horiz_rightward = true;
    bool vertical_down = true;
    int v_in = -1, v_out = -1, h_in = -1, h_out = -1;
};

std::optional<Tangle> realize(const Spec& spec) {
    const Layout& lay = *spec.layout;

    int wallL = -1, wallR = -1, cl = -1, cr = -1;
    for (int i = 0; i < 4; ++i) {
        switch (lay.chain[i]) {
            case kStrandL: wallL = i; break;
            case kStrandR: wallR = i; break;
            case kCircleLeft: cl = i; break;
            case kCircleRight: cr = i; break;
        }
    }
    if (cl > cr || wallL > wallR) return std::nullopt;

    // walk legality; wall steps move between regions, twists stay put
    const int M = static_cast<int>(spec.steps.size());
    std::vector<int> wall_steps;  // indices into steps
    std::vector<bool> leg_right;  // per wall step
    int final_region = lay.root_right ? wallL + 1 : wallL;
    for (int i = 0; i < M; ++i) {
        const Step& st = spec.steps[i];
        if (st.kind != Step::kWall) continue;
        if (st.wall == final_region) {
            leg_right.push_back(true);
            ++final_region;
        } else if (st.wall == final_region - 1) {
            leg_right.push_back(false);
            --final_region;
        } else {
            return std::nullopt;
        }
        wall_steps.push_back(i);
    }
    const bool final_right = leg_right.empty() ? lay.root_right : leg_right.back();

    // direction of every step: wall steps use their own leg, twists the
    // direction of the next wall crossing (or the final heading)
    std::vector<bool> dir(M, final_right);
    {
        int w = static_cast<int>(wall_steps.size()) - 1;
        bool cur = final_right;
        for (int i = M - 1; i >= 0; --i) {
            if (spec.steps[i].kind == Step::kWall) {
                cur = leg_right[w--];
            }
            dir[i] = cur;
        }
    }

    enum AttachArc { kALeft, kARight, kATop, kABottom } attach;
    if (spec.attach_vertical) {
        if (!(cl < final_region && final_region <= cr)) return std::nullopt;
        attach = spec.attach_site == 0 ? kATop : kABottom;
    } else {
        int obstacle = final_right ? final_region : final_region - 1;
        if (obstacle == cl)
            attach = kALeft;
        else if (obstacle == cr)
            attach = kARight;
        else
            return std::nullopt;
    }

    std::vector<Xing> xs;
    auto add_xing = [&](bool v_under, bool h_right, bool v_down) {
        xs.push_back(Xing{static_cast<int>(xs.size()), v_under, h_right, v_down});
        return xs.back().id;
    };

    // circle crossings over the enclosed strand walls
    std::map<int, int> topx, botx;
    for (int i = cl + 1; i < cr; ++i) {
        if (lay.chain[i] != kStrandL && lay.chain[i] != kStrandR) continue;
        topx[i] = add_xing(spec.circle_over, false, true);
        botx[i] = add_xing(spec.circle_over, true, true);
    }

    // band elements in corridor order: wall events emit two crossings
    // (upper edge above lower), twists one.  The out-edge starts on top and
    // swaps at every fold: an initial fold when the band leaves against its
    // root side, a fold at every direction change, and one at every twist.
    struct BandElem {
        bool is_twist = false;
        int upper = -1, lower = -1;   // wall events
        bool out_is_upper = true;     // parity entering the element
        int tw = -1;                  // twist crossing
        bool under_in_is_top = false; // twist: the under strand enters on top
    };
    std::vector<BandElem> elems(M);
    {
        int parity = 0;  // folds so far
        if (M > 0 && dir[0] != lay.root_right) ++parity;
        for (int i = 0; i < M; ++i) {
            if (i >= 1 && dir[i] != dir[i - 1]) ++parity;
            const Step& st = spec.steps[i];
            BandElem& be = elems[i];
            be.out_is_upper = (parity % 2) == 0;
            if (st.kind == Step::kWall) {
                bool right = dir[i];
                bool upper_right = be.out_is_upper ? right : !right;
                bool lower_right = be.out_is_upper ? !right : right;
                bool v_down = (st.wall != cr);
                be.upper = add_xing(st.band_over, upper_right, v_down);
                be.lower = add_xing(st.band_over, lower_right, v_down);
            } else {
                be.is_twist = true;
                be.under_in_is_top = st.twist_pos;
                // twist tuple matches the vertical-under emission with
                // h_right = (segment direction == positive handedness)
                be.tw = add_xing(true, dir[i] == st.twist_pos, true);
                ++parity;  // edges swap across the twist
            }
        }
    }

    // per-wall crossing lists, top to bottom
    std::vector<std::vector<int>> wall_list(4);
    for (int i = 0; i < 4; ++i)
        if (topx.count(i)) wall_list[i].push_back(topx[i]);
    for (int i = 0; i < M; ++i) {
        if (spec.steps[i].kind != Step::kWall) continue;
        wall_list[spec.steps[i].wall].push_back(elems[i].upper);
        wall_list[spec.steps[i].wall].push_back(elems[i].lower);
    }
    for (int i = 0; i < 4; ++i)
        if (botx.count(i)) wall_list[i].push_back(botx[i]);

    // circle circuit, counterclockwise from just past the attach point
    std::vector<int> top_seq, bot_seq;
    for (const auto& [pos, id] : topx) top_seq.push_back(id);
    for (const auto& [pos, id] : botx) bot_seq.push_back(id);
    std::vector<int> cl_down = wall_list[cl];
    std::vector<int> cr_up(wall_list[cr].rbegin(), wall_list[cr].rend());

    std::vector<int> circuit;
    auto extend = [&](const std::vector<int>& v) {
        circuit.insert(circuit.end(), v.begin(), v.end());
    };
    auto extend_rev = [&](const std::vector<int>& v) {
        circuit.insert(circuit.end(), v.rbegin(), v.rend());
    };
    switch (attach) {
        case kARight:
            extend(cr_up);
            extend_rev(top_seq);
            extend(cl_down);
            extend(bot_seq);
            break;
        case kALeft:
            extend(bot_seq);
            extend(cr_up);
            extend_rev(top_seq);
            extend(cl_down);
            break;
        case kATop: {
            std::vector<int> left_part, right_part;
            for (const auto& [pos, id] : topx)
                (pos < final_region ? left_part : right_part).push_back(id);
            extend_rev(left_part);
            extend(cl_down);
            extend(bot_seq);
            extend(cr_up);
            extend_rev(right_part);
            break;
        }
        case kABottom: {
            std::vector<int> left_part, right_part;
            for (const auto& [pos, id] : botx)
                (pos < final_region ? left_part : right_part).push_back(id);
            extend(right_part);
            extend(cr_up);
            extend_rev(top_seq);
            extend(cl_down);
            extend(left_part);
            break;
        }
    }
    if (!spec.attach_ccw) {
        std::reverse(circuit.begin(), circuit.end());
        for (const auto& [pos, id] : topx) xs[id].horiz_rightward = !xs[id].horiz_rightward;
        for (const auto& [pos, id] : botx) xs[id].horiz_rightward = !xs[id].horiz_rightward;
        for (int id : wall_list[cl]) xs[id].vertical_down = !xs[id].vertical_down;
        for (int id : wall_list[cr]) xs[id].vertical_down = !xs[id].vertical_down;
    }

    // ---- walk the two components ----
    int next_label = 1;
    auto fresh = [&]() { return next_label++; };
    auto pass = [&](int x, bool as_vertical, int arc_in) {
        Xing& c = xs[x];
        int out = fresh();
        if (as_vertical) {
            c.v_in = arc_in;
            c.v_out = out;
        } else {
            c.h_in = arc_in;
            c.h_out = out;
        }
        return out;
    };

    // out-edge passage of one band element
    auto pass_out = [&](int i, int arc) {
        const BandElem& be = elems[i];
        if (be.is_twist) {
            bool out_is_under = (be.out_is_upper == be.under_in_is_top);
            return pass(be.tw, out_is_under, arc);
        }
        return pass(be.out_is_upper ? be.upper : be.lower, false, arc);
    };
    auto pass_back = [&](int i, int arc) {
        const BandElem& be = elems[i];
        if (be.is_twist) {
            bool out_is_under = (be.out_is_upper == be.under_in_is_top);
            return pass(be.tw, !out_is_under, arc);
        }
        return pass(be.out_is_upper ? be.lower : be.upper, false, arc);
    };

    int nw = fresh();
    int arc = nw;
    if (topx.count(wallL)) arc = pass(topx[wallL], true, arc);
    for (int i = 0; i < M; ++i) arc = pass_out(i, arc);
    for (int x : circuit) {
        bool band_event = false;
        for (int i = 0; i < M; ++i)
            if (!elems[i].is_twist && (elems[i].upper == x || elems[i].lower == x))
                band_event = true;
        arc = pass(x, band_event, arc);
    }
    for (int i = M - 1; i >= 0; --i) arc = pass_back(i, arc);
    for (int i = 0; i < M; ++i)
        if (spec.steps[i].kind == Step::kWall && spec.steps[i].wall == wallL) {
            arc = pass(elems[i].upper, true, arc);
            arc = pass(elems[i].lower, true, arc);
        }
    if (botx.count(wallL)) arc = pass(botx[wallL], true, arc);
    int sw = arc;

    int ne = fresh();
    arc = ne;
    for (int x : wall_list[wallR]) arc = pass(x, true, arc);
    int se = arc;

    // ---- emit tuples ----
    std::vector<std::array<int, 4>> tuples;
    for (const Xing& c : xs) {
        if (c.v_in < 0 || c.h_in < 0) return std::nullopt;
        bool h_right = c.vertical_down ? c.horiz_rightward : !c.horiz_rightward;
        std::array<int, 4> t{};
        if (c.vertical_under) {
            t = h_right ? std::array<int, 4>{c.v_in, c.h_in, c.v_out, c.h_out}
                        : std::array<int, 4>{c.v_in, c.h_out, c.v_out, c.h_in};
        } else {
            t = h_right ? std::array<int, 4>{c.h_in, c.v_out, c.h_out, c.v_in}
                        : std::array<int, 4>{c.h_in, c.v_in, c.h_out, c.v_out};
        }
        tuples.push_back(t);
    }
    try {
        return Tangle(std::move(tuples), {nw, ne, se, sw});
    } catch (const pd_error&) {
        return std::nullopt;
    }
}

struct GateResult {
    bool ok = false;
    std::string note;
};

GateResult run_gates(const Tangle& t, bool check_kh) {
    GateResult g;
    std::string stage = "numerator";
    try {
        LinkDiagram num = t.numerator_closure();
        if (num.component_count() != 1) {
            g.note = "numerator not a knot";
            return g;
        }
        if (!alexander(num).poly.equals_up_to_units(LaurentPoly(BigInt(1)))) {
            g.note = "numerator Alexander != 1";
            return g;
        }
        stage = "denominator";
        LinkDiagram den = t.denominator_closure();
        if (den.component_count() != 2) {
            g.note = "denominator not 2 components";
            return g;
        }
        stage = "certify";
        if (check_kh) {
            LaurentPoly jn = bracket_as_jones_q(kauffman_bracket_oracle(num));
            LaurentPoly jd = bracket_as_jones_q(kauffman_bracket_oracle(den));
            if (!(jn == LaurentPoly(BigInt(1)))) {
                g.note = "numerator-certified (Jones)";
            } else if (!(jd == unknot_euler_q())) {
                g.note = "denominator-certified (Jones)";
            } else {
                g.note = "Jones-trivial closures";
                return g;
            }
        }
        stage = "conway";
        if (!oracle::conway_polynomial(den).is_zero()) {
            g.note = "denominator Conway != 0";
            return g;
        }
        stage = "join";
        for (const char* code : {kLeftTrefoil, kFigure8}) {
            LinkDiagram d = parse_pd(code);
            // the insertion site needs cut arcs whose cyclic positions admit
            // the fixed gluing convention; scan pairs for a planar join
            bool joined_ok = false, found_site = false;
            for (int a1 : d.arc_labels()) {
                for (int a2 : d.arc_labels()) {
                    if (a1 == a2) continue;
                    try {
                        LinkDiagram joined = tangle_replace(d, a1, a2, t);
                        found_site = true;
                        joined_ok = alexander(joined).poly.equals_up_to_units(alexander(d).poly);
                    } catch (const pd_error&) {
                        continue;
                    }
                    break;
                }
                if (found_site) break;
            }
            if (!found_site) {
                g.note = "no planar join site";
                return g;
            }
            if (!joined_ok) {
                g.note = "join changes Alexander";
                if (std::getenv("KT_VERBOSE"))
                    std::cerr << "JOINFAIL " << t.serialize() << "\n";
                return g;
            }
        }
        g.ok = true;
        return g;
    } catch (const std::exception& e) {
        g.note = stage + " exception: " + e.what();
        return g;
    }
}

void search_kt(int max_wall_events, int max_twists, bool check_kh, bool right_rooted_only) {
    long long tried = 0, valid = 0;
    std::map<std::string, int> reasons;
    auto lays = layouts();
    if (right_rooted_only) {
        std::vector<Layout> filtered;
        for (const Layout& l : lays)
            if (l.root_right) filtered.push_back(l);
        lays = filtered;
    }

    std::vector<Step> steps;
    std::function<void(const Layout&, int, int, int)> recurse =
        [&](const Layout& lay, int region, int walls_left, int twists_left) {
            // try finishing here with every attach variant
            for (int vert = 0; vert < 2; ++vert) {
                for (int site = 0; site < (vert ? 2 : 1); ++site) {
                    for (int circle_over = 0; circle_over < 2; ++circle_over) {
                        for (int attach_ccw = 0; attach_ccw < 2; ++attach_ccw) {
                            if (steps.empty()) continue;  // no bandless tangles
                            Spec spec;
                            spec.layout = &lay;
                            spec.steps = steps;
                            spec.circle_over = circle_over;
                            spec.attach_ccw = attach_ccw;
                            spec.attach_vertical = vert;
                            spec.attach_site = site;
                            ++tried;
                            auto t = realize(spec);
                            if (!t) continue;
                            ++valid;
                            GateResult g = run_gates(*t, check_kh);
                            reasons[g.ok ? "HIT " + g.note : g.note]++;
                            if (g.ok) {
                                std::cout << "HIT n=" << t->crossing_count() << " [" << g.note
                                          << "] " << lay.name << (lay.root_right ? "/r" : "/l")
                                          << " steps=";
                                for (const Step& st : steps)
                                    std::cout << (st.kind == Step::kWall
                                                      ? std::string(1, 'W') + std::to_string(st.wall) +
                                                            (st.band_over ? "o" : "u")
                                                      : std::string(st.twist_pos ? "T+" : "T-"));
                                std::cout << " C" << circle_over << " ccw" << attach_ccw << " v"
                                          << vert << " s" << site << " " << t->serialize() << "\n";
                                std::cout.flush();
                            }
                        }
                    }
                }
            }
            // extend the walk
            if (walls_left > 0) {
                for (int wall : {region, region - 1}) {
                    if (wall < 0 || wall > 3) continue;
                    for (bool over : {false, true}) {
                        steps.push_back(Step{Step::kWall, wall, over, false});
                        recurse(lay, wall == region ? region + 1 : region - 1, walls_left - 1,
                                twists_left);
                        steps.pop_back();
                    }
                }
            }
            if (twists_left > 0) {
                for (bool pos : {false, true}) {
                    steps.push_back(Step{Step::kTwist, 0, false, pos});
                    recurse(lay, region, walls_left, twists_left - 1);
                    steps.pop_back();
                }
            }
        };

    for (const Layout& lay : lays) {
        int wallL = 0;
        for (int i = 0; i < 4; ++i)
            if (lay.chain[i] == kStrandL) wallL = i;
        recurse(lay, lay.root_right ? wallL + 1 : wallL, max_wall_events, max_twists);
        std::cerr << lay.name << (lay.root_right ? "/r" : "/l") << " done (tried " << tried
                  << ", valid " << valid << ")\n";
    }
    for (const auto& [note, count] : reasons) std::cerr << "  " << note << ": " << count << "\n";
}

void search_pattern() {
    // The shipped pattern is derived from the clasp tangle inside the
    // library; this mode just reports its health.
    try {
        AnnularPattern p = livingston_pattern();
        LinkDiagram closure = pattern_closure(p);
        std::cout << "pattern n=" << p.tuples.size()
                  << " closure comps=" << closure.component_count() << "\n";
        std::cout << "closure Alexander trivial: "
                  << alexander(closure).poly.equals_up_to_units(LaurentPoly(BigInt(1))) << "\n";
        for (const char* code : {kLeftTrefoil, kFigure8}) {
            LinkDiagram d = parse_pd(code);
            std::cout << "satellite preserves Alexander: "
                      << alexander(satellite(d, p)).poly.equals_up_to_units(alexander(d).poly)
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cout << "pattern failed: " << e.what() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "kt";
    if (mode == "kt") {
        int max_events = argc > 2 ? std::atoi(argv[2]) : 4;
        int max_twists = argc > 3 ? std::atoi(argv[3]) : 2;
        bool check_kh = argc > 4 ? std::atoi(argv[4]) != 0 : true;
        bool right_only = argc > 5 ? std::atoi(argv[5]) != 0 : false;
        search_kt(max_events, max_twists, check_kh, right_only);
    } else if (mode == "pattern") {
        search_pattern();
    } else {
        std::cerr << "usage: tangle_search [kt [max_events] [check_kh]] | pattern\n";
        return 1;
    }
    return 0;
}
