#include <algorithm>

#include "bigcycle/gadgets.hpp"

namespace bigcycle {

const char* kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::S1: return "S1";
        case GadgetKind::S2: return "S2";
        case GadgetKind::S3: return "S3";
        case GadgetKind::H1: return "H1";
        case GadgetKind::H2: return "H2";
        case GadgetKind::H3: return "H3";
        case GadgetKind::H4: return "H4";
        case GadgetKind::H5: return "H5";
        case GadgetKind::H6: return "H6";
    }
    return "?";
}

int GadgetTemplate::slot_of_role(int role) const {
    for (int s = 0; s < (int)stub_owner.size(); ++s)
        if (stub_owner[s] == role) return s;
    return -1;
}

std::vector<int> GadgetTemplate::slot_perm(const std::vector<int>& role_perm) const {
    std::vector<int> sp(stub_owner.size());
    for (int s = 0; s < (int)stub_owner.size(); ++s)
        sp[s] = slot_of_role(role_perm[stub_owner[s]]);
    return sp;
}

int GadgetTemplate::edge_index(int r1, int r2) const {
    for (int i = 0; i < (int)internal_edges.size(); ++i) {
        auto [a, b] = internal_edges[i];
        if ((a == r1 && b == r2) || (a == r2 && b == r1)) return i;
    }
    throw Error("no such template edge");
}

std::vector<VertexId> Occurrence::sorted_internal() const {
    std::vector<VertexId> s = internal;
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

// Role layouts follow the catalog. Hexagon-based kinds share the
// layout a..f = hexagon, g,h = inner 2-path at (b,e), i,j = outer 2-path at
// (a,d), w1 adj {j,g}, w2 adj {i,h}, m adj {w2,c}, l adj {w2,c}, r adj {w1,f}.
enum { A, B, C, D, E, F, G, H, I, J, W1, W2, M };
enum { L6 = 12, R6 = 13 };  // H6 extras share indexes 12,13

GadgetTemplate make_s1() {
    GadgetTemplate t;
    t.kind = GadgetKind::S1;
    t.num_internal = 4;
    t.role_names = {"a", "b", "c", "d"};
    t.internal_edges = {{A, B}, {B, C}, {C, D}, {D, A}};
    t.stub_owner = {A, B, C, D};
    t.shape = ReplacementShape::TwoAdjacentSV;
    t.sv_slots = {{0, 2}, {1, 3}};
    t.automorphisms = {{1, 2, 3, 0}, {0, 3, 2, 1}};
    return t;
}

GadgetTemplate make_s2() {
    GadgetTemplate t;
    t.kind = GadgetKind::S2;
    t.num_internal = 5;
    t.role_names = {"a", "b", "c", "d", "e"};
    t.internal_edges = {{A, B}, {B, C}, {C, D}, {D, A}, {A, E}, {C, E}};
    t.stub_owner = {E, B, D};
    t.shape = ReplacementShape::OneSV;
    t.sv_slots = {{0, 1, 2}};
    t.automorphisms = {{2, 1, 0, 3, 4}, {0, 3, 2, 1, 4}};
    return t;
}

GadgetTemplate make_s3() {
    GadgetTemplate t;
    t.kind = GadgetKind::S3;
    t.num_internal = 6;
    t.role_names = {"a", "b", "c", "d", "e", "f"};
    t.internal_edges = {{A, B}, {B, C}, {C, D}, {D, A}, {A, E}, {C, E}, {B, F}, {D, F}};
    t.stub_owner = {E, F};  // boundary edges e-A, f-B
    t.shape = ReplacementShape::SuperEdge;
    t.automorphisms = {{2, 1, 0, 3, 4, 5}, {0, 3, 2, 1, 4, 5}, {1, 0, 3, 2, 5, 4}};
    return t;
}

GadgetTemplate make_h1() {
    GadgetTemplate t;
    t.kind = GadgetKind::H1;
    t.num_internal = 6;
    t.role_names = {"a", "b", "c", "d", "e", "f"};
    t.internal_edges = {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}, {F, A}};
    t.stub_owner = {A, B, C, D, E, F};
    t.shape = ReplacementShape::TwoFreeSV;
    t.sv_slots = {{0, 2, 4}, {1, 3, 5}};
    t.automorphisms = {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}};
    return t;
}

std::vector<std::pair<int, int>> hexagon_plus(std::initializer_list<std::pair<int, int>> more) {
    std::vector<std::pair<int, int>> e = {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}, {F, A},
                                          {B, G}, {G, H}, {H, E}};
    e.insert(e.end(), more);
    return e;
}

GadgetTemplate make_h2() {
    GadgetTemplate t;
    t.kind = GadgetKind::H2;
    t.num_internal = 8;
    t.role_names = {"a", "b", "c", "d", "e", "f", "g", "h"};
    t.internal_edges = hexagon_plus({});
    t.stub_owner = {A, G, C, F, H, D};
    t.shape = ReplacementShape::TwoFreeSV;
    t.sv_slots = {{0, 1, 2}, {3, 4, 5}};
    t.automorphisms = {
        {2, 1, 0, 5, 4, 3, 6, 7},  // swap outer paths (a,f) <-> (c,d)
        {6, 1, 2, 3, 4, 7, 0, 5},  // swap (a,f) <-> (g,h)
        {5, 4, 3, 2, 1, 0, 7, 6},  // flip b <-> e
    };
    return t;
}

GadgetTemplate make_h3() {
    GadgetTemplate t;
    t.kind = GadgetKind::H3;
    t.num_internal = 10;
    t.role_names = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
    t.internal_edges = hexagon_plus({{A, I}, {I, J}, {J, D}});
    t.stub_owner = {J, G, C, F, H, I};
    t.shape = ReplacementShape::Dumbbells;
    t.dumbbell_slots = {{3, 2}, {4, 0}, {5, 1}};  // labels (4,3), (5,1), (6,2)
    t.automorphisms = {{3, 4, 5, 0, 1, 2, 7, 6, 9, 8}};
    return t;
}

GadgetTemplate make_h4() {
    GadgetTemplate t;
    t.kind = GadgetKind::H4;
    t.num_internal = 12;
    t.role_names = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "w1", "w2"};
    t.internal_edges = hexagon_plus({{A, I}, {I, J}, {J, D}, {J, W1}, {G, W1}, {I, W2}, {H, W2}});
    t.stub_owner = {W2, W1, C, F};
    t.shape = ReplacementShape::TwoAdjacentSV;
    t.sv_slots = {{0, 2}, {1, 3}};
    t.automorphisms = {{3, 4, 5, 0, 1, 2, 7, 6, 9, 8, 11, 10}};
    return t;
}

GadgetTemplate make_h5() {
    GadgetTemplate t;
    t.kind = GadgetKind::H5;
    t.num_internal = 13;
    t.role_names = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "w1", "w2", "m"};
    t.internal_edges = hexagon_plus(
        {{A, I}, {I, J}, {J, D}, {J, W1}, {G, W1}, {I, W2}, {H, W2}, {M, W2}, {M, C}});
    t.stub_owner = {M, W1, F};
    t.shape = ReplacementShape::OneSV;
    t.sv_slots = {{0, 1, 2}};
    t.automorphisms = {};
    return t;
}

GadgetTemplate make_h6() {
    GadgetTemplate t;
    t.kind = GadgetKind::H6;
    t.num_internal = 14;
    t.role_names = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "w1", "w2", "l", "r"};
    t.internal_edges = hexagon_plus({{A, I},
                                     {I, J},
                                     {J, D},
                                     {J, W1},
                                     {G, W1},
                                     {I, W2},
                                     {H, W2},
                                     {L6, W2},
                                     {L6, C},
                                     {R6, W1},
                                     {R6, F}});
    t.stub_owner = {L6, R6};
    t.shape = ReplacementShape::Dumbbells;
    t.dumbbell_slots = {{0, 1}};
    t.automorphisms = {{3, 4, 5, 0, 1, 2, 7, 6, 9, 8, 11, 10, 13, 12}};
    return t;
}

}  // namespace

const GadgetTemplate& gadget_template(GadgetKind kind) {
    static const GadgetTemplate s1 = make_s1();
    static const GadgetTemplate s2 = make_s2();
    static const GadgetTemplate s3 = make_s3();
    static const GadgetTemplate h1 = make_h1();
    static const GadgetTemplate h2 = make_h2();
    static const GadgetTemplate h3 = make_h3();
    static const GadgetTemplate h4 = make_h4();
    static const GadgetTemplate h5 = make_h5();
    static const GadgetTemplate h6 = make_h6();
    switch (kind) {
        case GadgetKind::S1: return s1;
        case GadgetKind::S2: return s2;
        case GadgetKind::S3: return s3;
        case GadgetKind::H1: return h1;
        case GadgetKind::H2: return h2;
        case GadgetKind::H3: return h3;
        case GadgetKind::H4: return h4;
        case GadgetKind::H5: return h5;
        case GadgetKind::H6: return h6;
    }
    throw Error("unknown gadget kind");
}

void canonicalize_pairing(std::vector<std::pair<int, int>>& pairing) {
    for (auto& p : pairing)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairing.begin(), pairing.end());
}

}  // namespace bigcycle
