// Hand-encoded expansion case tables, one entry per catalog case, closed
// under each template's automorphism group. Keys: (kind, used stub
// slots, gadget-edge usage, external pairing). Values: the exact internal
// edge selection of the case, plus its cycle-length outcome formula.
#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "bigcycle/gadgets.hpp"

namespace bigcycle {

namespace {

struct OutCycle {
    std::vector<std::pair<int, int>> arcs;  // pairing pairs absorbed (slot labels, 1-based here)
    int constant;
};

struct BaseCase {
    GadgetKind kind;
    std::vector<int> used;  // 1-based labels
    bool edge_used;
    std::vector<std::pair<int, int>> pairing;  // 1-based
    std::vector<std::pair<const char*, const char*>> completion;
    const char* id;
    bool six;
    std::vector<OutCycle> out;
};

using P = std::pair<int, int>;
using RP = std::pair<const char*, const char*>;

std::vector<BaseCase> base_cases() {
    std::vector<BaseCase> t;
    auto add = [&](GadgetKind k, std::vector<int> used, bool eu, std::vector<P> pr,
                   std::vector<RP> comp, const char* id, bool six, std::vector<OutCycle> out) {
        t.push_back(BaseCase{k, std::move(used), eu, std::move(pr), std::move(comp), id, six,
                             std::move(out)});
    };
    const auto S1 = GadgetKind::S1, S2 = GadgetKind::S2, S3 = GadgetKind::S3;
    const auto H1 = GadgetKind::H1, H2 = GadgetKind::H2, H3 = GadgetKind::H3;
    const auto H4 = GadgetKind::H4, H5 = GadgetKind::H5, H6 = GadgetKind::H6;

    // Case family A: squares.
    add(S1, {1, 2}, true, {{1, 2}}, {{"a", "d"}, {"d", "c"}, {"c", "b"}}, "A.1", false,
        {{{{1, 2}}, 5}});
    add(S1, {1, 2, 3, 4}, false, {{1, 3}, {2, 4}}, {{"a", "b"}, {"c", "d"}}, "A.2", false,
        {{{{1, 3}, {2, 4}}, 6}});
    add(S1, {1, 2, 3, 4}, false, {{1, 2}, {3, 4}}, {{"a", "d"}, {"b", "c"}}, "A.3", false,
        {{{{1, 2}, {3, 4}}, 6}});
    add(S2, {1, 2}, false, {{1, 2}}, {{"e", "a"}, {"a", "d"}, {"d", "c"}, {"c", "b"}}, "A.4a",
        false, {{{{1, 2}}, 6}});
    add(S2, {2, 3}, false, {{2, 3}}, {{"d", "c"}, {"c", "e"}, {"e", "a"}, {"a", "b"}}, "A.4b",
        false, {{{{2, 3}}, 6}});
    add(S3, {}, false, {},
        {{"e", "a"}, {"a", "d"}, {"d", "f"}, {"f", "b"}, {"b", "c"}, {"c", "e"}}, "A.5a", true,
        {{{}, 6}});
    add(S3, {1, 2}, true, {{1, 2}},
        {{"e", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "f"}}, "A.5b", false,
        {{{{1, 2}}, 7}});

    // Case family B: H1.
    const std::vector<RP> b_2464 = {{"b", "c"}, {"f", "a"}, {"e", "f"}, {"d", "e"}};
    const std::vector<RP> b_26 = {{"a", "b"}, {"c", "d"}, {"d", "e"}, {"e", "f"}};
    const std::vector<RP> b_46 = {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}};
    add(H1, {1, 2, 3, 4}, false, {{1, 3}, {2, 4}}, b_2464, "B.1a", false,
        {{{{1, 3}, {2, 4}}, 8}});
    add(H1, {1, 2, 3, 6}, false, {{1, 3}, {2, 6}}, b_26, "B.1b", false, {{{{1, 3}, {2, 6}}, 8}});
    add(H1, {1, 3, 4, 6}, false, {{1, 3}, {4, 6}}, b_46, "B.1c", false,
        {{{{1, 3}}, 4}, {{{4, 6}}, 4}});
    add(H1, {1, 2, 3, 4}, false, {{1, 2}, {3, 4}}, b_2464, "B.2a", false,
        {{{{1, 2}, {3, 4}}, 8}});
    add(H1, {1, 2, 3, 6}, false, {{1, 2}, {3, 6}}, b_26, "B.2b", true,
        {{{{1, 2}}, 3}, {{{3, 6}}, 5}});
    add(H1, {1, 2, 3, 4}, false, {{1, 4}, {2, 3}}, b_2464, "B.2c", true,
        {{{{2, 3}}, 3}, {{{1, 4}}, 5}});
    add(H1, {1, 3, 4, 6}, false, {{1, 4}, {3, 6}}, b_46, "B.2d", false,
        {{{{1, 4}, {3, 6}}, 8}});
    add(H1, {1, 2, 3, 6}, false, {{1, 6}, {2, 3}}, b_26, "B.2e", false,
        {{{{1, 6}, {2, 3}}, 8}});
    add(H1, {1, 3, 4, 6}, false, {{1, 6}, {3, 4}}, b_46, "B.2f", false,
        {{{{1, 6}, {3, 4}}, 8}});

    // Case family C: H2.
    const std::vector<RP> c_45 = {{"a", "f"}, {"g", "b"}, {"b", "c"},
                                  {"c", "d"}, {"d", "e"}, {"e", "h"}};
    const std::vector<RP> c_46 = {{"g", "h"}, {"h", "e"}, {"e", "f"},
                                  {"a", "b"}, {"b", "c"}, {"c", "d"}};
    const std::vector<RP> c_56 = {{"g", "b"}, {"b", "c"}, {"c", "d"},
                                  {"a", "f"}, {"f", "e"}, {"e", "h"}};
    add(H2, {1, 2, 4, 5}, false, {{1, 2}, {4, 5}}, c_45, "C.1a", false,
        {{{{1, 2}, {4, 5}}, 10}});
    add(H2, {1, 2, 4, 6}, false, {{1, 2}, {4, 6}}, c_46, "C.1b", false,
        {{{{1, 2}, {4, 6}}, 10}});
    add(H2, {1, 2, 5, 6}, false, {{1, 2}, {5, 6}}, c_56, "C.1c", false,
        {{{{1, 2}, {5, 6}}, 10}});
    add(H2, {1, 2, 4, 5}, false, {{1, 4}, {2, 5}}, c_45, "C.2a", true,
        {{{{1, 4}}, 3}, {{{2, 5}}, 7}});
    add(H2, {1, 2, 4, 6}, false, {{1, 4}, {2, 6}}, c_46, "C.2b", false,
        {{{{1, 4}, {2, 6}}, 10}});
    add(H2, {1, 2, 4, 5}, false, {{1, 5}, {2, 4}}, c_45, "C.2c", false,
        {{{{1, 5}, {2, 4}}, 10}});
    add(H2, {1, 2, 5, 6}, false, {{1, 5}, {2, 6}}, c_56, "C.2d", false,
        {{{{1, 5}}, 5}, {{{2, 6}}, 5}});
    add(H2, {1, 2, 4, 6}, false, {{1, 6}, {2, 4}}, c_46, "C.2e", false,
        {{{{1, 6}}, 5}, {{{2, 4}}, 5}});
    add(H2, {1, 2, 5, 6}, false, {{1, 6}, {2, 5}}, c_56, "C.2f", false,
        {{{{1, 6}, {2, 5}}, 10}});

    // Case family D: H3. Dumbbells pair the stub labels (4,3), (5,1), (6,2).
    add(H3, {}, false, {},
        {{"a", "f"}, {"f", "e"}, {"e", "h"}, {"h", "g"}, {"g", "b"}, {"b", "c"}, {"c", "d"},
         {"d", "j"}, {"j", "i"}, {"i", "a"}},
        "D.1", false, {{{}, 10}});
    add(H3, {3, 4}, false, {{3, 4}},
        {{"c", "d"}, {"d", "j"}, {"j", "i"}, {"i", "a"}, {"a", "b"}, {"b", "g"}, {"g", "h"},
         {"h", "e"}, {"e", "f"}},
        "D.2a", false, {{{{3, 4}}, 11}});
    add(H3, {1, 5}, false, {{1, 5}},
        {{"h", "g"}, {"g", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"},
         {"a", "i"}, {"i", "j"}},
        "D.2b", false, {{{{1, 5}}, 11}});
    add(H3, {2, 6}, false, {{2, 6}},
        {{"i", "j"}, {"j", "d"}, {"d", "c"}, {"c", "b"}, {"b", "a"}, {"a", "f"}, {"f", "e"},
         {"e", "h"}, {"h", "g"}},
        "D.2c", false, {{{{2, 6}}, 11}});
    const std::vector<RP> d_4351 = {{"j", "i"}, {"i", "a"}, {"a", "b"}, {"b", "g"},
                                    {"g", "h"}, {"f", "e"}, {"e", "d"}, {"d", "c"}};
    const std::vector<RP> d_4362 = {{"i", "j"}, {"j", "d"}, {"d", "e"}, {"e", "h"},
                                    {"h", "g"}, {"f", "a"}, {"a", "b"}, {"b", "c"}};
    const std::vector<RP> d_5162 = {{"j", "d"}, {"d", "c"}, {"c", "b"}, {"b", "g"},
                                    {"i", "a"}, {"a", "f"}, {"f", "e"}, {"e", "h"}};
    add(H3, {1, 3, 4, 5}, false, {{3, 4}, {1, 5}}, d_4351, "D.3.1a", false,
        {{{{3, 4}}, 5}, {{{1, 5}}, 7}});
    add(H3, {2, 3, 4, 6}, false, {{3, 4}, {2, 6}}, d_4362, "D.3.1b", false,
        {{{{3, 4}}, 5}, {{{2, 6}}, 7}});
    add(H3, {1, 2, 5, 6}, false, {{1, 5}, {2, 6}}, d_5162, "D.3.1c", false,
        {{{{1, 5}, {2, 6}}, 12}});
    add(H3, {1, 3, 4, 5}, false, {{1, 4}, {3, 5}}, d_4351, "D.3.2a", false,
        {{{{1, 4}, {3, 5}}, 12}});
    add(H3, {2, 3, 4, 6}, false, {{2, 4}, {3, 6}}, d_4362, "D.3.2b", false,
        {{{{2, 4}, {3, 6}}, 12}});
    add(H3, {1, 3, 4, 5}, false, {{4, 5}, {1, 3}}, d_4351, "D.3.2c", false,
        {{{{4, 5}, {1, 3}}, 12}});
    add(H3, {2, 3, 4, 6}, false, {{4, 6}, {2, 3}}, d_4362, "D.3.2d", false,
        {{{{4, 6}, {2, 3}}, 12}});
    add(H3, {1, 2, 5, 6}, false, {{2, 5}, {1, 6}}, d_5162, "D.3.2e", false,
        {{{{2, 5}, {1, 6}}, 12}});
    add(H3, {1, 2, 5, 6}, false, {{5, 6}, {1, 2}}, d_5162, "D.3.2f", true,
        {{{{5, 6}}, 6}, {{{1, 2}}, 6}});
    add(H3, {1, 2, 3, 4, 5, 6}, false, {{3, 4}, {1, 5}, {2, 6}},
        {{"j", "i"}, {"f", "a"}, {"a", "b"}, {"b", "g"}, {"c", "d"}, {"d", "e"}, {"e", "h"}},
        "D.4.1", false, {{{{3, 4}, {1, 5}, {2, 6}}, 13}});
    auto add_d43 = [&](std::vector<P> pr, std::vector<RP> comp, const char* id) {
        std::vector<std::pair<int, int>> all = pr;
        add(H3, {1, 2, 3, 4, 5, 6}, false, pr, std::move(comp), id, false, {{all, 13}});
    };
    add_d43({{1, 4}, {3, 5}, {2, 6}},
            {{"j", "d"}, {"d", "e"}, {"e", "h"}, {"f", "a"}, {"a", "i"}, {"c", "b"}, {"b", "g"}},
            "D.4.2a");
    add_d43({{2, 4}, {3, 6}, {1, 5}},
            {{"j", "d"}, {"d", "c"}, {"f", "e"}, {"e", "h"}, {"i", "a"}, {"a", "b"}, {"b", "g"}},
            "D.4.2b");
    add_d43({{4, 5}, {1, 3}, {2, 6}},
            {{"j", "d"}, {"d", "e"}, {"e", "h"}, {"f", "a"}, {"a", "i"}, {"g", "b"}, {"b", "c"}},
            "D.4.2c");
    add_d43({{4, 6}, {2, 3}, {1, 5}},
            {{"i", "j"}, {"f", "a"}, {"a", "b"}, {"b", "g"}, {"h", "e"}, {"e", "d"}, {"d", "c"}},
            "D.4.2d");
    add_d43({{2, 5}, {1, 6}, {3, 4}},
            {{"j", "d"}, {"d", "e"}, {"e", "h"}, {"i", "a"}, {"a", "f"}, {"g", "b"}, {"b", "c"}},
            "D.4.2e");
    add_d43({{5, 6}, {1, 2}, {3, 4}},
            {{"i", "j"}, {"f", "a"}, {"a", "b"}, {"b", "g"}, {"h", "e"}, {"e", "d"}, {"d", "c"}},
            "D.4.2f");
    add_d43({{1, 3}, {2, 5}, {4, 6}},
            {{"j", "i"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"g", "b"}, {"b", "a"}, {"a", "f"}},
            "D.4.3a");
    add_d43({{1, 3}, {5, 6}, {2, 4}},
            {{"g", "h"}, {"i", "a"}, {"a", "b"}, {"b", "c"}, {"f", "e"}, {"e", "d"}, {"d", "j"}},
            "D.4.3b");
    add_d43({{3, 5}, {1, 2}, {4, 6}},
            {{"g", "b"}, {"b", "a"}, {"a", "i"}, {"f", "e"}, {"e", "h"}, {"c", "d"}, {"d", "j"}},
            "D.4.3c");
    add_d43({{3, 5}, {1, 6}, {2, 4}},
            {{"g", "h"}, {"i", "a"}, {"a", "b"}, {"b", "c"}, {"f", "e"}, {"e", "d"}, {"d", "j"}},
            "D.4.3d");
    add_d43({{2, 3}, {1, 6}, {4, 5}},
            {{"g", "h"}, {"f", "e"}, {"e", "d"}, {"d", "j"}, {"c", "b"}, {"b", "a"}, {"a", "i"}},
            "D.4.3e");
    add_d43({{2, 3}, {5, 6}, {1, 4}},
            {{"g", "b"}, {"b", "a"}, {"a", "f"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"i", "j"}},
            "D.4.3f");
    add_d43({{3, 6}, {1, 2}, {4, 5}},
            {{"j", "i"}, {"f", "a"}, {"a", "b"}, {"b", "g"}, {"c", "d"}, {"d", "e"}, {"e", "h"}},
            "D.4.3g");
    add_d43({{3, 6}, {2, 5}, {1, 4}},
            {{"g", "b"}, {"b", "a"}, {"a", "f"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"i", "j"}},
            "D.4.3h");

    // Case family E: H4.
    add(H4, {1, 2, 3, 4}, false, {{1, 3}, {2, 4}},
        {{"w2", "i"}, {"i", "j"}, {"j", "w1"}, {"f", "a"}, {"a", "b"}, {"b", "g"}, {"g", "h"},
         {"h", "e"}, {"e", "d"}, {"d", "c"}},
        "E.1", false, {{{{1, 3}, {2, 4}}, 14}});
    add(H4, {1, 2}, true, {{1, 2}},
        {{"w2", "h"}, {"h", "e"}, {"e", "f"}, {"f", "a"}, {"a", "i"}, {"i", "j"}, {"j", "d"},
         {"d", "c"}, {"c", "b"}, {"b", "g"}, {"g", "w1"}},
        "E.2a", false, {{{{1, 2}}, 13}});
    add(H4, {1, 4}, true, {{1, 4}},
        {{"w2", "i"}, {"i", "j"}, {"j", "w1"}, {"w1", "g"}, {"g", "h"}, {"h", "e"}, {"e", "d"},
         {"d", "c"}, {"c", "b"}, {"b", "a"}, {"a", "f"}},
        "E.2b", false, {{{{1, 4}}, 13}});
    add(H4, {3, 4}, true, {{3, 4}},
        {{"f", "a"}, {"a", "b"}, {"b", "g"}, {"g", "w1"}, {"w1", "j"}, {"j", "i"}, {"i", "w2"},
         {"w2", "h"}, {"h", "e"}, {"e", "d"}, {"d", "c"}},
        "E.2c", false, {{{{3, 4}}, 13}});
    add(H4, {1, 2, 3, 4}, false, {{1, 2}, {3, 4}},
        {{"w2", "i"}, {"i", "a"}, {"a", "b"}, {"b", "g"}, {"g", "h"}, {"h", "e"}, {"e", "f"},
         {"c", "d"}, {"d", "j"}, {"j", "w1"}},
        "E.2d", false, {{{{1, 2}, {3, 4}}, 14}});
    add(H4, {1, 2, 3, 4}, false, {{1, 4}, {2, 3}},
        {{"w2", "i"}, {"i", "j"}, {"j", "w1"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"h", "g"},
         {"g", "b"}, {"b", "a"}, {"a", "f"}},
        "E.2e", false, {{{{1, 4}, {2, 3}}, 14}});

    // Case family F: H5.
    add(H5, {1, 2}, false, {{1, 2}},
        {{"m", "w2"}, {"w2", "h"}, {"h", "g"}, {"g", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
         {"e", "f"}, {"f", "a"}, {"a", "i"}, {"i", "j"}, {"j", "w1"}},
        "F.a", false, {{{{1, 2}}, 14}});
    add(H5, {1, 3}, false, {{1, 3}},
        {{"m", "w2"}, {"w2", "i"}, {"i", "j"}, {"j", "w1"}, {"w1", "g"}, {"g", "h"}, {"h", "e"},
         {"e", "d"}, {"d", "c"}, {"c", "b"}, {"b", "a"}, {"a", "f"}},
        "F.b", false, {{{{1, 3}}, 14}});
    add(H5, {2, 3}, false, {{2, 3}},
        {{"f", "a"}, {"a", "i"}, {"i", "w2"}, {"w2", "m"}, {"m", "c"}, {"c", "b"}, {"b", "g"},
         {"g", "h"}, {"h", "e"}, {"e", "d"}, {"d", "j"}, {"j", "w1"}},
        "F.c", false, {{{{2, 3}}, 14}});

    // Case family G: H6.
    add(H6, {}, false, {},
        {{"l", "c"}, {"c", "d"}, {"d", "e"}, {"e", "h"}, {"h", "g"}, {"g", "b"}, {"b", "a"},
         {"a", "f"}, {"f", "r"}, {"r", "w1"}, {"w1", "j"}, {"j", "i"}, {"i", "w2"}, {"w2", "l"}},
        "G.1", false, {{{}, 14}});
    add(H6, {1, 2}, false, {{1, 2}},
        {{"l", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}, {"a", "b"}, {"b", "g"},
         {"g", "h"}, {"h", "w2"}, {"w2", "i"}, {"i", "j"}, {"j", "w1"}, {"w1", "r"}},
        "G.2", false, {{{{1, 2}}, 15}});

    return t;
}

int role_index(const GadgetTemplate& t, const char* name) {
    for (int i = 0; i < t.num_internal; ++i)
        if (std::string(t.role_names[i]) == name) return i;
    throw Error(std::string("unknown role ") + name);
}

struct Key {
    GadgetKind kind;
    std::vector<int> used;  // 0-based slots, sorted
    bool edge_used;
    std::vector<std::pair<int, int>> pairing;  // canonical, 0-based
    bool operator<(const Key& o) const {
        if (kind != o.kind) return (int)kind < (int)o.kind;
        if (used != o.used) return used < o.used;
        if (edge_used != o.edge_used) return edge_used < o.edge_used;
        return pairing < o.pairing;
    }
};

struct TableValue {
    std::string case_id;
    bool six;
    std::vector<int> completion_idx;
    std::vector<std::vector<std::pair<int, int>>> out_arcs;  // 0-based slot pairs
    std::vector<int> out_consts;
    std::vector<std::string> aliases;
};

struct Tables {
    std::map<Key, TableValue> lookup;
    std::vector<RewireEntry> entries;
};

std::vector<std::vector<int>> automorphism_group(const GadgetTemplate& t) {
    std::vector<std::vector<int>> group;
    std::vector<int> ident(t.num_internal);
    for (int i = 0; i < t.num_internal; ++i) ident[i] = i;
    group.push_back(ident);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t gi = 0; gi < group.size(); ++gi)
            for (const auto& gen : t.automorphisms) {
                std::vector<int> comp(t.num_internal);
                for (int i = 0; i < t.num_internal; ++i) comp[i] = gen[group[gi][i]];
                if (std::find(group.begin(), group.end(), comp) == group.end()) {
                    group.push_back(comp);
                    grew = true;
                }
            }
    }
    return group;
}

Tables build_tables() {
    Tables tab;
    for (const BaseCase& bc : base_cases()) {
        const GadgetTemplate& t = gadget_template(bc.kind);
        std::vector<int> comp_idx;
        for (auto& [r1, r2] : bc.completion)
            comp_idx.push_back(t.edge_index(role_index(t, r1), role_index(t, r2)));

        for (const auto& perm : automorphism_group(t)) {
            std::vector<int> sp = t.slot_perm(perm);

            Key key;
            key.kind = bc.kind;
            key.edge_used = bc.edge_used;
            for (int label : bc.used) key.used.push_back(sp[label - 1]);
            std::sort(key.used.begin(), key.used.end());
            for (auto [x, y] : bc.pairing) key.pairing.emplace_back(sp[x - 1], sp[y - 1]);
            canonicalize_pairing(key.pairing);

            TableValue val;
            val.case_id = bc.id;
            val.six = bc.six;
            for (int ei : comp_idx) {
                auto [r1, r2] = t.internal_edges[ei];
                val.completion_idx.push_back(t.edge_index(perm[r1], perm[r2]));
            }
            std::sort(val.completion_idx.begin(), val.completion_idx.end());
            for (const OutCycle& oc : bc.out) {
                std::vector<std::pair<int, int>> arcs;
                for (auto [x, y] : oc.arcs) {
                    int a = sp[x - 1], b = sp[y - 1];
                    arcs.emplace_back(std::min(a, b), std::max(a, b));
                }
                std::sort(arcs.begin(), arcs.end());
                val.out_arcs.push_back(std::move(arcs));
                val.out_consts.push_back(oc.constant);
            }
            auto it = tab.lookup.find(key);
            if (it != tab.lookup.end()) {
                // Cases related by an automorphism must agree on the
                // outcome; the internal selection may differ by a symmetry
                // that stabilizes the key (e.g. the two diagonals of A.2).
                auto norm = [](const TableValue& v) {
                    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> o;
                    for (size_t i = 0; i < v.out_arcs.size(); ++i)
                        o.emplace_back(v.out_arcs[i], v.out_consts[i]);
                    std::sort(o.begin(), o.end());
                    return o;
                };
                bool same_case = it->second.case_id == bc.id;
                if (it->second.six != val.six ||
                    (!same_case && norm(it->second) != norm(val)))
                    throw Error(std::string("case table conflict: ") + bc.id + " vs " +
                                it->second.case_id);
                if (it->second.case_id != bc.id &&
                    std::find(it->second.aliases.begin(), it->second.aliases.end(), bc.id) ==
                        it->second.aliases.end())
                    it->second.aliases.push_back(bc.id);
                continue;
            }
            tab.lookup.emplace(key, std::move(val));
        }
    }
    for (const auto& [key, val] : tab.lookup) {
        RewireEntry e;
        e.kind = key.kind;
        e.used_slots = key.used;
        e.internal_edge_used = key.edge_used;
        e.pairing = key.pairing;
        e.outcome.case_id = val.case_id;
        e.outcome.may_introduce_six_cycle = val.six;
        e.outcome.completion_edge_indexes = val.completion_idx;
        for (size_t i = 0; i < val.out_arcs.size(); ++i) {
            std::vector<int> arc_idx;
            for (const auto& arc : val.out_arcs[i]) {
                auto it = std::find(key.pairing.begin(), key.pairing.end(), arc);
                arc_idx.push_back((int)(it - key.pairing.begin()));
            }
            e.outcome.out_cycle_arcs.push_back(std::move(arc_idx));
            e.outcome.out_cycle_consts.push_back(val.out_consts[i]);
        }
        e.alias_case_ids = val.aliases;
        tab.entries.push_back(std::move(e));
    }
    return tab;
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

}  // namespace

const std::vector<RewireEntry>& rewire_table() { return tables().entries; }

RewireOutcome rewire_two_factor(GadgetKind kind, const FState& fstate) {
    Key key;
    key.kind = kind;
    key.used = fstate.used_slots;
    std::sort(key.used.begin(), key.used.end());
    key.edge_used = fstate.internal_edge_used;
    key.pairing = fstate.pairing;
    canonicalize_pairing(key.pairing);

    auto it = tables().lookup.find(key);
    if (it == tables().lookup.end()) {
        std::ostringstream msg;
        msg << "no expansion case for " << kind_name(kind) << " used={";
        for (int s : key.used) msg << s + 1 << ",";
        msg << "} edge=" << key.edge_used << " pairing={";
        for (auto [a, b] : key.pairing) msg << "(" << a + 1 << "," << b + 1 << ")";
        msg << "}";
        throw UnknownCaseError(msg.str());
    }
    const TableValue& val = it->second;
    RewireOutcome out;
    out.case_id = val.case_id;
    out.may_introduce_six_cycle = val.six;
    out.completion_edge_indexes = val.completion_idx;
    out.out_cycle_consts = val.out_consts;
    // Arc indexes are relative to the canonical pairing; report them relative
    // to the caller's (canonicalized) fstate pairing, which is identical.
    out.out_cycle_arcs.reserve(val.out_arcs.size());
    for (const auto& arcs : val.out_arcs) {
        std::vector<int> idx;
        for (const auto& arc : arcs) {
            auto fit = std::find(key.pairing.begin(), key.pairing.end(), arc);
            idx.push_back((int)(fit - key.pairing.begin()));
        }
        out.out_cycle_arcs.push_back(std::move(idx));
    }
    return out;
}

}  // namespace bigcycle
