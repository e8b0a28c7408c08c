#include <algorithm>
#include <set>

#include "gencon/reductions.hpp"

namespace gencon {

void ThreeDMInstance::validate() const {
    if (n < 1) throw Error("3-DM: n must be at least 1");
    std::set<std::array<int, 3>> seen;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        for (int c : triples[i])
            if (c < 0 || c >= n) throw Error("3-DM: triple " + std::to_string(i) + " has an index out of range");
        if (!seen.insert(triples[i]).second) throw Error("3-DM: triple " + std::to_string(i) + " is repeated");
    }
}

bool is_perfect_matching(const ThreeDMInstance& inst, const Matching& m) {
    if (static_cast<int>(m.chosen.size()) != inst.n) return false;
    std::vector<char> used(3 * static_cast<std::size_t>(inst.n), 0);
    std::vector<char> picked(inst.triples.size(), 0);
    for (int idx : m.chosen) {
        if (idx < 0 || idx >= inst.m() || picked[idx]) return false;
        picked[idx] = 1;
        for (int c = 0; c < 3; ++c) {
            auto slot = static_cast<std::size_t>(c * inst.n + inst.triples[idx][c]);
            if (used[slot]) return false;
            used[slot] = 1;
        }
    }
    return true;
}

ThreeDMInstance parse_3dm(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("3-DM: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("triples") ||
        !j["triples"].is_array())
        throw Error("3-DM: expected {\"n\": int, \"triples\": [[u,v,w],...]}");
    ThreeDMInstance inst;
    inst.n = j["n"].get<int>();
    for (std::size_t i = 0; i < j["triples"].size(); ++i) {
        const json& t = j["triples"][i];
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_number_integer())
            throw Error("3-DM: triple " + std::to_string(i) + " is not [u,v,w]");
        inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    inst.validate();
    return inst;
}

json threedm_to_json(const ThreeDMInstance& inst) {
    json j;
    j["n"] = inst.n;
    json ts = json::array();
    for (const auto& t : inst.triples) ts.push_back({t[0], t[1], t[2]});
    j["triples"] = std::move(ts);
    return j;
}

std::optional<Matching> solve_3dm_brute(const ThreeDMInstance& inst) {
    inst.validate();
    if (inst.n > 6 || inst.m() > 20) throw Error("3-DM oracle: size cap is n <= 6, m <= 20");
    if (inst.m() < inst.n) return std::nullopt;

    std::vector<char> used(3 * static_cast<std::size_t>(inst.n), 0);
    std::vector<int> chosen;
    auto fits = [&](int idx) {
        for (int c = 0; c < 3; ++c)
            if (used[c * inst.n + inst.triples[idx][c]]) return false;
        return true;
    };
    auto mark = [&](int idx, char v) {
        for (int c = 0; c < 3; ++c) used[c * inst.n + inst.triples[idx][c]] = v;
    };
    // n-subsets in lexicographic order, skipping any that reuse a coordinate
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == inst.n) return true;
        for (int i = from; i < inst.m(); ++i) {
            if (!fits(i)) continue;
            mark(i, 1);
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            mark(i, 0);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return Matching{chosen};
}

}  // namespace gencon
