#include "deltatopo/fixtures.hpp"

namespace delta::fixtures {

DeltaSet circle() {
    DeltaSet x;
    x.labels = {{"x0"}, {"x1"}};
    x.faces = {{{}}, {{0, 0}}};
    return x;
}

DeltaSet dunce_hat() {
    DeltaSet x;
    x.labels = {{"x0"}, {"x1"}, {"x2"}};
    x.faces = {{{}}, {{0, 0}}, {{0, 0, 0}}};
    return x;
}

DeltaSet triangle_circle() {
    return from_simplicial_complex({"0", "1", "2"},
                                   {{"0"}, {"1"}, {"2"}, {"0", "1"}, {"0", "2"}, {"1", "2"}});
}

DeltaSet three_cycle() {
    DeltaSet x;
    x.labels = {{"v0", "v1", "v2"}, {"e0", "e1", "e2"}};
    x.faces = {{{}, {}, {}}, {{0, 1}, {1, 2}, {2, 0}}};
    return x;
}

DeltaSet empty() { return DeltaSet{}; }

std::optional<DeltaSet> by_name(const std::string& name) {
    if (name == "circle") return circle();
    if (name == "dunce-hat") return dunce_hat();
    if (name == "triangle-circle") return triangle_circle();
    if (name == "three-cycle") return three_cycle();
    if (name == "empty") return empty();
    if (name.rfind("delta-", 0) == 0) {
        try {
            size_t pos = 0;
            int n = std::stoi(name.substr(6), &pos);
            if (pos == name.size() - 6 && n >= 0 && n <= 8) return standard_simplex(n);
        } catch (...) {
        }
    }
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"circle", "dunce-hat", "triangle-circle", "three-cycle", "empty", "delta-N (N = 0..8)"};
}

}  // namespace delta::fixtures
