#include "radix/reference_table.hpp"

#include <array>
#include <initializer_list>

namespace radix {

namespace {

FactorShape shape_of(std::initializer_list<std::array<long long, 3>> triples) {
    FactorShape s;
    for (const auto& t : triples) s.add(t[0], t[1], t[2]);
    s.canonicalize();
    return s;
}

std::vector<ReferenceRow> build() {
    std::vector<ReferenceRow> rows;
    rows.push_back({3, 3, 2, "2.I", shape_of({{1, 1, 1}, {1, 2, 1}})});
    rows.push_back({48, 6, 2, "2.II", shape_of({{48, 1, 1}})});
    rows.push_back({48, 96, 2, "2.II", shape_of({{48, 1, 1}})});
    rows.push_back({48, 24, 2, "2.II", shape_of({{16, 1, 1}, {16, 2, 1}})});
    rows.push_back({48, 3, 2, "2.III.i", shape_of({{16, 1, 1}, {16, 2, 1}})});
    rows.push_back({48, 5, 2, "2.III.ii", shape_of({{8, 2, 3}})});
    rows.push_back({48, 41, 2, "2.III.ii", shape_of({{4, 2, 3}, {8, 1, 1}, {8, 2, 1}})});
    rows.push_back({48, 65, 2, "2.III.iii",
                    shape_of({{1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 2, 1},
                              {4, 1, 1}, {4, 2, 1}, {8, 1, 1}, {8, 2, 1}})});
    rows.push_back({48, 12, 2, "2.IV.i.1", shape_of({{48, 1, 1}})});
    rows.push_back({48, 448, 2, "2.IV.i.2", shape_of({{8, 2, 3}})});
    rows.push_back({48, 1984, 2, "2.IV.i.3", shape_of({{8, 1, 2}, {8, 2, 2}})});
    rows.push_back({48, 320, 2, "2.IV.ii", shape_of({{8, 2, 3}})});
    rows.push_back({80, BigInt(3) * bpow(2, 160), 2, "2.IV.0.1",
                    shape_of({{16, 1, 1}, {16, 4, 1}})});
    rows.push_back({80, BigInt(41) * bpow(2, 20), 2, "2.IV.iii.1",
                    shape_of({{4, 2, 1}, {4, 4, 2}, {8, 1, 1}, {8, 4, 1}})});
    rows.push_back({80, BigInt(17) * bpow(2, 20), 2, "2.IV.iii.2",
                    shape_of({{4, 1, 2}, {4, 2, 1}, {4, 4, 4}})});
    rows.push_back({80, BigInt(33) * bpow(2, 20), 2, "2.IV.iii.4",
                    shape_of({{4, 1, 4}, {4, 4, 4}})});
    rows.push_back({84, BigInt(65) * bpow(2, 42), 2, "2.IV.iii.3",
                    shape_of({{2, 1, 2}, {2, 2, 2}, {2, 3, 4}, {2, 6, 4}})});
    return rows;
}

} // namespace

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = build();
    return rows;
}

} // namespace radix
