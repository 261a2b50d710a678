#include "mp/known_counts.hpp"

namespace mp {

namespace {

std::vector<KnownFamilyRow> build_family_rows() {
    std::vector<KnownFamilyRow> rows;
    auto add = [&](GraphFamily f, int n, int v, int e, std::uint64_t total, std::uint64_t t1) {
        rows.push_back({f, n, v, e, total, t1});
    };

    for (int n = 3; n <= 20; ++n) {
        add(GraphFamily::path, n, n, n - 1, 1, 1);
        add(GraphFamily::star, n, n, n - 1, 1, 1);
        add(GraphFamily::cycle, n, n, n, static_cast<std::uint64_t>(n), 1);
        add(GraphFamily::sunlet, n, 2 * n, 2 * n, static_cast<std::uint64_t>(n),
            static_cast<std::uint64_t>(n));
    }

    const std::uint64_t complete_total[] = {3, 16, 125, 1296, 16807, 262144, 4782969};
    for (int n = 3; n <= 9; ++n)
        add(GraphFamily::complete, n, n, n * (n - 1) / 2, complete_total[n - 3], 1);

    const std::uint64_t wheel_total[] = {16,     45,      121,     320,      841,      2205,
                                         5776,   15125,   39601,   103680,   271441,   710645,
                                         1860496, 4870845, 12752041, 33385280, 87403801};
    const std::uint64_t wheel_t1[] = {1, 2, 5, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 49};
    for (int n = 4; n <= 20; ++n)
        add(GraphFamily::wheel, n, n, 2 * (n - 1), wheel_total[n - 4], wheel_t1[n - 4]);

    const std::uint64_t prism_total[] = {75,      384,      1805,     8100,    35287,
                                         150528,  632025,   2620860,  10759331, 43804800};
    const std::uint64_t prism_t1[] = {3, 13, 37, 105, 269, 694, 1874, 4722, 12300, 30270};
    for (int n = 3; n <= 12; ++n)
        add(GraphFamily::prism, n, 2 * n, 3 * n, prism_total[n - 3], prism_t1[n - 3]);

    const std::uint64_t ladder_total[] = {15,     56,      209,     780,     2911,    10864,
                                          40545,  151316,  564719,  2107560, 7865521, 29354524};
    const std::uint64_t ladder_t1[] = {3, 7, 17, 41, 99, 239, 577, 1393, 3363, 8119, 19601, 47321};
    for (int n = 3; n <= 14; ++n)
        add(GraphFamily::ladder, n, 2 * n, 3 * n - 2, ladder_total[n - 3], ladder_t1[n - 3]);

    const std::uint64_t helm_total[] = {16,      45,      121,      320,      841,      2205,
                                        5776,    15125,   39601,    103680,   271441,   710645,
                                        1860496, 4870845, 12752041, 33385280, 87403801};
    const std::uint64_t helm_t1[] = {10,      33,      101,      290,      799,      2149,
                                     5704,    15035,   39491,    103548,   271285,   710463,
                                     1860286, 4870605, 12751769, 33384974, 87403459};
    for (int n = 3; n <= 19; ++n)
        add(GraphFamily::helm, n, 2 * n + 1, 3 * n, helm_total[n - 3], helm_t1[n - 3]);

    const std::uint64_t book_total[] = {54, 189, 648, 2187, 7290, 24057, 78732};
    for (int n = 3; n <= 9; ++n)
        add(GraphFamily::book, n, 2 * n + 2, 3 * n + 1, book_total[n - 3],
            static_cast<std::uint64_t>(n + 1));

    const std::uint64_t gear_total[] = {50,     192,     722,     2700,    10082,  37632,
                                        140450, 524172,  1956242, 7300800, 27246962};
    const std::uint64_t gear_t1[] = {4, 10, 26, 57, 120, 247, 502, 1013, 2036, 4083, 8178};
    for (int n = 3; n <= 13; ++n)
        add(GraphFamily::gear, n, 2 * n + 1, 3 * n, gear_total[n - 3], gear_t1[n - 3]);

    const std::uint64_t web_total[] = {75,     384,     1805,    8100,    35287,
                                       150528, 632025,  2620860, 10759331, 43804800};
    const std::uint64_t web_t1[] = {27, 115, 457, 1763, 6567, 24000, 86549, 308436, 1088368, 3809999};
    for (int n = 3; n <= 12; ++n)
        add(GraphFamily::web, n, 3 * n, 4 * n, web_total[n - 3], web_t1[n - 3]);

    const std::uint64_t anti_total[] = {384, 3528, 30250, 248832, 1989806, 15586704};
    const std::uint64_t anti_t1[] = {5, 35, 189, 917, 4330, 18335};
    for (int n = 3; n <= 8; ++n)
        add(GraphFamily::antiprism, n, 2 * n, 4 * n, anti_total[n - 3], anti_t1[n - 3]);

    return rows;
}

} // namespace

const std::vector<KnownFamilyRow>& known_family_rows() {
    static const std::vector<KnownFamilyRow> rows = build_family_rows();
    return rows;
}

std::optional<KnownFamilyRow> known_family_row(GraphFamily family, int n) {
    for (const auto& r : known_family_rows())
        if (r.family == family && r.n == n)
            return r;
    return std::nullopt;
}

const std::vector<ExpectationRow>& expectation_reference_rows() {
    static const std::vector<ExpectationRow> rows = {
        {10, 32, 4649831, 2.4},      {10, 32, 4649831, 2.4},      {11, 29, 3916402, 2.0},
        {11, 30, 5496925, 2.0},      {11, 36, 34035511, 1.6},     {11, 37, 44763549, 1.6},
        {11, 39, 75779780, 1.5},     {11, 40, 97612893, 1.5},     {11, 41, 124952756, 1.5},
        {11, 43, 201183254, 1.4},    {12, 33, 30233088, 1.4},     {12, 34, 41985300, 1.3},
        {12, 36, 78732978, 1.2},     {12, 37, 106426097, 1.2},    {12, 39, 189906507, 1.1},
        {12, 40, 250893306, 1.1},    {12, 41, 329193759, 1.1},    {12, 46, 1167253858, 1.0},
        {13, 31, 27834407, 1.1},     {13, 32, 40741910, 1.1},     {13, 32, 40741910, 1.1},
        {13, 40, 592872818, 0.8},    {13, 41, 797348027, 0.8},    {13, 46, 3172017855, 0.7},
        {13, 46, 3172017855, 0.7},
    };
    return rows;
}

const std::vector<PolyhedronRow>& polyhedron_reference_rows() {
    static const std::vector<PolyhedronRow> rows = {
        {"cube", 6, 12, 384, 5, 1.0e-2},
        {"octahedron", 8, 12, 384, 13, 3.4e-2},
        {"icosahedron", 20, 30, 5184000, 8808, 2.1e-3},
        {"dodecahedron", 12, 30, 5184000, 6166, 1.5e-3},
    };
    return rows;
}

} // namespace mp
