#include "dp2/table.hpp"

namespace dp2 {

namespace {

std::vector<TableRow> build_table() {
    struct Raw {
        const char* type;
        int lines;        // as printed
        int model_lines;  // 0 = same as printed
        long long num, den;
    };
    // degree 2 classification: type, #lines, delta
    static const Raw raws[] = {
        {"A1", 44, 0, 3, 2},       {"2A1", 34, 0, 3, 2},      {"3A1", 26, 0, 3, 2},
        {"3A1", 25, 0, 3, 2},      {"4A1", 20, 0, 3, 2},      {"4A1", 19, 0, 3, 2},
        {"5A1", 14, 0, 3, 2},      {"6A1", 10, 0, 3, 2},      {"A2", 31, 32, 6, 5},
        {"A2+A1", 20, 24, 6, 5},    {"A2+2A1", 18, 0, 6, 5},   {"A2+3A1", 13, 0, 6, 5},
        {"2A2", 16, 0, 6, 5},      {"2A2+A1", 12, 0, 6, 5},   {"3A2", 8, 0, 6, 5},
        {"A3", 22, 0, 1, 1},       {"A3+A1", 16, 0, 1, 1},    {"A3+A1", 15, 0, 1, 1},
        {"A3+2A1", 12, 0, 1, 1},   {"A3+2A1", 11, 0, 1, 1},   {"A3+3A1", 8, 0, 1, 1},
        {"A3+A2", 10, 0, 1, 1},    {"A3+A2+A1", 7, 0, 1, 1},  {"2A3", 6, 0, 1, 1},
        {"2A3+A1", 4, 0, 1, 1},    {"A4", 14, 0, 12, 13},     {"A4+A1", 10, 0, 12, 13},
        {"A4+A2", 6, 0, 12, 13},   {"A5", 8, 0, 6, 7},        {"A5", 7, 0, 3, 4},
        {"A5+A1", 6, 0, 6, 7},     {"A5+A1", 5, 0, 3, 4},     {"A5+A2", 3, 0, 3, 4},
        {"A6", 4, 0, 4, 5},        {"A7", 2, 0, 3, 4},        {"D4", 14, 0, 3, 4},
        {"D4+A1", 9, 0, 3, 4},     {"D4+2A1", 6, 0, 3, 4},    {"D4+3A1", 4, 0, 3, 4},
        {"D5", 8, 0, 3, 5},        {"D5+A1", 5, 0, 3, 5},     {"D6", 3, 0, 1, 2},
        {"D6+A1", 2, 0, 1, 2},     {"E6", 4, 0, 3, 7},        {"E7", 1, 0, 3, 10},
    };
    std::vector<TableRow> rows;
    for (const auto& r : raws)
        rows.push_back(TableRow{AdeType::parse(r.type), r.lines,
                                r.model_lines ? r.model_lines : r.lines, Rat(r.num, r.den)});
    return rows;
}

}  // namespace

const std::vector<TableRow>& main_table() {
    static const std::vector<TableRow> table = build_table();
    return table;
}

std::vector<const TableRow*> rows_for_type(const AdeType& type) {
    std::vector<const TableRow*> out;
    for (const auto& r : main_table())
        if (r.type == type) out.push_back(&r);
    return out;
}

const TableRow* find_row(const AdeType& type, std::optional<int> lines) {
    for (const auto& r : main_table())
        if (r.type == type && (!lines || r.lines == *lines || r.model_lines == *lines))
            return &r;
    return nullptr;
}

}  // namespace dp2
