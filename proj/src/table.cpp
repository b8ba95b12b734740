#include "waring/table.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

ExponentRow make_row(int k, int w, const char* lw, const char* lw1, int t,
                     int u, long dinv, int r, long ufloor, int h) {
    ExponentRow row;
    row.k = k;
    row.w = w;
    row.lambda_w  = rational_from_decimal(lw);
    row.lambda_w1 = rational_from_decimal(lw1);
    row.t = t;
    row.u = u;
    row.delta_inv = dinv;
    row.r = r;
    row.u_floor = ufloor;
    row.h = h;
    return row;
}

std::vector<ExponentRow> make_builtin() {
    std::vector<ExponentRow> rows;
    rows.push_back(make_row( 7, 14, "21.1139297", "23.0528848",  5, 26, 1267, 17,   47,  31));
    rows.push_back(make_row( 8, 18, "28.0833353", "30.0473193",  5, 34, 1111, 21,   58,  39));
    rows.push_back(make_row( 9, 21, "33.1033373", "35.0727119",  7, 40,  534, 25,   86,  47));
    rows.push_back(make_row(10, 25, "40.0895832", "42.0677228",  9, 46, 1792, 30,  128,  55));
    rows.push_back(make_row(11, 27, "43.1274069", "45.1020502", 13, 50, 2959, 34,  375,  63));
    rows.push_back(make_row(12, 32, "52.0919461", "54.0752481", 13, 59,  546, 38,  314,  72));
    rows.push_back(make_row(13, 36, "59.0849135", "61.0698015", 13, 68,  823, 42,  289,  81));
    rows.push_back(make_row(14, 40, "66.0795485", "68.0657585", 14, 76,  620, 46,  342,  90));
    rows.push_back(make_row(15, 44, "73.0747403", "75.0620643", 16, 83,  417, 50,  525,  99));
    rows.push_back(make_row(16, 47, "78.0829008", "80.0711728", 19, 89,  519, 55, 1780, 108));
    return rows;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

const std::vector<ExponentRow>& builtin_rows() {
    static const std::vector<ExponentRow> rows = make_builtin();
    return rows;
}

const ExponentRow& builtin_row(int k) {
    for (const auto& row : builtin_rows())
        if (row.k == k) return row;
    throw std::out_of_range("no built-in ledger row for k=" + std::to_string(k));
}

std::vector<ExponentRow> load_rows(std::istream& in) {
    std::vector<std::string> header;
    std::vector<ExponentRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (header.empty()) {
            header = fields;
            continue;
        }
        if (fields.size() != header.size())
            throw std::invalid_argument("row has " + std::to_string(fields.size()) +
                                        " fields, header has " + std::to_string(header.size()));
        ExponentRow row;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string& name = header[i];
            const std::string& val  = fields[i];
            if (name == "k")              row.k = std::stoi(val);
            else if (name == "w")         row.w = std::stoi(val);
            else if (name == "lambda_w")  row.lambda_w = rational_from_decimal(val);
            else if (name == "lambda_w1") row.lambda_w1 = rational_from_decimal(val);
            else if (name == "t")         row.t = std::stoi(val);
            else if (name == "u")         row.u = std::stoi(val);
            else if (name == "delta_inv") row.delta_inv = std::stol(val);
            else if (name == "r")         row.r = std::stoi(val);
            else if (name == "U_floor")   row.u_floor = std::stol(val);
            else if (name == "H")         row.h = std::stoi(val);
            else throw std::invalid_argument("unknown field name: " + name);
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw std::invalid_argument("row file has no records");
    return rows;
}

} // namespace waring
