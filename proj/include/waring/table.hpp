#pragma once

#include "waring/rational.hpp"

#include <istream>
#include <vector>

namespace waring {

// One row of the exponent ledger for a power k: the moment index w, the
// permissible exponents lambda_{w,k} and lambda_{w+1,k} (exact rationals,
// stored as integers scaled by 10^7), the classical/smooth sum counts t and u,
// the margin reciprocal delta_inv, the auxiliary moment index r, the floor of
// the Hoelder exponent U, and the headline bound H = t + u.
struct ExponentRow {
    int      k = 0;
    int      w = 0;
    Rational lambda_w;
    Rational lambda_w1;
    int      t = 0;
    int      u = 0;
    long     delta_inv = 0;
    int      r = 0;
    long     u_floor = 0;
    int      h = 0;
};

// Built-in ledger rows, k = 7..16, ascending.
const std::vector<ExponentRow>& builtin_rows();

// The built-in row for a given k; throws std::out_of_range for k outside 7..16.
const ExponentRow& builtin_row(int k);

// Parses a row file: first non-comment line is a whitespace- or
// comma-separated header naming the fields (k, w, lambda_w, lambda_w1, t, u,
// delta_inv, r, U_floor, H in any order), each following line one record.
// Decimal values are parsed exactly.  '#' starts a comment.
std::vector<ExponentRow> load_rows(std::istream& in);

} // namespace waring
