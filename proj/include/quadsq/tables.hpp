#pragma once

#include <string>
#include <vector>

#include "quadsq/field.hpp"

namespace quadsq {

struct TableRow {
    Int a, b;
    int e = 0, ep = 0;  // K3 uses e only (the marker m); ep stays 0
    long h = 0;
};

bool operator==(const TableRow& l, const TableRow& r);

/** First n surviving alpha = a+b*theta in lexicographic (a, b) order, b >= 0:
 *  totally positive, squarefree ideal, not excluded (Q17), and not a
 *  unit-square or conjugate-unit-square multiple of an earlier entry. */
std::vector<QuadInt> enumerate_alphas(const Field& F, int n);

/** Relative discriminant exponent data at the primes above 2, read off the
 *  classification of -alpha.  Q3: single marker m in {1,2,4}.  Q17: the pair
 *  of extra exponents at pi2, pi2'. */
std::pair<int, int> disc_marker(const Field& F, const QuadInt& alpha);

struct TableDiff {
    std::vector<TableRow> missing;     // in golden, not generated
    std::vector<TableRow> extra;       // generated, not in golden
    std::vector<std::pair<TableRow, TableRow>> mismatched;  // golden, generated
    bool clean() const { return missing.empty() && extra.empty() && mismatched.empty(); }
};

std::vector<TableRow> generate_table(const Field& F, int n);

/// Loads a golden CSV, checking its embedded fnv1a64 checksum line.
std::vector<TableRow> load_golden(const Field& F, const std::string& path);

TableDiff diff_table(const std::vector<TableRow>& golden,
                     const std::vector<TableRow>& generated);

std::string table_csv(const Field& F, const std::vector<TableRow>& rows);
std::string table_json(const Field& F, const std::vector<TableRow>& rows);

}  // namespace quadsq
