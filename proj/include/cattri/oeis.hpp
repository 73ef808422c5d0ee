#pragma once

// Bundled integer-sequence snapshots in the b-file format (optional '#'
// comment lines, then "index value" pairs, one per line, indices
// strictly increasing) and the machinery to cross-check generated
// sequences against them.

#include <fstream>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cattri/combinatorics.hpp"
#include "cattri/integer.hpp"

namespace cattri {

struct sequence_snapshot {
    std::string id;
    std::vector<std::pair<long, Int>> entries;
};

inline sequence_snapshot parse_bfile(std::istream& in, const std::string& id) {
    sequence_snapshot snap;
    snap.id = id;
    std::string line;
    long lineno = 0;
    bool have_prev = false;
    long prev_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        long index;
        std::string value, extra;
        if (!(fields >> index >> value) || (fields >> extra))
            throw std::runtime_error(id + " line " + std::to_string(lineno) +
                                     ": expected \"index value\"");
        if (have_prev && index <= prev_index)
            throw std::runtime_error(id + " line " + std::to_string(lineno) +
                                     ": indices must be strictly increasing");
        snap.entries.emplace_back(index, from_decimal(value));
        prev_index = index;
        have_prev = true;
    }
    return snap;
}

inline sequence_snapshot load_bfile(const std::string& path, const std::string& id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file " + path);
    return parse_bfile(in, id);
}

struct oeis_mismatch {
    long index = 0;
    std::string snapshot_value;
    std::string computed_value;
};

struct oeis_check_result {
    std::string id;
    long long compared = 0;
    bool truncated = false;  // the snapshot ran out before n_max
    std::vector<oeis_mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

// Compares generated values against the snapshot for indices 0..n_max,
// or as far as the snapshot reaches if it is shorter.
inline oeis_check_result check_sequence(const sequence_snapshot& snap,
                                        const std::function<Int(long)>& generate,
                                        long n_max) {
    oeis_check_result result;
    result.id = snap.id;
    long max_index = snap.entries.empty() ? -1 : snap.entries.back().first;
    result.truncated = n_max > max_index;
    for (const auto& [index, value] : snap.entries) {
        if (index < 0 || index > n_max) continue;
        ++result.compared;
        Int computed = generate(index);
        if (computed != value)
            result.mismatches.push_back(
                {index, to_decimal(value), to_decimal(computed)});
    }
    return result;
}

// The sequences this library generates, keyed by their catalog ids.
inline const std::vector<std::pair<std::string, std::function<Int(long)>>>&
oeis_generators() {
    static const std::vector<std::pair<std::string, std::function<Int(long)>>>
        generators = {
            {"A000108", [](long n) { return catalan(n); }},
            {"A001764", [](long n) { return fuss_catalan3(n); }},
            {"A000984", [](long n) { return central_binomial(n); }},
        };
    return generators;
}

}  // namespace cattri
