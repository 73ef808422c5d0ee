#pragma once

// Lattice-path counting by dynamic programming, the oracle side of the
// identity catalog, plus the Schroeder closed forms.
//
// A path problem fixes a target, a step set out of {E=(1,0), N=(0,1),
// D=(1,1)}, a linear boundary, and optionally the exact number of E
// steps. The boundary is checked at every visited lattice point,
// endpoints included; for integer slope >= 1 this is equivalent to
// checking the continuous path, because against a line of slope >= 1
// every step's clearance is minimized at one of its lattice endpoints.
// Points on the boundary line are legal on either side.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cattri/binomial.hpp"
#include "cattri/integer.hpp"

namespace cattri {

enum class boundary_kind {
    at_least_slope,         // y >= slope * x  ("stay on or above the line")
    at_most_inverse_slope,  // slope * y <= x  ("stay on or below y = x/slope")
};

struct path_problem {
    long x = 0;
    long y = 0;
    bool east = true;
    bool north = true;
    bool diag = false;
    boundary_kind boundary = boundary_kind::at_least_slope;
    long slope = 1;
    std::optional<long> east_steps;
};

inline bool point_allowed(const path_problem& p, long px, long py) {
    switch (p.boundary) {
        case boundary_kind::at_least_slope:
            return py >= p.slope * px;
        case boundary_kind::at_most_inverse_slope:
            return p.slope * py <= px;
    }
    return false;
}

// Number of valid paths. DP over (x, y) cells, with an extra east-count
// dimension only when the east-step statistic is requested. The cell
// transition mirrors the three-term step recurrence: a cell's count is
// the sum of the counts one E, one N, and one D step back.
inline Int count_paths(const path_problem& p) {
    if (p.x < 0 || p.y < 0) return 0;
    if (p.slope < 1) throw std::domain_error("count_paths: slope must be >= 1");
    if (!p.east && !p.north && !p.diag && (p.x != 0 || p.y != 0)) return 0;

    const long emax = p.east_steps ? p.x : 0;
    if (p.east_steps && (*p.east_steps < 0 || *p.east_steps > p.x)) return 0;

    // dp[x][y][e], flattened; e dimension has size 1 without a statistic.
    const size_t ew = static_cast<size_t>(emax) + 1;
    const size_t yw = static_cast<size_t>(p.y) + 1;
    std::vector<Int> dp((static_cast<size_t>(p.x) + 1) * yw * ew);
    auto cell = [&](long x, long y, long e) -> Int& {
        return dp[(static_cast<size_t>(x) * yw + static_cast<size_t>(y)) * ew +
                  static_cast<size_t>(e)];
    };

    for (long x = 0; x <= p.x; ++x)
        for (long y = 0; y <= p.y; ++y) {
            if (!point_allowed(p, x, y)) continue;
            for (long e = 0; e <= emax; ++e) {
                Int v = 0;
                if (x == 0 && y == 0 && e == 0) v = 1;
                if (p.east && x > 0 && (!p.east_steps || e > 0) &&
                    point_allowed(p, x - 1, y))
                    v += cell(x - 1, y, p.east_steps ? e - 1 : 0);
                if (p.north && y > 0 && point_allowed(p, x, y - 1))
                    v += cell(x, y - 1, e);
                if (p.diag && x > 0 && y > 0 && point_allowed(p, x - 1, y - 1))
                    v += cell(x - 1, y - 1, e);
                cell(x, y, e) = v;
            }
        }

    if (!point_allowed(p, p.x, p.y)) return 0;
    return cell(p.x, p.y, p.east_steps ? *p.east_steps : 0);
}

// Schroeder path count Schr(n, m, j, l): {E, N, D} paths to (n, m)
// staying on or above y = l*x with exactly j east steps. Out-of-range j
// and unreachable targets give 0, never an error.
inline Int count_schroeder(long n, long m, long j, long l) {
    if (l < 1) throw std::domain_error("count_schroeder: slope must be >= 1");
    if (n < 0 || m < 0) return 0;
    path_problem p;
    p.x = n;
    p.y = m;
    p.diag = true;
    p.boundary = boundary_kind::at_least_slope;
    p.slope = l;
    p.east_steps = j;
    return count_paths(p);
}

// Same family without the east-step statistic.
inline Int count_schroeder_total(long n, long m, long l) {
    if (l < 1) throw std::domain_error("count_schroeder_total: slope must be >= 1");
    if (n < 0 || m < 0) return 0;
    path_problem p;
    p.x = n;
    p.y = m;
    p.diag = true;
    p.boundary = boundary_kind::at_least_slope;
    p.slope = l;
    return count_paths(p);
}

// Monotone {E, N} paths to (n, k) never rising above y = x. Equals the
// Catalan triangle entry; k > n simply has no valid path.
inline Int count_catalan_paths(long n, long k) {
    if (n < 0) throw std::domain_error("count_catalan_paths: negative target");
    if (k < 0 || k > n) return 0;
    path_problem p;
    p.x = n;
    p.y = k;
    p.boundary = boundary_kind::at_most_inverse_slope;
    p.slope = 1;
    return count_paths(p);
}

// Monotone {E, N} paths to (2n, n) never rising above y = x/2. Equals
// the order-three Fuss-Catalan number.
inline Int count_fuss_paths(long n) {
    if (n < 0) throw std::domain_error("count_fuss_paths: negative target");
    path_problem p;
    p.x = 2 * n;
    p.y = n;
    p.boundary = boundary_kind::at_most_inverse_slope;
    p.slope = 2;
    return count_paths(p);
}

// Closed form for Schr(n, m, j, l) on its claimed domain m >= l*n:
//   ((m - l*n + 1) / n) binom(n, j) binom(m + j, n - 1).
// Below m = l*n the formula is not claimed and the call is refused.
inline Int schr_closed_form(long n, long m, long j, long l) {
    if (n < 1 || l < 1 || j < 0 || j > n)
        throw std::domain_error("schr_closed_form: need n >= 1, l >= 1, 0 <= j <= n");
    if (m < l * n)
        throw std::domain_error("schr_closed_form: defined only for m >= l*n");
    return exact_div(Int(m - l * n + 1) * binomial(n, j) * binomial(m + j, n - 1),
                     n, "schr_closed_form");
}

// Closed form for the total over j:
//   ((m - l*n + 1) / n) sum_j binom(n, j) binom(m + j, n - 1).
inline Int schr_total(long n, long m, long l) {
    if (n < 1 || l < 1)
        throw std::domain_error("schr_total: need n >= 1, l >= 1");
    if (m < l * n)
        throw std::domain_error("schr_total: defined only for m >= l*n");
    Int sum = 0;
    for (long j = 0; j <= n; ++j)
        sum += binomial(n, j) * binomial(m + j, n - 1);
    return exact_div(Int(m - l * n + 1) * sum, n, "schr_total");
}

// All valid paths as step strings over {D, E, N}, in lexicographic
// order (paths end exactly at the target, so none is a prefix of
// another and DFS in alphabetical step order emits sorted output).
// Refuses problems whose count exceeds cap, naming the count.
inline std::vector<std::string> enumerate_paths(const path_problem& p, long cap) {
    if (cap < 1) throw std::domain_error("enumerate_paths: cap must be >= 1");
    Int total = count_paths(p);
    if (total > cap)
        throw std::runtime_error("enumerate_paths: " + to_decimal(total) +
                                 " paths exceed cap " + std::to_string(cap));

    struct step {
        char name;
        long dx, dy;
        bool enabled;
    };
    const step steps[] = {
        {'D', 1, 1, p.diag},
        {'E', 1, 0, p.east},
        {'N', 0, 1, p.north},
    };

    std::vector<std::string> out;
    std::string cur;
    auto dfs = [&](auto&& self, long x, long y, long e) -> void {
        if (x == p.x && y == p.y) {
            if (!p.east_steps || e == *p.east_steps) out.push_back(cur);
            return;
        }
        for (const auto& s : steps) {
            if (!s.enabled) continue;
            long nx = x + s.dx, ny = y + s.dy;
            if (nx > p.x || ny > p.y || !point_allowed(p, nx, ny)) continue;
            cur.push_back(s.name);
            self(self, nx, ny, e + (s.name == 'E' ? 1 : 0));
            cur.pop_back();
        }
    };
    if (point_allowed(p, 0, 0) && p.x >= 0 && p.y >= 0) dfs(dfs, 0, 0, 0);
    return out;
}

}  // namespace cattri
