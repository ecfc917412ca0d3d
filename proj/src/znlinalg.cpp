#include "flat2g/znlinalg.hpp"

#include <numeric>

namespace flat2g {

namespace {

struct PrimePower {
    int64_t p, e, q;  // q = p^e
};

std::vector<PrimePower> factorize(int64_t n) {
    std::vector<PrimePower> out;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int64_t e = 0, q = 1;
        while (n % p == 0) {
            n /= p;
            ++e;
            q *= p;
        }
        out.push_back({p, e, q});
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

int64_t inv_mod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
    while (a1) {
        int64_t qd = g / a1;
        g -= qd * a1;
        std::swap(g, a1);
        x -= qd * x1;
        std::swap(x, x1);
    }
    return mod_floor(x, m);
}

int valuation(int64_t x, int64_t p) {
    int v = 0;
    while (x && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Elimination mod q = p^e with full pivoting on the entry of least p-adic
// valuation. Forward-only: pivot columns are cleared from the not-yet-chosen
// rows, so each pivot row keeps zero entries exactly at earlier pivot
// columns. Back-substitution then runs in reverse pivot order, where every
// non-pivot entry of pivot row k has valuation >= v_k and exact division by
// p^{v_k} is available.
std::optional<LinearSolution> solve_prime_power(const std::vector<SparseRow>& rows,
                                                const std::vector<int64_t>& rhs, int cols,
                                                const PrimePower& pp) {
    const int64_t q = pp.q, p = pp.p;
    const int e = static_cast<int>(pp.e);
    size_t m = rows.size();
    std::vector<std::vector<int64_t>> a(m, std::vector<int64_t>(cols + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (auto [c, v] : rows[i].entries) a[i][c] = mod_floor(a[i][c] + v, q);
        a[i][cols] = mod_floor(rhs[i], q);
    }
    std::vector<char> col_done(cols, 0), row_done(m, 0);
    struct Pivot {
        size_t row;
        int col, val;
    };
    std::vector<Pivot> pivots;
    std::vector<int64_t> pv_of;  // p^{val} per pivot
    for (;;) {
        int best_v = e;
        size_t br = 0;
        int bc = -1;
        for (size_t i = 0; i < m && best_v > 0; ++i) {
            if (row_done[i]) continue;
            for (int c = 0; c < cols; ++c) {
                if (col_done[c] || a[i][c] == 0) continue;
                int v = valuation(a[i][c], p);
                if (v < best_v) {
                    best_v = v;
                    br = i;
                    bc = c;
                    if (v == 0) break;
                }
            }
        }
        if (bc < 0) break;
        int64_t unit = a[br][bc];
        for (int i = 0; i < best_v; ++i) unit /= p;
        int64_t uinv = inv_mod(unit, q);
        for (int c = 0; c <= cols; ++c) a[br][c] = mod_floor(a[br][c] * uinv, q);
        int64_t pv = 1;
        for (int i = 0; i < best_v; ++i) pv *= p;
        row_done[br] = 1;
        for (size_t i = 0; i < m; ++i) {
            if (row_done[i] || a[i][bc] == 0) continue;
            // remaining entries all have valuation >= best_v by pivot choice
            int64_t f = a[i][bc] / pv;
            for (int c = 0; c <= cols; ++c)
                a[i][c] = mod_floor(a[i][c] - f * a[br][c], q);
        }
        col_done[bc] = 1;
        pivots.push_back({br, bc, best_v});
        pv_of.push_back(pv);
    }
    // rows never chosen have fully zero lhs; rhs must vanish
    for (size_t i = 0; i < m; ++i)
        if (!row_done[i] && mod_floor(a[i][cols], q) != 0) return std::nullopt;

    // solves pivot columns in reverse order given fixed free-column values;
    // target(i) supplies the constant for row i; returns false on a failed
    // division (possible only for the particular solution)
    auto backsolve = [&](std::vector<int64_t>& x, bool use_rhs) -> bool {
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            const auto& piv = pivots[k];
            int64_t acc = use_rhs ? a[piv.row][cols] : 0;
            for (int c = 0; c < cols; ++c) {
                if (c == piv.col || a[piv.row][c] == 0 || x[c] == 0) continue;
                acc -= a[piv.row][c] * x[c];
            }
            acc = mod_floor(acc, q);
            if (acc % pv_of[k] != 0) return false;
            x[piv.col] = mod_floor(acc / pv_of[k], q);
        }
        return true;
    };

    LinearSolution sol;
    sol.particular.assign(cols, 0);
    if (!backsolve(sol.particular, true)) return std::nullopt;

    std::vector<char> is_pivot(cols, 0);
    for (const auto& piv : pivots) is_pivot[piv.col] = 1;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int64_t> gen(cols, 0);
        gen[c] = 1;
        if (!backsolve(gen, false)) throw invariant_error("znlinalg: free backsolve failed");
        sol.kernel.push_back(std::move(gen));
    }
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k].val == 0) continue;
        std::vector<int64_t> gen(cols, 0);
        int64_t g = 1;
        for (int i = 0; i < e - pivots[k].val; ++i) g *= p;
        gen[pivots[k].col] = g;
        // satisfy the earlier pivot rows (they may touch this column)
        for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
            const auto& piv = pivots[j];
            int64_t acc = 0;
            for (int c = 0; c < cols; ++c) {
                if (c == piv.col || a[piv.row][c] == 0 || gen[c] == 0) continue;
                acc -= a[piv.row][c] * gen[c];
            }
            acc = mod_floor(acc, q);
            if (acc % pv_of[j] != 0) throw invariant_error("znlinalg: torsion backsolve failed");
            gen[piv.col] = mod_floor(acc / pv_of[j], q);
        }
        sol.kernel.push_back(std::move(gen));
    }
    return sol;
}

}  // namespace

std::optional<LinearSolution> solve_mod_n(const std::vector<SparseRow>& rows,
                                          const std::vector<int64_t>& rhs, int cols, int64_t n) {
    if (n < 1) throw spec_error("solve_mod_n: modulus must be >= 1");
    if (rows.size() != rhs.size()) throw spec_error("solve_mod_n: shape mismatch");
    if (n == 1) return LinearSolution{std::vector<int64_t>(cols, 0), {}};
    auto factors = factorize(n);
    LinearSolution out;
    out.particular.assign(cols, 0);
    for (const auto& pp : factors) {
        auto part = solve_prime_power(rows, rhs, cols, pp);
        if (!part) return std::nullopt;
        // CRT idempotent: 1 mod q, 0 mod n/q
        int64_t rest = n / pp.q;
        int64_t idem = rest == 1 ? 1 : mod_floor(rest * inv_mod(rest, pp.q), n);
        for (int c = 0; c < cols; ++c)
            out.particular[c] = mod_floor(out.particular[c] + idem * part->particular[c], n);
        for (auto& gen : part->kernel) {
            std::vector<int64_t> lifted(cols, 0);
            bool nonzero = false;
            for (int c = 0; c < cols; ++c) {
                lifted[c] = mod_floor(idem * gen[c], n);
                nonzero = nonzero || lifted[c] != 0;
            }
            if (nonzero) out.kernel.push_back(std::move(lifted));
        }
    }
    return out;
}

bool solvable_mod_n(const std::vector<SparseRow>& rows, const std::vector<int64_t>& rhs, int cols,
                    int64_t n) {
    return solve_mod_n(rows, rhs, cols, n).has_value();
}

}  // namespace flat2g
