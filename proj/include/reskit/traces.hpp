#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "reskit/polynomial.hpp"

namespace reskit {

/// Multi-index k = (k_1..k_n) of non-negative integers.
using TraceIndex = std::vector<int>;

/// Componentwise partial order.
bool index_leq(const TraceIndex& a, const TraceIndex& b);

/// n x n non-negative integer matrix with prescribed row and column sums
/// r_i * k_i for the ambient (system, index) pair.
struct TransportationMatrix {
    int n = 0;
    std::vector<int> cells; // row-major

    TransportationMatrix() = default;
    explicit TransportationMatrix(int size)
        : n(size), cells(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {}

    int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const TransportationMatrix& o) const = default;
};

/// All non-negative integer matrices with the given margins, each exactly
/// once. Brute-force oracle path; throws Error when the margin totals (or
/// lengths) disagree.
std::vector<TransportationMatrix> enumerate_transportation(const std::vector<int>& row_sums,
                                                           const std::vector<int>& col_sums);

/// det over i,j in {2..n} of (delta_ij * r_i * k_i - m_ij), exact. The empty
/// determinant (n = 1) is 1.
mpz_class minor_weight(const TransportationMatrix& m, const std::vector<int>& degrees,
                       const TraceIndex& k);

using MatrixVisitor = std::function<void(const TransportationMatrix&)>;

/// Trace T_k for strictly positive k via the fused search: row i of the
/// matrix ranges over the monomials of f_i^{k_i} (row sums hold by
/// homogeneity) and partial column sums prune the search. `powers` holds one
/// table per polynomial, built at least up to k_i. The optional visitor sees
/// every complete matrix the search reaches (margin tests).
Coefficient trace_positive(const PolySystem& sys, const TraceIndex& k,
                           const std::vector<PowerTable>& powers,
                           const MatrixVisitor& visit = {});

/// Dense table of values indexed by all multi-indices 0 <= v <= bound
/// componentwise. Offsets are mixed-radix, so they respect the componentwise
/// order. Also reused for the Schur stage; `system` is set by
/// build_trace_table and absent on synthetic tables.
class TraceTable {
public:
    TraceTable() = default;
    explicit TraceTable(TraceIndex bound);

    const TraceIndex& bound() const { return bound_; }
    std::size_t size() const { return values_.size(); }

    std::size_t offset(const TraceIndex& k) const;
    TraceIndex index_at(std::size_t off) const;

    const Coefficient& at(const TraceIndex& k) const { return values_[offset(k)]; }
    const Coefficient& at_offset(std::size_t off) const { return values_[off]; }
    void set(const TraceIndex& k, Coefficient v) { values_[offset(k)] = std::move(v); }
    void set_offset(std::size_t off, Coefficient v) { values_[off] = std::move(v); }

    std::optional<PolySystem> system;

private:
    TraceIndex bound_;
    std::vector<std::size_t> strides_;
    std::vector<Coefficient> values_;
};

/// Single trace with the zero-index reduction: indices with
/// k_i = 0 contribute a factor prod r_i and reduce to the all-positive trace
/// of the restricted subsystem; T_{0..0} = 0.
Coefficient trace(const PolySystem& sys, const TraceIndex& k);

/// Computes T_v for every v <= d (the resultant degree vector). Subsystem
/// power tables are warmed up sequentially and shared read-only; entries are
/// then evaluated concurrently on `threads` threads (0 = hardware pick).
/// The result is deterministic regardless of thread count.
TraceTable build_trace_table(const PolySystem& sys, int threads = 1);

} // namespace reskit
