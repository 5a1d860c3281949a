#pragma once

#include "reskit/traces.hpp"

namespace reskit {

/// Degrees of the resultant in the coefficients of each polynomial:
/// d_i = (r_1 ... r_n) / r_i, total d = sum d_i.
struct DegreeVector {
    std::vector<int> d;
    long long total = 0;
};

DegreeVector degree_vector(const PolySystem& sys);

/// Table of multi-Schur values P_k; same dense container as the traces.
using SchurTable = TraceTable;

/// P_k via the explicit sum over ordered partitions of k into m non-zero
/// vectors, weight (-1)^m/m!. Exponential in |k|; oracle for small cases.
/// Requires k != 0 and T_v present in the table for every 0 < v <= k.
Coefficient schur_direct(const TraceTable& table, const TraceIndex& k);

/// Fills P_v for every v <= bound via the first-index recurrence
///   k_j * P_k = - sum_{0 < v <= k, v_j >= 1} v_j * T_v * P_{k-v}
/// with j the first non-zero position of k, and P_0 = 1.
SchurTable schur_recurrence(const TraceTable& table, const TraceIndex& bound);

/// The resultant R = (-1)^d * P_{d_1..d_n} over the trace table of the
/// system. `threads` is forwarded to build_trace_table.
Coefficient resultant(const PolySystem& sys, int threads = 1);

} // namespace reskit
