#include "reskit/traces.hpp"

#include <algorithm>
#include <thread>

#include "reskit/schur.hpp"

namespace reskit {

bool index_leq(const TraceIndex& a, const TraceIndex& b) {
    if (a.size() != b.size()) throw Error("trace index length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<TransportationMatrix> enumerate_transportation(const std::vector<int>& row_sums,
                                                           const std::vector<int>& col_sums) {
    if (row_sums.size() != col_sums.size()) throw Error("transportation margins differ in length");
    long long rt = 0, ct = 0;
    for (int v : row_sums) {
        if (v < 0) throw Error("negative row sum");
        rt += v;
    }
    for (int v : col_sums) {
        if (v < 0) throw Error("negative column sum");
        ct += v;
    }
    if (rt != ct) throw Error("transportation margin totals differ");
    int n = static_cast<int>(row_sums.size());
    if (n == 0) return {};
    std::vector<TransportationMatrix> out;
    TransportationMatrix m(n);
    std::vector<int> col_left = col_sums;
    // kick off row 0; subsequent rows receive their budget on entry
    std::function<void(int)> run_row = [&](int i) {
        if (i == n) {
            out.push_back(m);
            return;
        }
        std::function<void(int, int)> cells = [&](int j, int row_left) {
            if (j == n - 1) {
                if (row_left > col_left[static_cast<std::size_t>(j)]) return;
                m.at(i, j) = row_left;
                col_left[static_cast<std::size_t>(j)] -= row_left;
                run_row(i + 1);
                col_left[static_cast<std::size_t>(j)] += row_left;
                m.at(i, j) = 0;
                return;
            }
            int cap = std::min(row_left, col_left[static_cast<std::size_t>(j)]);
            for (int v = 0; v <= cap; ++v) {
                m.at(i, j) = v;
                col_left[static_cast<std::size_t>(j)] -= v;
                cells(j + 1, row_left - v);
                col_left[static_cast<std::size_t>(j)] += v;
                m.at(i, j) = 0;
            }
        };
        cells(0, row_sums[static_cast<std::size_t>(i)]);
    };
    run_row(0);
    return out;
}

mpz_class minor_weight(const TransportationMatrix& m, const std::vector<int>& degrees,
                       const TraceIndex& k) {
    int n = m.n;
    int dim = n - 1;
    if (dim <= 0) return 1;
    std::vector<mpz_class> a(static_cast<std::size_t>(dim) * dim);
    auto cell = [&](int i, int j) -> mpz_class& {
        return a[static_cast<std::size_t>(i) * dim + j];
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            mpz_class v = -m.at(i + 1, j + 1);
            if (i == j)
                v += mpz_class(degrees[static_cast<std::size_t>(i + 1)]) * k[static_cast<std::size_t>(i + 1)];
            cell(i, j) = v;
        }
    if (dim == 1) return cell(0, 0);
    if (dim == 2) return cell(0, 0) * cell(1, 1) - cell(0, 1) * cell(1, 0);

    // fraction-free Bareiss elimination
    int sign = 1;
    mpz_class prev = 1;
    for (int p = 0; p < dim - 1; ++p) {
        if (cell(p, p) == 0) {
            int q = p + 1;
            while (q < dim && cell(q, p) == 0) ++q;
            if (q == dim) return 0;
            for (int j = 0; j < dim; ++j) std::swap(cell(p, j), cell(q, j));
            sign = -sign;
        }
        for (int i = p + 1; i < dim; ++i)
            for (int j = p + 1; j < dim; ++j) {
                mpz_class t = cell(p, p) * cell(i, j) - cell(i, p) * cell(p, j);
                mpz_divexact(cell(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = cell(p, p);
    }
    return sign < 0 ? mpz_class(-cell(dim - 1, dim - 1)) : cell(dim - 1, dim - 1);
}

Coefficient trace_positive(const PolySystem& sys, const TraceIndex& k,
                           const std::vector<PowerTable>& powers, const MatrixVisitor& visit) {
    int n = sys.n;
    if (static_cast<int>(k.size()) != n) throw Error("trace index length mismatch");
    if (static_cast<int>(powers.size()) != n) throw Error("power table count mismatch");
    for (int v : k)
        if (v < 1) throw Error("trace_positive requires strictly positive indices");

    std::vector<const Polynomial*> pw(static_cast<std::size_t>(n));
    std::vector<int> target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pw[static_cast<std::size_t>(i)] = &powers[static_cast<std::size_t>(i)].power(k[static_cast<std::size_t>(i)]);
        target[static_cast<std::size_t>(i)] = sys.degrees[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)];
    }

    Coefficient sum(0);
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    std::vector<Polynomial::Terms::const_iterator> chosen(static_cast<std::size_t>(n));

    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            TransportationMatrix m(n);
            for (int r = 0; r < n; ++r) {
                const ExponentVector& e = chosen[static_cast<std::size_t>(r)]->first;
                for (int c = 0; c < n; ++c) m.at(r, c) = e[c];
            }
            if (visit) visit(m);
            mpz_class w = minor_weight(m, sys.degrees, k);
            if (w == 0) return;
            Coefficient prod{Rational(w)};
            for (int r = 0; r < n; ++r) prod *= chosen[static_cast<std::size_t>(r)]->second;
            sum += prod;
            return;
        }
        const Polynomial::Terms& terms = pw[static_cast<std::size_t>(i)]->terms();
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            const ExponentVector& e = it->first;
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                ok = colsum[static_cast<std::size_t>(j)] + e[j] <= target[static_cast<std::size_t>(j)];
            if (!ok) continue;
            for (int j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] += e[j];
            chosen[static_cast<std::size_t>(i)] = it;
            rec(i + 1);
            for (int j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] -= e[j];
        }
    };
    rec(0);

    mpz_class kk = 1;
    for (int v : k) kk *= v;
    return sum.divided_by(Rational(kk));
}

TraceTable::TraceTable(TraceIndex bound) : bound_(std::move(bound)) {
    std::size_t total = 1;
    strides_.assign(bound_.size(), 1);
    for (std::size_t i = bound_.size(); i-- > 0;) {
        strides_[i] = total;
        total *= static_cast<std::size_t>(bound_[i]) + 1;
    }
    values_.assign(total, Coefficient(0));
}

std::size_t TraceTable::offset(const TraceIndex& k) const {
    if (k.size() != bound_.size()) throw Error("trace index length mismatch");
    std::size_t off = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0 || k[i] > bound_[i]) throw Error("trace index outside table bound");
        off += static_cast<std::size_t>(k[i]) * strides_[i];
    }
    return off;
}

TraceIndex TraceTable::index_at(std::size_t off) const {
    TraceIndex k(bound_.size());
    for (std::size_t i = 0; i < bound_.size(); ++i) {
        k[i] = static_cast<int>(off / strides_[i]);
        off %= strides_[i];
    }
    return k;
}

namespace {

struct ZeroSplit {
    std::vector<int> zeroed;    // 0-based indices with k_i = 0
    TraceIndex positive;        // surviving entries, all >= 1
    mpz_class factor = 1;       // product of r_i over the zeroed set
};

ZeroSplit split_zeros(const PolySystem& sys, const TraceIndex& k) {
    ZeroSplit z;
    for (int i = 0; i < sys.n; ++i) {
        if (k[static_cast<std::size_t>(i)] == 0) {
            z.zeroed.push_back(i);
            z.factor *= sys.degrees[static_cast<std::size_t>(i)];
        } else {
            z.positive.push_back(k[static_cast<std::size_t>(i)]);
        }
    }
    return z;
}

} // namespace

Coefficient trace(const PolySystem& sys, const TraceIndex& k) {
    if (static_cast<int>(k.size()) != sys.n) throw Error("trace index length mismatch");
    for (int v : k)
        if (v < 0) throw Error("trace index must be non-negative");
    ZeroSplit z = split_zeros(sys, k);
    if (z.positive.empty()) return Coefficient(0);
    PolySystem sub = z.zeroed.empty() ? sys : restrict_system(sys, z.zeroed);
    std::vector<PowerTable> powers;
    powers.reserve(static_cast<std::size_t>(sub.n));
    for (int i = 0; i < sub.n; ++i) {
        powers.emplace_back(sub.polys[static_cast<std::size_t>(i)]);
        powers.back().ensure(z.positive[static_cast<std::size_t>(i)]);
    }
    Coefficient value = trace_positive(sub, z.positive, powers);
    return z.zeroed.empty() ? value : value * Coefficient(Rational(z.factor));
}

TraceTable build_trace_table(const PolySystem& sys, int threads) {
    DegreeVector dv = degree_vector(sys);
    TraceTable table(dv.d);
    table.system = sys;
    int n = sys.n;
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? static_cast<int>(hw) : 1;
    }

    // One pass per pattern of zero entries; the all-zero pattern stays at the
    // default T = 0. Each pass restricts the system once, warms its power
    // tables, then fills its slots (concurrently when worthwhile).
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<int> zeroed;
        std::vector<int> survivors;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) zeroed.push_back(i);
            else survivors.push_back(i);
        }
        PolySystem sub = zeroed.empty() ? sys : restrict_system(sys, zeroed);
        mpz_class factor = 1;
        for (int i : zeroed) factor *= sys.degrees[static_cast<std::size_t>(i)];
        Coefficient cfactor{Rational(factor)};

        std::vector<PowerTable> powers;
        powers.reserve(survivors.size());
        for (std::size_t s = 0; s < survivors.size(); ++s) {
            powers.emplace_back(sub.polys[s]);
            powers.back().ensure(dv.d[static_cast<std::size_t>(survivors[s])]);
        }

        // every index with v_i = 0 exactly on `zeroed`, 1 <= v_s <= d_s
        std::vector<std::size_t> slots;
        std::vector<TraceIndex> subindices;
        TraceIndex v(static_cast<std::size_t>(n), 0);
        for (int i : survivors) v[static_cast<std::size_t>(i)] = 1;
        for (;;) {
            slots.push_back(table.offset(v));
            TraceIndex sv(survivors.size());
            for (std::size_t s = 0; s < survivors.size(); ++s)
                sv[s] = v[static_cast<std::size_t>(survivors[s])];
            subindices.push_back(std::move(sv));
            // odometer over the surviving coordinates
            std::size_t s = survivors.size();
            while (s-- > 0) {
                int i = survivors[s];
                if (v[static_cast<std::size_t>(i)] < dv.d[static_cast<std::size_t>(i)]) {
                    ++v[static_cast<std::size_t>(i)];
                    break;
                }
                v[static_cast<std::size_t>(i)] = 1;
            }
            if (s == static_cast<std::size_t>(-1)) break;
        }

        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                Coefficient value = trace_positive(sub, subindices[idx], powers);
                if (!zeroed.empty()) value *= cfactor;
                table.set_offset(slots[idx], std::move(value));
            }
        };

        std::size_t items = slots.size();
        if (threads == 1 || items < 64) {
            work(0, items);
        } else {
            std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), items);
            std::vector<std::thread> pool;
            pool.reserve(workers);
            std::size_t chunk = (items + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                std::size_t begin = w * chunk;
                std::size_t end = std::min(items, begin + chunk);
                if (begin >= end) break;
                pool.emplace_back(work, begin, end);
            }
            for (auto& t : pool) t.join();
        }
    }
    return table;
}

} // namespace reskit
