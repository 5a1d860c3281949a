#include "reskit/schur.hpp"

namespace reskit {

DegreeVector degree_vector(const PolySystem& sys) {
    if (sys.n < 1) throw Error("empty polynomial system");
    mpz_class prod = 1;
    for (int r : sys.degrees) {
        if (r < 1) throw Error("system degree must be >= 1");
        prod *= r;
    }
    DegreeVector dv;
    for (int r : sys.degrees) {
        mpz_class di = prod / r;
        if (!di.fits_sint_p()) throw SizeLimitError("resultant degree exceeds representable range");
        dv.d.push_back(static_cast<int>(di.get_si()));
        dv.total += di.get_si();
    }
    return dv;
}

namespace {

bool all_zero(const TraceIndex& k) {
    for (int v : k)
        if (v != 0) return false;
    return true;
}

Rational partition_weight(int m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(mpz_class(m % 2 ? -1 : 1), f);
}

// DFS over ordered partitions: peel one non-zero vector v <= rem off the
// front, tracking the running product of traces.
void direct_rec(const TraceTable& table, TraceIndex& rem, int m, const Coefficient& prod,
                Coefficient& acc) {
    if (all_zero(rem)) {
        acc += prod * Coefficient(partition_weight(m));
        return;
    }
    std::size_t n = rem.size();
    TraceIndex v(n, 0);
    for (;;) {
        // odometer over 0 <= v <= rem, skipping v = 0
        std::size_t i = n;
        while (i-- > 0) {
            if (v[i] < rem[i]) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
        const Coefficient& tv = table.at(v);
        if (tv.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) rem[j] -= v[j];
        direct_rec(table, rem, m + 1, prod * tv, acc);
        for (std::size_t j = 0; j < n; ++j) rem[j] += v[j];
    }
}

} // namespace

Coefficient schur_direct(const TraceTable& table, const TraceIndex& k) {
    if (k.size() != table.bound().size()) throw Error("trace index length mismatch");
    if (all_zero(k)) throw Error("schur_direct requires a non-zero index");
    Coefficient acc(0);
    TraceIndex rem = k;
    direct_rec(table, rem, 0, Coefficient(1), acc);
    return acc;
}

SchurTable schur_recurrence(const TraceTable& table, const TraceIndex& bound) {
    if (!index_leq(bound, table.bound()))
        throw Error("schur bound exceeds the trace table");
    SchurTable p(bound);
    p.set_offset(0, Coefficient(1));

    // Non-zero traces inside the bound, with offsets in p's radix and the
    // index premultiplied in: scaled[j] = v_j * T_v.
    struct Entry {
        TraceIndex v;
        std::size_t off;
        std::vector<Coefficient> scaled;
    };
    std::vector<Entry> nonzero;
    std::size_t n = bound.size();
    for (std::size_t off = 0; off < p.size(); ++off) {
        TraceIndex v = p.index_at(off);
        const Coefficient& tv = table.at(v);
        if (tv.is_zero()) continue;
        Entry e{std::move(v), off, {}};
        e.scaled.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            e.scaled.push_back(tv * Coefficient(Rational(e.v[j])));
        nonzero.push_back(std::move(e));
    }

    for (std::size_t off = 1; off < p.size(); ++off) {
        TraceIndex k = p.index_at(off);
        std::size_t pivot = 0;
        while (k[pivot] == 0) ++pivot;
        Coefficient acc(0);
        for (const Entry& e : nonzero) {
            if (e.v[pivot] < 1) continue;
            bool inside = true;
            for (std::size_t j = 0; j < n && inside; ++j) inside = e.v[j] <= k[j];
            if (!inside) continue;
            acc += e.scaled[pivot] * p.at_offset(off - e.off);
        }
        p.set_offset(off, (-acc).divided_by(Rational(k[pivot])));
    }
    return p;
}

Coefficient resultant(const PolySystem& sys, int threads) {
    if (sys.n < 1) throw Error("empty polynomial system");
    if (static_cast<int>(sys.polys.size()) != sys.n ||
        static_cast<int>(sys.degrees.size()) != sys.n)
        throw Error("malformed polynomial system");
    for (int i = 0; i < sys.n; ++i) {
        const Polynomial& f = sys.polys[static_cast<std::size_t>(i)];
        std::string name = "f" + std::to_string(i + 1);
        if (f.var_count() != sys.n) throw Error(name + " variable count mismatch");
        if (f.is_zero()) throw Error(name + " is the zero polynomial");
        if (f.degree() != sys.degrees[static_cast<std::size_t>(i)] || f.degree() < 1)
            throw Error(name + " degree mismatch");
    }
    DegreeVector dv = degree_vector(sys);
    TraceTable table = build_trace_table(sys, threads);
    SchurTable p = schur_recurrence(table, dv.d);
    Coefficient r = p.at(dv.d);
    return (dv.total % 2 != 0) ? -r : r;
}

} // namespace reskit
