#include "reskit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "reskit/oracles.hpp"
#include "reskit/parser.hpp"
#include "reskit/schur.hpp"

namespace reskit {

namespace {

constexpr unsigned long long kDefaultMaxTable = 1000000ULL;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_param_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    // x followed by a digit is reserved for variables
    if (name.size() >= 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1])))
        return false;
    return true;
}

} // namespace

JobSpec parse_job(std::istream& in) {
    JobSpec job;
    std::vector<std::string> lines;
    std::string raw;
    int lineno = 0;
    std::vector<int> linenos;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
        linenos.push_back(lineno);
    }
    std::size_t at = 0;
    auto fail = [&](std::size_t idx, const std::string& msg) -> void {
        int where = idx < linenos.size() ? linenos[idx] : lineno;
        throw Error("input line " + std::to_string(where) + ": " + msg);
    };

    if (lines.empty()) throw Error("empty input: expected 'n <count>'");
    {
        std::vector<std::string> tok = split_ws(lines[at]);
        if (tok.size() != 2 || tok[0] != "n") fail(at, "expected 'n <count>'");
        try {
            job.n = std::stoi(tok[1]);
        } catch (const std::exception&) {
            fail(at, "invalid system size '" + tok[1] + "'");
        }
        if (job.n < 1) fail(at, "system size must be >= 1");
        ++at;
    }
    if (at < lines.size()) {
        std::vector<std::string> tok = split_ws(lines[at]);
        if (!tok.empty() && tok[0] == "params") {
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!valid_param_name(tok[i]))
                    fail(at, "invalid parameter name '" + tok[i] + "'");
                if (std::find(job.params.begin(), job.params.end(), tok[i]) != job.params.end())
                    fail(at, "duplicate parameter '" + tok[i] + "'");
                job.params.push_back(tok[i]);
            }
            ++at;
        }
    }
    for (int i = 1; i <= job.n; ++i) {
        std::string label = "f" + std::to_string(i);
        if (at >= lines.size()) throw Error("missing line '" + label + " = <polynomial>'");
        std::size_t eq = lines[at].find('=');
        if (eq == std::string::npos || trim(lines[at].substr(0, eq)) != label)
            fail(at, "expected '" + label + " = <polynomial>'");
        job.polynomial_texts.push_back(trim(lines[at].substr(eq + 1)));
        ++at;
    }
    if (at != lines.size()) fail(at, "unexpected trailing content");
    return job;
}

PolySystem build_system(const JobSpec& job) {
    std::vector<Polynomial> polys;
    for (int i = 0; i < job.n; ++i) {
        try {
            polys.push_back(
                parse_polynomial(job.polynomial_texts[static_cast<std::size_t>(i)], job.n, job.params));
        } catch (const ParseError& e) {
            throw Error("f" + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return make_system(std::move(polys), job.params);
}

namespace {

using ordered_json = nlohmann::ordered_json;

unsigned long long table_limit() {
    const char* env = std::getenv("RESKIT_MAX_TABLE");
    if (!env) return kDefaultMaxTable;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return kDefaultMaxTable;
    return v;
}

void check_size_guard(const DegreeVector& dv) {
    mpz_class entries = 1;
    for (int d : dv.d) entries *= d + 1;
    mpz_class limit(std::to_string(table_limit()));
    if (entries > limit)
        throw SizeLimitError("trace table needs " + entries.get_str() + " entries, limit is " +
                             limit.get_str() + " (raise with RESKIT_MAX_TABLE)");
}

std::string format_relative_error(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1e", v);
    return buf;
}

struct OracleReport {
    // status: "agree", "disagree", "inconclusive", "n/a"
    std::string status = "n/a";
    int sign = 0;
    std::string note;

    ordered_json json() const {
        if (status == "agree") return sign;
        if (status == "n/a") return "n/a";
        return status;
    }
    std::string text() const {
        if (status == "agree") {
            std::string s = std::string("AGREE (sign ") + (sign > 0 ? "+1" : "-1");
            if (!note.empty()) s += ", " + note;
            return s + ")";
        }
        if (status == "disagree") return note.empty() ? "DISAGREE" : "DISAGREE (" + note + ")";
        if (status == "inconclusive") return "INCONCLUSIVE (" + note + ")";
        return note.empty() ? "n/a" : "n/a (" + note + ")";
    }
};

OracleReport compare_exact(const Coefficient& ours, const Coefficient& oracle) {
    OracleReport r;
    if (ours == oracle) {
        r.status = "agree";
        r.sign = 1;
    } else if (ours == -oracle) {
        r.status = "agree";
        r.sign = -1;
    } else {
        r.status = "disagree";
    }
    return r;
}

// deterministic small non-zero rationals for parameter specialization
Rational draw_value(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 9) + 1;
    if (rng() % 2) num = -num;
    return Rational(num);
}

struct VerifyOutcome {
    OracleReport sylvester, determinant, macaulay, numeric;
    bool failed() const {
        for (const OracleReport* r : {&sylvester, &determinant, &macaulay, &numeric})
            if (r->status == "disagree" || r->status == "inconclusive") return true;
        return false;
    }
};

bool system_is_rational(const PolySystem& sys) {
    for (const Polynomial& f : sys.polys)
        for (const auto& [e, c] : f.terms())
            if (!c.is_rational()) return false;
    return true;
}

OracleReport run_numeric(const PolySystem& sys, const Coefficient& ours,
                         unsigned long long seed) {
    OracleReport r;
    std::mt19937_64 rng(seed);
    const int attempts = system_is_rational(sys) ? 1 : 20;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::optional<Rational>> values;
        for (std::size_t i = 0; i < sys.params.size(); ++i) values.emplace_back(draw_value(rng));
        std::vector<Polynomial> specialized;
        bool degenerate = false;
        for (const Polynomial& f : sys.polys) {
            Polynomial s(f.var_count(), f.degree());
            for (const auto& [e, c] : f.terms()) s.add_term(e, c.substitute(values));
            degenerate = degenerate || s.is_zero();
            specialized.push_back(std::move(s));
        }
        if (degenerate) continue;
        Coefficient exact = ours.substitute(values);
        double expected = exact.rational().to_double();
        ComplexApprox approx{0.0, 0.0};
        try {
            approx = numeric_root_product(specialized[0], specialized[1]);
        } catch (const Error& e) {
            r.note = e.what();
            continue;
        }
        double tol = std::max(1e-8 * std::abs(expected), 1e-12);
        double err_plus = std::abs(std::complex<double>(approx.re - expected, approx.im));
        double err_minus = std::abs(std::complex<double>(approx.re + expected, approx.im));
        if (err_plus <= tol) {
            r.status = "agree";
            r.sign = 1;
            r.note = "rel err " + format_relative_error(
                                      err_plus / std::max(std::abs(expected), 1e-12));
        } else if (err_minus <= tol) {
            r.status = "agree";
            r.sign = -1;
            r.note = "rel err " + format_relative_error(
                                      err_minus / std::max(std::abs(expected), 1e-12));
        } else {
            r.status = "disagree";
            r.note = "numeric " + std::to_string(approx.re) + " vs exact " +
                     std::to_string(expected);
        }
        return r;
    }
    if (r.note.empty()) r.note = "no usable specialization";
    return r;
}

VerifyOutcome run_verify(const PolySystem& sys, const Coefficient& ours,
                         unsigned long long seed) {
    VerifyOutcome v;
    bool rational = system_is_rational(sys);

    if (sys.n == 2) {
        v.sylvester = compare_exact(ours, sylvester_resultant(sys.polys[0], sys.polys[1]));
    } else {
        v.sylvester.note = "needs n = 2";
    }

    if (std::all_of(sys.degrees.begin(), sys.degrees.end(), [](int r) { return r == 1; })) {
        v.determinant = compare_exact(ours, determinant_resultant(sys));
    } else {
        v.determinant.note = "degrees are not all 1";
    }

    bool mac_ok = sys.n <= 4 &&
                  (rational || (sys.n <= 3 && std::all_of(sys.degrees.begin(), sys.degrees.end(),
                                                          [](int r) { return r <= 2; })));
    if (mac_ok) {
        try {
            v.macaulay = compare_exact(ours, macaulay_resultant(sys));
        } catch (const OracleInconclusive& e) {
            v.macaulay.status = "inconclusive";
            v.macaulay.note = e.what();
        }
    } else {
        v.macaulay.note = sys.n > 4 ? "needs n <= 4" : "parametric input too large";
    }

    if (sys.n == 2) {
        v.numeric = run_numeric(sys, ours, seed);
    } else {
        v.numeric.note = "needs n = 2";
    }
    return v;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string index_key(const TraceIndex& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s;
}

int dispatch(const JobSpec& job, std::ostream& out) {
    PolySystem sys = build_system(job);
    DegreeVector dv = degree_vector(sys);
    check_size_guard(dv);
    bool json = job.output_format == "json";

    if (job.command == "traces") {
        TraceTable table = build_trace_table(sys, job.threads);
        if (json) {
            ordered_json doc = ordered_json::object();
            for (std::size_t off = 0; off < table.size(); ++off)
                doc[index_key(table.index_at(off))] =
                    table.at_offset(off).str(sys.params);
            out << doc.dump(2) << "\n";
        } else {
            out << "n = " << sys.n << "\n";
            out << "degrees = " << join_ints(sys.degrees) << "\n";
            for (std::size_t off = 0; off < table.size(); ++off)
                out << "T[" << index_key(table.index_at(off))
                    << "] = " << table.at_offset(off).str(sys.params) << "\n";
        }
        return 0;
    }

    Coefficient r = resultant(sys, job.threads);
    std::string rstr = r.str(sys.params);
    VerifyOutcome verdict;
    bool verified = job.command == "verify";
    if (verified) verdict = run_verify(sys, r, job.seed);

    if (json) {
        ordered_json doc;
        doc["n"] = sys.n;
        doc["degrees"] = sys.degrees;
        doc["degreeVector"] = dv.d;
        doc["resultant"] = rstr;
        ordered_json signs = ordered_json::object();
        signs["sylvester"] = verified ? verdict.sylvester.json() : ordered_json("n/a");
        signs["determinant"] = verified ? verdict.determinant.json() : ordered_json("n/a");
        signs["macaulay"] = verified ? verdict.macaulay.json() : ordered_json("n/a");
        signs["numeric"] = verified ? verdict.numeric.json() : ordered_json("n/a");
        doc["signVsOracles"] = signs;
        out << doc.dump(2) << "\n";
    } else {
        out << "n = " << sys.n << "\n";
        out << "degrees = " << join_ints(sys.degrees) << "\n";
        out << "degree vector = " << join_ints(dv.d) << "\n";
        out << "resultant = " << rstr << "\n";
        if (verified) {
            out << "sylvester: " << verdict.sylvester.text() << "\n";
            out << "determinant: " << verdict.determinant.text() << "\n";
            out << "macaulay: " << verdict.macaulay.text() << "\n";
            out << "numeric: " << verdict.numeric.text() << "\n";
        }
    }
    return verified && verdict.failed() ? 2 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact resultants of homogeneous polynomial systems"};
    app.name("reskit");
    std::string input = "-";
    JobSpec job;
    app.add_option("--input", input, "input file, or - for stdin")->capture_default_str();
    app.add_option("--format", job.output_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--command", job.command, "what to compute")
        ->check(CLI::IsMember({"resultant", "traces", "verify"}))
        ->capture_default_str();
    app.add_option("--threads", job.threads, "worker threads, 0 = hardware")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", job.seed, "seed for verify specializations")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("reskit");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        JobSpec parsed;
        if (input == "-") {
            parsed = parse_job(in);
        } else {
            std::ifstream file(input);
            if (!file) throw Error("cannot open input file '" + input + "'");
            parsed = parse_job(file);
        }
        job.n = parsed.n;
        job.params = std::move(parsed.params);
        job.polynomial_texts = std::move(parsed.polynomial_texts);
        return dispatch(job, out);
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const OracleInconclusive& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace reskit
