#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reskit/polynomial.hpp"

namespace reskit {

/// One CLI job: the parsed input description plus the command-line options.
struct JobSpec {
    int n = 0;
    std::vector<std::string> polynomial_texts;
    std::vector<std::string> params;
    std::string command = "resultant";
    std::string output_format = "text";
    int threads = 0;
    unsigned long long seed = 12345;
};

/// Reads the input description:
///   n <integer>
///   params <name> <name> ...   (optional)
///   f1 = <polynomial>
///   ...
///   fn = <polynomial>
/// Blank lines and lines starting with '#' are ignored.
JobSpec parse_job(std::istream& in);

/// Parses every polynomial and validates the system; error messages name the
/// offending polynomial as f<i> with a character position where applicable.
PolySystem build_system(const JobSpec& job);

/// Entry point behind main(): parses flags, runs the job, writes the report.
/// Exit codes: 0 success, 1 parse/usage/homogeneity error, 2 oracle
/// disagreement or inconclusive verification, 3 size limit exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace reskit
