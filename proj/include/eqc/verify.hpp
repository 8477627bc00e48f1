#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqc {

struct VerifyFailure {
    std::string input;  // canonical encoding, the sort key
    std::string reason;
    bool operator<(const VerifyFailure& o) const { return input != o.input ? input < o.input : reason < o.reason; }
};

struct VerifyReport {
    std::string suite;
    long cases = 0;
    std::vector<VerifyFailure> failures;  // sorted
    std::uint64_t seed = 0;
    double wall_seconds = 0;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    long cases = 200;
    long max_entry = 12;  // brieskorn bound
};

const std::vector<std::string>& verify_suites();  // without "all"

// Every named battery; "all" runs each in turn and concatenates.
std::vector<VerifyReport> verify(const std::string& suite, const VerifyOptions& opt);

VerifyReport verify_galois(const VerifyOptions& opt);
VerifyReport verify_arf_cover(const VerifyOptions& opt);
VerifyReport verify_rohlin(const VerifyOptions& opt);
VerifyReport verify_boyer_nicas(const VerifyOptions& opt);
VerifyReport verify_pillowcase(const VerifyOptions& opt);
VerifyReport verify_brieskorn(const VerifyOptions& opt);

}  // namespace eqc
