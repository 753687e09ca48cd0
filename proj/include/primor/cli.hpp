#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primor/oracle.hpp"
#include "primor/orientation.hpp"

namespace primor::cli {

// Exit codes shared by the commands: 0 positive/success, 1 negative,
// 2 parse or usage error. The oracle command additionally returns 3 when its
// budget runs out before the search is decided.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitExhausted = 3;

std::string format_vertex_set(const std::vector<int>& vertices);
std::string format_reason(const Reason& reason);

// Stable text form of a sweep report; deliberately excludes timing so that
// repeated runs are byte-identical.
std::string format_sweep_report(const SweepReport& report);

int run_check(std::istream& in, std::ostream& out, std::ostream& err);

struct OrientOptions {
    bool dot = false;
    bool certify = false;
};
int run_orient(std::istream& in, std::ostream& out, std::ostream& err,
               const OrientOptions& options = {});

int run_modules(std::istream& in, std::ostream& out, std::ostream& err);

int run_oracle(std::istream& in, std::ostream& out, std::ostream& err,
               std::optional<std::uint64_t> budget = {});

int run_sweep(std::ostream& out, std::ostream& err, int n,
              std::optional<std::uint64_t> sample = {}, std::uint64_t seed = 0);

struct GenSpec {
    std::string family;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};
int run_gen(std::ostream& out, std::ostream& err, const GenSpec& spec);

}  // namespace primor::cli
