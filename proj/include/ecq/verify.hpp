#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecq/galois2.hpp"

namespace ecq {

/// The torsion / squareness / mod-2 image consistency table:
///   trivial, C3          -> square gives C3, nonsquare gives S3
///   C2 C4 C6 C8 C10 C12  -> nonsquare, C2
///   C5 C7 C9             -> nonsquare, S3
///   C2 x C2n             -> square, Id
/// Returns a complaint when the triple does not match, nothing otherwise.
std::optional<std::string> check_table_row(const std::string& shape, bool square, Mod2Image image);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string render() const;
};

enum class Suite { Table, Families, Fermat, Quotient, All };

std::optional<Suite> suite_from_name(const std::string& name);

/// Machine verification suites. `table` needs the bundled fixture files
/// under fixtures_dir; the other suites ignore it.
VerifyReport verify_suites(Suite suite, const std::string& fixtures_dir);

}  // namespace ecq
