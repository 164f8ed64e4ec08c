#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecq/curves.hpp"
#include "ecq/galois2.hpp"
#include "ecq/torsion.hpp"

namespace ecq {

/// One line of a curve file: optional label, then a1 a2 a3 a4 a6.
struct CurveRecord {
    std::string label;  // empty when the line had no label token
    Int a1, a2, a3, a4, a6;
    long source_line = 0;

    LongModel model() const { return LongModel(Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)); }
    std::string serialize() const;
    bool operator==(const CurveRecord& o) const {
        return label == o.label && a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 &&
               a6 == o.a6;
    }
};

struct ParseResult {
    std::vector<CurveRecord> records;
    std::vector<std::string> diagnostics;  // malformed/singular lines, with numbers
};

/// Line format: optional non-numeric label token, then five integers
/// a1 a2 a3 a4 a6; '#' starts a comment; blank lines skipped; extra
/// trailing tokens ignored. Malformed and singular lines go to
/// diagnostics. Throws if the file is unreadable or has no valid records.
ParseResult parse_curve_file(const std::string& path);
ParseResult parse_curve_lines(const std::vector<std::string>& lines);

/// Full classification of one curve, the unit of every report.
struct CurveReport {
    std::string label;
    ShortModel model;
    Int disc;
    bool disc_square;
    std::optional<Int> sqrt_disc;
    int two_torsion;
    Mod2Image image;
    TorsionGroup torsion;
};

CurveReport classify_curve(const ShortModel& e, const std::string& label = "");

/// JSON rendering with the stable schema: model.a as decimal strings,
/// discriminant as string, discriminant_is_square, sqrt_discriminant
/// (string or null), two_torsion_order, mod2_image, torsion, witnesses.
std::string report_json(const CurveReport& r);

struct ScanReport {
    // (torsion shape, discriminant squareness) -> count
    std::map<std::pair<std::string, bool>, long> counts;
    long total = 0;
    std::map<std::pair<std::string, bool>, Rat> proportions;
    std::vector<std::string> diagnostics;
};

/// Tally torsion shape x squareness over the records; per-record failures
/// go to diagnostics, never abort the batch. Deterministic output
/// regardless of the internal parallel schedule.
ScanReport run_scan(const std::vector<CurveRecord>& records);

std::string scan_json(const ScanReport& r);
std::string scan_text(const ScanReport& r);

}  // namespace ecq
