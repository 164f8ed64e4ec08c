#include "ecq/scan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace ecq {

std::string CurveRecord::serialize() const {
    std::ostringstream os;
    if (!label.empty()) os << label << " ";
    os << a1 << " " << a2 << " " << a3 << " " << a4 << " " << a6;
    return os.str();
}

namespace {

bool parse_int(const std::string& tok, Int& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    out = Int(tok);
    return true;
}

}  // namespace

ParseResult parse_curve_lines(const std::vector<std::string>& lines) {
    ParseResult res;
    long lineno = 0;
    for (const auto& raw : lines) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream is(line);
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        if (toks.empty()) continue;

        CurveRecord rec;
        rec.source_line = lineno;
        size_t at = 0;
        Int first;
        if (!parse_int(toks[0], first)) {
            rec.label = toks[0];
            at = 1;
        }
        if (toks.size() < at + 5) {
            res.diagnostics.push_back("line " + std::to_string(lineno) +
                                      ": expected five a-invariants");
            continue;
        }
        Int* fields[5] = {&rec.a1, &rec.a2, &rec.a3, &rec.a4, &rec.a6};
        bool ok = true;
        for (int i = 0; i < 5; ++i)
            if (!parse_int(toks[at + i], *fields[i])) {
                res.diagnostics.push_back("line " + std::to_string(lineno) + ": token '" +
                                          toks[at + i] + "' is not an integer");
                ok = false;
                break;
            }
        if (!ok) continue;
        if (long_discriminant(Rat(rec.a1), Rat(rec.a2), Rat(rec.a3), Rat(rec.a4), Rat(rec.a6)) ==
            0) {
            res.diagnostics.push_back("line " + std::to_string(lineno) + ": singular curve");
            continue;
        }
        res.records.push_back(std::move(rec));
    }
    return res;
}

ParseResult parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read curve file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    ParseResult res = parse_curve_lines(lines);
    if (res.records.empty()) throw std::runtime_error("no valid curve records in " + path);
    return res;
}

CurveReport classify_curve(const ShortModel& e, const std::string& label) {
    Int disc = e.discriminant();
    auto sqrt_disc = is_perfect_square(disc);
    return CurveReport{label,
                       e,
                       disc,
                       sqrt_disc.has_value(),
                       sqrt_disc,
                       two_torsion_order(e),
                       mod2_image(e),
                       torsion_subgroup(e)};
}

std::string report_json(const CurveReport& r) {
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["model"]["a"] = {std::string("0"), std::string("0"), std::string("0"),
                       r.model.A.get_str(), r.model.B.get_str()};
    j["discriminant"] = r.disc.get_str();
    j["discriminant_is_square"] = r.disc_square;
    j["sqrt_discriminant"] = r.sqrt_disc ? nlohmann::ordered_json(r.sqrt_disc->get_str())
                                         : nlohmann::ordered_json(nullptr);
    j["two_torsion_order"] = r.two_torsion;
    j["mod2_image"] = to_string(r.image);
    j["torsion"] = r.torsion.name();
    auto wit = nlohmann::ordered_json::array();
    for (const auto& g : r.torsion.generators)
        wit.push_back({g.x().get_str(), g.y().get_str()});
    j["witnesses"] = wit;
    return j.dump(2);
}

ScanReport run_scan(const std::vector<CurveRecord>& records) {
    if (records.empty()) throw std::invalid_argument("empty record list");

    struct PerRecord {
        bool ok = false;
        std::string shape;
        bool square = false;
        std::string diagnostic;
    };

    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    size_t chunk = (records.size() + nthreads - 1) / nthreads;
    std::vector<std::future<std::vector<PerRecord>>> futs;
    for (unsigned t = 0; t < nthreads; ++t) {
        size_t lo = t * chunk;
        if (lo >= records.size()) break;
        size_t hi = std::min(records.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&records, lo, hi] {
            std::vector<PerRecord> out(hi - lo);
            for (size_t i = lo; i < hi; ++i) {
                PerRecord& pr = out[i - lo];
                const CurveRecord& rec = records[i];
                try {
                    ShortModel e = long_to_short(rec.model());
                    pr.shape = torsion_subgroup(e).name();
                    pr.square = is_perfect_square(e.discriminant()).has_value();
                    pr.ok = true;
                } catch (const std::exception& ex) {
                    pr.diagnostic = "line " + std::to_string(rec.source_line) +
                                    (rec.label.empty() ? "" : " (" + rec.label + ")") + ": " +
                                    ex.what();
                }
            }
            return out;
        }));
    }

    ScanReport rep;
    for (auto& f : futs)
        for (auto& pr : f.get()) {
            if (pr.ok) {
                ++rep.counts[{pr.shape, pr.square}];
                ++rep.total;
            } else {
                rep.diagnostics.push_back(pr.diagnostic);
            }
        }
    for (const auto& [key, count] : rep.counts)
        rep.proportions[key] = make_rat(Int(count), Int(rep.total));
    return rep;
}

namespace {
std::string squareness(bool square) { return square ? "square" : "nonsquare"; }
}  // namespace

std::string scan_json(const ScanReport& r) {
    nlohmann::ordered_json j;
    j["total"] = r.total;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [key, count] : r.counts) {
        nlohmann::ordered_json row;
        row["torsion"] = key.first;
        row["discriminant_is_square"] = key.second;
        row["count"] = count;
        row["proportion"] = r.proportions.at(key).get_str();
        rows.push_back(row);
    }
    j["counts"] = rows;
    j["diagnostics"] = r.diagnostics;
    return j.dump(2);
}

std::string scan_text(const ScanReport& r) {
    std::ostringstream os;
    os << "curves tallied: " << r.total << "\n";
    for (const auto& [key, count] : r.counts)
        os << "  " << key.first << ", " << squareness(key.second) << ": " << count << "  ("
           << r.proportions.at(key).get_str() << ")\n";
    if (!r.diagnostics.empty()) {
        os << "diagnostics:\n";
        for (const auto& d : r.diagnostics) os << "  " << d << "\n";
    }
    return os.str();
}

}  // namespace ecq
