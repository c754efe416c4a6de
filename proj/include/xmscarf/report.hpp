#pragma once

#include <string>
#include <vector>

namespace xmscarf {

/// One numerical check: the measured defect against its tolerance.
struct CheckRecord {
    std::string name;
    double tolerance = 0.0;
    double defect = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckRecord> records;

    bool passed() const {
        if (records.empty()) return false;
        for (const auto& r : records) {
            if (!r.pass) return false;
        }
        return true;
    }

    /// Appends a record that passes iff defect < tolerance (NaN fails).
    CheckRecord& check(std::string check_name, double defect, double tolerance, std::string detail = {}) {
        records.push_back({std::move(check_name), tolerance, defect, defect < tolerance, std::move(detail)});
        return records.back();
    }

    /// Appends a boolean assertion; the defect is reported as 0 or 1.
    CheckRecord& expect(std::string check_name, bool ok, std::string detail = {}) {
        records.push_back({std::move(check_name), 0.5, ok ? 0.0 : 1.0, ok, std::move(detail)});
        return records.back();
    }

    void append(const VerificationReport& other) {
        for (const auto& r : other.records) {
            records.push_back(r);
            records.back().name = other.name + "/" + r.name;
        }
    }
};

} // namespace xmscarf
