#pragma once

// Verification reports: one row per checked instance, CSV export matching
// the layout identity_id,n,lhs,rhs,status.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "esp/ints.hpp"

namespace esp {

struct ReportRow {
    std::string id;
    Int n = 0;
    Int lhs = 0;
    Int rhs = 0;
    std::string status; // PASS | FAIL | SKIP
    std::string note;
};

class VerificationReport {
public:
    void add(std::string id, Int n, Int lhs, Int rhs, std::string note = "") {
        rows_.push_back({std::move(id), n, lhs, rhs, lhs == rhs ? "PASS" : "FAIL", std::move(note)});
    }
    void add_skip(std::string id, Int n, std::string note) {
        rows_.push_back({std::move(id), n, 0, 0, "SKIP", std::move(note)});
    }
    void add_row(ReportRow row) { rows_.push_back(std::move(row)); }
    void merge(const VerificationReport& other) {
        rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
    }

    const std::vector<ReportRow>& rows() const { return rows_; }
    bool pass() const {
        for (const ReportRow& r : rows_)
            if (r.status == "FAIL") return false;
        return true;
    }
    std::optional<ReportRow> first_failure() const {
        for (const ReportRow& r : rows_)
            if (r.status == "FAIL") return r;
        return std::nullopt;
    }
    Int count(const std::string& status) const {
        Int c = 0;
        for (const ReportRow& r : rows_)
            if (r.status == status) ++c;
        return c;
    }

    void to_csv(std::ostream& os) const {
        os << "identity_id,n,lhs,rhs,status\n";
        for (const ReportRow& r : rows_)
            os << r.id << ',' << r.n << ',' << r.lhs << ',' << r.rhs << ',' << r.status << '\n';
    }

private:
    std::vector<ReportRow> rows_;
};

} // namespace esp
