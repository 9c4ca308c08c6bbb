#pragma once

#include "knots/laurent.hpp"
#include "knots/pd_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knots {

// Exact value (lo == hi) or a two-sided range; the table's "X" marker is
// the range 2..3.
struct ValueOrRange {
    int lo = 0;
    int hi = 0;

    bool exact() const { return lo == hi; }
    std::string text() const {
        return exact() ? std::to_string(lo)
                       : std::to_string(lo) + ".." + std::to_string(hi);
    }
    friend bool operator==(const ValueOrRange&, const ValueOrRange&) = default;
};

struct KnotRecord {
    std::string name;  // Rolfsen notation, e.g. "10_97"
    ValueOrRange g, u, c;
    std::optional<PdCode> pd;
    std::string note;

    int crossing_number() const;
};

struct LookupResult {
    const KnotRecord* record = nullptr;
    std::string note;  // naming caveat, when the query hit an alias
};

class KnotTable {
public:
    // Loads `clasp_table.txt` and `pd_codes.txt` from the directory; every
    // load-time invariant (249 rows, unique names, Shibuya consistency,
    // range sanity) is enforced here.
    static KnotTable load(const std::string& data_dir);

    const std::vector<KnotRecord>& records() const { return records_; }

    // Resolves Rolfsen names plus the documented aliases; throws
    // std::out_of_range listing near-matches for unknown names.
    LookupResult lookup(const std::string& name) const;

    // Names of fully-determined rows with max{g, u} < c, plus the rows left
    // undetermined by X entries.
    std::vector<std::string> equality_census() const;
    std::vector<std::string> undetermined_rows() const;

private:
    std::vector<KnotRecord> records_;
    std::vector<std::pair<std::string, std::pair<int, std::string>>> aliases_;
};

struct AuditRow {
    std::string name;
    bool has_pd = false;
    std::string conway;          // rendered, when computed
    bool genus_consistent = true;      // deg(nabla)/2 <= g.hi
    bool obstruction_fires = false;
    bool obstruction_consistent = true;  // fires => table allows c >= 3
    std::optional<bool> realizable;      // checked when c.hi <= 2
    bool q2_ok = true;                   // c.hi <= floor((cr-1)/2)
    bool shibuya_ok = true;
    std::vector<std::string> flags;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    int with_pd = 0;
    int failures = 0;
    std::vector<std::string> census;        // == {"10_97"} on the bundled table
    std::vector<std::string> undetermined;
};

AuditReport audit(const KnotTable& table);

std::string to_csv(const AuditReport& report);

}  // namespace knots
