#include "knots/tables.hpp"

#include "knots/clasp.hpp"
#include "knots/diagram.hpp"
#include "knots/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace knots {

int KnotRecord::crossing_number() const {
    const auto us = name.find('_');
    if (us == std::string::npos)
        throw std::invalid_argument("knot name '" + name + "' is not N_k");
    return std::stoi(name.substr(0, us));
}

namespace {

ValueOrRange parse_value(const std::string& tok, const std::string& line) {
    if (tok == "X") return {2, 3};
    try {
        const int v = std::stoi(tok);
        if (v < 0) throw std::invalid_argument("negative");
        return {v, v};
    } catch (const std::exception&) {
        throw std::runtime_error("bad table value '" + tok + "' in line: " + line);
    }
}

}  // namespace

KnotTable KnotTable::load(const std::string& data_dir) {
    KnotTable table;
    const std::string table_path = data_dir + "/clasp_table.txt";
    std::ifstream in(table_path);
    if (!in) throw std::runtime_error("cannot open " + table_path);

    std::map<std::string, int> index;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        KnotRecord rec;
        std::string gs, us, cs;
        if (!(ls >> rec.name >> gs >> us >> cs))
            throw std::runtime_error("malformed table line: " + line);
        rec.g = parse_value(gs, line);
        rec.u = parse_value(us, line);
        rec.c = parse_value(cs, line);

        const int cr = rec.crossing_number();
        if (cr < 3 || cr > 10)
            throw std::runtime_error("crossing count out of range in: " + line);
        if (rec.g.lo > rec.g.hi || rec.u.lo > rec.u.hi || rec.c.lo > rec.c.hi)
            throw std::runtime_error("inverted range in: " + line);
        if (std::max(rec.g.lo, rec.u.lo) > rec.c.hi)
            throw std::runtime_error("Shibuya inequality violated in: " + line);
        if (!index.emplace(rec.name, static_cast<int>(table.records_.size())).second)
            throw std::runtime_error("duplicate knot name: " + rec.name);
        table.records_.push_back(std::move(rec));
    }
    if (table.records_.size() != 249)
        throw std::runtime_error("expected 249 table rows, found " +
                                 std::to_string(table.records_.size()));

    // Bundled PD codes (optional per row).
    const std::string pd_path = data_dir + "/pd_codes.txt";
    std::ifstream pin(pd_path);
    if (!pin) throw std::runtime_error("cannot open " + pd_path);
    while (std::getline(pin, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        ls >> name;
        std::string rest;
        std::getline(ls, rest);
        auto it = index.find(name);
        if (it == index.end())
            throw std::runtime_error("PD data for unknown knot " + name);
        table.records_[it->second].pd = parse_pd(rest);
    }

    // Naming caveats: the appendix's Rolfsen-numbering notes.
    auto note = [&](const std::string& name, const std::string& text) {
        auto it = index.find(name);
        if (it != index.end()) table.records_[it->second].note = text;
    };
    note("10_161",
         "Rolfsen's 10_161 and 10_162 are the same knot (the Perko pair); "
         "this table keeps 10_161");
    note("10_83", "10_83 and 10_86 are interchanged in Kawauchi's table");
    note("10_86", "10_83 and 10_86 are interchanged in Kawauchi's table");
    table.aliases_.emplace_back(
        "10_162",
        std::pair<int, std::string>{
            index.at("10_161"),
            "Rolfsen's 10_162 duplicates 10_161 (Perko pair); note that Knot "
            "Atlas and KnotInfo instead use 10_162..10_165 for Rolfsen's "
            "10_163..10_166"});
    return table;
}

LookupResult KnotTable::lookup(const std::string& name) const {
    std::map<std::string, int> index;
    for (size_t i = 0; i < records_.size(); ++i)
        index.emplace(records_[i].name, static_cast<int>(i));
    if (auto it = index.find(name); it != index.end())
        return {&records_[it->second], records_[it->second].note};
    for (auto& [alias, target] : aliases_)
        if (alias == name) return {&records_[target.first], target.second};

    // Unknown: offer near matches (same crossing-count prefix).
    std::string near;
    const auto us = name.find('_');
    const std::string prefix = us == std::string::npos ? name : name.substr(0, us + 1);
    int shown = 0;
    for (auto& r : records_)
        if (r.name.rfind(prefix, 0) == 0 && shown < 3) {
            near += (shown ? ", " : "") + r.name;
            ++shown;
        }
    throw std::out_of_range("unknown knot '" + name + "'" +
                            (near.empty() ? "" : "; nearby: " + near));
}

std::vector<std::string> KnotTable::equality_census() const {
    std::vector<std::string> out;
    for (auto& r : records_)
        if (r.g.exact() && r.u.exact() && r.c.exact() &&
            std::max(r.g.hi, r.u.hi) < r.c.lo)
            out.push_back(r.name);
    return out;
}

std::vector<std::string> KnotTable::undetermined_rows() const {
    std::vector<std::string> out;
    for (auto& r : records_)
        if (!r.g.exact() || !r.u.exact() || !r.c.exact()) out.push_back(r.name);
    return out;
}

AuditReport audit(const KnotTable& table) {
    AuditReport rep;
    rep.census = table.equality_census();
    rep.undetermined = table.undetermined_rows();

    for (auto& rec : table.records()) {
        AuditRow row;
        row.name = rec.name;
        const int cr = rec.crossing_number();

        // (d) Question-2 bound needs only the name.
        row.q2_ok = rec.c.hi <= (cr - 1) / 2;
        if (!row.q2_ok) row.flags.push_back("c exceeds [(cr-1)/2]");

        // (e) Shibuya, range-consistent.
        row.shibuya_ok = std::max(rec.g.lo, rec.u.lo) <= rec.c.hi;
        if (!row.shibuya_ok) row.flags.push_back("max{g,u} > c");

        if (rec.pd) {
            row.has_pd = true;
            const Diagram d = orient(*rec.pd);
            const Laurent nabla = conway(d);
            row.conway = to_string(nabla, "z");

            // (a) Conway degree vs genus.
            const int g_lb = genus_lower_from_conway(nabla);
            row.genus_consistent = g_lb <= rec.g.hi;
            if (!row.genus_consistent)
                row.flags.push_back("deg(nabla)/2 exceeds the table genus");

            // (b) mod-8 obstruction vs table clasp value.
            bool genus2_shape = true;
            ConwayGenus2 shape;
            try {
                shape = conway_genus2_of(nabla);
            } catch (const std::invalid_argument&) {
                genus2_shape = false;
            }
            if (genus2_shape) {
                row.obstruction_fires = mod8_obstruction(shape);
                if (row.obstruction_fires && rec.c.hi < 3) {
                    row.obstruction_consistent = false;
                    row.flags.push_back(
                        "mod-8 obstruction contradicts table c <= 2");
                }
            }

            // (c) realizability is necessary for table rows with c <= 2.
            if (rec.c.hi <= 2) {
                if (!genus2_shape) {
                    row.realizable = false;
                    row.flags.push_back("c <= 2 but nabla is not genus-2 shaped");
                } else {
                    row.realizable = two_clasp_realizable(shape).has_value();
                    if (!*row.realizable)
                        row.flags.push_back("c <= 2 but nabla is not realizable");
                }
            }
            if (rec.c.hi <= 1 && !one_clasp_form(nabla))
                row.flags.push_back("c <= 1 but nabla is not b1*z^2 + 1");
        }

        if (!row.flags.empty()) ++rep.failures;
        if (row.has_pd) ++rep.with_pd;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string to_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "name,has_pd,conway,genus_consistent,obstruction_fires,"
           "obstruction_consistent,realizable,q2_ok,shibuya_ok,flags\n";
    for (auto& r : report.rows) {
        out << r.name << ',' << (r.has_pd ? 1 : 0) << ',' << '"' << r.conway
            << '"' << ',' << r.genus_consistent << ',' << r.obstruction_fires
            << ',' << r.obstruction_consistent << ','
            << (r.realizable ? (*r.realizable ? "1" : "0") : "") << ','
            << r.q2_ok << ',' << r.shibuya_ok << ',' << '"';
        for (size_t i = 0; i < r.flags.size(); ++i)
            out << (i ? "; " : "") << r.flags[i];
        out << '"' << '\n';
    }
    return out.str();
}

}  // namespace knots
