/* Reference-table verification.  The tables themselves are compiled in from
   a JSON snapshot at build time. */

#include "branchq/appendix.hpp"

#include <json.hpp>

#include <branchq_appendix_data.hpp>

#include "branchq/linalg.hpp"

namespace branchq {

std::vector<GoldenTable> appendix_tables() {
    const nlohmann::json j = nlohmann::json::parse(detail::appendix_json);
    std::vector<GoldenTable> out;
    for (const nlohmann::json& t : j.at("tables")) {
        GoldenTable g;
        g.family = family_from_letter(t.at("family").get<std::string>().at(0));
        g.n = t.at("n").get<int>();
        g.params = t.at("params").get<std::vector<int>>();
        for (const nlohmann::json& row : t.at("entries")) {
            IntVector r;
            for (const nlohmann::json& v : row) r.push_back(Int(v.get<long long>()));
            g.entries.push_back(std::move(r));
        }
        out.push_back(std::move(g));
    }
    return out;
}

AppendixReport verify_appendix() {
    AppendixReport report;
    report.all_match = true;
    for (const GoldenTable& g : appendix_tables()) {
        BranchingMatrix m;
        switch (g.family) {
            case Family::A:
            case Family::B:
                m = type1(g.n, g.params.at(0), g.family);
                break;
            case Family::C:
                m = type2(g.n, g.params.at(0), g.params.at(1));
                break;
            case Family::D:
                m = sp_matrix(g.n, g.params.at(0));
                break;
            case Family::E:
                m = so_matrix(g.n, g.params.at(0));
                break;
        }
        AppendixEntry e{g.family, g.n, g.params, mat_equal(m.entries, g.entries)};
        report.all_match = report.all_match && e.match;
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace branchq
