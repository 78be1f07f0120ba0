/* JSON/CSV emitters.  nlohmann::json stays out of the public headers. */

#include "branchq/serialize.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace branchq {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(static_cast<long long>(v));
    return json(v.str());
}

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Int& v : row) r.push_back(json_int(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

json json_labels(const std::vector<Label>& labels) {
    json out = json::array();
    for (const Label& l : labels) out.push_back(label_text(l));
    return out;
}

json json_partitions(const std::vector<Partition>& ps) {
    json out = json::array();
    for (const Partition& p : ps) out.push_back(p.to_string());
    return out;
}

std::string quote_csv(const std::string& s) {
    return '"' + s + '"';  // labels contain no quote characters
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("point sequence: bad rational '" + s + "'");
        }
    }
    throw std::invalid_argument("point sequence: coordinates must be integers or strings");
}

} // namespace

std::string to_json(const BranchingMatrix& m) {
    json j;
    j["family"] = std::string(1, family_letter(m.family));
    j["n"] = m.n;
    j["params"] = m.params;
    j["labels"] = json_labels(m.col_labels);
    j["entries"] = json_matrix(m.entries);
    return dump(j);
}

std::string to_csv(const BranchingMatrix& m) {
    std::ostringstream out;
    out << quote_csv("");
    for (const Label& l : m.col_labels) out << ',' << quote_csv(label_text(l));
    out << '\n';
    for (int i = 0; i < m.size(); ++i) {
        out << quote_csv(label_text(m.row_labels[i]));
        for (const Int& v : m.entries[i]) out << ',' << v.str();
        out << '\n';
    }
    return out.str();
}

std::string to_text(const BranchingMatrix& m) {
    const int sz = m.size();
    std::vector<std::string> row_names(sz);
    std::size_t name_w = 0;
    for (int i = 0; i < sz; ++i) {
        row_names[i] = label_text(m.row_labels[i]);
        name_w = std::max(name_w, row_names[i].size());
    }
    std::vector<std::vector<std::string>> cells(sz, std::vector<std::string>(sz));
    std::vector<std::size_t> width(sz, 0);
    for (int j = 0; j < sz; ++j) {
        width[j] = label_text(m.col_labels[j]).size();
        for (int i = 0; i < sz; ++i) {
            cells[i][j] = m.entries[i][j].str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::ostringstream out;
    out << std::string(name_w, ' ');
    for (int j = 0; j < sz; ++j) {
        const std::string name = label_text(m.col_labels[j]);
        out << "  " << std::string(width[j] - name.size(), ' ') << name;
    }
    out << '\n';
    for (int i = 0; i < sz; ++i) {
        out << std::string(name_w - row_names[i].size(), ' ') << row_names[i];
        for (int j = 0; j < sz; ++j)
            out << "  " << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
        out << '\n';
    }
    return out.str();
}

std::string to_json(const CharacterTable& t) {
    json j;
    j["d"] = t.d;
    j["irreducibles"] = json_partitions(t.rows);
    j["classes"] = json_partitions(t.cols);
    json sizes = json::array();
    for (const Int& s : t.class_sizes) sizes.push_back(json_int(s));
    j["class_sizes"] = std::move(sizes);
    j["values"] = json_matrix(t.values);
    return dump(j);
}

std::string to_csv(const CharacterTable& t) {
    std::ostringstream out;
    out << quote_csv("");
    for (const Partition& c : t.cols) out << ',' << quote_csv(c.to_string());
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << quote_csv(t.rows[i].to_string());
        for (const Int& v : t.values[i]) out << ',' << v.str();
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Quiver& q) {
    json j;
    j["vertices"] = json_labels(q.vertices);
    j["arrows"] = json_matrix(q.arrow_counts);
    if (q.descriptor) {
        json d;
        d["family"] = std::string(1, family_letter(q.descriptor->family));
        d["n"] = q.descriptor->n;
        d["params"] = q.descriptor->params;
        j["descriptor"] = std::move(d);
    }
    return dump(j);
}

std::string to_json(const BratteliDiagram& d) {
    json j;
    json stages = json::array();
    for (const IntVector& s : d.stages) {
        json row = json::array();
        for (const Int& v : s) row.push_back(json_int(v));
        stages.push_back(std::move(row));
    }
    j["stages"] = std::move(stages);
    json mults = json::array();
    for (const IntMatrix& m : d.edge_multiplicities) mults.push_back(json_matrix(m));
    j["edge_multiplicities"] = std::move(mults);
    return dump(j);
}

std::string to_json(const SpectralCertificate& c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["classes"] = json_partitions(c.classes);
    json evs = json::array();
    for (const Int& e : c.eigenvalues) evs.push_back(json_int(e));
    j["eigenvalues"] = std::move(evs);
    j["identity_holds"] = c.identity_holds;
    j["invertible"] = c.invertible;
    j["failed_column"] = c.failed_column;
    return dump(j);
}

std::string to_json(const DimCheckReport& r) {
    json j;
    j["family"] = std::string(1, family_letter(r.family));
    j["n"] = r.n;
    j["k"] = r.k;
    j["all_ok"] = r.all_ok;
    json cols = json::array();
    for (const DimCheckColumn& c : r.columns) {
        json col;
        col["label"] = label_text(c.label);
        col["big_dim"] = json_int(c.big_dim);
        col["combined"] = json_int(c.combined);
        col["ok"] = c.ok;
        cols.push_back(std::move(col));
    }
    j["columns"] = std::move(cols);
    return dump(j);
}

std::string to_text(const DimCheckReport& r) {
    std::ostringstream out;
    for (const DimCheckColumn& c : r.columns) {
        out << (c.ok ? "ok   " : "FAIL ") << label_text(c.label) << ": big " << c.big_dim.str()
            << " vs combined " << c.combined.str() << '\n';
    }
    out << (r.all_ok ? "all columns match" : "dimension mismatch found") << '\n';
    return out.str();
}

std::string to_json(const PointDataSequence& s) {
    json j;
    if (s.quiver.descriptor) {
        json d;
        d["family"] = std::string(1, family_letter(s.quiver.descriptor->family));
        d["n"] = s.quiver.descriptor->n;
        d["params"] = s.quiver.descriptor->params;
        j["quiver"] = std::move(d);
    }
    auto steps = [](const std::vector<PointStep>& v) {
        json arr = json::array();
        for (const PointStep& st : v) {
            json e;
            e["vertex"] = label_text(st.vertex);
            json coords = json::array();
            for (const Rational& c : st.point.coords) coords.push_back(c.str());
            e["coords"] = std::move(coords);
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["preperiod"] = steps(s.preperiod);
    j["period"] = steps(s.period);
    return dump(j);
}

PointDataSequence point_sequence_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("point sequence: ") + e.what());
    }
    if (!j.contains("quiver") || !j["quiver"].contains("family"))
        throw std::invalid_argument("point sequence: missing quiver descriptor");

    const json& qd = j["quiver"];
    const std::string fam = qd["family"].get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("point sequence: bad family");
    const Family family = family_from_letter(fam[0]);
    const int n = qd["n"].get<int>();
    const std::vector<int> params = qd["params"].get<std::vector<int>>();

    BranchingMatrix m;
    switch (family) {
        case Family::A:
        case Family::B:
            if (params.size() != 1) throw std::invalid_argument("point sequence: bad params");
            m = type1(n, params[0], family);
            break;
        case Family::C:
            if (params.size() != 2) throw std::invalid_argument("point sequence: bad params");
            m = type2(n, params[0], params[1]);
            break;
        case Family::D:
            if (params.size() != 1) throw std::invalid_argument("point sequence: bad params");
            m = sp_matrix(n, params[0]);
            break;
        case Family::E:
            if (params.size() != 1) throw std::invalid_argument("point sequence: bad params");
            m = so_matrix(n, params[0]);
            break;
    }

    PointDataSequence s;
    s.quiver = quiver_of(m);

    auto read_steps = [&](const char* key, std::vector<PointStep>& out) {
        if (!j.contains(key)) return;
        for (const json& e : j[key]) {
            PointStep st;
            const std::string vtext = e["vertex"].get<std::string>();
            if (family == Family::C)
                st.vertex = parse_partition_pair(vtext);
            else
                st.vertex = parse_partition(vtext);
            for (const json& c : e["coords"]) st.point.coords.push_back(parse_rational(c));
            out.push_back(std::move(st));
        }
    };
    read_steps("preperiod", s.preperiod);
    read_steps("period", s.period);
    validate_point_data(s);
    return s;
}

} // namespace branchq
