#include "sumsetlab/io.hpp"

#include <fstream>
#include <sstream>

namespace sumsetlab {

const char* kReportSchemaVersion = "sumsetlab-report-v1";

namespace {

using i64 = std::int64_t;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open input file: " + path);
    return in;
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

PointSet read_point_set(std::istream& in) {
    std::string line;
    int dim = 0;
    bool have_dim = false;
    std::vector<std::vector<i64>> rows;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        if (!have_dim) {
            std::string word;
            if (!(ls >> word)) continue;  // blank/comment before header
            if (word != "dim") throw ArgumentError("point-set file must start with 'dim k'");
            if (!(ls >> dim) || dim < 1) throw ArgumentError("point-set file: bad dimension");
            have_dim = true;
            continue;
        }
        std::vector<i64> row;
        i64 v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (static_cast<int>(row.size()) != dim)
            throw ArgumentError("point-set file: row with wrong arity");
        rows.push_back(std::move(row));
    }
    if (!have_dim) throw ArgumentError("point-set file: missing 'dim k' header");
    return PointSet::of(dim, rows);
}

PointSet read_point_set_file(const std::string& path) {
    auto in = open_input(path);
    return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& a) {
    out << "dim " << a.dim() << "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) out << (c ? " " : "") << p[c];
        out << "\n";
    }
}

void write_point_set_file(const std::string& path, const PointSet& a) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open output file: " + path);
    write_point_set(out, a);
}

WeightedFunction read_weighted_function(std::istream& in) {
    WeightedFunction f;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        i64 x;
        std::string value;
        if (!(ls >> x)) continue;
        if (!(ls >> value)) throw ArgumentError("weighted function: missing value");
        f[x] = rational_from_string(value);
    }
    return f;
}

WeightedFunction read_weighted_function_file(const std::string& path) {
    auto in = open_input(path);
    return read_weighted_function(in);
}

Json to_json(const RationalInterval& v) {
    return Json{{"lo", rational_to_string(v.lo)}, {"hi", rational_to_string(v.hi)}};
}

Json to_json(const InequalityReport& r) {
    Json hyp = Json::object();
    for (const auto& [k, v] : r.hypothesis_values) hyp[k] = rational_to_string(v);
    Json caps = Json::object();
    for (const auto& [k, v] : r.caps_used) caps[k] = v;
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    return Json{{"name", r.name},
                {"hypothesis_values", hyp},
                {"hypotheses_ok", r.hypotheses_ok},
                {"hypothesis_failures", r.hypothesis_failures},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"slack", to_json(r.slack)},
                {"pass", r.pass},
                {"asserted", r.asserted},
                {"caps_used", caps},
                {"details", details}};
}

Json to_json(const PointSet& a) {
    Json points = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        points.push_back(std::vector<i64>(p.begin(), p.end()));
    }
    return Json{{"dim", a.dim()}, {"size", a.size()}, {"points", points}};
}

Json to_json(const Gap& g) {
    return Json{{"record", g.record()},
                {"k", g.ambient_dim},
                {"sides", g.sides},
                {"coeffs", g.coeffs},
                {"offset", g.offset}};
}

Json to_json(const CoverCertificate& c) {
    return Json{{"normal", c.normal}, {"levels", c.levels}, {"count", c.count}, {"normal_bound", c.normal_bound}};
}

Json to_json(const GapHullResult& h) {
    return Json{{"x_set", to_json(h.x_set)},
                {"gap", to_json(h.gap)},
                {"total_size", h.total_size},
                {"status", h.status == HullStatus::exact_optimal ? "exact-optimal" : "certified-upper-bound"}};
}

Json to_json(const FrontierRecord& rec) {
    return Json{{"k", rec.k},
                {"n", rec.n},
                {"size", rec.size},
                {"family", rec.family},
                {"points", to_json(rec.points)},
                {"doubling", rational_to_string(rec.doubling)},
                {"cover", to_json(rec.cover)},
                {"seed", rec.seed},
                {"budget", rec.budget},
                {"strategy", rec.strategy == SearchStrategy::exhaustive ? "exhaustive" : "local"}};
}

FrontierRecord frontier_from_json(const Json& j) {
    FrontierRecord rec;
    rec.k = j.at("k").get<int>();
    rec.n = j.at("n").get<i64>();
    rec.size = j.at("size").get<std::uint64_t>();
    rec.family = j.at("family").get<std::string>();
    const Json& pts = j.at("points");
    std::vector<std::vector<i64>> rows;
    for (const auto& p : pts.at("points")) rows.push_back(p.get<std::vector<i64>>());
    rec.points = PointSet::of(pts.at("dim").get<int>(), rows);
    rec.doubling = rational_from_string(j.at("doubling").get<std::string>());
    const Json& cov = j.at("cover");
    rec.cover.normal = cov.at("normal").get<std::vector<i64>>();
    rec.cover.levels = cov.at("levels").get<std::vector<i64>>();
    rec.cover.count = cov.at("count").get<std::uint64_t>();
    rec.cover.normal_bound = cov.at("normal_bound").get<i64>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.budget = j.at("budget").get<std::uint64_t>();
    rec.strategy = j.at("strategy").get<std::string>() == "exhaustive" ? SearchStrategy::exhaustive
                                                                       : SearchStrategy::local;
    return rec;
}

Json make_report_envelope(const std::string& command, Json params, Json result) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)}};
}

void append_frontier_record(const std::string& path, const FrontierRecord& rec) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw ArgumentError("cannot open frontier file: " + path);
    out << to_json(rec).dump() << "\n";
}

std::vector<FrontierRecord> load_frontier_records(const std::string& path) {
    auto in = open_input(path);
    std::vector<FrontierRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(frontier_from_json(Json::parse(line)));
    }
    return out;
}

std::string simplex_table_csv(const std::vector<SimplexTableRow>& rows) {
    std::ostringstream os;
    os << "k,n,size,doubled_size,ratio,c_hat,k_over_4\n";
    for (const auto& r : rows) {
        os << r.k << "," << r.n << "," << r.size.str() << "," << r.doubled_size.str() << ","
           << rational_to_string(r.ratio) << "," << rational_to_string(r.c_hat) << ","
           << rational_to_string(r.k_over_4) << "\n";
    }
    return os.str();
}

std::string estimation_csv(const std::vector<EstimationRow>& rows) {
    std::ostringstream os;
    os << "k,n,t,family,seed,size_a,size_b,sumset,cover_count,normal_bound,hypothesis_ok,c_hat_lo,c_hat_hi\n";
    for (const auto& r : rows) {
        os << r.k << "," << r.n << "," << rational_to_string(r.t) << "," << r.family << "," << r.seed << ","
           << r.size_a << "," << r.size_b << "," << r.sumset << "," << r.cover_count << "," << r.normal_bound
           << "," << (r.hypothesis_ok ? "true" : "false") << "," << rational_to_string(r.c_hat.lo) << ","
           << rational_to_string(r.c_hat.hi) << "\n";
    }
    return os.str();
}

namespace {

bool type_matches(const std::string& type, const Json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

std::string validate_node(const Json& schema, const Json& value, const std::string& path) {
    if (schema.contains("type")) {
        const Json& t = schema.at("type");
        if (t.is_string()) {
            if (!type_matches(t.get<std::string>(), value))
                return path + ": expected type " + t.get<std::string>();
        } else if (t.is_array()) {
            bool any = false;
            for (const auto& option : t)
                if (type_matches(option.get<std::string>(), value)) any = true;
            if (!any) return path + ": no type option matches";
        }
    }
    if (schema.contains("enum")) {
        bool any = false;
        for (const auto& option : schema.at("enum"))
            if (option == value) any = true;
        if (!any) return path + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key '" + key.get<std::string>() + "'";
        if (schema.contains("properties")) {
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it) {
                if (!value.contains(it.key())) continue;
                std::string err = validate_node(it.value(), value.at(it.key()), path + "." + it.key());
                if (!err.empty()) return err;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t index = 0;
        for (const auto& item : value) {
            std::string err =
                validate_node(schema.at("items"), item, path + "[" + std::to_string(index) + "]");
            if (!err.empty()) return err;
            ++index;
        }
    }
    return "";
}

}  // namespace

std::string validate_against_schema(const Json& schema, const Json& value) {
    return validate_node(schema, value, "$");
}

}  // namespace sumsetlab
