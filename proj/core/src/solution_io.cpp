#include "tlforge/solution_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tlforge {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("solution JSON: complex values must be [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

SolutionDocument SolutionDocument::from_solution(const TLSolution& sol, std::string provenance) {
    SolutionDocument doc;
    doc.n = sol.n();
    doc.rank = sol.rank();
    doc.Q = sol.Q;
    doc.family = sol.family;
    doc.params = sol.params;
    doc.matrices = sol.spanning.mats;
    doc.provenance = std::move(provenance);
    return doc;
}

TLSolution SolutionDocument::to_solution() const {
    TLSolution sol;
    sol.spanning = SpanningSet(n, matrices);
    sol.Q = Q;
    sol.family = family;
    sol.params = params;
    return sol;
}

std::string to_json(const SolutionDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["n"] = doc.n;
    j["rank"] = doc.rank;
    j["Q"] = doc.Q;
    j["family"] = doc.family;
    json params = json::object();
    for (const auto& [key, value] : doc.params) params[key] = complex_to_json(value);
    j["params"] = params;
    json mats = json::array();
    for (const auto& m : doc.matrices) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = mats;
    j["provenance"] = doc.provenance;
    return j.dump(2);
}

SolutionDocument solution_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    SolutionDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "tlforge/1")
        throw std::invalid_argument("unsupported schema_version: " + doc.schema_version);
    doc.n = j.at("n").get<std::size_t>();
    doc.rank = j.at("rank").get<std::size_t>();
    doc.Q = j.at("Q").get<double>();
    doc.family = j.at("family").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) doc.params[key] = complex_from_json(value);
    const json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != doc.rank)
        throw std::invalid_argument("solution JSON: matrices length must equal rank");
    for (const auto& mj : mats) {
        if (!mj.is_array() || mj.size() != doc.n)
            throw std::invalid_argument("solution JSON: each matrix must have n rows");
        ComplexMatrix m(doc.n, doc.n);
        for (std::size_t i = 0; i < doc.n; ++i) {
            const json& row = mj[i];
            if (!row.is_array() || row.size() != doc.n)
                throw std::invalid_argument("solution JSON: each matrix row must have n entries");
            for (std::size_t k = 0; k < doc.n; ++k) m(i, k) = complex_from_json(row[k]);
        }
        if (!m.all_finite()) throw std::invalid_argument("solution JSON: non-finite entry");
        doc.matrices.push_back(std::move(m));
    }
    doc.provenance = j.value("provenance", "");
    return doc;
}

void save_solution(const SolutionDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json(doc) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

SolutionDocument load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return solution_from_json(buf.str());
}

std::string to_json(const ReportDocument& rep) {
    json j;
    j["input_digest"] = rep.input_digest;
    j["tolerance"] = rep.tolerance;
    j["passed"] = rep.passed;
    json res = json::object(), lim = json::object();
    for (const auto& [key, value] : rep.residuals) res[key] = value;
    for (const auto& [key, value] : rep.limits) lim[key] = value;
    j["residuals"] = res;
    j["limits"] = lim;
    j["notes"] = rep.notes;
    j["wall_time_seconds"] = rep.wall_time_seconds;
    return j.dump(2);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace tlforge
