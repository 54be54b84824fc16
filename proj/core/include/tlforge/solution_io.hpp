// JSON interchange for solutions and verification reports.  Schema
// "tlforge/1": complex numbers are [re, im] pairs, matrices are nested
// arrays of them, doubles round-trip exactly.

#pragma once

#include "tlforge/tl.hpp"

#include <string>

namespace tlforge {

struct SolutionDocument {
    std::string schema_version = "tlforge/1";
    std::size_t n = 0;
    std::size_t rank = 0;
    double Q = 0.0;
    std::string family;
    std::map<std::string, cplx> params;
    std::vector<ComplexMatrix> matrices;
    std::string provenance;

    static SolutionDocument from_solution(const TLSolution& sol, std::string provenance = "");
    TLSolution to_solution() const;
};

std::string to_json(const SolutionDocument& doc);
SolutionDocument solution_from_json(const std::string& json_text);

void save_solution(const SolutionDocument& doc, const std::string& path);
SolutionDocument load_solution(const std::string& path);

struct ReportDocument {
    std::string input_digest;  // fnv1a-64 of the input bytes, hex
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, double> residuals;
    std::map<std::string, double> limits;
    std::vector<std::string> notes;
    double wall_time_seconds = 0.0;
};

std::string to_json(const ReportDocument& rep);

/// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace tlforge
