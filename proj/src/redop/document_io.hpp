#pragma once

#include "redop/groebner.hpp"

#include <json.hpp>

namespace redop {

// Input document or system text rejected during loading; `where` points at
// the offending element.
struct DocumentError : std::runtime_error {
    DocumentError(std::string location, const std::string& message)
        : std::runtime_error(location.empty() ? message
                                              : location + ": " + message),
          where(std::move(location)) {}
    std::string where;
};

// Family documents carry the ordered basis plus one entry per operator given
// either as a sparse action map or as a dense column matrix. Rationals are
// written "p/q" to stay exact.
OperatorFamily parse_family_document(const std::string& json_text);
std::string family_to_json(const OperatorFamily& f, int indent = 2);

// One polynomial per non-empty, non-comment line.
std::vector<Polynomial> parse_polynomial_system(
    const std::string& text, std::span<const std::string> variables);

struct Report {
    nlohmann::json data;
    std::string text;
    int exit_code = 0;
};

Report report_confluence(const OperatorFamily& f);
Report report_syzygies(const OperatorFamily& f);
Report report_completion(const OperatorFamily& f);
Report report_groebner(const std::vector<std::string>& variables,
                       int degree_bound, std::span<const Polynomial> polys);

}  // namespace redop
