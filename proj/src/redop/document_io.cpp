#include "redop/document_io.hpp"

#include <sstream>

namespace redop {

namespace {

using nlohmann::json;

Rational entry_to_rational(const json& value, const std::string& where) {
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<long long>()));
    if (value.is_string()) {
        try {
            return rational_from_string(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DocumentError(where, e.what());
        }
    }
    throw DocumentError(where,
                        "expected an integer or a \"p/q\" string");
}

Vector combination_from_json(const BasisPtr& basis, const json& value,
                             const std::string& where) {
    if (!value.is_object())
        throw DocumentError(where, "expected an object generator -> coefficient");
    Vector v(basis);
    for (const auto& [gen, coeff] : value.items()) {
        auto rank = basis->rank_of(gen);
        if (!rank)
            throw DocumentError(where, "unknown generator '" + gen + "'");
        v.set(*rank, entry_to_rational(coeff, where + "." + gen));
    }
    return v;
}

ReductionOperator operator_from_json(const BasisPtr& basis, const json& spec,
                                     const std::string& where) {
    const int n = basis->size();
    std::map<int, Vector> action;
    if (spec.contains("action") == spec.contains("matrix"))
        throw DocumentError(where,
                            "operator needs exactly one of 'action' or 'matrix'");
    if (spec.contains("action")) {
        const json& act = spec["action"];
        if (!act.is_object())
            throw DocumentError(where + ".action", "expected an object");
        for (const auto& [gen, image] : act.items()) {
            auto rank = basis->rank_of(gen);
            if (!rank)
                throw DocumentError(where + ".action",
                                    "unknown generator '" + gen + "'");
            action.emplace(*rank, combination_from_json(
                                      basis, image, where + ".action." + gen));
        }
    } else {
        const json& mat = spec["matrix"];
        if (!mat.is_array() || static_cast<int>(mat.size()) != n)
            throw DocumentError(where + ".matrix",
                                "expected " + std::to_string(n) + " rows");
        for (int r = 0; r < n; ++r)
            if (!mat[r].is_array() || static_cast<int>(mat[r].size()) != n)
                throw DocumentError(
                    where + ".matrix",
                    "row " + std::to_string(r + 1) + " must have " +
                        std::to_string(n) + " entries");
        for (int col = 0; col < n; ++col) {
            Vector image(basis);
            for (int r = 0; r < n; ++r)
                image.set(r, entry_to_rational(
                                 mat[r][col],
                                 where + ".matrix[" + std::to_string(r) + "][" +
                                     std::to_string(col) + "]"));
            const bool fixed =
                image.row().terms.size() == 1 && image.coeff(col) == 1;
            if (!fixed) action.emplace(col, std::move(image));
        }
    }
    try {
        return ReductionOperator::from_action(basis, action);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(where, e.what());
    }
}

}  // namespace

OperatorFamily parse_family_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DocumentError("", e.what());
    }
    if (!doc.is_object()) throw DocumentError("", "expected a JSON object");
    if (!doc.contains("basis") || !doc["basis"].is_array())
        throw DocumentError("basis", "expected an array of generator names");
    std::vector<std::string> names;
    for (const auto& g : doc["basis"]) {
        if (!g.is_string())
            throw DocumentError("basis", "generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    BasisPtr basis;
    try {
        basis = make_basis(std::move(names));
    } catch (const std::invalid_argument& e) {
        throw DocumentError("basis", e.what());
    }
    if (!doc.contains("operators") || !doc["operators"].is_array() ||
        doc["operators"].empty())
        throw DocumentError("operators",
                            "expected a non-empty array of operators");
    std::vector<ReductionOperator> ops;
    std::vector<std::string> op_names;
    int index = 0;
    for (const auto& spec : doc["operators"]) {
        const std::string where = "operators[" + std::to_string(index) + "]";
        if (!spec.is_object()) throw DocumentError(where, "expected an object");
        op_names.push_back(spec.contains("name")
                               ? spec["name"].get<std::string>()
                               : "T" + std::to_string(index + 1));
        ops.push_back(operator_from_json(basis, spec, where));
        ++index;
    }
    try {
        return OperatorFamily(basis, std::move(ops), std::move(op_names));
    } catch (const std::invalid_argument& e) {
        throw DocumentError("operators", e.what());
    }
}

std::string family_to_json(const OperatorFamily& f, int indent) {
    json doc;
    doc["basis"] = f.basis()->names();
    json ops = json::array();
    for (int i = 0; i < f.size(); ++i) {
        json op;
        op["name"] = f.name(i);
        json action = json::object();
        for (int g : f.op(i).reducible_ranks()) {
            json image = json::object();
            for (const auto& [k, c] : f.op(i).image_of(g).row().terms)
                image[f.basis()->name(k)] = to_string(c);
            action[f.basis()->name(g)] = std::move(image);
        }
        op["action"] = std::move(action);
        ops.push_back(std::move(op));
    }
    doc["operators"] = std::move(ops);
    return doc.dump(indent);
}

std::vector<Polynomial> parse_polynomial_system(
    const std::string& text, std::span<const std::string> variables) {
    std::vector<Polynomial> polys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            polys.push_back(parse_polynomial(line, variables));
        } catch (const ParseError& e) {
            throw DocumentError("line " + std::to_string(lineno), e.what());
        }
    }
    if (polys.empty()) throw DocumentError("", "no polynomials in input");
    return polys;
}

namespace {

std::string name_set(const BasisPtr& basis, std::span<const int> ranks) {
    std::string out = "{";
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += ", ";
        out += basis->name(ranks[i]);
    }
    return out + "}";
}

json name_array(const BasisPtr& basis, std::span<const int> ranks) {
    json out = json::array();
    for (int r : ranks) out.push_back(basis->name(r));
    return out;
}

json product_index_json(const OperatorFamily& f, const ProductIndex& idx) {
    return json{{"position", idx.op + 1},
                {"operator", f.name(idx.op)},
                {"generator", f.basis()->name(idx.gen)}};
}

// e[i,g] with the 1-based position, highest index first.
std::string product_row_to_string(const OperatorFamily& f,
                                  const ProductRow& row) {
    if (row.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = row.terms.rbegin(); it != row.terms.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) out << to_string(c) << "*";
        out << "e[" << it->first.op + 1 << ","
            << f.basis()->name(it->first.gen) << "]";
        first = false;
    }
    return out.str();
}

json kernel_json(const ReductionOperator& t) {
    json rows = json::array();
    for (const Vector& v : t.kernel().elements()) rows.push_back(v.to_string());
    return rows;
}

}  // namespace

Report report_confluence(const OperatorFamily& f) {
    Report rep;
    const ReductionOperator bottom = meet_family(f.basis(), f.ops());
    const std::vector<int> nf_f = family_normal_forms(f.basis(), f.ops());
    const std::vector<int> nf_meet = bottom.normal_form_ranks();
    const std::vector<int> obs = obstruction_set(f);
    const bool confluent = obs.empty();

    rep.data = json{{"command", "confluence"},
                    {"basis", f.basis()->names()},
                    {"operator_names", f.names()},
                    {"nf_family", name_array(f.basis(), nf_f)},
                    {"nf_meet", name_array(f.basis(), nf_meet)},
                    {"obstructions", name_array(f.basis(), obs)},
                    {"confluent", confluent}};

    std::ostringstream out;
    out << "operators: " << f.size() << " over " << f.basis()->size()
        << " generators\n";
    out << "NF(F)      = " << name_set(f.basis(), nf_f) << "\n";
    out << "NF(meet F) = " << name_set(f.basis(), nf_meet) << "\n";
    out << "Obs(F)     = " << name_set(f.basis(), obs) << "\n";
    out << "verdict: " << (confluent ? "confluent" : "not confluent") << "\n";
    rep.text = out.str();
    rep.exit_code = confluent ? 0 : 1;
    return rep;
}

Report report_syzygies(const OperatorFamily& f) {
    Report rep;
    const SyzygyBasis basis = syzygy_basis(f);
    const std::vector<ProductIndex> leads = syzygy_leading_indices(f);

    json elements = json::array();
    for (const ProductRow& row : basis.rows()) {
        json terms = json::array();
        for (auto it = row.terms.rbegin(); it != row.terms.rend(); ++it)
            terms.push_back(json{{"position", it->first.op + 1},
                                 {"operator", f.name(it->first.op)},
                                 {"generator", f.basis()->name(it->first.gen)},
                                 {"coeff", to_string(it->second)}});
        elements.push_back(json{{"display", product_row_to_string(f, row)},
                                {"terms", std::move(terms)}});
    }
    json lead_json = json::array();
    for (const ProductIndex& idx : leads)
        lead_json.push_back(product_index_json(f, idx));

    rep.data = json{{"command", "syzygies"},
                    {"dimension", basis.dimension()},
                    {"elements", std::move(elements)},
                    {"leading_indices", std::move(lead_json)}};

    std::ostringstream out;
    out << "syzygy basis (" << basis.dimension() << " element"
        << (basis.dimension() == 1 ? "" : "s") << ")\n";
    int k = 1;
    for (const ProductRow& row : basis.rows())
        out << "  s" << k++ << " = " << product_row_to_string(f, row) << "\n";
    out << "leading indices:";
    if (leads.empty()) out << " none";
    for (const ProductIndex& idx : leads)
        out << " e[" << idx.op + 1 << "," << f.basis()->name(idx.gen) << "]";
    out << "\n";
    rep.text = out.str();
    return rep;
}

Report report_completion(const OperatorFamily& f) {
    Report rep;
    const CompletionReport result = complete_with_report(f);

    json removed = json::array();
    for (const ProductIndex& idx : result.removed_reductions)
        removed.push_back(product_index_json(f, idx));
    json added = json::array();
    int k = 1;
    for (const ReductionOperator& c : result.added)
        added.push_back(
            json{{"name", "C" + std::to_string(k++)}, {"kernel", kernel_json(c)}});
    json ambis = json::array();
    for (const Ambiguity& a : result.ambiguity_list)
        ambis.push_back(json{{"generator", f.basis()->name(a.generator)},
                             {"operators", {f.name(a.op1), f.name(a.op2)}}});

    rep.data = json{{"command", "complete"},
                    {"obstructions", name_array(f.basis(), result.obstructions)},
                    {"removed_reductions", std::move(removed)},
                    {"added_operators", std::move(added)},
                    {"verified", result.is_confluent_after},
                    {"ambiguities", std::move(ambis)}};

    std::ostringstream out;
    out << "Obs(F) = " << name_set(f.basis(), result.obstructions) << "\n";
    out << "useless reductions removed:";
    if (result.removed_reductions.empty()) out << " none";
    for (const ProductIndex& idx : result.removed_reductions)
        out << " (" << f.name(idx.op) << ", " << f.basis()->name(idx.gen)
            << ")";
    out << "\n";
    if (result.added.empty()) {
        out << "added operators: none\n";
    } else {
        out << "added operators:\n";
        k = 1;
        for (const ReductionOperator& c : result.added) {
            out << "  C" << k++ << ": kernel = {";
            bool first = true;
            for (const Vector& v : c.kernel().elements()) {
                out << (first ? " " : ", ") << v.to_string();
                first = false;
            }
            out << " }\n";
        }
    }
    out << "verification: "
        << (result.is_confluent_after ? "completion verified"
                                      : "completion FAILED")
        << "\n";
    rep.text = out.str();
    return rep;
}

Report report_groebner(const std::vector<std::string>& variables,
                       int degree_bound, std::span<const Polynomial> polys) {
    Report rep;
    const TruncatedContext ctx(variables, degree_bound);
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero())
            throw DocumentError("polynomial " + std::to_string(i + 1),
                                "zero polynomial");
        if (poly_degree(polys[i]) > degree_bound)
            throw DocumentError(
                "polynomial " + std::to_string(i + 1),
                "degree exceeds the bound " + std::to_string(degree_bound));
    }
    const GroebnerResult result = complete_groebner(ctx, polys);

    auto pname = [](int i) { return "f" + std::to_string(i + 1); };
    json basis = json::array();
    for (const Polynomial& p : result.basis)
        basis.push_back(poly_to_string(p, variables));
    json useless = json::array();
    for (const UselessReduction& u : result.useless)
        useless.push_back(
            json{{"polynomial", pname(u.poly_index)},
                 {"index", u.poly_index + 1},
                 {"cofactor", monomial_to_string(u.cofactor, variables)},
                 {"overlap", monomial_to_string(u.reducible, variables)},
                 {"join_image", poly_to_string(u.join_image, variables)}});

    rep.data = json{{"command", "groebner"},
                    {"variables", variables},
                    {"degree_bound", degree_bound},
                    {"input_count", result.input_count},
                    {"basis", std::move(basis)},
                    {"useless", std::move(useless)},
                    {"groebner_verified", result.verified},
                    {"warnings", result.warnings}};

    std::ostringstream out;
    out << "variables (increasing precedence):";
    for (const std::string& v : variables) out << " " << v;
    out << "\ndegree bound: " << degree_bound
        << " (every statement below is certified up to this degree only)\n";
    out << "completed basis (" << result.basis.size() << "):\n";
    for (size_t i = 0; i < result.basis.size(); ++i)
        out << "  " << pname(static_cast<int>(i))
            << (static_cast<int>(i) < result.input_count ? "  " : " +")
            << " = " << poly_to_string(result.basis[i], variables) << "\n";
    out << "useless reductions rejected:";
    if (result.useless.empty()) out << " none";
    out << "\n";
    for (const UselessReduction& u : result.useless)
        out << "  (" << pname(u.poly_index) << ", cofactor "
            << monomial_to_string(u.cofactor, variables) << "): overlap "
            << monomial_to_string(u.reducible, variables)
            << " already reduces under the prefix join to "
            << poly_to_string(u.join_image, variables) << "\n";
    out << "groebner basis up to degree " << degree_bound << ": "
        << (result.verified ? "yes" : "NOT confirmed") << "\n";
    for (const std::string& w : result.warnings) out << "warning: " << w << "\n";
    rep.text = out.str();
    return rep;
}

}  // namespace redop
