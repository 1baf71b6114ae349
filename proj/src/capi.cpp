#include "redop/redop.h"

#include "redop/document_io.hpp"

#include <cstring>
#include <new>

using namespace redop;

struct redop_family {
    OperatorFamily family;
};

struct redop_report {
    std::string json;
    std::string text;
    int exit_code = 0;
};

namespace {

constexpr const char* kVersion = "1.0.0";

void write_err(char* err, size_t cap, const std::string& message) {
    if (!err || cap == 0) return;
    const size_t n = std::min(cap - 1, message.size());
    std::memcpy(err, message.data(), n);
    err[n] = '\0';
}

redop_report* wrap_report(Report rep) {
    auto* out = new redop_report;
    out->json = rep.data.dump(2);
    out->text = std::move(rep.text);
    out->exit_code = rep.exit_code;
    return out;
}

template <class Fn>
redop_status guarded(char* err, size_t err_cap, Fn&& fn) {
    try {
        return fn();
    } catch (const DocumentError& e) {
        write_err(err, err_cap, e.what());
        return REDOP_ERR_DOCUMENT;
    } catch (const ParseError& e) {
        write_err(err, err_cap, e.what());
        return REDOP_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        write_err(err, err_cap, e.what());
        return REDOP_ERR_DOCUMENT;
    } catch (const std::exception& e) {
        write_err(err, err_cap, e.what());
        return REDOP_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* redop_version(void) { return kVersion; }

redop_status redop_family_parse(const char* json_text, redop_family** out,
                                char* err, size_t err_cap) {
    if (!json_text || !out) return REDOP_ERR_ARGUMENT;
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        *out = new redop_family{parse_family_document(json_text)};
        return REDOP_OK;
    });
}

void redop_family_free(redop_family* family) { delete family; }

int redop_family_operator_count(const redop_family* family) {
    return family ? family->family.size() : -1;
}

int redop_family_generator_count(const redop_family* family) {
    return family ? family->family.basis()->size() : -1;
}

redop_status redop_family_to_json(const redop_family* family,
                                  char** out_text) {
    if (!family || !out_text) return REDOP_ERR_ARGUMENT;
    return guarded(nullptr, 0, [&] {
        const std::string text = family_to_json(family->family);
        *out_text = new char[text.size() + 1];
        std::memcpy(*out_text, text.c_str(), text.size() + 1);
        return REDOP_OK;
    });
}

redop_status redop_confluence(const redop_family* family, redop_report** out) {
    if (!family || !out) return REDOP_ERR_ARGUMENT;
    return guarded(nullptr, 0, [&] {
        *out = wrap_report(report_confluence(family->family));
        return REDOP_OK;
    });
}

redop_status redop_syzygies(const redop_family* family, redop_report** out) {
    if (!family || !out) return REDOP_ERR_ARGUMENT;
    return guarded(nullptr, 0, [&] {
        *out = wrap_report(report_syzygies(family->family));
        return REDOP_OK;
    });
}

redop_status redop_completion(const redop_family* family, redop_report** out) {
    if (!family || !out) return REDOP_ERR_ARGUMENT;
    return guarded(nullptr, 0, [&] {
        *out = wrap_report(report_completion(family->family));
        return REDOP_OK;
    });
}

redop_status redop_groebner(const char* system_text, const char* variables_csv,
                            int degree_bound, redop_report** out, char* err,
                            size_t err_cap) {
    if (!system_text || !variables_csv || !out) return REDOP_ERR_ARGUMENT;
    *out = nullptr;
    return guarded(err, err_cap, [&] {
        std::vector<std::string> variables;
        std::string current;
        for (const char* p = variables_csv;; ++p) {
            if (*p == ',' || *p == '\0') {
                if (!current.empty()) variables.push_back(current);
                current.clear();
                if (*p == '\0') break;
            } else if (*p != ' ') {
                current += *p;
            }
        }
        if (variables.empty())
            throw DocumentError("variables", "no variables declared");
        const auto polys = parse_polynomial_system(system_text, variables);
        *out = wrap_report(report_groebner(variables, degree_bound, polys));
        return REDOP_OK;
    });
}

const char* redop_report_json(const redop_report* report) {
    return report ? report->json.c_str() : nullptr;
}

const char* redop_report_text(const redop_report* report) {
    return report ? report->text.c_str() : nullptr;
}

int redop_report_exit_code(const redop_report* report) {
    return report ? report->exit_code : -1;
}

void redop_report_free(redop_report* report) { delete report; }

void redop_text_free(char* text) { delete[] text; }

}  // extern "C"
