#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "schurlc/logconcavity.hpp"

namespace schurlc::cli {

using nlohmann::json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& x);
json witness_json(const Witness& w);
std::string witness_text(const Witness& w);
std::string certificate_text(const Certificate& c);

// {command, params, verdict, i_max, pairs[], witness?, certificate?}.
// Certificates appear only when verbose.
json report_json(const std::string& command, const json& params,
                 const CheckReport& report, bool verbose);

// One line per (n, i) pair then `verdict: ...`.
void print_report(std::ostream& out, const CheckReport& report, bool verbose);

std::string family_text(const FamilySpec& spec);
json family_json(const FamilySpec& spec);

}  // namespace schurlc::cli
