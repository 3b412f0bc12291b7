#include "report.hpp"

#include <ostream>

#include "schurlc/laurent.hpp"

namespace schurlc::cli {

json integer_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

json witness_json(const Witness& w) {
  json out;
  if (const auto* p = std::get_if<Partition>(&w.index))
    out["index"] = to_string(*p);
  else
    out["index"] = std::get<int>(w.index);
  out["coefficient"] = integer_json(w.coefficient);
  return out;
}

std::string witness_text(const Witness& w) {
  const std::string index =
      std::holds_alternative<Partition>(w.index)
          ? to_string(std::get<Partition>(w.index))
          : std::to_string(std::get<int>(w.index));
  return index + " coefficient " + to_string(w.coefficient);
}

std::string certificate_text(const Certificate& c) {
  return std::visit([](const auto& x) { return to_string(x); }, c);
}

json report_json(const std::string& command, const json& params,
                 const CheckReport& report, bool verbose) {
  json out;
  out["command"] = command;
  out["params"] = params;
  out["verdict"] = to_string(report.verdict);
  out["i_max"] = report.i_max;
  out["pairs"] = json::array();
  for (const auto& p : report.pairs) {
    json pair{{"n", p.n}, {"i", p.i}};
    if (p.witness) pair["witness"] = witness_json(*p.witness);
    if (!p.note.empty()) pair["note"] = p.note;
    if (verbose) pair["certificate"] = certificate_text(p.certificate);
    out["pairs"].push_back(std::move(pair));
  }
  if (const PairRecord* f = report.first_failure()) {
    json w{{"n", f->n}, {"i", f->i}};
    if (f->witness) w.update(witness_json(*f->witness));
    if (!f->note.empty()) w["note"] = f->note;
    out["witness"] = std::move(w);
    if (verbose) out["certificate"] = certificate_text(f->certificate);
  }
  return out;
}

void print_report(std::ostream& out, const CheckReport& report, bool verbose) {
  for (const auto& p : report.pairs) {
    out << "n=" << p.n << " i=" << p.i;
    if (p.witness)
      out << " fails witness " << witness_text(*p.witness);
    else if (!p.note.empty())
      out << " fails " << p.note;
    else
      out << " ok";
    out << '\n';
    if (verbose) out << "  " << certificate_text(p.certificate) << '\n';
  }
  out << "verdict: " << to_string(report.verdict) << " (i_max " << report.i_max
      << ")\n";
}

std::string family_text(const FamilySpec& spec) {
  return "lambda=" + to_string(spec.lambda) + " beta=" + to_string(spec.beta) +
         " alpha=" + vector_to_string(spec.alpha);
}

json family_json(const FamilySpec& spec) {
  return json{{"lambda", to_string(spec.lambda)},
              {"beta", to_string(spec.beta)},
              {"alpha", vector_to_string(spec.alpha)},
              {"terms", spec.max_terms}};
}

}  // namespace schurlc::cli
