#include "logder/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "logder/error.hpp"

namespace logder {

namespace {

using nlohmann::ordered_json;

std::string show(const std::optional<Exponents>& e) { return e ? format_exponents(*e) : "not free"; }

std::string addition_string(const AdditionVerdict& v) {
  switch (v.kind) {
    case AdditionVerdict::Kind::free: return "free " + format_exponents(v.exponents);
    case AdditionVerdict::Kind::restriction_not_matching: return "restriction not matching";
    case AdditionVerdict::Kind::insufficient_data: return "insufficient data";
  }
  return "";
}

std::string multiset(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

ordered_json optional_exps(const std::optional<Exponents>& e) { return e ? ordered_json(*e) : ordered_json(nullptr); }

void cross_check(const Report& r, const HyperplaneReport& h) {
  const std::string at = "H = " + h.form;
  if (h.addition.kind == AdditionVerdict::Kind::free && h.addition.exponents != r.exponents.value_or(Exponents{}))
    throw FalsificationError("addition theorem", at + ": exponents predict free " +
                                                     format_exponents(h.addition.exponents) + ", computed " +
                                                     show(r.exponents));
  if (h.addition.kind == AdditionVerdict::Kind::restriction_not_matching && r.exponents)
    throw FalsificationError("addition theorem",
                             at + ": exponents do not match but A is free " + format_exponents(*r.exponents));
  if (h.division.holds && h.division.exponents != r.exponents.value_or(Exponents{}))
    throw FalsificationError("division theorem", at + ": predicts " + format_exponents(h.division.exponents) +
                                                     ", computed " + show(r.exponents));
  if (h.criterion && (!r.spog || r.spog->poexp != h.criterion->poexp || r.spog->level != h.criterion->level))
    throw FalsificationError("SPOG criterion", at + ": predicts " +
                                                   Claim{Claim::Kind::spog, h.criterion->poexp, h.criterion->level}
                                                       .to_string() +
                                                   " but D(A) disagrees");
}

}  // namespace

Report analyze(const Arrangement& a, std::optional<std::size_t> distinguished, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.arrangement = a;
  r.distinguished = distinguished;
  r.chi = characteristic_polynomial(a);
  const Presentation p = derivation_module(a);
  r.exponents = is_free(p, a);
  r.spog = p.spog();
  r.betti = betti(p);
  r.g = p.g();
  if (r.exponents && r.chi != CharPoly::from_roots({r.exponents->begin(), r.exponents->end()}))
    throw FalsificationError("factorization of chi",
                             "chi = " + r.chi.to_string() + " but exp = " + format_exponents(*r.exponents));

  for (std::size_t k = 0; k < a.size(); ++k) {
    HyperplaneReport h;
    h.index = k;
    h.form = a[k].to_string();
    const Arrangement del = deletion(a, k);
    const RestrictionData rd = restrict_to(a, k);
    h.restriction_size = rd.restricted.size();
    h.deletion_exponents = is_free(del);
    h.restriction_exponents = is_free(rd.restricted);
    h.addition = addition_check(h.deletion_exponents, h.restriction_exponents);
    if (h.restriction_exponents) {
      auto e = division_exponents(r.chi, characteristic_polynomial(rd.restricted), *h.restriction_exponents);
      if (e) h.division = {true, *e};
    }
    if (!h.deletion_exponents || !h.restriction_exponents) {
      h.criterion_status = "insufficient data";
    } else {
      h.criterion = spog_match(*h.deletion_exponents, *h.restriction_exponents, static_cast<std::int64_t>(del.size()),
                               static_cast<std::int64_t>(rd.restricted.size()));
      h.criterion_status = h.criterion ? "applies" : "not applicable";
    }
    cross_check(r, h);
    r.hyperplanes.push_back(std::move(h));
  }

  if (options.dump_derivations) {
    for (const auto& d : p.generators) r.generators.push_back(d.to_string());
    for (const auto& rel : p.relations) r.relations.push_back(rel.to_string());
  }
  for (int d = 0; d <= options.degree_scan; ++d) {
    DegreeScanRow row{d, p.hilbert_function(d), graded_slice_oracle(a, d)};
    if (row.presentation != row.oracle)
      throw FalsificationError("oracle agreement", "degree " + std::to_string(d) + ": presentation " +
                                                       std::to_string(row.presentation) + ", oracle " +
                                                       std::to_string(row.oracle));
    r.degree_scan.push_back(row);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_text(const Report& r, bool timing) {
  std::ostringstream os;
  const Arrangement& a = r.arrangement;
  os << "arrangement: l = " << a.dim() << ", n = " << a.size() << "\n";
  for (std::size_t k = 0; k < a.size(); ++k)
    os << "  H" << k << ": " << a[k].to_string() << (r.distinguished == k ? "   (distinguished)" : "") << "\n";
  os << "chi(t) = " << r.chi.to_string();
  if (r.chi.integer_roots()) os << " = " << r.chi.expanded();
  os << "\n";
  os << "free: " << (r.exponents ? "yes, exp = " + format_exponents(*r.exponents) : std::string("no")) << "\n";
  os << "SPOG: "
     << (r.spog ? "yes, POexp = " + format_exponents(r.spog->poexp) + ", level " + std::to_string(r.spog->level)
                : std::string("no"))
     << "\n";
  os << "g(A) = " << r.g << "\n";
  os << "D(A): generators " << multiset(r.betti.d.generators) << ", relations " << multiset(r.betti.d.relations)
     << "\n";
  if (r.betti.d0)
    os << "D0(A): generators " << multiset(r.betti.d0->generators) << ", relations "
       << multiset(r.betti.d0->relations) << "\n";
  os << "per hyperplane:\n";
  for (const auto& h : r.hyperplanes) {
    os << "  H" << h.index << " " << h.form << (r.distinguished == h.index ? "  (distinguished)" : "") << "\n";
    os << "    deletion " << show(h.deletion_exponents) << "; restriction " << show(h.restriction_exponents)
       << ", " << h.restriction_size << " hyperplanes\n";
    os << "    addition: " << addition_string(h.addition) << "\n";
    os << "    division: " << (h.division.holds ? "free " + format_exponents(h.division.exponents) : "no") << "\n";
    os << "    SPOG criterion: " << h.criterion_status;
    if (h.criterion)
      os << ", POexp " << format_exponents(h.criterion->poexp) << " level " << h.criterion->level << " (i,j) = ("
         << h.criterion->i << "," << h.criterion->j << ")";
    os << "\n";
  }
  if (!r.generators.empty()) {
    os << "generators:\n";
    for (const auto& g : r.generators) os << "  " << g << "\n";
    os << "relations:\n";
    for (const auto& rel : r.relations) os << "  " << rel << "\n";
  }
  if (!r.degree_scan.empty()) {
    os << "degree scan (presentation = oracle):\n";
    for (const auto& row : r.degree_scan) os << "  d = " << row.degree << ": " << row.presentation << "\n";
  }
  if (timing) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "time: %.3f s\n", r.seconds);
    os << buf;
  }
  return os.str();
}

std::string report_json(const Report& r, bool timing) {
  ordered_json j;
  const Arrangement& a = r.arrangement;
  j["dimension"] = a.dim();
  j["size"] = a.size();
  ordered_json forms = ordered_json::array();
  for (const auto& h : a.hyperplanes()) {
    ordered_json v = ordered_json::array();
    for (const auto& c : h.coeffs()) v.push_back(to_string(c));
    forms.push_back(v);
  }
  j["hyperplanes"] = forms;
  j["distinguished"] = r.distinguished ? ordered_json(*r.distinguished) : ordered_json(nullptr);
  j["chi"] = {{"coefficients", r.chi.coeffs}, {"factored", r.chi.to_string()}, {"expanded", r.chi.expanded()}};
  j["free"] = r.exponents.has_value();
  j["exponents"] = optional_exps(r.exponents);
  j["spog"] = r.spog ? ordered_json{{"poexp", r.spog->poexp}, {"level", r.spog->level}} : ordered_json(nullptr);
  j["g"] = r.g;
  j["betti"] = {{"generators", r.betti.d.generators}, {"relations", r.betti.d.relations}};
  j["betti_d0"] = r.betti.d0 ? ordered_json{{"generators", r.betti.d0->generators},
                                            {"relations", r.betti.d0->relations}}
                             : ordered_json(nullptr);
  ordered_json hs = ordered_json::array();
  for (const auto& h : r.hyperplanes) {
    ordered_json e;
    e["index"] = h.index;
    e["form"] = h.form;
    e["restriction_size"] = h.restriction_size;
    e["deletion_exponents"] = optional_exps(h.deletion_exponents);
    e["restriction_exponents"] = optional_exps(h.restriction_exponents);
    e["addition"] = addition_string(h.addition);
    e["division"] = h.division.holds ? ordered_json(h.division.exponents) : ordered_json(nullptr);
    e["spog_criterion"] = h.criterion_status;
    if (h.criterion)
      e["spog_prediction"] = {{"i", h.criterion->i},
                              {"j", h.criterion->j},
                              {"poexp", h.criterion->poexp},
                              {"level", h.criterion->level}};
    hs.push_back(e);
  }
  j["per_hyperplane"] = hs;
  if (!r.generators.empty() || !r.relations.empty()) {
    j["generators"] = r.generators;
    j["relations"] = r.relations;
  }
  if (!r.degree_scan.empty()) {
    ordered_json scan = ordered_json::array();
    for (const auto& row : r.degree_scan)
      scan.push_back({{"degree", row.degree}, {"presentation", row.presentation}, {"oracle", row.oracle}});
    j["degree_scan"] = scan;
  }
  if (timing) j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

}  // namespace logder
