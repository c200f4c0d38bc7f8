#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "logder/error.hpp"
#include "logder/linalg.hpp"
#include "logder/theorems.hpp"

namespace logder {

namespace {

using nlohmann::json;

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string form_string(const RationalVector& v) { return Hyperplane(v).to_string(); }

ParseError schema_error(const std::string& what) { return ParseError("certificate: " + what, 1, 1); }

RationalVector vector_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw schema_error(where + " must be an array of rationals");
  RationalVector v;
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      v.push_back(Rational(x.get<long>()));
    } else {
      throw schema_error(where + " entries must be strings or integers");
    }
  }
  return v;
}

Exponents exponents_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw schema_error(where + " must be an array of integers");
  Exponents e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw schema_error(where + " entries must be integers");
    e.push_back(x.get<int>());
  }
  return e;
}

const json& field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw schema_error(where + " lacks \"" + name + "\"");
  return *it;
}

}  // namespace

std::string Certificate::to_text() const {
  std::ostringstream os;
  std::function<void(std::size_t, int)> print = [&](std::size_t idx, int depth) {
    const auto& n = nodes[idx];
    os << std::string(2 * depth, ' ') << n.claim.to_string() << "  [" << n.rule;
    if (n.witness) os << " on " << form_string(*n.witness);
    os << "]  dim " << n.arrangement.dim() << ", " << n.arrangement.size() << " hyperplanes\n";
    for (auto c : n.children) print(c, depth + 1);
  };
  if (!nodes.empty()) print(root, 0);
  return os.str();
}

std::string Certificate::to_json() const {
  json out;
  out["format"] = "logder-certificate";
  out["version"] = 1;
  out["root"] = root;
  json arr = json::array();
  for (const auto& n : nodes) {
    json node;
    node["key"] = n.key;
    node["dimension"] = n.arrangement.dim();
    json forms = json::array();
    for (const auto& h : n.arrangement.hyperplanes()) forms.push_back(vector_json(h.coeffs()));
    node["hyperplanes"] = forms;
    json claim;
    if (n.claim.kind == Claim::Kind::free) {
      claim["kind"] = "free";
      claim["exponents"] = n.claim.exponents;
    } else {
      claim["kind"] = "spog";
      claim["poexp"] = n.claim.exponents;
      claim["level"] = n.claim.level;
    }
    node["claim"] = claim;
    node["rule"] = n.rule;
    node["children"] = n.children;
    if (n.witness) node["witness"] = vector_json(*n.witness);
    arr.push_back(node);
  }
  out["nodes"] = arr;
  return out.dump(2) + "\n";
}

Certificate Certificate::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string("certificate JSON: ") + e.what(), line, column);
  }
  try {
    if (!j.is_object()) throw schema_error("top level must be an object");
    if (j.value("format", std::string()) != "logder-certificate") throw schema_error("unknown format tag");
    Certificate c;
    const json& nodes = field(j, "nodes", "certificate");
    if (!nodes.is_array() || nodes.empty()) throw schema_error("\"nodes\" must be a non-empty array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string where = "node " + std::to_string(i);
      const json& n = nodes[i];
      if (!n.is_object()) throw schema_error(where + " must be an object");
      CertificateNode node;
      node.key = field(n, "key", where).get<std::string>();
      const int dim = field(n, "dimension", where).get<int>();
      if (dim < 1 || dim > 8) throw schema_error(where + " has dimension outside 1..8");
      std::vector<RationalVector> forms;
      for (const auto& h : field(n, "hyperplanes", where)) {
        forms.push_back(vector_from(h, where + " hyperplane"));
        if (static_cast<int>(forms.back().size()) != dim)
          throw schema_error(where + " hyperplane length differs from its dimension");
      }
      node.arrangement = Arrangement::make(dim, forms);
      const json& claim = field(n, "claim", where);
      const std::string kind = field(claim, "kind", where + " claim").get<std::string>();
      if (kind == "free") {
        node.claim = {Claim::Kind::free, exponents_from(field(claim, "exponents", where), where + " exponents"), 0};
      } else if (kind == "spog") {
        node.claim = {Claim::Kind::spog, exponents_from(field(claim, "poexp", where), where + " poexp"),
                      field(claim, "level", where).get<int>()};
      } else {
        throw schema_error(where + " has unknown claim kind \"" + kind + "\"");
      }
      node.rule = field(n, "rule", where).get<std::string>();
      for (const auto& ch : field(n, "children", where)) node.children.push_back(ch.get<std::size_t>());
      if (auto w = n.find("witness"); w != n.end() && !w->is_null())
        node.witness = vector_from(*w, where + " witness");
      c.nodes.push_back(std::move(node));
    }
    c.root = field(j, "root", "certificate").get<std::size_t>();
    if (c.root >= c.nodes.size()) throw schema_error("root index out of range");
    return c;
  } catch (const json::exception& e) {
    throw schema_error(e.what());
  } catch (const ArrangementError& e) {
    throw schema_error(e.what());
  }
}

ReplayResult replay(const Certificate& c) {
  auto fail = [](std::size_t i, const std::string& why) {
    return ReplayResult{false, "node " + std::to_string(i) + ": " + why};
  };
  if (c.nodes.empty() || c.root >= c.nodes.size()) return {false, "empty certificate or bad root"};

  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const auto& n = c.nodes[i];
    const Arrangement& a = n.arrangement;
    if (canonical_form(a) != n.key) return fail(i, "key does not match the arrangement");
    for (auto ch : n.children)
      if (ch >= i) return fail(i, "child " + std::to_string(ch) + " does not precede its parent");
    auto child_free = [&](std::size_t slot) -> const CertificateNode* {
      const auto& ch = c.nodes[n.children[slot]];
      return ch.claim.kind == Claim::Kind::free ? &ch : nullptr;
    };
    const int l = a.dim();
    const int size = static_cast<int>(a.size());

    if (n.rule == "empty" || n.rule == "base-dim<=2" || n.rule == "base-boolean") {
      if (!n.children.empty()) return fail(i, "base rules take no children");
      if (n.claim.kind != Claim::Kind::free) return fail(i, "base rules prove freeness");
      Exponents expected;
      if (n.rule == "empty") {
        if (size != 0) return fail(i, "\"empty\" on a non-empty arrangement");
        expected.assign(l, 0);
      } else if (n.rule == "base-dim<=2") {
        if (l > 2 || size == 0) return fail(i, "\"base-dim<=2\" needs dimension <= 2 and a hyperplane");
        expected = l == 1 ? Exponents{1} : Exponents{std::min(1, size - 1), std::max(1, size - 1)};
      } else {
        RationalMatrix rows;
        for (const auto& h : a.hyperplanes()) rows.push_back(h.coeffs());
        if (size == 0 || static_cast<int>(rank(rows)) != size) return fail(i, "forms are not independent");
        expected.assign(l - size, 0);
        expected.insert(expected.end(), size, 1);
      }
      if (n.claim.exponents != expected) return fail(i, "claimed exponents differ from the base case");
      continue;
    }

    if (!n.witness) return fail(i, "rule \"" + n.rule + "\" needs a witness hyperplane");
    if (static_cast<int>(n.witness->size()) != l) return fail(i, "witness has the wrong length");
    auto k = a.index_of(Hyperplane(*n.witness));
    if (!k) return fail(i, "witness is not a hyperplane of the arrangement");
    const Arrangement res = restrict_to(a, *k).restricted;

    if (n.rule == "division") {
      if (n.children.size() != 1) return fail(i, "division takes one child");
      const auto* r = child_free(0);
      if (!r) return fail(i, "division child must claim freeness");
      if (r->key != canonical_form(res)) return fail(i, "child is not the restriction to the witness");
      auto exps = division_exponents(characteristic_polynomial(a), characteristic_polynomial(res), r->claim.exponents);
      if (!exps) return fail(i, "chi of the restriction does not divide chi");
      if (n.claim.kind != Claim::Kind::free || n.claim.exponents != *exps)
        return fail(i, "claimed exponents differ from the division theorem");
      continue;
    }

    if (n.rule != "addition" && n.rule != "spog-criterion") return fail(i, "unknown rule \"" + n.rule + "\"");
    if (n.children.size() != 2) return fail(i, n.rule + " takes two children");
    const auto* d = child_free(0);
    const auto* r = child_free(1);
    if (!d || !r) return fail(i, "children must claim freeness");
    if (d->key != canonical_form(deletion(a, *k))) return fail(i, "first child is not the deletion of the witness");
    if (r->key != canonical_form(res)) return fail(i, "second child is not the restriction to the witness");

    if (n.rule == "addition") {
      auto v = addition_check(d->claim.exponents, r->claim.exponents);
      if (v.kind != AdditionVerdict::Kind::free) return fail(i, "restriction exponents do not match the deletion's");
      if (n.claim.kind != Claim::Kind::free || n.claim.exponents != v.exponents)
        return fail(i, "claimed exponents differ from the addition theorem");
      continue;
    }

    std::optional<SpogPrediction> m;
    try {
      m = spog_match(d->claim.exponents, r->claim.exponents, static_cast<std::int64_t>(size - 1),
                     static_cast<std::int64_t>(res.size()));
    } catch (const PreconditionError& e) {
      return fail(i, e.what());
    }
    if (!m) return fail(i, "no pair of deletion exponents predicts the restriction exponents");
    if (n.claim != Claim{Claim::Kind::spog, m->poexp, m->level})
      return fail(i, "claimed POexp or level differs from the prediction");
  }
  return {true, "verified " + std::to_string(c.nodes.size()) + " nodes"};
}

}  // namespace logder
