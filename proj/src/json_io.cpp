#include <pbundle/errors.hpp>
#include <pbundle/json_io.hpp>

#include <regex>
#include <set>

namespace pbundle {

namespace {

const Integer kTwo53 = Integer(1) << 53;

[[noreturn]] void bad(const std::string& msg) { throw InvalidInput(msg); }

void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) bad(what + " must be a JSON object");
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) bad(what + ": unknown key '" + k + "'");
  }
}

void check_schema_version(const Json& j, const std::string& what) {
  if (!j.contains("schema_version")) bad(what + ": missing schema_version");
  const Integer v = integer_from_json(j.at("schema_version"), "schema_version");
  if (v != kSchemaVersion) bad(what + ": unsupported schema_version " + v.get_str());
}

int small_int(const Json& j, const std::string& what) {
  const Integer v = integer_from_json(j, what);
  if (!v.fits_sint_p()) bad(what + " is out of range");
  return static_cast<int>(v.get_si());
}

long long long_int(const Json& j, const std::string& what) {
  const Integer v = integer_from_json(j, what);
  if (!v.fits_slong_p()) bad(what + " is out of range");
  return v.get_si();
}

bool boolean(const Json& j, const std::string& what) {
  if (!j.is_boolean()) bad(what + " must be true or false");
  return j.get<bool>();
}

IntRange range_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) bad(what + " must be a [lo, hi] pair");
  return {long_int(j[0], what + ".lo"), long_int(j[1], what + ".hi")};
}

Json range_to_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

}  // namespace

Json integer_to_json(const Integer& x) {
  if (abs(x) <= kTwo53) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, digits)) bad(what + ": '" + s + "' is not a decimal integer");
    return Integer(s);
  }
  bad(what + " must be an integer or a decimal string");
}

Json to_json(const ChernData& c) {
  Json arr = Json::array();
  for (const auto& x : c.c()) arr.push_back(integer_to_json(x));
  return arr;
}

Json to_json(const SetupParams& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = p.n;
  j["r"] = p.r;
  j["m"] = p.m;
  j["d"] = integer_to_json(p.d);
  j["a"] = integer_to_json(p.a);
  j["b"] = integer_to_json(p.b);
  j["tau"] = integer_to_json(p.tau);
  j["alpha"] = integer_to_json(p.alpha);
  if (p.deg_w) j["deg_w"] = integer_to_json(*p.deg_w);
  j["chern"] = to_json(p.chern);
  j["flags"] = {{"y_is_projective_space", p.flags.y_is_projective_space},
                {"w_nonlinear", p.flags.w_nonlinear},
                {"e_nonample", p.flags.e_nonample}};
  return j;
}

SetupParams params_from_json(const Json& j) {
  require_object(j, "params");
  reject_unknown(j, {"schema_version", "n", "r", "m", "d", "a", "b", "tau", "alpha", "deg_w", "chern", "flags"}, "params");
  check_schema_version(j, "params");
  for (const char* key : {"n", "r", "m", "d", "a", "b", "tau", "alpha", "chern"}) {
    if (!j.contains(key)) bad(std::string("params: missing '") + key + "'");
  }
  SetupParams p;
  p.n = small_int(j.at("n"), "n");
  p.r = small_int(j.at("r"), "r");
  p.m = small_int(j.at("m"), "m");
  p.d = integer_from_json(j.at("d"), "d");
  p.a = integer_from_json(j.at("a"), "a");
  p.b = integer_from_json(j.at("b"), "b");
  p.tau = integer_from_json(j.at("tau"), "tau");
  p.alpha = integer_from_json(j.at("alpha"), "alpha");
  if (j.contains("deg_w") && !j.at("deg_w").is_null()) p.deg_w = integer_from_json(j.at("deg_w"), "deg_w");
  const Json& cj = j.at("chern");
  if (!cj.is_array()) bad("chern must be an array");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < cj.size(); ++i) c.push_back(integer_from_json(cj[i], "chern[" + std::to_string(i) + "]"));
  if (p.r < 1) bad("r must be at least 1");
  p.chern = ChernData(p.n, p.r + 1, std::move(c));
  p.flags.e_nonample = p.a == 1 && p.b == 0;
  if (j.contains("flags")) {
    const Json& f = j.at("flags");
    require_object(f, "flags");
    reject_unknown(f, {"y_is_projective_space", "w_nonlinear", "e_nonample"}, "flags");
    if (f.contains("y_is_projective_space")) p.flags.y_is_projective_space = boolean(f.at("y_is_projective_space"), "y_is_projective_space");
    if (f.contains("w_nonlinear")) p.flags.w_nonlinear = boolean(f.at("w_nonlinear"), "w_nonlinear");
    if (f.contains("e_nonample")) p.flags.e_nonample = boolean(f.at("e_nonample"), "e_nonample");
  }
  p.validate();
  return p;
}

Json to_json(const ConstraintReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries()) entries.push_back({{"id", e.id}, {"status", std::string(to_string(e.status))}, {"witness", e.witness}});
  return {{"all_pass", r.all_pass()}, {"entries", entries}, {"failures", r.failures()}};
}

Json to_json(const CaseReplayResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps()) {
    steps.push_back({{"description", s.description},
                     {"computed", s.computed},
                     {"expected", s.expected},
                     {"match", s.match},
                     {"informational", s.informational}});
  }
  return {{"case_id", r.case_id()},
          {"verdict", std::string(to_string(r.verdict()))},
          {"all_match", r.all_match()},
          {"steps", steps},
          {"survivors", r.survivors()}};
}

Json to_json(const ExampleRecord& rec) {
  Json j;
  j["example_id"] = rec.example_id;
  j["part"] = rec.part;
  j["k"] = rec.k ? Json(*rec.k) : Json(nullptr);
  j["key"] = rec.key;
  j["y_description"] = rec.y_description;
  j["w_description"] = rec.w_description;
  j["bundle"] = rec.bundle.to_string();
  j["bundle_rank"] = rec.bundle.rank(rec.params.n);
  j["params"] = to_json(rec.params);
  j["notes"] = rec.notes;
  return j;
}

Json to_json(const EnumerationQuery& q) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = range_to_json(q.n);
  j["r"] = range_to_json(q.r);
  j["d"] = range_to_json(q.d);
  if (q.alpha) j["alpha"] = range_to_json(*q.alpha);
  if (q.tau) j["tau"] = range_to_json(*q.tau);
  if (q.m) j["m"] = range_to_json(*q.m);
  if (q.a) j["a"] = range_to_json(*q.a);
  j["nonample_only"] = q.nonample_only;
  j["y_is_projective_space"] = q.y_is_projective_space;
  j["w_nonlinear"] = q.w_nonlinear;
  j["hartshorne"] = q.hartshorne;
  j["cited_bounds"] = q.cited_bounds;
  j["c1_at_least_6"] = q.c1_at_least_6;
  if (q.constraints) j["constraints"] = *q.constraints;
  j["budget"] = q.budget;
  j["segre_bound"] = q.segre_bound;
  j["witness_budget"] = q.witness_budget;
  j["residue_budget"] = q.residue_budget;
  j["threads"] = q.threads;
  return j;
}

EnumerationQuery query_from_json(const Json& j) {
  require_object(j, "enumeration config");
  reject_unknown(j,
                 {"schema_version", "n", "r", "d", "alpha", "tau", "m", "a", "nonample_only", "y_is_projective_space", "w_nonlinear",
                  "hartshorne", "cited_bounds", "c1_at_least_6", "constraints", "budget", "segre_bound", "witness_budget",
                  "residue_budget", "threads"},
                 "enumeration config");
  check_schema_version(j, "enumeration config");
  EnumerationQuery q;
  if (j.contains("n")) q.n = range_from_json(j.at("n"), "n");
  if (j.contains("r")) q.r = range_from_json(j.at("r"), "r");
  if (j.contains("d")) q.d = range_from_json(j.at("d"), "d");
  if (j.contains("alpha")) q.alpha = range_from_json(j.at("alpha"), "alpha");
  if (j.contains("tau")) q.tau = range_from_json(j.at("tau"), "tau");
  if (j.contains("m")) q.m = range_from_json(j.at("m"), "m");
  if (j.contains("a")) q.a = range_from_json(j.at("a"), "a");
  if (j.contains("nonample_only")) q.nonample_only = boolean(j.at("nonample_only"), "nonample_only");
  if (j.contains("y_is_projective_space")) q.y_is_projective_space = boolean(j.at("y_is_projective_space"), "y_is_projective_space");
  if (j.contains("w_nonlinear")) q.w_nonlinear = boolean(j.at("w_nonlinear"), "w_nonlinear");
  if (j.contains("hartshorne")) q.hartshorne = boolean(j.at("hartshorne"), "hartshorne");
  if (j.contains("cited_bounds")) q.cited_bounds = boolean(j.at("cited_bounds"), "cited_bounds");
  if (j.contains("c1_at_least_6")) q.c1_at_least_6 = boolean(j.at("c1_at_least_6"), "c1_at_least_6");
  if (j.contains("constraints")) {
    const Json& c = j.at("constraints");
    if (!c.is_array()) bad("constraints must be an array of ids");
    std::vector<std::string> ids;
    for (const auto& x : c) {
      if (!x.is_string()) bad("constraints must be an array of ids");
      ids.push_back(x.get<std::string>());
    }
    q.constraints = std::move(ids);
  }
  if (j.contains("budget")) q.budget = long_int(j.at("budget"), "budget");
  if (j.contains("segre_bound")) q.segre_bound = small_int(j.at("segre_bound"), "segre_bound");
  if (j.contains("witness_budget")) q.witness_budget = long_int(j.at("witness_budget"), "witness_budget");
  if (j.contains("residue_budget")) q.residue_budget = long_int(j.at("residue_budget"), "residue_budget");
  if (j.contains("threads")) q.threads = small_int(j.at("threads"), "threads");
  q.validate();
  return q;
}

Json to_json(const Survivor& s) {
  return {{"key", signature_key(s.params)},
          {"params", to_json(s.params)},
          {"report", to_json(s.report)},
          {"status", std::string(to_string(s.status))},
          {"tags", s.tags}};
}

Json to_json(const EnumerationResult& r) {
  Json survivors = Json::array();
  for (const auto& s : r.survivors) survivors.push_back(to_json(s));
  Json elim = Json::object();
  for (const auto& [k, v] : r.eliminated) elim[k] = v;
  return {{"survivors", survivors},
          {"survivor_count", r.survivors.size()},
          {"tuples_examined", r.tuples_examined},
          {"eliminated", elim}};
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(source + ": malformed JSON (" + e.what() + ")");
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pbundle
