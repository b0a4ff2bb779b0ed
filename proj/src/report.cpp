#include "charlab/report.hpp"

namespace charlab {

namespace {

Json head(const CharacterSpec& spec) {
  Json j;
  j["family"] = std::string(to_string(spec.family()));
  j["shape"] = to_string(spec.shape());
  return j;
}

}  // namespace

Json eval_json(const CharacterSpec& spec, const std::vector<Rational>& point, const Rational& value) {
  Json j = head(spec);
  j["point"] = Json::array();
  for (const auto& p : point) j["point"].push_back(to_string(p));
  j["value"] = to_string(value);
  return j;
}

Json eval_json(const CharacterSpec& spec, bool negate, const Integer& value) {
  Json j = head(spec);
  j["specialization"] = negate ? "principal-negated" : "principal";
  j["value"] = to_string(value);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["params"] = Json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["mode"] = std::string(to_string(r.mode));
  j["trials"] = std::to_string(r.trials);
  j["seed"] = std::to_string(r.seed);
  j["verdict"] = r.equal() ? "equal" : "counterexample";
  if (r.counterexample) {
    Json ce;
    ce["point"] = Json::array();
    for (const auto& p : r.counterexample->point) ce["point"].push_back(to_string(p));
    ce["lhs"] = r.counterexample->lhs;
    ce["rhs"] = r.counterexample->rhs;
    j["counterexample"] = std::move(ce);
  }
  if (r.note) j["note"] = *r.note;
  return j;
}

Json to_json(const CountReport& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  Json params;
  if (r.family == CountFamily::pp) {
    params["height"] = std::to_string(r.height);
    params["b"] = std::to_string(r.rows);
    params["c"] = std::to_string(r.cols);
  } else {
    params["m"] = std::to_string(r.height / 2);
    params["n"] = std::to_string(r.rows);
  }
  j["params"] = std::move(params);
  j["methods"] = Json::object();
  for (const auto& [method, v] : r.methods) j["methods"][std::string(to_string(method))] = v ? to_string(*v) : "skipped";
  j["consistent"] = r.consistent();
  return j;
}

}  // namespace charlab
