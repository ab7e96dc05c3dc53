#include "glauber/json_io.hpp"

#include <cmath>
#include <set>
#include <string>

#include "glauber/errors.hpp"

namespace glauber {

using nlohmann::json;

namespace {

double number(const json& spec, const char* key) {
  if (!spec.contains(key)) throw ModelError(std::string("model is missing \"") + key + "\"");
  const auto& v = spec.at(key);
  if (!v.is_number()) throw ModelError(std::string("model field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& spec, const char* key) {
  if (!spec.contains(key)) throw ModelError(std::string("model is missing \"") + key + "\"");
  const auto& v = spec.at(key);
  if (!v.is_array()) throw ModelError(std::string("model field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ModelError(std::string("model field \"") + key + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void only_keys(const json& spec, std::set<std::string> allowed) {
  allowed.insert("family");
  for (auto it = spec.begin(); it != spec.end(); ++it)
    if (!allowed.count(it.key())) throw ModelError("unexpected model field \"" + it.key() + "\"");
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json separation_json(const Separation& sep) {
  return {{"v1", sep.v1.indices()}, {"k", sep.k.indices()}, {"v2", sep.v2.indices()}};
}

}  // namespace

WeightModel model_from_json(const json& spec) {
  if (!spec.is_object()) throw ModelError("model must be a JSON object");
  if (!spec.contains("family") || !spec.at("family").is_string()) throw ModelError("model needs a \"family\" string");
  const auto name = spec.at("family").get<std::string>();
  if (name == "rc" || name == "r2") {
    only_keys(spec, {"q", "mu"});
    const double q = number(spec, "q"), mu = number(spec, "mu");
    return name == "rc" ? make_rc(q, mu) : make_r2(q, mu);
  }
  if (name == "tutte" || name == "interlace") {
    only_keys(spec, {"x", "y"});
    const double x = number(spec, "x"), y = number(spec, "y");
    return name == "tutte" ? make_tutte(x, y) : make_interlace(x, y);
  }
  if (name == "multi_tutte") {
    only_keys(spec, {"q", "v"});
    return make_multi_tutte(number(spec, "q"), numbers(spec, "v"));
  }
  if (name == "upoly") {
    only_keys(spec, {"y", "x"});
    return make_upoly(number(spec, "y"), numbers(spec, "x"));
  }
  throw ModelError("unknown model family \"" + name + "\"");
}

json to_json(const WeightModel& model) {
  json out{{"family", model.name()}};
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::RandomCluster> || std::is_same_v<T, family::AdjacencyRank>) {
          out["q"] = f.q;
          out["mu"] = f.mu;
        } else if constexpr (std::is_same_v<T, family::Tutte> || std::is_same_v<T, family::Interlace>) {
          out["x"] = f.x;
          out["y"] = f.y;
        } else if constexpr (std::is_same_v<T, family::MultiTutte>) {
          out["q"] = f.q;
          out["v"] = f.v;
        } else {
          out["y"] = f.y;
          out["x"] = f.x;
        }
      },
      model.family());
  return out;
}

json to_json(const Subset& s) { return s.to_hex(); }

json to_json(const Ordering& o) {
  return {{"kind", to_string(o.kind)}, {"order", o.perm}, {"width", o.width}};
}

json to_json(const CongestionReport& r) {
  json out{{"rho", r.rho},
           {"bound", r.bound},
           {"ordering_width", r.ordering_width},
           {"ground_size", r.ground_size},
           {"lambda_hat", r.lambda_hat},
           {"pass", r.pass}};
  if (r.argmax_transition)
    out["argmax_transition"] = {{"from", to_json(r.argmax_transition->from)}, {"to", to_json(r.argmax_transition->to)}};
  else
    out["argmax_transition"] = nullptr;
  return out;
}

json to_json(const LemmaReport& r) {
  return {{"log_max_ratio", finite_or_null(r.log_max_ratio)},
          {"log_bound", r.log_bound},
          {"initial", to_json(r.initial)},
          {"final", to_json(r.final)},
          {"on_path", to_json(r.on_path)},
          {"pass", r.pass}};
}

json to_json(const MultiplicativityReport& r) {
  json out{{"lambda", r.lambda},
           {"lambda_hat", r.lambda_hat},
           {"checked", r.checked},
           {"max_excess", finite_or_null(r.max_excess)},
           {"pass", r.pass}};
  if (r.witness) {
    json w{{"subgraph", to_json(r.witness->subgraph)},
           {"separation", separation_json(r.witness->separation)},
           {"log_ratio", r.witness->log_ratio}};
    w["e1"] = r.witness->e1 ? to_json(*r.witness->e1) : json(nullptr);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const MixingReport& r, bool include_curve) {
  json out{{"tau", r.tau},           {"epsilon", r.epsilon}, {"sinclair_bound", r.sinclair_bound},
           {"pi_min", r.pi_min},     {"rho", r.rho},         {"pass", r.pass}};
  if (include_curve) out["tv_curve"] = r.tv_curve;
  return out;
}

json sample_record(std::size_t step, const Subset& s, double log_weight) {
  return {{"step", step}, {"subset", s.to_hex()}, {"log_weight", log_weight}};
}

}  // namespace glauber
