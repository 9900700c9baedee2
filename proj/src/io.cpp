#include "ctw/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace ctw::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return field<T>(j, key);
}

int to_int(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InputError("not an integer: \"" + std::string(text) + "\"");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::string pairs_text(const std::vector<Edge>& q) {
  return json(q).dump();
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const IdentityInstance& inst) {
  json j;
  j["theorem"] = theorem_name(inst.theorem);
  j["n"] = inst.n;
  j["a"] = inst.a;
  j["Q"] = inst.q;
  if (!inst.sigma.empty()) j["sigma"] = inst.sigma;
  return j;
}

std::vector<Edge> pairs_from_json(const json& j) {
  if (!j.is_array()) throw InputError("Q must be an array of [i, j] pairs");
  std::vector<Edge> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw InputError("Q entry " + p.dump() + " is not an [i, j] pair");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

IdentityInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const auto name = field<std::string>(j, "theorem");
  const auto theorem = parse_theorem(name);
  if (!theorem) throw InputError("unknown theorem \"" + name + "\"");
  auto a = optional_field<std::vector<int>>(j, "a", {});
  std::vector<Edge> q;
  if (j.contains("Q") && !j.at("Q").is_null()) q = pairs_from_json(j.at("Q"));
  auto sigma = optional_field<Permutation>(j, "sigma", {});
  std::optional<int> n;
  if (j.contains("n") && !j.at("n").is_null()) n = field<int>(j, "n");
  if (*theorem == Theorem::Dixon && !n) throw InputError("DIXON needs \"n\"");
  if (*theorem != Theorem::Dixon && !j.contains("a")) throw InputError("missing field \"a\"");
  return IdentityInstance::make(*theorem, std::move(a), std::move(q), std::move(sigma), n);
}

std::vector<IdentityInstance> instances_from_text(std::string_view text) {
  std::vector<IdentityInstance> out;
  const std::string_view body = trim(text);
  if (body.empty()) throw InputError("no instances given");
  if (body.front() == '[') {
    const json arr = parse_json(body);
    for (const auto& item : arr) out.push_back(instance_from_json(item));
    if (out.empty()) throw InputError("empty instance list");
    return out;
  }
  try {
    out.push_back(instance_from_json(json::parse(body)));
    return out;
  } catch (const json::parse_error&) {
  }
  std::istringstream lines{std::string(body)};
  for (std::string line; std::getline(lines, line);) {
    if (trim(line).empty()) continue;
    out.push_back(instance_from_json(parse_json(line)));
  }
  return out;
}

json to_json(const QRat& r) { return {{"num", r.num().str()}, {"den", r.den().str()}}; }

json to_json(const VerificationReport& r) {
  json j;
  j["instance"] = to_json(r.instance);
  j["lhs_ct"] = r.verdict == Verdict::Skipped && r.lhs_ct.is_zero() ? json(nullptr) : json(r.lhs_ct.str());
  j["rhs"] = to_json(r.rhs);
  j["verdict"] = verdict_name(r.verdict);
  j["reason"] = r.reason;
  j["timing_ms"] = r.timing_ms;
  j["transitive"] = r.transitive;
  j["sigma"] = r.sigma ? json(*r.sigma) : json(nullptr);
  return j;
}

json to_json(const SweepSummary& s) {
  return {{"summary",
           {{"total", s.total},
            {"match", s.match},
            {"mismatch", s.mismatch},
            {"skipped", s.skipped},
            {"elapsed_ms", s.elapsed_ms}}}};
}

json to_json(const ProductSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors) {
    if (const auto* m = std::get_if<MonomialFactor>(&f)) {
      factors.push_back({{"type", "monomial"}, {"sign", m->sign}, {"exps", m->exps}, {"qshift", m->qshift}});
    } else {
      const auto& p = std::get<PochhammerFactor>(f);
      factors.push_back(
          {{"type", "pochhammer"}, {"i", p.i}, {"j", p.j}, {"qshift", p.qshift}, {"order", p.order}});
    }
  }
  return {{"nvars", spec.nvars}, {"factors", factors}};
}

ProductSpec product_spec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("product spec must be a JSON object");
  ProductSpec spec;
  spec.nvars = field<int>(j, "nvars");
  const json factors = optional_field<json>(j, "factors", json::array());
  if (!factors.is_array()) throw InputError("\"factors\" must be an array");
  for (const auto& f : factors) {
    const auto type = field<std::string>(f, "type");
    if (type == "monomial") {
      spec.monomial(field<Exponents>(f, "exps"), optional_field<int>(f, "sign", 1), optional_field<int>(f, "qshift", 0));
    } else if (type == "pochhammer") {
      spec.pochhammer(field<int>(f, "i"), field<int>(f, "j"), optional_field<int>(f, "qshift", 0),
                      field<int>(f, "order"));
    } else {
      throw InputError("unknown factor type \"" + type + "\"");
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return spec;
}

json to_json(const LaurentPoly& f) {
  json out = json::array();
  for (const auto& [exps, c] : f.terms()) out.push_back(json::array({exps, c.str()}));
  return out;
}

json to_json(const QSet& q) { return {{"n", q.n}, {"Q", q.pairs}}; }

json to_json(const Tournament& t) { return {{"n", t.n()}, {"edges", t.edges()}}; }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(to_int(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<int, int> parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(trim(text.substr(0, dots)));
  const int hi = to_int(trim(text.substr(dots + 2)));
  if (hi < lo) throw InputError("empty range \"" + std::string(text) + "\"");
  return {lo, hi};
}

std::string tsv_header() { return "theorem\tn\ta\tQ\tsigma\tverdict\tlhs_ct\trhs_num\trhs_den\ttransitive\ttiming_ms\treason"; }

std::string to_tsv(const VerificationReport& r) {
  std::ostringstream out;
  const auto& inst = r.instance;
  out << theorem_name(inst.theorem) << '\t' << inst.n << '\t' << join(inst.a, ',') << '\t' << pairs_text(inst.q)
      << '\t' << join(r.sigma.value_or(Permutation{}), ',') << '\t' << verdict_name(r.verdict) << '\t'
      << r.lhs_ct.str() << '\t' << r.rhs.num().str() << '\t' << r.rhs.den().str() << '\t'
      << (r.transitive ? "true" : "false") << '\t' << std::fixed << std::setprecision(3) << r.timing_ms << '\t'
      << r.reason;
  return out.str();
}

std::string to_pretty(const VerificationReport& r) {
  std::ostringstream out;
  const auto& inst = r.instance;
  out << verdict_name(r.verdict) << "  " << theorem_name(inst.theorem) << " n=" << inst.n;
  if (!inst.a.empty()) out << " a=(" << join(inst.a, ',') << ")";
  if (!inst.q.empty()) out << " Q=" << pairs_text(inst.q);
  if (r.sigma) out << " sigma=(" << join(*r.sigma, ',') << ")";
  if (!r.transitive) out << " [nontransitive]";
  out << "\n  CT  = " << r.lhs_ct.str() << "\n  RHS = " << r.rhs.str();
  if (!r.reason.empty()) out << "\n  " << r.reason;
  return out.str();
}

std::string to_pretty(const SweepSummary& s) {
  std::ostringstream out;
  out << s.total << " instances: " << s.match << " match, " << s.mismatch << " mismatch, " << s.skipped
      << " skipped (" << std::fixed << std::setprecision(1) << s.elapsed_ms << " ms)";
  return out.str();
}

}  // namespace ctw::io
