#include "selmer3/report.hpp"

namespace selmer3::report {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json members(const std::vector<SMember>& S) {
  json arr = json::array();
  for (const auto& m : S) arr.push_back({{"prime", m.q.label()}, {"provenance", provenance_name(m.tag)}});
  return arr;
}

Provenance provenance_from(const std::string& s) {
  if (s == "main") return Provenance::Main;
  if (s == "t2") return Provenance::T2;
  if (s == "t3") return Provenance::T3;
  throw ParseError("unknown provenance '" + s + "'");
}

std::vector<SMember> members_from(const json& arr) {
  std::vector<SMember> out;
  for (const auto& e : arr)
    out.push_back({eisenstein::parse_label(e.at("prime").get<std::string>()),
                   provenance_from(e.at("provenance").get<std::string>())});
  return out;
}

json bounds(const Bounds& b) { return {{"lower", b.lower}, {"upper", opt(b.upper)}}; }

Bounds bounds_from(const json& j) { return {j.at("lower").get<i64>(), get_opt<i64>(j, "upper")}; }

}  // namespace

json to_json(const SelmerReport& r) {
  const auto& p = r.params;
  json j;
  j["params"] = {{"a", p.a},
                 {"b", p.b},
                 {"d", p.d},
                 {"disc", p.disc.str()},
                 {"normalized", p.normalized},
                 {"input_a", p.input_a},
                 {"input_b", p.input_b},
                 {"scale", p.scale}};
  j["a_square_in_K"] = r.a_square_in_K;
  j["ssets"] = {{"S1", members(r.ssets.S1)}, {"S2", members(r.ssets.S2)}, {"S3", members(r.ssets.S3)}};
  j["h12"] = opt(r.h12);
  j["h13"] = opt(r.h13);
  j["sL12"] = opt(r.sL12);
  j["sL13"] = opt(r.sL13);
  j["psi"] = bounds(r.psi);
  j["psihat"] = bounds(r.psihat);
  j["sel3"] = bounds(r.sel3);
  j["psi_lower"] = r.psi.lower;
  j["psi_upper"] = opt(r.psi.upper);
  j["psihat_lower"] = r.psihat.lower;
  j["psihat_upper"] = opt(r.psihat.upper);
  j["sel3_lower"] = r.sel3.lower;
  j["sel3_upper"] = opt(r.sel3.upper);
  j["sl_psi"] = r.psi.lower;
  j["su_psi"] = opt(r.psi.upper);
  j["sl3"] = r.sel3.lower;
  j["su3"] = opt(r.sel3.upper);
  j["sel3_upper_loose"] = opt(r.sel3_upper_loose);
  j["root_number"] = opt(r.root_number);
  j["rank_input"] = r.rank_input ? json{{"lo", r.rank_input->lo}, {"hi", r.rank_input->hi}} : json(nullptr);
  j["theorem_trace"] = r.theorem_trace;
  j["notes"] = r.notes;
  return j;
}

SelmerReport from_json(const json& j) {
  try {
    SelmerReport r;
    const auto& p = j.at("params");
    r.params.a = p.at("a").get<i64>();
    r.params.b = p.at("b").get<i64>();
    r.params.d = p.at("d").get<i64>();
    r.params.disc = BigInt(p.at("disc").get<std::string>());
    r.params.normalized = p.at("normalized").get<bool>();
    r.params.input_a = p.at("input_a").get<i64>();
    r.params.input_b = p.at("input_b").get<i64>();
    r.params.scale = p.at("scale").get<i64>();
    r.a_square_in_K = j.at("a_square_in_K").get<bool>();
    const auto& s = j.at("ssets");
    r.ssets.S1 = members_from(s.at("S1"));
    r.ssets.S2 = members_from(s.at("S2"));
    r.ssets.S3 = members_from(s.at("S3"));
    r.h12 = get_opt<int>(j, "h12");
    r.h13 = get_opt<int>(j, "h13");
    r.sL12 = get_opt<int>(j, "sL12");
    r.sL13 = get_opt<int>(j, "sL13");
    r.psi = bounds_from(j.at("psi"));
    r.psihat = bounds_from(j.at("psihat"));
    r.sel3 = bounds_from(j.at("sel3"));
    r.sel3_upper_loose = get_opt<i64>(j, "sel3_upper_loose");
    r.root_number = get_opt<int>(j, "root_number");
    if (j.contains("rank_input") && !j.at("rank_input").is_null())
      r.rank_input = RankInterval{j.at("rank_input").at("lo").get<i64>(), j.at("rank_input").at("hi").get<i64>()};
    r.theorem_trace = j.at("theorem_trace").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

json to_json(const FamilyMember& m) {
  json j{{"a", m.a}, {"b", m.b}};
  if (!m.primes.empty()) j["primes"] = m.primes;
  if (m.a_prime) j["a_prime"] = *m.a_prime;
  if (m.ell) j["ell"] = *m.ell;
  if (!m.j_invariant.empty()) j["j_invariant"] = m.j_invariant;
  if (m.psi_lower) j["psi_lower"] = *m.psi_lower;
  json claims = json::array();
  for (const auto& c : m.verified_claims) claims.push_back({{"claim", c.name}, {"holds", c.holds}});
  j["verified_claims"] = claims;
  return j;
}

json to_json(const DensityResult& d) {
  return {{"xmax", d.xmax},
          {"eligible_count", d.eligible_count},
          {"predicted_count", d.predicted_count},
          {"eligible_ratio_to_prediction",
           d.predicted_count > 0 ? static_cast<double>(d.eligible_count) / d.predicted_count : 0.0},
          {"squarefree_count", d.squarefree_count},
          {"h3_zero_count", d.h3_zero_count},
          {"sel3_rank1_fraction", d.sel3_rank1_fraction},
          {"rank1_share_all_n", d.rank1_share_all_n},
          {"rank1_share_squarefree", d.rank1_share_squarefree},
          {"residue_classes_mod_372", d.residues_mod_372.size()}};
}

json to_json(const formclass::ClassGroup& G) {
  json gens = json::array();
  for (const auto& f : G.generators()) gens.push_back({f.a, f.b, f.c});
  return {{"disc", G.disc()},
          {"order", G.order()},
          {"divisors", G.elementary_divisors()},
          {"generators", gens},
          {"three_rank", G.three_rank()},
          {"narrow", G.disc() > 0}};
}

}  // namespace selmer3::report
