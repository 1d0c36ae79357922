#include "mono/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>

namespace mono {

namespace {

std::vector<int> parse_signed_tokens(const std::string& text, char prefix,
                                     const char* index_noun) {
  std::vector<int> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == '[' ||
        text[i] == ']') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    int sign = 1;
    bool prefixed = false;
    if (text[i] == prefix || text[i] == static_cast<char>(std::toupper(prefix))) {
      prefixed = true;
      ++i;
    } else if (text[i] == '-' || text[i] == '+') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("expected a generator token", start + 1);
    long v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw parse_error("generator index too large", start + 1);
      ++i;
    }
    long exp = 1;
    if (prefixed && i < n && text[i] == '^') {
      ++i;
      long esign = 1;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        esign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected an exponent after '^'", i + 1);
      long e = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        if (e > 100000) throw parse_error("exponent too large", start + 1);
        ++i;
      }
      exp = esign * e;
    }
    if (v < 1)
      throw parse_error(std::string(index_noun) + " index must be >= 1", start + 1);
    const int letter = static_cast<int>(sign * v);
    for (long k = 0; k < (exp < 0 ? -exp : exp); ++k)
      letters.push_back(exp < 0 ? -letter : letter);
  }
  return letters;
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw parse_error(std::string("missing integer field \"") + key + "\"", 1);
  return j.at(key).get<int>();
}

}  // namespace

BraidWord parse_braid_text(const std::string& text, int strand_count) {
  auto letters = parse_signed_tokens(text, 's', "generator");
  try {
    return BraidWord(strand_count, std::move(letters));
  } catch (const precondition_error& e) {
    throw parse_error(e.what(), 1);
  }
}

std::string braid_to_text(const BraidWord& w) {
  std::string s;
  for (int l : w.letters) {
    if (!s.empty()) s += ' ';
    s += 's' + std::to_string(l < 0 ? -l : l);
    if (l < 0) s += "^-1";
  }
  return s;
}

FreeWord parse_free_text(const std::string& text, int rank) {
  auto letters = parse_signed_tokens(text, 'g', "generator");
  try {
    return FreeWord(rank, std::move(letters));
  } catch (const precondition_error& e) {
    throw parse_error(e.what(), 1);
  }
}

std::string free_to_text(const FreeWord& w) {
  std::string s;
  for (int l : w.letters) {
    if (!s.empty()) s += ' ';
    s += 'g' + std::to_string(l < 0 ? -l : l);
    if (l < 0) s += "^-1";
  }
  return s;
}

Json braid_to_json(const BraidWord& w) { return Json(w.letters); }

BraidWord braid_from_json(const Json& j, int strand_count) {
  if (j.is_string()) return parse_braid_text(j.get<std::string>(), strand_count);
  if (!j.is_array()) throw parse_error("braid word must be an array of signed integers", 1);
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error("braid letter must be an integer", 1);
    letters.push_back(x.get<int>());
  }
  try {
    return BraidWord(strand_count, std::move(letters));
  } catch (const precondition_error& e) {
    throw parse_error(e.what(), 1);
  }
}

Json factorization_to_json(const BraidFactorization& f) {
  Json j;
  j["d"] = f.strand_count;
  j["allow_negative_cusps"] = f.allow_negative_cusps;
  Json fs = Json::array();
  for (const auto& fac : f.factors) {
    Json e;
    e["conj"] = braid_to_json(fac.conjugator);
    e["deg"] = fac.degree;
    fs.push_back(std::move(e));
  }
  j["factors"] = std::move(fs);
  return j;
}

BraidFactorization factorization_from_json(const Json& j) {
  const int d = get_int(j, "d");
  if (d < 2) throw parse_error("factorization needs d >= 2", 1);
  const bool allow_neg = j.value("allow_negative_cusps", false);
  if (!j.contains("factors") || !j.at("factors").is_array())
    throw parse_error("missing \"factors\" array", 1);
  std::vector<Factor> fs;
  for (const auto& e : j.at("factors")) {
    const int deg = get_int(e, "deg");
    if (deg != 1 && deg != 2 && deg != -2 && deg != 3 && deg != -3)
      throw parse_error("factor degree must be one of {1, 2, -2, 3, -3}, got " +
                            std::to_string(deg),
                        1);
    if (!e.contains("conj")) throw parse_error("factor missing \"conj\"", 1);
    fs.emplace_back(braid_from_json(e.at("conj"), d), deg);
  }
  try {
    return BraidFactorization(d, std::move(fs), allow_neg);
  } catch (const error& e) {
    throw parse_error(e.what(), 1);
  }
}

Json rep_to_json(const MonodromyRep& t) {
  Json j;
  j["d"] = t.d;
  j["n"] = t.n;
  Json imgs = Json::array();
  for (const auto& [a, b] : t.images) imgs.push_back(Json::array({a, b}));
  j["images"] = std::move(imgs);
  return j;
}

MonodromyRep rep_from_json(const Json& j) {
  const int d = get_int(j, "d");
  const int n = get_int(j, "n");
  if (!j.contains("images") || !j.at("images").is_array())
    throw parse_error("missing \"images\" array", 1);
  std::vector<std::pair<int, int>> imgs;
  for (const auto& e : j.at("images")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw parse_error("each image must be a pair [a, b]", 1);
    imgs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return MonodromyRep(d, n, std::move(imgs));
  } catch (const error& e) {
    throw parse_error(e.what(), 1);
  }
}

Json system_to_json(const LinearSystemData& d) {
  Json j;
  j["n"] = d.half_dim;
  j["theta1"] = rep_to_json(d.theta1);
  Json rhos = Json::array();
  for (const auto& f : d.rhos) rhos.push_back(factorization_to_json(f));
  j["rhos"] = std::move(rhos);
  return j;
}

LinearSystemData system_from_json(const Json& j) {
  LinearSystemData d;
  d.half_dim = get_int(j, "n");
  if (!j.contains("theta1")) throw parse_error("missing \"theta1\"", 1);
  d.theta1 = rep_from_json(j.at("theta1"));
  if (!j.contains("rhos") || !j.at("rhos").is_array())
    throw parse_error("missing \"rhos\" array", 1);
  for (const auto& e : j.at("rhos")) d.rhos.push_back(factorization_from_json(e));
  return d;
}

Json report_to_json(const ValidationReport& r) {
  Json j;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (r.has_census) {
    Json census;
    for (const auto& [k, v] : r.census) census[k] = v;
    j["census"] = std::move(census);
  }
  return j;
}

std::string report_to_text(const ValidationReport& r) {
  std::string s = r.pass() ? "PASS\n" : "FAIL\n";
  for (const auto& c : r.checks) {
    s += (c.pass ? "  [ok]   " : "  [FAIL] ") + c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += '\n';
  }
  if (r.has_census) {
    s += "  census:";
    for (const auto& [k, v] : r.census) s += ' ' + k + '=' + std::to_string(v);
    s += '\n';
  }
  return s;
}

Json presentation_to_json(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generator_count;
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(Json(r.letters));
  j["relations"] = std::move(rels);
  return j;
}

std::string presentation_to_text(const GroupPresentation& p) {
  std::string s = "generators:";
  for (int i = 1; i <= p.generator_count; ++i) s += " g" + std::to_string(i);
  s += "\nrelations:\n";
  for (const auto& r : p.relations) {
    s += "  " + (r.letters.empty() ? std::string("1") : free_to_text(r)) + " = 1\n";
  }
  return s;
}

Json abelian_to_json(const AbelianInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  Json t = Json::array();
  for (const auto& x : a.torsion) {
    if (x > std::numeric_limits<long long>::max())
      throw error("torsion coefficient does not fit a 64-bit integer");
    t.push_back(static_cast<long long>(x));
  }
  j["torsion"] = std::move(t);
  j["group"] = a.to_string();
  return j;
}

Json script_to_json(const MoveScript& s) {
  Json arr = Json::array();
  for (const Move& m : s) {
    Json e;
    switch (m.kind) {
      case Move::Kind::Hurwitz:
        e["op"] = "hurwitz";
        e["at"] = m.at;
        e["dir"] = m.dir == HurwitzDirection::Forward ? "forward" : "backward";
        break;
      case Move::Kind::Conjugate:
        e["op"] = "conjugate";
        e["gen"] = m.gen;
        break;
      case Move::Kind::Cancel:
        e["op"] = "cancel";
        e["at"] = m.at;
        break;
      case Move::Kind::Create: {
        e["op"] = "create";
        e["at"] = m.at;
        Json pair = Json::array();
        Json a, b;
        a["conj"] = braid_to_json(m.pair_first.conjugator);
        a["deg"] = m.pair_first.degree;
        b["conj"] = braid_to_json(m.pair_second.conjugator);
        b["deg"] = m.pair_second.degree;
        pair.push_back(std::move(a));
        pair.push_back(std::move(b));
        e["pair"] = std::move(pair);
        break;
      }
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

MoveScript script_from_json(const Json& j, int strand_count) {
  if (!j.is_array()) throw parse_error("script must be an array", 1);
  MoveScript s;
  for (const auto& e : j) {
    const std::string op = e.value("op", "");
    Move m;
    if (op == "hurwitz") {
      m.kind = Move::Kind::Hurwitz;
      m.at = get_int(e, "at");
      m.dir = e.value("dir", "forward") == "backward" ? HurwitzDirection::Backward
                                                      : HurwitzDirection::Forward;
    } else if (op == "conjugate") {
      m.kind = Move::Kind::Conjugate;
      m.gen = get_int(e, "gen");
    } else if (op == "cancel") {
      m.kind = Move::Kind::Cancel;
      m.at = get_int(e, "at");
    } else if (op == "create") {
      m.kind = Move::Kind::Create;
      m.at = get_int(e, "at");
      const auto& pair = e.at("pair");
      m.pair_first = Factor(braid_from_json(pair.at(0).at("conj"), strand_count),
                            pair.at(0).at("deg").get<int>());
      m.pair_second = Factor(braid_from_json(pair.at(1).at("conj"), strand_count),
                             pair.at(1).at("deg").get<int>());
    } else {
      throw parse_error("unknown script op \"" + op + "\"", 1);
    }
    s.push_back(std::move(m));
  }
  return s;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("JSON parse failure in ") + path + ": " + e.what(), 1);
  }
  return j;
}

}  // namespace mono
