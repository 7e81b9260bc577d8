#include "nivat/configspec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace nivat {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

i64 parse_i64(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    i64 v = std::stoll(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected integer, got '" + trim(s) + "'", line);
  }
}

Vec2 parse_vec(const std::string& s, int line) {
  std::string t = trim(s);
  if (t.size() < 5 || t.front() != '(' || t.back() != ')')
    throw parse_error("expected vector '(x,y)', got '" + t + "'", line);
  auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2)
    throw parse_error("expected vector '(x,y)', got '" + t + "'", line);
  return Vec2{parse_i64(parts[0], line), parse_i64(parts[1], line)};
}

std::vector<i64> parse_digit_word(const std::string& s, int line) {
  std::vector<i64> w;
  for (char c : trim(s)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("words are digit strings, got '" + trim(s) + "'", line);
    w.push_back(c - '0');
  }
  if (w.empty()) throw parse_error("empty word", line);
  return w;
}

std::string digit_word(const std::vector<i64>& w) {
  std::string s;
  for (i64 c : w) s += static_cast<char>('0' + c);
  return s;
}

std::vector<i64> parse_row(const std::string& s, int line) {
  std::vector<i64> row;
  std::istringstream in(trim(s));
  std::string tok;
  while (in >> tok) row.push_back(parse_i64(tok, line));
  if (row.empty()) throw parse_error("empty table row", line);
  return row;
}

}  // namespace

ConfigSpec ConfigSpec::parse_text(const std::string& text) {
  ConfigSpec spec;
  bool saw_main = false;
  std::string section;
  std::map<std::string, std::map<std::string, std::pair<std::string, int>>> raw;
  std::vector<std::string> section_order;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw parse_error("empty section name", lineno);
      if (raw.count(section)) throw parse_error("duplicate section [" + section + "]", lineno);
      raw[section];
      section_order.push_back(section);
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("expected 'key = value'", lineno);
    if (section.empty()) throw parse_error("key outside any section", lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw parse_error("empty key", lineno);
    if (raw[section].count(key))
      throw parse_error("duplicate key '" + key + "'", lineno);
    raw[section][key] = {value, lineno};
  }

  auto parse_seq = [&](const std::map<std::string, std::pair<std::string, int>>& kv,
                       int secline) {
    SeqDesc s;
    auto get = [&](const std::string& k) -> std::pair<std::string, int> {
      auto it = kv.find(k);
      if (it == kv.end()) throw parse_error("missing key '" + k + "'", secline);
      return it->second;
    };
    auto [kind, kl] = get("seq.kind");
    s.kind = kind;
    if (kind == "word") {
      auto [w, wl] = get("seq.word");
      s.word = parse_digit_word(w, wl);
    } else if (kind == "substitution") {
      auto [rules, rl] = get("seq.rules");
      for (const std::string& part : split(rules, ';')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        std::size_t arrow = p.find("->");
        if (arrow == std::string::npos)
          throw parse_error("substitution rule needs '->'", rl);
        i64 letter = parse_i64(p.substr(0, arrow), rl);
        s.rules[letter] = parse_digit_word(p.substr(arrow + 2), rl);
      }
      auto [seed, sl] = get("seq.seed");
      s.seed = parse_i64(seed, sl);
    } else if (kind == "eventual") {
      auto [pre, pl] = get("seq.preperiod");
      auto [per, el] = get("seq.period");
      s.preperiod = parse_digit_word(pre, pl);
      s.period = parse_digit_word(per, el);
    } else {
      throw parse_error("unknown seq.kind '" + kind + "'", kl);
    }
    return s;
  };

  auto parse_source = [&](const std::map<std::string, std::pair<std::string, int>>& kv,
                          int secline) {
    SourceDesc d;
    auto get = [&](const std::string& k) -> std::pair<std::string, int> {
      auto it = kv.find(k);
      if (it == kv.end()) throw parse_error("missing key '" + k + "'", secline);
      return it->second;
    };
    auto [kind, kl] = get("kind");
    d.kind = kind;
    if (kind == "constant") {
      auto [v, vl] = get("value");
      d.value = parse_i64(v, vl);
    } else if (kind == "doubly_periodic") {
      auto [h1, l1] = get("h1");
      auto [h2, l2] = get("h2");
      auto [table, tl] = get("table");
      d.h1 = parse_vec(h1, l1);
      d.h2 = parse_vec(h2, l2);
      for (const std::string& row : split(table, ';')) d.table.push_back(parse_row(row, tl));
    } else if (kind == "layer") {
      auto [h, hl] = get("h");
      d.h = parse_vec(h, hl);
      d.seq = parse_seq(kv, secline);
    } else if (kind == "sum") {
      auto [terms, tl] = get("terms");
      std::string t = terms;
      // terms = c1*name1 + c2*name2 ... (coefficients may be negative)
      std::replace(t.begin(), t.end(), '+', ' ');
      std::istringstream ts(t);
      std::string tok;
      while (ts >> tok) {
        std::size_t star = tok.find('*');
        if (star == std::string::npos)
          throw parse_error("sum term needs 'coef*name'", tl);
        d.terms.emplace_back(parse_i64(tok.substr(0, star), tl),
                             trim(tok.substr(star + 1)));
      }
      if (d.terms.empty()) throw parse_error("sum needs at least one term", tl);
    } else {
      throw parse_error("unknown source kind '" + kind + "'", kl);
    }
    return d;
  };

  for (const std::string& sec : section_order) {
    const auto& kv = raw[sec];
    int secline = kv.empty() ? 1 : kv.begin()->second.second;
    if (sec == "source") {
      spec.main = parse_source(kv, secline);
      saw_main = true;
    } else if (sec.rfind("source.", 0) == 0) {
      std::string name = sec.substr(7);
      if (name.empty()) throw parse_error("empty sub-source name", secline);
      spec.named[name] = parse_source(kv, secline);
    } else if (sec == "decomposition") {
      DecompDesc dd;
      auto it = kv.find("components");
      if (it == kv.end()) throw parse_error("missing key 'components'", secline);
      const auto& [comps, cl] = it->second;
      std::istringstream cs(comps);
      std::string tok;
      while (cs >> tok) {
        // coef*name:(x,y)
        std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
          throw parse_error("component needs 'coef*name:(x,y)'", cl);
        std::string head = tok.substr(0, colon);
        ComponentDesc comp;
        std::size_t star = head.find('*');
        if (star == std::string::npos) {
          comp.coefficient = 1;
          comp.name = head;
        } else {
          comp.coefficient = parse_i64(head.substr(0, star), cl);
          comp.name = head.substr(star + 1);
        }
        comp.period = parse_vec(tok.substr(colon + 1), cl);
        dd.components.push_back(comp);
      }
      if (dd.components.empty()) throw parse_error("decomposition needs components", cl);
      auto mit = kv.find("minimal");
      if (mit != kv.end()) {
        const auto& [mv, ml] = mit->second;
        if (mv != "true" && mv != "false")
          throw parse_error("minimal must be true or false", ml);
        dd.minimal = mv == "true";
      }
      spec.decomposition = dd;
    } else if (sec == "annihilator") {
      auto it = kv.find("poly");
      if (it == kv.end()) throw parse_error("missing key 'poly'", secline);
      spec.annihilator_text = it->second.first;
    } else {
      throw parse_error("unknown section [" + sec + "]", secline);
    }
  }
  if (!saw_main) throw parse_error("missing [source] section", 1);
  return spec;
}

ConfigSpec ConfigSpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

namespace {

Sequence1D build_seq(const ConfigSpec::SeqDesc& d) {
  if (d.kind == "word") return Sequence1D::periodic_word(d.word);
  if (d.kind == "substitution") return Sequence1D::substitution(d.rules, d.seed);
  if (d.kind == "eventual")
    return Sequence1D::eventually_periodic(d.preperiod, d.period);
  throw error("unknown seq kind '" + d.kind + "'");
}

ConfigurationSource build_desc(const ConfigSpec& spec,
                               const ConfigSpec::SourceDesc& d,
                               std::set<std::string>& building) {
  if (d.kind == "constant") return ConfigurationSource::constant(d.value);
  if (d.kind == "doubly_periodic")
    return ConfigurationSource::doubly_periodic(d.h1, d.h2, d.table);
  if (d.kind == "layer") return ConfigurationSource::layer(d.h, build_seq(d.seq));
  if (d.kind == "sum") {
    std::vector<std::pair<i64, ConfigurationSource>> terms;
    for (const auto& [coef, name] : d.terms) {
      auto it = spec.named.find(name);
      if (it == spec.named.end()) throw error("unknown sub-source '" + name + "'");
      if (!building.insert(name).second)
        throw error("cyclic sub-source reference '" + name + "'");
      terms.emplace_back(coef, build_desc(spec, it->second, building));
      building.erase(name);
    }
    return ConfigurationSource::sum(std::move(terms));
  }
  throw error("unknown source kind '" + d.kind + "'");
}

}  // namespace

ConfigurationSource ConfigSpec::build_source() const {
  std::set<std::string> building;
  return build_desc(*this, main, building);
}

std::optional<Decomposition> ConfigSpec::build_decomposition() const {
  if (!decomposition) return std::nullopt;
  Decomposition d;
  d.claimed_minimal = decomposition->minimal;
  std::set<std::string> building;
  for (const auto& comp : decomposition->components) {
    ConfigurationSource base = [&] {
      if (comp.name == "self") return build_source();
      auto it = named.find(comp.name);
      if (it == named.end()) throw error("unknown sub-source '" + comp.name + "'");
      return build_desc(*this, it->second, building);
    }();
    ConfigurationSource scaled =
        comp.coefficient == 1
            ? base
            : ConfigurationSource::sum({{comp.coefficient, base}});
    d.components.push_back({scaled, comp.period});
  }
  return d;
}

std::optional<LaurentPoly> ConfigSpec::build_annihilator() const {
  if (!annihilator_text) return std::nullopt;
  return LaurentPoly::parse(*annihilator_text, Ring::integers());
}

namespace {

void print_seq(std::ostream& out, const ConfigSpec::SeqDesc& s) {
  out << "seq.kind = " << s.kind << "\n";
  if (s.kind == "word") {
    out << "seq.word = " << digit_word(s.word) << "\n";
  } else if (s.kind == "substitution") {
    out << "seq.rules = ";
    bool first = true;
    for (const auto& [c, w] : s.rules) {
      if (!first) out << " ; ";
      out << c << " -> " << digit_word(w);
      first = false;
    }
    out << "\n";
    out << "seq.seed = " << s.seed << "\n";
  } else if (s.kind == "eventual") {
    out << "seq.preperiod = " << digit_word(s.preperiod) << "\n";
    out << "seq.period = " << digit_word(s.period) << "\n";
  }
}

void print_source(std::ostream& out, const ConfigSpec::SourceDesc& d) {
  out << "kind = " << d.kind << "\n";
  if (d.kind == "constant") {
    out << "value = " << d.value << "\n";
  } else if (d.kind == "doubly_periodic") {
    out << "h1 = " << to_string(d.h1) << "\n";
    out << "h2 = " << to_string(d.h2) << "\n";
    out << "table = ";
    for (std::size_t r = 0; r < d.table.size(); ++r) {
      if (r) out << " ; ";
      for (std::size_t c = 0; c < d.table[r].size(); ++c) {
        if (c) out << " ";
        out << d.table[r][c];
      }
    }
    out << "\n";
  } else if (d.kind == "layer") {
    out << "h = " << to_string(d.h) << "\n";
    print_seq(out, d.seq);
  } else if (d.kind == "sum") {
    out << "terms = ";
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
      if (i) out << " + ";
      out << d.terms[i].first << "*" << d.terms[i].second;
    }
    out << "\n";
  }
}

}  // namespace

std::string ConfigSpec::print() const {
  std::ostringstream out;
  out << "[source]\n";
  print_source(out, main);
  for (const auto& [name, d] : named) {
    out << "\n[source." << name << "]\n";
    print_source(out, d);
  }
  if (decomposition) {
    out << "\n[decomposition]\n";
    out << "components =";
    for (const auto& c : decomposition->components)
      out << " " << c.coefficient << "*" << c.name << ":" << to_string(c.period);
    out << "\n";
    out << "minimal = " << (decomposition->minimal ? "true" : "false") << "\n";
  }
  if (annihilator_text) {
    out << "\n[annihilator]\n";
    out << "poly = " << LaurentPoly::parse(*annihilator_text, Ring::integers()).str()
        << "\n";
  }
  return out.str();
}

}  // namespace nivat
