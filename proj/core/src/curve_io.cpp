#include "derkit/curve_io.hpp"

#include <sstream>

namespace derkit {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

CurveSpec parse_curve_file(const std::string& text) {
  long long characteristic = 32003;
  std::vector<std::string> vars;
  std::vector<int> degrees;
  std::vector<std::string> ideal_texts;
  std::vector<std::vector<long long>> point_coords;
  std::set<std::string> flags;
  std::string name;
  std::vector<long long> semigroup;
  std::optional<long long> sigma, p_g, components;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "char") {
      characteristic = std::stoll(val);
    } else if (key == "vars") {
      vars = split(val, ',');
    } else if (key == "degrees") {
      for (const auto& d : split(val, ',')) degrees.push_back(std::stoi(d));
    } else if (key == "ideal") {
      for (const auto& f : split(val, ';'))
        if (!f.empty()) ideal_texts.push_back(f);
    } else if (key == "points") {
      for (const auto& p : split(val, ';')) {
        if (p.empty()) continue;
        std::string body = trim(p);
        if (body.front() != '(' || body.back() != ')')
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": point must look like (a:b:c)");
        body = body.substr(1, body.size() - 2);
        std::vector<long long> coords;
        for (const auto& c : split(body, ':')) coords.push_back(std::stoll(c));
        point_coords.push_back(std::move(coords));
      }
    } else if (key == "flags") {
      for (const auto& f : split(val, ','))
        if (!f.empty()) flags.insert(f);
    } else if (key == "name") {
      name = val;
    } else if (key == "semigroup") {
      for (const auto& g : split(val, ',')) semigroup.push_back(std::stoll(g));
    } else if (key == "sigma") {
      sigma = std::stoll(val);
    } else if (key == "p_g") {
      p_g = std::stoll(val);
    } else if (key == "components") {
      components = std::stoll(val);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key +
                                  "'");
    }
  }
  if (vars.empty()) throw std::invalid_argument("missing 'vars'");
  if (ideal_texts.empty()) throw std::invalid_argument("missing 'ideal'");

  Field field = characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
  CurveSpec spec;
  spec.ring = make_ring(field, vars, degrees);
  for (const auto& ftext : ideal_texts) spec.ideal.push_back(parse_polynomial(ftext, spec.ring));
  for (const auto& coords : point_coords) {
    if (coords.size() != vars.size())
      throw std::invalid_argument("point coordinate count does not match variable count");
    ProjPoint p;
    for (long long c : coords) p.coords.push_back(field.from_int(c));
    spec.points.push_back(std::move(p));
  }
  spec.flags = std::move(flags);
  spec.name = name;
  spec.local_semigroup = std::move(semigroup);
  spec.asserted_sigma = sigma;
  spec.asserted_p_g = p_g;
  spec.asserted_components = components;
  return spec;
}

std::string write_curve_file(const CurveSpec& spec) {
  std::ostringstream out;
  const Field& K = spec.ring->field();
  out << "char = " << K.characteristic() << "\n";
  out << "vars = ";
  for (int i = 0; i < spec.ring->nvars(); ++i) {
    if (i) out << ",";
    out << spec.ring->var_name(i);
  }
  out << "\n";
  out << "degrees = ";
  for (int i = 0; i < spec.ring->nvars(); ++i) {
    if (i) out << ",";
    out << spec.ring->weight(i);
  }
  out << "\n";
  out << "ideal = ";
  for (size_t i = 0; i < spec.ideal.size(); ++i) {
    if (i) out << "; ";
    out << spec.ideal[i].str();
  }
  out << "\n";
  if (!spec.points.empty()) {
    out << "points = ";
    for (size_t i = 0; i < spec.points.size(); ++i) {
      if (i) out << "; ";
      out << "(";
      for (size_t c = 0; c < spec.points[i].coords.size(); ++c) {
        if (c) out << ":";
        out << K.to_string(spec.points[i].coords[c]);
      }
      out << ")";
    }
    out << "\n";
  }
  if (!spec.flags.empty()) {
    out << "flags = ";
    bool first = true;
    for (const auto& f : spec.flags) {
      if (!first) out << ", ";
      out << f;
      first = false;
    }
    out << "\n";
  }
  if (!spec.local_semigroup.empty()) {
    out << "semigroup = ";
    for (size_t i = 0; i < spec.local_semigroup.size(); ++i) {
      if (i) out << ",";
      out << spec.local_semigroup[i];
    }
    out << "\n";
  }
  if (spec.asserted_sigma) out << "sigma = " << *spec.asserted_sigma << "\n";
  if (spec.asserted_p_g) out << "p_g = " << *spec.asserted_p_g << "\n";
  if (spec.asserted_components) out << "components = " << *spec.asserted_components << "\n";
  if (!spec.name.empty()) out << "name = " << spec.name << "\n";
  return out.str();
}

}  // namespace derkit
