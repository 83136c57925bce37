#include "mustafin/config.hpp"

#include <sstream>
#include <stdexcept>

namespace mustafin {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
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
  return out;
}

std::vector<int> parseIntList(const std::string& s, int line) {
  std::vector<int> out;
  for (auto& part : splitOn(s, ',')) {
    if (part.empty()) fail(line, "empty entry in integer list");
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (...) {
      fail(line, "not an integer: '" + part + "'");
    }
  }
  return out;
}

// [[e,e],[e,e]] with Laurent-polynomial entries
QtMatrix parseMatrixText(const std::string& s, int line) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t += c;
  size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= t.size() || t[pos] != c)
      fail(line, std::string("expected '") + c + "' in matrix at offset " +
                     std::to_string(pos));
    ++pos;
  };
  QtMatrix m;
  expect('[');
  while (true) {
    expect('[');
    std::vector<QtRat> row;
    while (true) {
      size_t end = pos;
      int depth = 0;
      while (end < t.size() && (depth > 0 || (t[end] != ',' && t[end] != ']')))
        ++end;  // entries contain no brackets
      if (end == pos) fail(line, "empty matrix entry");
      std::string entry = t.substr(pos, end - pos);
      try {
        row.push_back(QtRat(parseLaurent(entry)));
      } catch (const std::exception& e) {
        fail(line, "bad matrix entry '" + entry + "': " + e.what());
      }
      pos = end;
      if (pos < t.size() && t[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    m.push_back(std::move(row));
    if (pos < t.size() && t[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos != t.size()) fail(line, "trailing text after matrix");
  return m;
}

}  // namespace

FlagType RunConfig::flagType() const {
  if (d < 2) throw std::invalid_argument("d must be set (>= 2)");
  if (ranks.empty()) throw std::invalid_argument("flag ranks must be set");
  return FlagType::make(d, ranks);
}

Configuration RunConfig::configuration() const {
  if (vertices.empty()) throw std::invalid_argument("no lattices given");
  return Configuration::make(d, vertices);
}

RunConfig parseConfig(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("lattice", 0) == 0) {
      std::string rest = trim(line.substr(7));
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail(lineNo, "lattice needs diag= or matrix=");
      std::string kind = trim(rest.substr(0, eq));
      std::string val = trim(rest.substr(eq + 1));
      if (c.d < 2) fail(lineNo, "d must be set before lattice lines");
      if (kind == "diag") {
        auto exps = parseIntList(val, lineNo);
        if ((int)exps.size() != c.d)
          fail(lineNo, "diag has " + std::to_string(exps.size()) +
                           " entries, expected " + std::to_string(c.d));
        c.vertices.push_back(
            Vertex::apartment(ApartmentVertex::normalized(std::move(exps))));
      } else if (kind == "matrix") {
        QtMatrix m = parseMatrixText(val, lineNo);
        if ((int)m.size() != c.d)
          fail(lineNo, "matrix has " + std::to_string(m.size()) +
                           " rows, expected " + std::to_string(c.d));
        for (auto& row : m)
          if ((int)row.size() != c.d) fail(lineNo, "matrix is not square");
        try {
          c.vertices.push_back(Vertex::fromBasis(LatticeBasis::fromMatrix(m)));
        } catch (const std::exception& e) {
          fail(lineNo, std::string("bad lattice matrix: ") + e.what());
        }
      } else {
        fail(lineNo, "unknown lattice form '" + kind + "'");
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineNo, "expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "d") {
      auto v = parseIntList(val, lineNo);
      if (v.size() != 1 || v[0] < 2) fail(lineNo, "d must be a single integer >= 2");
      c.d = v[0];
    } else if (key == "flag") {
      c.ranks = parseIntList(val, lineNo);
    } else if (key == "seed") {
      try {
        c.seed = std::stoull(val);
      } catch (...) {
        fail(lineNo, "bad seed");
      }
    } else if (key == "radius") {
      auto v = parseIntList(val, lineNo);
      if (v.size() != 1 || v[0] < 0) fail(lineNo, "radius must be >= 0");
      c.radius = v[0];
    } else if (key == "max-candidates") {
      auto v = parseIntList(val, lineNo);
      if (v.size() != 1 || v[0] < 1) fail(lineNo, "max-candidates must be >= 1");
      c.maxCandidates = v[0];
    } else if (key == "trials") {
      auto v = parseIntList(val, lineNo);
      if (v.size() != 1 || v[0] < 1) fail(lineNo, "trials must be >= 1");
      c.trials = v[0];
    } else if (key == "order") {
      if (val != "degrevlex" && val != "lex")
        fail(lineNo, "order must be degrevlex or lex");
      c.order = val;
    } else {
      fail(lineNo, "unknown key '" + key + "'");
    }
  }
  if (c.d < 2) throw std::invalid_argument("config missing d");
  if (c.ranks.empty()) throw std::invalid_argument("config missing flag");
  c.flagType();              // validate d and ranks
  if (!c.vertices.empty()) c.configuration();  // rejects duplicate lattices
  return c;
}

std::string printConfig(const RunConfig& c) {
  std::ostringstream out;
  out << "d=" << c.d << "\n";
  out << "flag=";
  for (size_t i = 0; i < c.ranks.size(); ++i)
    out << (i ? "," : "") << c.ranks[i];
  out << "\n";
  for (auto& v : c.vertices) {
    if (v.diag) {
      out << "lattice diag=";
      for (size_t i = 0; i < v.diag->a.size(); ++i)
        out << (i ? "," : "") << v.diag->a[i];
      out << "\n";
    } else {
      out << "lattice matrix=[";
      for (size_t r = 0; r < v.basis.m.size(); ++r) {
        out << (r ? ",[" : "[");
        for (size_t s = 0; s < v.basis.m[r].size(); ++s) {
          const QtRat& e = v.basis.m[r][s];
          if (!e.den().isZero() && !(e.den() == QtPoly::constant(Rational(1))))
            throw std::invalid_argument(
                "matrix lattice with non-polynomial entries cannot be printed");
          out << (s ? "," : "") << printLaurent(e.num());
        }
        out << "]";
      }
      out << "]\n";
    }
  }
  out << "seed=" << c.seed << "\n";
  out << "radius=" << c.radius << "\n";
  out << "max-candidates=" << c.maxCandidates << "\n";
  out << "trials=" << c.trials << "\n";
  out << "order=" << c.order << "\n";
  return out.str();
}

}  // namespace mustafin
