#include "reach/model_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace reach {

namespace {

// Whitespace tokenizer that keeps one [...] group as a single token.
std::vector<std::string> tokenize(const std::string& line, int lineno) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '[') {
      const size_t close = line.find(']', i);
      if (close == std::string::npos) {
        throw ParseError(lineno, "unterminated '['");
      }
      out.push_back(line.substr(i, close - i + 1));
      i = close + 1;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '[') {
      ++j;
    }
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_num(const std::string& tok, int lineno) {
  try {
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected a number, got '" + tok + "'");
  }
}

int parse_int(const std::string& tok, int lineno) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  }
  return v;
}

// "[a b; c d]" -> rows of numbers.
std::vector<std::vector<double>> parse_rows(const std::string& group, int lineno) {
  if (group.size() < 2 || group.front() != '[' || group.back() != ']') {
    throw ParseError(lineno, "expected a bracketed group");
  }
  std::vector<std::vector<double>> rows;
  std::stringstream body(group.substr(1, group.size() - 2));
  std::string row;
  while (std::getline(body, row, ';')) {
    std::vector<double> vals;
    std::stringstream rs(row);
    std::string tok;
    while (rs >> tok) vals.push_back(parse_num(tok, lineno));
    rows.push_back(std::move(vals));
  }
  return rows;
}

Matrix parse_matrix(const std::string& group, int n, int lineno) {
  auto rows = parse_rows(group, lineno);
  if (static_cast<int>(rows.size()) != n) {
    throw ParseError(lineno, "matrix must have " + std::to_string(n) + " rows");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ParseError(lineno, "matrix row has wrong width");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector parse_vector(const std::string& group, int n, int lineno) {
  auto rows = parse_rows(group, lineno);
  if (rows.size() != 1 || static_cast<int>(rows[0].size()) != n) {
    throw ParseError(lineno, "vector must have " + std::to_string(n) + " entries");
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rows[0][i];
  return v;
}

// "[lo,hi; lo,hi]" or "[lo..hi; ...]" -> interval rows.
std::pair<Vector, Vector> parse_interval_box(const std::string& group, int n,
                                             int lineno) {
  if (group.size() < 2 || group.front() != '[' || group.back() != ']') {
    throw ParseError(lineno, "expected a bracketed box");
  }
  std::vector<std::pair<double, double>> iv;
  std::stringstream body(group.substr(1, group.size() - 2));
  std::string row;
  while (std::getline(body, row, ';')) {
    std::string a, b;
    const size_t dots = row.find("..");
    const size_t comma = row.find(',');
    if (dots != std::string::npos) {
      a = row.substr(0, dots);
      b = row.substr(dots + 2);
    } else if (comma != std::string::npos) {
      a = row.substr(0, comma);
      b = row.substr(comma + 1);
    } else {
      throw ParseError(lineno, "box row needs 'lo,hi' or 'lo..hi'");
    }
    auto trim = [](std::string s) {
      const auto b0 = s.find_first_not_of(" \t");
      const auto e0 = s.find_last_not_of(" \t");
      return b0 == std::string::npos ? std::string() : s.substr(b0, e0 - b0 + 1);
    };
    iv.emplace_back(parse_num(trim(a), lineno), parse_num(trim(b), lineno));
  }
  if (static_cast<int>(iv.size()) != n) {
    throw ParseError(lineno, "box must have " + std::to_string(n) + " rows");
  }
  Vector lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo(i) = iv[i].first;
    hi(i) = iv[i].second;
    if (lo(i) > hi(i)) throw ParseError(lineno, "box row with lo > hi");
  }
  return {lo, hi};
}

// "c1 c2 ... <= b" after the keyword.
HalfSpace parse_halfspace(const std::vector<std::string>& toks, size_t first,
                          int n, int lineno) {
  std::vector<double> coeffs;
  size_t i = first;
  while (i < toks.size() && toks[i] != "<=") {
    coeffs.push_back(parse_num(toks[i], lineno));
    ++i;
  }
  if (i + 2 != toks.size() || toks[i] != "<=") {
    throw ParseError(lineno, "constraint must end with '<= b'");
  }
  if (static_cast<int>(coeffs.size()) != n) {
    throw ParseError(lineno, "constraint needs " + std::to_string(n) + " coefficients");
  }
  Vector normal(n);
  for (int k = 0; k < n; ++k) normal(k) = coeffs[k];
  if (normal.cwiseAbs().maxCoeff() == 0.0) {
    throw ParseError(lineno, "constraint normal must be nonzero");
  }
  return {normal, parse_num(toks.back(), lineno)};
}

std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_matrix(const Matrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += format_num(m(i, j));
    }
  }
  return s + "]";
}

std::string format_vector(const Vector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += format_num(v(i));
  }
  return s + "]";
}

}  // namespace

HybridAutomaton parse_model(const std::string& text) {
  HybridAutomaton ha;
  bool have_dim = false;
  bool have_init = false;
  Location* cur_loc = nullptr;
  Transition* cur_tr = nullptr;
  bool cur_has_flow = false;
  bool cur_has_map = false;

  auto require_dim = [&](int lineno) {
    if (!have_dim) throw ParseError(lineno, "'dim' must come first");
  };
  auto close_section = [&](int lineno) {
    if (cur_loc && !cur_has_flow) {
      throw ParseError(lineno, "location " + std::to_string(cur_loc->id) +
                                   " has no flow");
    }
    if (cur_tr && !cur_has_map) {
      throw ParseError(lineno, "transition has no map");
    }
    cur_loc = nullptr;
    cur_tr = nullptr;
  };

  std::stringstream in(text);
  std::string raw;
  int lineno = 0;
  int content_lines = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    auto toks = tokenize(raw, lineno);
    if (toks.empty()) continue;
    ++content_lines;
    const std::string& kw = toks[0];

    if (kw == "dim") {
      if (have_dim) throw ParseError(lineno, "duplicate 'dim'");
      if (toks.size() != 2) throw ParseError(lineno, "usage: dim <n>");
      ha.dimension = parse_int(toks[1], lineno);
      if (ha.dimension <= 0) throw ParseError(lineno, "dimension must be positive");
      have_dim = true;
    } else if (kw == "vars") {
      require_dim(lineno);
      if (static_cast<int>(toks.size()) != ha.dimension + 1) {
        throw ParseError(lineno, "vars needs exactly " +
                                     std::to_string(ha.dimension) + " names");
      }
      ha.variables.assign(toks.begin() + 1, toks.end());
    } else if (kw == "location") {
      require_dim(lineno);
      close_section(lineno);
      if (toks.size() < 2) throw ParseError(lineno, "usage: location <id> [name=..]");
      Location loc;
      loc.id = parse_int(toks[1], lineno);
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].rfind("name=", 0) == 0) {
          loc.name = toks[i].substr(5);
        } else if (toks[i].rfind("tag=", 0) == 0) {
          loc.tag = toks[i].substr(4);
        } else {
          throw ParseError(lineno, "unexpected token '" + toks[i] + "'");
        }
      }
      loc.dynamics.a = Matrix::Zero(ha.dimension, ha.dimension);
      loc.dynamics.input = FixedInput{Vector::Zero(ha.dimension)};
      ha.locations.push_back(std::move(loc));
      cur_loc = &ha.locations.back();
      cur_has_flow = false;
    } else if (kw == "flow") {
      if (!cur_loc) throw ParseError(lineno, "'flow' outside a location");
      if (toks.size() < 7 || toks[1] != "A" || toks[2] != "=") {
        throw ParseError(lineno, "usage: flow A = [..] u = [..] | U = box [..]");
      }
      cur_loc->dynamics.a = parse_matrix(toks[3], ha.dimension, lineno);
      if (toks[4] == "u" && toks[5] == "=" && toks.size() == 7) {
        cur_loc->dynamics.input =
            FixedInput{parse_vector(toks[6], ha.dimension, lineno)};
      } else if (toks[4] == "U" && toks[5] == "=" && toks.size() == 8 &&
                 toks[6] == "box") {
        auto [lo, hi] = parse_interval_box(toks[7], ha.dimension, lineno);
        cur_loc->dynamics.input = SetInput{make_box(lo, hi)};
      } else {
        throw ParseError(lineno, "flow input must be 'u = [..]' or 'U = box [..]'");
      }
      cur_has_flow = true;
    } else if (kw == "inv") {
      if (!cur_loc) throw ParseError(lineno, "'inv' outside a location");
      cur_loc->invariant.push_back(parse_halfspace(toks, 1, ha.dimension, lineno));
    } else if (kw == "transition") {
      require_dim(lineno);
      close_section(lineno);
      if (toks.size() != 4 || toks[2] != "->") {
        throw ParseError(lineno, "usage: transition <src> -> <dst>");
      }
      Transition tr;
      tr.source = parse_int(toks[1], lineno);
      tr.target = parse_int(toks[3], lineno);
      tr.map.m = Matrix::Identity(ha.dimension, ha.dimension);
      tr.map.v = Vector::Zero(ha.dimension);
      ha.transitions.push_back(std::move(tr));
      cur_tr = &ha.transitions.back();
      cur_has_map = false;
    } else if (kw == "guard") {
      if (!cur_tr) throw ParseError(lineno, "'guard' outside a transition");
      cur_tr->guard.push_back(parse_halfspace(toks, 1, ha.dimension, lineno));
    } else if (kw == "map") {
      if (!cur_tr) throw ParseError(lineno, "'map' outside a transition");
      if (toks.size() != 7 || toks[1] != "M" || toks[2] != "=" || toks[4] != "v" ||
          toks[5] != "=") {
        throw ParseError(lineno, "usage: map M = [..] v = [..]");
      }
      cur_tr->map.m = parse_matrix(toks[3], ha.dimension, lineno);
      cur_tr->map.v = parse_vector(toks[6], ha.dimension, lineno);
      cur_has_map = true;
    } else if (kw == "init") {
      require_dim(lineno);
      close_section(lineno);
      if (have_init) throw ParseError(lineno, "duplicate 'init'");
      if (toks.size() != 4 || toks[1].rfind("location=", 0) != 0 || toks[2] != "box") {
        throw ParseError(lineno, "usage: init location=<id> box [..]");
      }
      ha.init.loc = parse_int(toks[1].substr(9), lineno);
      auto [lo, hi] = parse_interval_box(toks[3], ha.dimension, lineno);
      ha.init.set = make_box(lo, hi);
      have_init = true;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (content_lines == 0) throw ParseError(lineno, "empty model");
  close_section(lineno);
  if (!have_dim) throw ParseError(lineno, "missing 'dim'");
  if (!have_init) throw ParseError(lineno, "missing 'init'");

  try {
    ha.validate();
  } catch (const SemanticError&) {
    throw;
  }
  return ha;
}

std::string render(const HybridAutomaton& ha) {
  std::string out;
  out += "dim " + std::to_string(ha.dimension) + "\n";
  if (!ha.variables.empty()) {
    out += "vars";
    for (const auto& v : ha.variables) out += " " + v;
    out += "\n";
  }
  for (const auto& loc : ha.locations) {
    out += "location " + std::to_string(loc.id);
    if (!loc.name.empty()) out += " name=" + loc.name;
    if (!loc.tag.empty()) out += " tag=" + loc.tag;
    out += "\n";
    out += "  flow A = " + format_matrix(loc.dynamics.a);
    if (loc.dynamics.deterministic()) {
      out += "  u = " + format_vector(loc.dynamics.fixed_u()) + "\n";
    } else {
      const auto& set = *std::get<SetInput>(loc.dynamics.input).set;
      out += "  U = box [";
      for (int i = 0; i < ha.dimension; ++i) {
        Vector e = Vector::Zero(ha.dimension);
        e(i) = 1.0;
        if (i) out += "; ";
        out += format_num(-set.support(-e)) + ".." + format_num(set.support(e));
      }
      out += "]\n";
    }
    for (const auto& h : loc.invariant) {
      out += "  inv";
      for (Eigen::Index i = 0; i < h.normal.size(); ++i) {
        out += " " + format_num(h.normal(i));
      }
      out += " <= " + format_num(h.offset) + "\n";
    }
  }
  for (const auto& tr : ha.transitions) {
    out += "transition " + std::to_string(tr.source) + " -> " +
           std::to_string(tr.target) + "\n";
    for (const auto& h : tr.guard) {
      out += "  guard";
      for (Eigen::Index i = 0; i < h.normal.size(); ++i) {
        out += " " + format_num(h.normal(i));
      }
      out += " <= " + format_num(h.offset) + "\n";
    }
    out += "  map M = " + format_matrix(tr.map.m) + "  v = " +
           format_vector(tr.map.v) + "\n";
  }
  out += "init location=" + std::to_string(ha.init.loc) + " box [";
  for (int i = 0; i < ha.dimension; ++i) {
    Vector e = Vector::Zero(ha.dimension);
    e(i) = 1.0;
    if (i) out += "; ";
    out += format_num(-ha.init.set->support(-e)) + "," +
           format_num(ha.init.set->support(e));
  }
  out += "]\n";
  return out;
}

}  // namespace reach
