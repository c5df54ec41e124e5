#include "pretrop/systems.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

namespace pretrop {

namespace {

void dedup_support(std::vector<IntVec>& support) {
  std::sort(support.begin(), support.end(), lex_less);
  support.erase(std::unique(support.begin(), support.end()), support.end());
}

void finalize(SystemSpec& spec) {
  for (auto& s : spec.supports) {
    dedup_support(s);
    if (s.empty()) throw InputError("support with no points");
    for (const IntVec& p : s)
      if (static_cast<int>(p.size()) != spec.ambient_dim)
        throw InputError("support point with wrong dimension");
  }
}

// ---------------------------------------------------------------------------
// polynomial text

struct Token {
  enum Kind { Ident, Integer, Plus, Minus, Star, Caret, Semi, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::End, "", line, col};
    const char c = text_[pos_];
    if (c == '+') return take(Token::Plus, line, col);
    if (c == '-') return take(Token::Minus, line, col);
    if (c == '*') return take(Token::Star, line, col);
    if (c == '^') return take(Token::Caret, line, col);
    if (c == ';') return take(Token::Semi, line, col);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        s += advance();
      return {Token::Integer, s, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        s += advance();
      return {Token::Ident, s, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  Token take(Token::Kind k, int line, int col) {
    std::string s(1, advance());
    return {k, s, line, col};
  }
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

struct RawTerm {
  Int coefficient;
  std::map<std::string, Int> powers;
  int line, col;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : lex_(text) { bump(); }

  SystemSpec run(std::string_view source) {
    if (tok_.kind == Token::Ident && tok_.text == "vars") parse_header();
    std::vector<std::vector<RawTerm>> polys;
    while (tok_.kind != Token::End) polys.push_back(parse_polynomial());
    if (polys.empty())
      throw ParseError("no polynomials in input", tok_.line, tok_.col);
    return assemble(polys, source);
  }

 private:
  void bump() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k)
      throw ParseError(std::string("expected ") + what, tok_.line, tok_.col);
  }

  void parse_header() {
    bump();  // vars
    while (tok_.kind == Token::Ident) {
      if (std::find(header_.begin(), header_.end(), tok_.text) !=
          header_.end())
        throw ParseError("duplicate variable in header", tok_.line, tok_.col);
      header_.push_back(tok_.text);
      bump();
    }
    if (header_.empty())
      throw ParseError("empty vars header", tok_.line, tok_.col);
    expect(Token::Semi, "';' after header");
    bump();
    has_header_ = true;
  }

  Int parse_integer_value() {
    bool negative = false;
    if (tok_.kind == Token::Minus) {
      negative = true;
      bump();
    }
    expect(Token::Integer, "integer");
    Int v(tok_.text);
    bump();
    return negative ? Int(-v) : v;
  }

  RawTerm parse_term() {
    RawTerm term{Int(1), {}, tok_.line, tok_.col};
    bool saw_factor = false;
    if (tok_.kind == Token::Integer) {
      term.coefficient = Int(tok_.text);
      bump();
      saw_factor = true;
      if (tok_.kind == Token::Star) bump();
      else return term;  // bare constant
    }
    while (true) {
      expect(Token::Ident, saw_factor ? "variable" : "term");
      const std::string name = tok_.text;
      bump();
      Int exponent = 1;
      if (tok_.kind == Token::Caret) {
        bump();
        exponent = parse_integer_value();
      }
      term.powers[name] += exponent;
      saw_factor = true;
      if (tok_.kind == Token::Star) {
        bump();
        continue;
      }
      break;
    }
    return term;
  }

  std::vector<RawTerm> parse_polynomial() {
    std::vector<RawTerm> terms;
    const int line = tok_.line, col = tok_.col;
    bool negate = false;
    if (tok_.kind == Token::Minus) {
      negate = true;
      bump();
    } else if (tok_.kind == Token::Plus) {
      bump();
    }
    while (true) {
      RawTerm t = parse_term();
      if (negate) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      if (tok_.kind == Token::Semi) {
        bump();
        break;
      }
      if (tok_.kind == Token::Plus) {
        negate = false;
        bump();
      } else if (tok_.kind == Token::Minus) {
        negate = true;
        bump();
      } else {
        throw ParseError("expected '+', '-' or ';'", tok_.line, tok_.col);
      }
    }
    bool all_zero = true;
    for (const RawTerm& t : terms)
      if (sign_of(t.coefficient) != 0) all_zero = false;
    if (all_zero)
      throw ParseError("zero polynomial", line, col);
    return terms;
  }

  SystemSpec assemble(const std::vector<std::vector<RawTerm>>& polys,
                      std::string_view source) {
    std::vector<std::string> order = header_;
    if (!has_header_) {
      // order of first appearance; every polynomial must use the same set
      for (const auto& poly : polys)
        for (const RawTerm& t : poly)
          for (const auto& [name, exp] : t.powers)
            if (std::find(order.begin(), order.end(), name) == order.end())
              order.push_back(name);
      for (const auto& poly : polys) {
        std::vector<std::string> used;
        for (const RawTerm& t : poly)
          for (const auto& [name, exp] : t.powers)
            if (std::find(used.begin(), used.end(), name) == used.end())
              used.push_back(name);
        if (used.size() != order.size())
          throw ParseError(
              "inconsistent variable sets between polynomials; declare an "
              "order with a 'vars' header",
              poly.front().line, poly.front().col);
      }
    }

    SystemSpec spec;
    spec.ambient_dim = static_cast<int>(order.size());
    spec.provenance = {"text", std::string(source)};
    for (const auto& poly : polys) {
      std::vector<IntVec> support;
      for (const RawTerm& t : poly) {
        if (sign_of(t.coefficient) == 0) continue;  // only nonzero-ness kept
        IntVec point(order.size(), Int(0));
        for (const auto& [name, exp] : t.powers) {
          auto it = std::find(order.begin(), order.end(), name);
          if (it == order.end())
            throw ParseError("variable '" + name + "' not in vars header",
                             t.line, t.col);
          point[static_cast<std::size_t>(it - order.begin())] = exp;
        }
        support.push_back(std::move(point));
      }
      if (support.empty())
        throw ParseError("zero polynomial", poly.front().line,
                         poly.front().col);
      spec.supports.push_back(std::move(support));
    }
    finalize(spec);
    return spec;
  }

  Lexer lex_;
  Token tok_{};
  std::vector<std::string> header_;
  bool has_header_ = false;
};

std::string default_var_name(int i) { return "x" + std::to_string(i); }

}  // namespace

SystemSpec parse_polynomials(std::string_view text, std::string_view source) {
  PolyParser parser(text);
  return parser.run(source);
}

std::string to_polynomial_text(const SystemSpec& spec) {
  std::ostringstream os;
  os << "vars";
  for (int i = 0; i < spec.ambient_dim; ++i) os << ' ' << default_var_name(i);
  os << ";\n";
  for (const auto& support : spec.supports) {
    bool first_term = true;
    for (const IntVec& p : support) {
      if (!first_term) os << " + ";
      first_term = false;
      bool first_factor = true;
      for (int j = 0; j < spec.ambient_dim; ++j) {
        if (sign_of(p[j]) == 0) continue;
        if (!first_factor) os << '*';
        first_factor = false;
        os << default_var_name(j);
        if (p[j] != 1) os << '^' << p[j];
      }
      if (first_factor) os << '1';
    }
    os << ";\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// generators

namespace {

// Uniform value in {0..30}: rejection sampling on the low five bits.
int draw31(std::mt19937_64& rng) {
  for (;;) {
    const unsigned v = static_cast<unsigned>(rng() & 31u);
    if (v < 31) return static_cast<int>(v);
  }
}

bool affinely_independent(const std::vector<IntVec>& points, int dim) {
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank_int_rows(diffs, dim) == points.size() - 1;
}

// Exponent vectors of a product of binomial powers: per factor f the two
// exponent contributions split a power between two coordinates.
struct BinomialFactor {
  int var_a, var_b, power;
};

std::vector<IntVec> expand_binomial_product(const IntVec& base, int dim,
                                            const std::vector<BinomialFactor>&
                                                factors) {
  std::vector<IntVec> points{base};
  for (const auto& f : factors) {
    std::vector<IntVec> next;
    for (const IntVec& p : points) {
      for (int t = 0; t <= f.power; ++t) {
        IntVec q = p;
        q[f.var_a] += t;
        q[f.var_b] += f.power - t;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  dedup_support(points);
  return points;
}

}  // namespace

SystemSpec gen_generic_simplices(int n, std::uint64_t seed) {
  if (n < 3) throw InputError("gen simplices: n must be at least 3");
  std::mt19937_64 rng(seed);
  SystemSpec spec;
  spec.ambient_dim = n;
  spec.provenance = {"generator",
                     "simplices n=" + std::to_string(n) +
                         " seed=" + std::to_string(seed)};
  for (int s = 0; s < n - 1; ++s) {
    std::vector<IntVec> points;
    do {
      points.clear();
      for (int i = 0; i <= n; ++i) {
        IntVec p(n);
        for (int j = 0; j < n; ++j) p[j] = draw31(rng);
        points.push_back(std::move(p));
      }
    } while (!affinely_independent(points, n));
    spec.supports.push_back(std::move(points));
  }
  finalize(spec);
  return spec;
}

SystemSpec gen_cyclic(int n, bool reduced) {
  if (n < 3) throw InputError("gen cyclic: n must be at least 3");
  SystemSpec spec;
  spec.ambient_dim = reduced ? n - 1 : n;
  spec.provenance = {"generator", std::string(reduced ? "cyclic-reduced"
                                                      : "cyclic") +
                                      " n=" + std::to_string(n)};
  const int neqs = n - 1;  // window equations; full system adds the product
  for (int i = 1; i <= neqs; ++i) {
    std::vector<IntVec> support;
    for (int j = 0; j < n; ++j) {
      IntVec p(spec.ambient_dim, Int(0));
      for (int k = 0; k < i; ++k) {
        const int idx = (j + k) % n;
        if (reduced) {
          if (idx == 0) continue;  // y_0 = 1 after clearing denominators
          p[idx - 1] += 1;
        } else {
          p[idx] += 1;
        }
      }
      support.push_back(std::move(p));
    }
    spec.supports.push_back(std::move(support));
  }
  if (!reduced) {
    std::vector<IntVec> last{IntVec(n, Int(1)), IntVec(n, Int(0))};
    spec.supports.push_back(std::move(last));
  }
  finalize(spec);
  return spec;
}

SystemSpec gen_nvortex(int n) {
  if (n < 3) throw InputError("gen nvortex: n must be at least 3");
  SystemSpec spec;
  spec.ambient_dim = n;
  spec.provenance = {"generator", "nvortex n=" + std::to_string(n) +
                                      " convention=docs/benchmark_systems.md"};
  for (int i = 0; i < n; ++i) {
    std::vector<IntVec> support;
    {
      // V_i * prod_{j != i} (z_i - z_j)
      std::vector<BinomialFactor> factors;
      for (int j = 0; j < n; ++j)
        if (j != i) factors.push_back({i, j, 1});
      auto part = expand_binomial_product(IntVec(n, Int(0)), n, factors);
      support.insert(support.end(), part.begin(), part.end());
    }
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      // Gamma_j * prod_{k != i,j} (z_i - z_k)
      std::vector<BinomialFactor> factors;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) factors.push_back({i, k, 1});
      auto part = expand_binomial_product(IntVec(n, Int(0)), n, factors);
      support.insert(support.end(), part.begin(), part.end());
    }
    spec.supports.push_back(std::move(support));
  }
  finalize(spec);
  return spec;
}

SystemSpec gen_nbody(int n) {
  if (n < 3) throw InputError("gen nbody: n must be at least 3");
  SystemSpec spec;
  spec.ambient_dim = n;
  spec.provenance = {"generator", "nbody n=" + std::to_string(n) +
                                      " convention=docs/benchmark_systems.md"};
  for (int j = 0; j < n; ++j) {
    std::vector<IntVec> support;
    {
      // lambda * x_j * prod_{i != j} (x_i - x_j)^2
      IntVec base(n, Int(0));
      base[j] = 1;
      std::vector<BinomialFactor> factors;
      for (int i = 0; i < n; ++i)
        if (i != j) factors.push_back({i, j, 2});
      auto part = expand_binomial_product(base, n, factors);
      support.insert(support.end(), part.begin(), part.end());
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      // m_i * prod_{k != i,j} (x_k - x_j)^2
      std::vector<BinomialFactor> factors;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) factors.push_back({k, j, 2});
      auto part = expand_binomial_product(IntVec(n, Int(0)), n, factors);
      support.insert(support.end(), part.begin(), part.end());
    }
    spec.supports.push_back(std::move(support));
  }
  finalize(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// support files

std::string to_support_json(const SystemSpec& spec) {
  nlohmann::ordered_json j;
  j["format"] = "pretrop-support";
  j["version"] = 1;
  j["dim"] = spec.ambient_dim;
  nlohmann::ordered_json supports = nlohmann::ordered_json::array();
  for (const auto& support : spec.supports) {
    nlohmann::ordered_json s = nlohmann::ordered_json::array();
    for (const IntVec& p : support) {
      nlohmann::ordered_json point = nlohmann::ordered_json::array();
      for (const Int& x : p) {
        if (!x.fits_slong_p())
          throw InputError("support exponent too large for the file format");
        point.push_back(static_cast<long long>(x.get_si()));
      }
      s.push_back(std::move(point));
    }
    supports.push_back(std::move(s));
  }
  j["supports"] = std::move(supports);
  j["provenance"] = {{"kind", spec.provenance.kind},
                     {"detail", spec.provenance.detail}};
  return j.dump(2) + "\n";
}

SystemSpec parse_support_json(const std::string& text,
                              std::string_view source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("support file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("supports"))
    throw InputError("support file: missing 'dim' or 'supports'");
  SystemSpec spec;
  if (!j["dim"].is_number_integer())
    throw InputError("support file: 'dim' must be an integer");
  spec.ambient_dim = j["dim"].get<int>();
  if (spec.ambient_dim < 1)
    throw InputError("support file: 'dim' must be positive");
  for (const auto& s : j["supports"]) {
    std::vector<IntVec> support;
    if (!s.is_array())
      throw InputError("support file: each support must be an array");
    for (const auto& p : s) {
      if (!p.is_array() ||
          static_cast<int>(p.size()) != spec.ambient_dim)
        throw InputError("support file: point with wrong dimension");
      IntVec point;
      for (const auto& x : p) {
        if (!x.is_number_integer())
          throw InputError("support file: exponents must be integers");
        point.push_back(Int(static_cast<long>(x.get<long long>())));
      }
      support.push_back(std::move(point));
    }
    spec.supports.push_back(std::move(support));
  }
  spec.provenance = {"file", std::string(source)};
  if (j.contains("provenance") && j["provenance"].is_object()) {
    const auto& p = j["provenance"];
    if (p.contains("detail") && p["detail"].is_string())
      spec.provenance.detail =
          std::string(source) + " (" + p["detail"].get<std::string>() + ")";
  }
  finalize(spec);
  return spec;
}

SystemSpec load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  bool json_like = false;
  if (path.size() > 4 && (path.ends_with(".sup") || path.ends_with(".json")))
    json_like = true;
  else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      json_like = (c == '{');
      break;
    }
  }
  return json_like ? parse_support_json(text, path)
                   : parse_polynomials(text, path);
}

std::vector<Polytope> build_polytopes(const SystemSpec& spec) {
  std::vector<Polytope> out;
  out.reserve(spec.supports.size());
  for (const auto& support : spec.supports)
    out.push_back(build_polytope(support));
  return out;
}

}  // namespace pretrop
