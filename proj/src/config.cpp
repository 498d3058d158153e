#include "covercalc/config.hpp"

#include "covercalc/presets.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace covercalc::cli {

namespace {

struct Value {
  enum class Type { Integer, String, Boolean, Array } type;
  std::string text;                // integer literal, string contents
  bool flag = false;
  std::vector<std::string> items;  // integer literals
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void validation_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ValidationError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string strip_comment(std::string_view raw) {
  bool in_string = false;
  std::string out;
  for (char ch : raw) {
    if (ch == '"') in_string = !in_string;
    if (ch == '#' && !in_string) break;
    out.push_back(ch);
  }
  return out;
}

Value parse_value(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty()) parse_error(line, "missing value");
  Value v{};
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') parse_error(line, "unterminated string");
    v.type = Value::Type::String;
    v.text = std::string(text.substr(1, text.size() - 2));
    if (v.text.find('"') != std::string::npos) parse_error(line, "unexpected quote in string");
    return v;
  }
  if (text == "true" || text == "false") {
    v.type = Value::Type::Boolean;
    v.flag = text == "true";
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']') parse_error(line, "unterminated array");
    v.type = Value::Type::Array;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) return v;
    while (true) {
      const auto comma = body.find(',');
      std::string_view item = trim(body.substr(0, comma));
      if (!is_integer(item)) parse_error(line, "array items must be integers, got '" + std::string(item) + "'");
      v.items.emplace_back(item.front() == '+' ? item.substr(1) : item);
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return v;
  }
  if (is_integer(text)) {
    v.type = Value::Type::Integer;
    v.text = std::string(text.front() == '+' ? text.substr(1) : text);
    return v;
  }
  parse_error(line, "cannot parse value '" + std::string(text) + "'");
}

std::int64_t small_integer(const std::string& literal, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(literal, &used);
    if (used != literal.size()) throw std::invalid_argument(literal);
    return v;
  } catch (const std::exception&) {
    validation_error(line, "integer '" + literal + "' out of range");
  }
}

const Value& expect(const Value& v, Value::Type type, const std::string& key, std::size_t line) {
  if (v.type != type) {
    static const char* names[] = {"an integer", "a string", "a boolean", "an array"};
    validation_error(line, "'" + key + "' must be " + names[static_cast<int>(type)]);
  }
  return v;
}

}  // namespace

cover::CoverSpec CoverConfig::cover_spec() const {
  if (preset) return geometry::preset(*preset);
  std::vector<geometry::ProjLine> lines;
  std::vector<cover::GroupElement> phi;
  for (std::size_t i = 0; i < this->lines.size(); ++i) {
    const auto& entry = this->lines[i];
    if (entry.phi.size() != k) {
      throw Error(ErrorKind::ValidationError, "line " + std::to_string(i + 1) + ": phi has " +
                                                  std::to_string(entry.phi.size()) + " entries, expected k = " +
                                                  std::to_string(k));
    }
    for (auto x : entry.phi) {
      if (x < 0 || x >= q) {
        throw Error(ErrorKind::ValidationError, "line " + std::to_string(i + 1) + ": phi entry " + std::to_string(x) +
                                                    " not in [0, " + std::to_string(q) + ")");
      }
    }
    lines.emplace_back(entry.coeffs);
    phi.emplace_back(q < 2 ? 2 : q, entry.phi);
  }
  cover::CoverSpec spec{geometry::Arrangement(std::move(lines)), q, k, std::move(phi)};
  cover::validate_cover_spec(spec);
  return spec;
}

CoverConfig parse_config(std::string_view text) {
  CoverConfig cfg;
  std::set<std::string> seen_top;
  std::set<std::string> seen_line;
  bool in_line = false;
  bool have_q = false;
  bool have_k = false;
  std::size_t line_no = 0;
  std::size_t table_line = 0;

  auto finish_table = [&] {
    if (!in_line) return;
    if (!seen_line.count("coeffs")) validation_error(table_line, "[[line]] without coeffs");
    if (!seen_line.count("phi")) validation_error(table_line, "[[line]] without phi");
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string stripped = strip_comment(raw);
    const std::string_view body = trim(stripped);
    if (body.empty()) continue;
    if (body.front() == '[' && body.find('=') == std::string_view::npos) {
      if (body != "[[line]]") parse_error(line_no, "unknown table header '" + std::string(body) + "'");
      finish_table();
      in_line = true;
      table_line = line_no;
      seen_line.clear();
      cfg.lines.push_back(LineEntry{{0, 0, 0}, {}});
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected 'key = value'");
    const std::string key(trim(body.substr(0, eq)));
    if (key.empty()) parse_error(line_no, "missing key");
    for (char ch : key) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') parse_error(line_no, "bad key '" + key + "'");
    }
    const Value v = parse_value(body.substr(eq + 1), line_no);

    if (in_line) {
      if (!seen_line.insert(key).second) validation_error(line_no, "duplicate key '" + key + "'");
      auto& entry = cfg.lines.back();
      if (key == "coeffs") {
        expect(v, Value::Type::Array, key, line_no);
        if (v.items.size() != 3) validation_error(line_no, "coeffs needs exactly 3 integers");
        for (std::size_t i = 0; i < 3; ++i) entry.coeffs[i] = BigInt(v.items[i].c_str());
        if (entry.coeffs[0] == 0 && entry.coeffs[1] == 0 && entry.coeffs[2] == 0) {
          validation_error(line_no, "coeffs are all zero");
        }
      } else if (key == "phi") {
        expect(v, Value::Type::Array, key, line_no);
        for (const auto& item : v.items) entry.phi.push_back(small_integer(item, line_no));
      } else {
        validation_error(line_no, "unknown key '" + key + "' in [[line]]");
      }
      continue;
    }

    if (!seen_top.insert(key).second) validation_error(line_no, "duplicate key '" + key + "'");
    if (key == "preset") {
      cfg.preset = expect(v, Value::Type::String, key, line_no).text;
    } else if (key == "q") {
      cfg.q = small_integer(expect(v, Value::Type::Integer, key, line_no).text, line_no);
      have_q = true;
    } else if (key == "k") {
      const std::int64_t k = small_integer(expect(v, Value::Type::Integer, key, line_no).text, line_no);
      if (k < 0) validation_error(line_no, "k must be positive");
      cfg.k = static_cast<std::size_t>(k);
      have_k = true;
    } else if (key == "universal") {
      cfg.universal = expect(v, Value::Type::Boolean, key, line_no).flag;
    } else if (key == "torsion_divisors") {
      cfg.torsion_divisors = expect(v, Value::Type::Boolean, key, line_no).flag;
    } else if (key == "curves") {
      cfg.curves = expect(v, Value::Type::Boolean, key, line_no).flag;
    } else {
      validation_error(line_no, "unknown key '" + key + "'");
    }
  }
  finish_table();

  if (cfg.preset) {
    if (have_q || have_k || !cfg.lines.empty()) {
      throw Error(ErrorKind::ValidationError, "a preset config cannot also give q, k or lines");
    }
  } else {
    if (!have_q) throw Error(ErrorKind::ValidationError, "missing 'q'");
    if (!have_k) throw Error(ErrorKind::ValidationError, "missing 'k'");
    if (cfg.lines.empty()) throw Error(ErrorKind::ValidationError, "no [[line]] tables");
  }
  cfg.cover_spec();
  return cfg;
}

std::string emit_config(const cover::CoverSpec& spec, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "q = " << spec.q << "\n";
  out << "k = " << spec.k << "\n";
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const auto& c = spec.arrangement.line(i).coeffs();
    out << "\n[[line]]\n";
    out << "coeffs = [" << c[0] << ", " << c[1] << ", " << c[2] << "]\n";
    out << "phi = [";
    for (std::size_t j = 0; j < spec.k; ++j) out << (j ? ", " : "") << spec.phi[i][j];
    out << "]\n";
  }
  return out.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::UnknownPreset:
    case ErrorKind::IdenticalLines:
    case ErrorKind::UnsupportedGroup:
      return 2;
    case ErrorKind::BadPoint:
      return 3;
    case ErrorKind::NoetherViolation:
    case ErrorKind::NegativeIrregularity:
      return 4;
    case ErrorKind::NotBig:
    case ErrorKind::ChartFailure:
      return 1;
  }
  return 1;
}

}  // namespace covercalc::cli
