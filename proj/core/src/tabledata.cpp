#include "verocensus/tabledata.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "tabledata_embed.hpp"

namespace vrc {
namespace {

struct Rat {
  long long num = 0, den = 1;

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

Rat operator+(Rat a, Rat b) {
  Rat r{a.num * b.den + b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}
Rat operator-(Rat a, Rat b) {
  Rat r{a.num * b.den - b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}
Rat operator*(Rat a, Rat b) {
  Rat r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}
Rat operator/(Rat a, Rat b) {
  if (b.num == 0) throw std::domain_error("division by zero in formula");
  Rat r{a.num * b.den, a.den * b.num};
  r.reduce();
  return r;
}

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := atom ('^' digits)?,
// atom := 'q' | digits | '(' expr ')' | '-' factor.
class Parser {
 public:
  Parser(const std::string& s, long long q) : s_(s), q_(q) {}

  Rat parse() {
    const Rat r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw std::invalid_argument("trailing junk in formula: " + s_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Rat expr() {
    Rat r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  Rat term() {
    Rat r = factor();
    for (;;) {
      if (eat('*'))
        r = r * factor();
      else if (eat('/'))
        r = r / factor();
      else
        return r;
    }
  }

  Rat factor() {
    Rat base = atom();
    if (eat('^')) {
      const Rat e = atom();
      if (e.den != 1 || e.num < 0)
        throw std::invalid_argument("bad exponent in formula: " + s_);
      Rat r{1, 1};
      for (long long i = 0; i < e.num; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Rat atom() {
    skip_ws();
    if (eat('(')) {
      const Rat r = expr();
      if (!eat(')')) throw std::invalid_argument("unbalanced parentheses: " + s_);
      return r;
    }
    if (eat('-')) return Rat{0, 1} - factor();
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      return Rat{q_, 1};
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long long v = 0;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      return Rat{v, 1};
    }
    throw std::invalid_argument("cannot parse formula: " + s_);
  }

  const std::string& s_;
  long long q_;
  std::size_t pos_ = 0;
};

const nlohmann::json& data() {
  static const nlohmann::json j = nlohmann::json::parse(detail::kTablesJson);
  return j;
}

std::map<std::string, TableDef> load_tables() {
  std::map<std::string, TableDef> out;
  for (const auto& [id, t] : data()["tables"].items()) {
    TableDef def;
    def.id = id;
    def.title = t["title"];
    def.object = t["object"];
    def.parity = t["parity"];
    def.columns = t["columns"].get<std::vector<std::string>>();
    for (const auto& row : t["rows"]) {
      TableRow r;
      r.label = row["label"];
      r.cells = row["cells"].get<std::vector<std::string>>();
      if (row.contains("note")) r.note = row["note"];
      def.rows.push_back(std::move(r));
    }
    out.emplace(id, std::move(def));
  }
  return out;
}

const std::map<std::string, TableDef>& tables() {
  static const std::map<std::string, TableDef> t = load_tables();
  return t;
}

}  // namespace

long long eval_formula(const std::string& expr, long long q) {
  const Rat r = Parser(expr, q).parse();
  if (r.den != 1)
    throw std::domain_error("formula '" + expr + "' is not integral at q=" +
                            std::to_string(q));
  return r.num;
}

std::vector<long long> TableDef::row_values(const std::string& label,
                                            long long q) const {
  for (const TableRow& r : rows)
    if (r.label == label) {
      std::vector<long long> v;
      v.reserve(r.cells.size());
      for (const std::string& c : r.cells) v.push_back(eval_formula(c, q));
      return v;
    }
  throw std::invalid_argument("no row " + label + " in table " + id);
}

const TableDef& table_def(const std::string& id) {
  const auto it = tables().find(id);
  if (it == tables().end())
    throw std::invalid_argument("unknown table id " + id);
  return it->second;
}

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, t] : tables()) ids.push_back(id);
  return ids;
}

std::vector<long long> orbit_size_row(const std::string& which, long long q) {
  const auto& sizes = data()["orbit_sizes"];
  if (!sizes.contains(which))
    throw std::invalid_argument("unknown orbit size row " + which);
  // Fixed reporting order (json objects iterate alphabetically).
  std::vector<std::string> keys;
  if (which == "points_odd")
    keys = {"P1", "P2e", "P2i", "P3"};
  else if (which == "points_even")
    keys = {"P1", "P2n", "P2s", "P3"};
  else
    keys = {"H1", "H2r", "H2i", "H3"};
  std::vector<long long> out;
  for (const std::string& k : keys)
    out.push_back(eval_formula(sizes[which][k].get<std::string>(), q));
  return out;
}

}  // namespace vrc
