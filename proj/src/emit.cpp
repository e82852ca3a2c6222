#include "hermlab/emit.hpp"

#include <algorithm>
#include <sstream>

namespace hermlab::emit {

using cyclo::CycNum;

json cyc_json(const CycNum& x) {
  json j;
  j["N"] = x.order();
  auto c = json::array();
  for (const auto& r : x.coeffs()) c.push_back(cyclo::to_string(r));
  j["coeffs"] = std::move(c);
  j["text"] = x.render();
  return j;
}

json matrix_json(const schemes::CMatrix& m) {
  auto out = json::array();
  for (const auto& row : m) {
    auto r = json::array();
    for (const auto& x : row) r.push_back(cyc_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

json matrix_json(const schemes::IntMatrix& m) { return m; }

namespace {

std::string latex_rational(const mpq_class& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const bool neg = r < 0;
  mpz_class num = abs(r.get_num());
  return std::string(neg ? "-" : "") + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

// Coefficient b in front of a surd: "", "-", "2", "\frac{3}{2}".
std::string latex_coeff(const mpq_class& b) {
  if (b == 1) return "";
  if (b == -1) return "-";
  return latex_rational(b);
}

}  // namespace

std::string latex_number(const CycNum& x) {
  if (x.is_rational()) return latex_rational(x.rational());
  // a + b sqrt(D) for the quadratic subfields the tables use.
  for (long d : {-3L, -1L, 2L, -2L, 3L, 5L, -5L, 6L, -6L, 7L, -7L}) {
    const auto s = CycNum::sqrt_of_integer(x.order(), d);
    if (!s) continue;
    // x = a + b*s: read b off a nonconstant coordinate of s, then check.
    const auto& xc = x.coeffs();
    const auto& sc = s->coeffs();
    std::size_t pos = sc.size();
    for (std::size_t k = 1; k < sc.size(); ++k)
      if (sc[k] != 0) {
        pos = k;
        break;
      }
    if (pos == sc.size()) continue;
    const mpq_class b = xc[pos] / sc[pos];
    const CycNum rest = x - *s * b;
    if (!rest.is_rational()) continue;
    const mpq_class a = rest.rational();
    std::string surd = d == -1 ? "i" : d < 0 ? "\\sqrt{" + std::to_string(-d) + "}\\,i" : "\\sqrt{" + std::to_string(d) + "}";
    std::string out;
    if (a != 0) out = latex_rational(a);
    std::string cb = latex_coeff(b);
    if (!out.empty() && b > 0) out += "+";
    out += cb + surd;
    return out;
  }
  return "\\text{" + x.render() + "}";
}

std::string latex_pmatrix(const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) os << (j ? " & " : "") << cells[i][j];
    os << (i + 1 < cells.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string latex_matrix(const schemes::CMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const auto& x : row) cells.back().push_back(latex_number(x));
  }
  return latex_pmatrix(cells);
}

std::string latex_matrix(const schemes::IntMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    cells.emplace_back();
    for (auto x : row) cells.back().push_back(std::to_string(x));
  }
  return latex_pmatrix(cells);
}

std::string text_matrix(const std::vector<std::vector<std::string>>& cells) {
  std::size_t w = 1;
  for (const auto& row : cells)
    for (const auto& c : row) w = std::max(w, c.size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << std::string(w - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

std::string text_matrix(const schemes::CMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const auto& x : row) cells.back().push_back(x.render());
  }
  return text_matrix(cells);
}

std::string text_matrix(const schemes::IntMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    cells.emplace_back();
    for (auto x : row) cells.back().push_back(std::to_string(x));
  }
  return text_matrix(cells);
}

json scheme_json(const schemes::Scheme& s, const schemes::CharTable* t) {
  json j;
  j["order"] = s.order();
  j["classes"] = s.classes();
  j["labels"] = s.labels();
  j["valencies"] = s.valencies();
  j["commutative"] = s.commutative();
  j["symmetric"] = s.symmetric();
  j["axiom_violations"] = s.axiom_violations();
  auto L = json::array();
  for (const auto& m : schemes::intersection_matrices(s)) L.push_back(m);
  j["L"] = std::move(L);
  if (t) {
    j["cyclotomic_order"] = t->cyclotomic_order;
    j["minimal_cyclotomic_order"] = t->minimal_order;
    j["P"] = matrix_json(t->P);
    j["Q"] = matrix_json(t->Q);
    j["idempotent_ranks"] = t->ranks;
    j["representation_degrees"] = t->rep_degrees;
    j["multiplicities"] = t->multiplicities;
    j["table_violations"] = schemes::verify_char_table(s, *t);
    if (s.commutative()) {
      auto Ls = json::array();
      for (const auto& m : schemes::dual_intersection_matrices(*t)) Ls.push_back(matrix_json(m));
      j["Lstar"] = std::move(Ls);
    }
  }
  return j;
}

std::string scheme_latex(const schemes::Scheme& s, const schemes::CharTable* t) {
  std::ostringstream os;
  os << "% order " << s.order() << ", " << s.classes() << " classes\n";
  const auto L = schemes::intersection_matrices(s);
  for (std::size_t i = 0; i < L.size(); ++i) os << "L_{" << i << "} = " << latex_matrix(L[i]) << "\n\n";
  if (t) {
    os << "P = " << latex_matrix(t->P) << "\n\n";
    os << "Q = " << latex_matrix(t->Q) << "\n";
    if (s.commutative()) {
      const auto Ls = schemes::dual_intersection_matrices(*t);
      for (std::size_t i = 0; i < Ls.size(); ++i) os << "\nL_{" << i << "}^* = " << latex_matrix(Ls[i]) << "\n";
    }
  }
  return os.str();
}

std::string scheme_text(const schemes::Scheme& s, const schemes::CharTable* t) {
  std::ostringstream os;
  os << "order " << s.order() << ", classes " << s.classes() << (s.commutative() ? ", commutative" : ", noncommutative")
     << "\nvalencies";
  for (auto k : s.valencies()) os << ' ' << k;
  os << "\nlabels";
  for (auto l : s.labels()) os << ' ' << l;
  os << '\n';
  const auto L = schemes::intersection_matrices(s);
  for (std::size_t i = 0; i < L.size(); ++i) os << "\nL" << i << ":\n" << text_matrix(L[i]);
  if (t) {
    os << "\nP:\n" << text_matrix(t->P) << "\nQ:\n" << text_matrix(t->Q);
    os << "\nranks";
    for (auto r : t->ranks) os << ' ' << r;
    os << "\ndegrees";
    for (auto r : t->rep_degrees) os << ' ' << r;
    os << "\nmultiplicities";
    for (auto r : t->multiplicities) os << ' ' << r;
    os << '\n';
    if (s.commutative()) {
      const auto Ls = schemes::dual_intersection_matrices(*t);
      for (std::size_t i = 0; i < Ls.size(); ++i) os << "\nL*" << i << ":\n" << text_matrix(Ls[i]);
    }
  }
  return os.str();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

int Report::exit_code() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == Status::fail) return 1;
    if (c.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

json Report::to_json() const {
  json j;
  j["q"] = q;
  j["command"] = command;
  auto cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", to_string(c.status)}});
  j["checks"] = std::move(cs);
  j["timings"] = timings;
  if (!extra.is_null()) j["result"] = extra;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " q=" << q << '\n';
  for (const auto& c : checks) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (c.status != Status::pass) os << ": expected " << c.expected.dump() << ", got " << c.actual.dump();
    os << '\n';
  }
  for (const auto& [k, v] : timings) os << "  time " << k << ": " << v << " s\n";
  return os.str();
}

std::string Report::to_latex() const {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\n\\hline\ncheck & status & actual \\\\\n\\hline\n";
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '_' || c == '&' || c == '%' || c == '#' || c == '{' || c == '}') o += '\\';
      o += c;
    }
    return o;
  };
  for (const auto& c : checks) {
    std::string a = c.actual.dump();
    if (a.size() > 60) a = a.substr(0, 57) + "...";
    os << "\\texttt{" << esc(c.name) << "} & " << to_string(c.status) << " & \\texttt{" << esc(a) << "} \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace hermlab::emit
