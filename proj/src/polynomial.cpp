#include "centro/polynomial.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace centro {

namespace {

int totalDegree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double monomial(const ExponentVector& e, const Vec& x) {
  double r = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) r *= ipow(x[static_cast<Eigen::Index>(i)], e[i]);
  return r;
}

// c * d/dx_{idx...} of the monomial x^e, evaluated at x.
double derivativeTerm(const ExponentVector& e, double c, std::initializer_list<int> idx, const Vec& x) {
  ExponentVector f = e;
  double factor = c;
  for (int i : idx) {
    if (f[static_cast<std::size_t>(i)] == 0) return 0.0;
    factor *= f[static_cast<std::size_t>(i)];
    --f[static_cast<std::size_t>(i)];
  }
  return factor * monomial(f, x);
}

TermMap multiplyTerms(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExponentVector e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

std::string monomialText(const ExponentVector& e) {
  std::string out;
  const int dim = static_cast<int>(e.size());
  for (int i = 0; i < dim; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    if (!out.empty()) out += "*";
    out += variableName(i, dim);
    if (e[static_cast<std::size_t>(i)] > 1) out += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
  }
  return out.empty() ? "1" : out;
}

std::string formatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool GradedLexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

HomogeneousPolynomial::HomogeneousPolynomial(int dim, const TermMap& terms) : dim_(dim) {
  if (dim < 1) throw PreconditionError("polynomial dimension must be positive");
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != dim) throw PreconditionError("exponent vector length differs from dimension");
    for (int v : e)
      if (v < 0) throw PreconditionError("negative exponent");
    if (c != 0.0) terms_[e] += c;
  }
  for (auto it = terms_.begin(); it != terms_.end();) it = (it->second == 0.0) ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) throw PreconditionError("zero polynomial has no degree");

  degree_ = totalDegree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (totalDegree(e) != degree_) {
      std::ostringstream os;
      os << "mixed degrees: ";
      bool first = true;
      for (const auto& [e2, c2] : terms_) {
        if (!first) os << ", ";
        first = false;
        os << monomialText(e2) << " has degree " << totalDegree(e2);
      }
      throw MixedDegreeError(os.str());
    }
  }
  if (degree_ < 2) throw PreconditionError("homogeneous degree must be at least 2");
}

double HomogeneousPolynomial::coefficient(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double HomogeneousPolynomial::maxAbsCoefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double HomogeneousPolynomial::value(const Vec& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c * monomial(e, x);
  return s;
}

Vec HomogeneousPolynomial::gradient(const Vec& x) const {
  Vec g = Vec::Zero(dim_);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < dim_; ++i) g[i] += derivativeTerm(e, c, {i}, x);
  return g;
}

Mat HomogeneousPolynomial::hessian(const Vec& x) const {
  Mat h = Mat::Zero(dim_, dim_);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) h(i, j) += derivativeTerm(e, c, {i, j}, x);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < i; ++j) h(i, j) = h(j, i);
  return h;
}

Tensor3 HomogeneousPolynomial::thirdTensor(const Vec& x) const {
  Tensor3 t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = j; k < dim_; ++k) {
        double s = 0.0;
        for (const auto& [e, c] : terms_) s += derivativeTerm(e, c, {i, j, k}, x);
        t.setSymmetric(i, j, k, s);
      }
  return t;
}

UnivariatePolynomial<double> HomogeneousPolynomial::restrictToLine(const Vec& x, const Vec& v) const {
  if (v.norm() == 0.0) throw PreconditionError("line direction must be nonzero");
  std::vector<UnivariatePolynomial<double>> linear;
  for (int i = 0; i < dim_; ++i) linear.push_back(UnivariatePolynomial<double>({x[i], v[i]}));
  UnivariatePolynomial<double> out;
  for (const auto& [e, c] : terms_) {
    UnivariatePolynomial<double> term({c});
    for (int i = 0; i < dim_; ++i)
      for (int p = 0; p < e[static_cast<std::size_t>(i)]; ++p) term = term * linear[static_cast<std::size_t>(i)];
    out = out + term;
  }
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::substitute(const Mat& m) const {
  if (m.rows() != dim_) throw PreconditionError("substitution matrix has wrong row count");
  const int newDim = static_cast<int>(m.cols());
  std::vector<TermMap> linear(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < newDim; ++j) {
      if (m(i, j) == 0.0) continue;
      ExponentVector e(static_cast<std::size_t>(newDim), 0);
      e[static_cast<std::size_t>(j)] = 1;
      linear[static_cast<std::size_t>(i)][e] = m(i, j);
    }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    TermMap prod{{ExponentVector(static_cast<std::size_t>(newDim), 0), c}};
    for (int i = 0; i < dim_; ++i)
      for (int p = 0; p < e[static_cast<std::size_t>(i)]; ++p) prod = multiplyTerms(prod, linear[static_cast<std::size_t>(i)]);
    for (const auto& [e2, c2] : prod) out[e2] += c2;
  }
  // Cancellation leaves rounding-level residue; drop it relative to the input scale.
  const double cut = 1e-14 * maxAbsCoefficient() * std::pow(std::max(1.0, m.cwiseAbs().maxCoeff()), degree_);
  TermMap cleaned;
  for (const auto& [e, c] : out)
    if (std::abs(c) > cut) cleaned[e] = c;
  return HomogeneousPolynomial(newDim, cleaned);
}

Tensor3 HomogeneousPolynomial::polarization() const {
  if (degree_ != 3) throw PreconditionError("polarization needs a cubic, got degree " + std::to_string(degree_));
  Tensor3 t = thirdTensor(Vec::Zero(dim_));
  t *= 1.0 / 6.0;
  return t;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(double s) const {
  TermMap t = terms_;
  for (auto& [e, c] : t) c *= s;
  return HomogeneousPolynomial(dim_, t);
}

HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("dimension mismatch in polynomial sum");
  TermMap t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return HomogeneousPolynomial(a.dim_, t);
}

HomogeneousPolynomial operator-(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  return a + b * -1.0;
}

HomogeneousPolynomial HomogeneousPolynomial::powerOfLinearForm(const Vec& l, int k) {
  const int dim = static_cast<int>(l.size());
  TermMap linear;
  for (int i = 0; i < dim; ++i) {
    if (l[i] == 0.0) continue;
    ExponentVector e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    linear[e] = l[i];
  }
  TermMap prod{{ExponentVector(static_cast<std::size_t>(dim), 0), 1.0}};
  for (int p = 0; p < k; ++p) prod = multiplyTerms(prod, linear);
  return HomogeneousPolynomial(dim, prod);
}

std::string variableName(int index, int dim) {
  static const char* letters[] = {"x", "y", "z", "w"};
  if (dim <= 4) return letters[index];
  return "x" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// text grammar

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  struct RawTerm {
    double coeff;
    std::vector<std::pair<int, int>> factors;  // (variable, power)
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = (get() == '-') ? -1.0 : 1.0;
      skip();
    }
    terms.push_back(term(sign));
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      get();
      skip();
      terms.push_back(term(op == '-' ? -1.0 : 1.0));
    }
    return terms;
  }

  bool usedIndexedNames() const { return indexed_; }
  bool usedLetterNames() const { return letters_; }

 private:
  RawTerm term(double sign) {
    RawTerm t{sign, {}};
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      t.coeff *= number();
      skip();
      if (peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
      get();
      skip();
    }
    t.factors.push_back(factor());
    for (;;) {
      skip();
      if (peek() != '*') break;
      get();
      skip();
      t.factors.push_back(factor());
    }
    return t;
  }

  std::pair<int, int> factor() {
    const std::size_t start = pos_;
    const char c = peek();
    int var = -1;
    if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      get();
      var = integer();
      indexed_ = true;
    } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      get();
      var = (c == 'x') ? 0 : (c == 'y') ? 1 : (c == 'z') ? 2 : 3;
      letters_ = true;
    } else {
      throw ParseError(pos_ < s_.size() ? std::string("unexpected character '") + c + "'" : "unexpected end of input",
                       start);
    }
    if (indexed_ && letters_) throw ParseError("cannot mix x,y,z,w with x0..xN names", start);
    skip();
    int power = 1;
    if (peek() == '^') {
      get();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", pos_);
      power = integer();
    }
    return {var, power};
  }

  double number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' ||
            ((s_[pos_] == '+' || s_[pos_] == '-') && pos_ > start && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + pos_) throw ParseError("malformed number", start);
    return v;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int v = 0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc()) throw ParseError("malformed integer", start);
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool indexed_ = false;
  bool letters_ = false;
};

}  // namespace

HomogeneousPolynomial parsePolynomial(std::string_view text, std::optional<int> dim) {
  Parser parser(text);
  const auto raw = parser.parse();
  int maxVar = 0;
  for (const auto& t : raw)
    for (const auto& [v, p] : t.factors) maxVar = std::max(maxVar, v);
  int d = dim.value_or(maxVar + 1);
  if (d <= maxVar) throw ParseError("variable index exceeds the requested dimension", 0);
  if (parser.usedLetterNames() && d > 4) throw ParseError("use x0..xN names when the dimension exceeds 4", 0);

  TermMap terms;
  for (const auto& t : raw) {
    ExponentVector e(static_cast<std::size_t>(d), 0);
    for (const auto& [v, p] : t.factors) e[static_cast<std::size_t>(v)] += p;
    terms[e] += t.coeff;
  }
  return HomogeneousPolynomial(d, terms);
}

std::string toText(const HomogeneousPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool needStar = false;
    if (mag != 1.0) {
      os << formatNumber(mag);
      needStar = true;
    }
    for (int i = 0; i < p.dim(); ++i) {
      const int power = e[static_cast<std::size_t>(i)];
      if (power == 0) continue;
      if (needStar) os << "*";
      os << variableName(i, p.dim());
      if (power > 1) os << "^" << power;
      needStar = true;
    }
  }
  return os.str();
}

HomogeneousPolynomial polynomialFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    const int dim = j.at("dim").get<int>();
    TermMap terms;
    for (const auto& t : j.at("terms")) terms[t.at("exp").get<ExponentVector>()] += t.at("c").get<double>();
    HomogeneousPolynomial p(dim, terms);
    if (j.contains("degree") && j.at("degree").get<int>() != p.degree())
      throw MixedDegreeError("declared degree " + std::to_string(j.at("degree").get<int>()) +
                             " differs from term degree " + std::to_string(p.degree()));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  }
}

std::string polynomialToJson(const HomogeneousPolynomial& p) {
  std::ostringstream os;
  os << "{\"dim\":" << p.dim() << ",\"degree\":" << p.degree() << ",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"exp\":[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "],\"c\":" << formatNumber(c) << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace centro
