#include "lpa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "lpa/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lpa {

std::uint32_t path_range(const Graph& g, const PathTerm& p) {
  return p.edges.empty() ? p.start : static_cast<std::uint32_t>(g.dst(p.edges.back()));
}

bool is_valid_path(const Graph& g, const PathTerm& p) {
  if (p.start >= g.num_vertices()) return false;
  std::size_t at = p.start;
  for (auto e : p.edges) {
    if (e >= g.num_edges() || g.src(e) != at) return false;
    at = g.dst(e);
  }
  return true;
}

PathTerm concat(const PathTerm& a, const PathTerm& b) {
  PathTerm out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool is_valid_monomial(const Graph& g, const Monomial& m) {
  return is_valid_path(g, m.p) && is_valid_path(g, m.q) && path_range(g, m.p) == path_range(g, m.q);
}

namespace {

using Terms = AlgebraElement::Terms;

void accumulate(Terms& out, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void accumulate(Terms& out, Monomial&& m, const Scalar& c) {
  auto [it, inserted] = out.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void merge_into(Terms& out, const Terms& part) {
  for (const auto& [m, c] : part) accumulate(out, m, c);
}

PathTerm path_from_labels(const Graph& g, std::string_view start, const std::vector<EdgeId>& ids) {
  PathTerm p;
  if (ids.empty()) {
    p.start = static_cast<std::uint32_t>(g.vertex_index(start));
    return p;
  }
  p.start = static_cast<std::uint32_t>(g.src(g.edge_index(ids.front())));
  for (const auto& id : ids) p.edges.push_back(static_cast<std::uint32_t>(g.edge_index(id)));
  if (!is_valid_path(g, p)) throw Error(ErrorKind::GraphMismatch, "edges do not form a path");
  return p;
}

// gamma[v] = smallest out-edge of v by id, or -1 for sinks.
std::vector<std::int64_t> special_edges(const Graph& g) {
  std::vector<std::int64_t> gamma(g.num_vertices(), -1);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t e : g.out_edges(v)) {
      if (gamma[v] < 0 || g.edge(e).id < g.edge(static_cast<std::size_t>(gamma[v])).id) {
        gamma[v] = static_cast<std::int64_t>(e);
      }
    }
  }
  return gamma;
}

bool reducible(const Graph& g, const std::vector<std::int64_t>& gamma, const Monomial& m) {
  if (m.p.edges.empty() || m.q.edges.empty()) return false;
  const auto last = m.p.edges.back();
  return last == m.q.edges.back() && static_cast<std::int64_t>(last) == gamma[g.src(last)];
}

// Reduces c * m and adds the result to `out`. Each rewrite shortens the
// carried monomial; the siblings it spawns end in a non-special edge, so
// they are already reduced.
void reduce_into(const Graph& g, const std::vector<std::int64_t>& gamma, Monomial m, const Scalar& c,
                 Terms& out) {
  while (reducible(g, gamma, m)) {
    const auto last = m.p.edges.back();
    const std::size_t v = g.src(last);
    m.p.edges.pop_back();
    m.q.edges.pop_back();
    const Scalar minus_c = -c;
    for (std::size_t e : g.out_edges(v)) {
      if (e == last) continue;
      Monomial sibling = m;
      sibling.p.edges.push_back(static_cast<std::uint32_t>(e));
      sibling.q.edges.push_back(static_cast<std::uint32_t>(e));
      accumulate(out, std::move(sibling), minus_c);
    }
  }
  accumulate(out, std::move(m), c);
}

// (x.p x.q^*)(y.p y.q^*); false when the product vanishes.
bool monomial_product(const Monomial& x, const Monomial& y, Monomial& out) {
  const PathTerm& q = x.q;
  const PathTerm& s = y.p;
  if (q.start != s.start) return false;
  const std::size_t k = std::min(q.length(), s.length());
  for (std::size_t i = 0; i < k; ++i) {
    if (q.edges[i] != s.edges[i]) return false;
  }
  out.p = x.p;
  out.q = y.q;
  if (s.length() >= q.length()) {
    out.p.edges.insert(out.p.edges.end(), s.edges.begin() + static_cast<std::ptrdiff_t>(k), s.edges.end());
  } else {
    out.q.edges.insert(out.q.edges.end(), q.edges.begin() + static_cast<std::ptrdiff_t>(k), q.edges.end());
  }
  return true;
}

void check_fields(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "elements over different fields");
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

constexpr std::size_t kParallelThreshold = 64;

}  // namespace

AlgebraElement AlgebraElement::of(Field f, const Monomial& m) {
  AlgebraElement a(f);
  a.terms_.emplace(m, Scalar::one(f));
  return a;
}

AlgebraElement AlgebraElement::vertex(const Graph& g, Field f, std::string_view v) {
  PathTerm p{static_cast<std::uint32_t>(g.vertex_index(v)), {}};
  return of(f, Monomial{p, p});
}

AlgebraElement AlgebraElement::edge(const Graph& g, Field f, std::string_view e) {
  return path(g, f, {EdgeId(e)}, {});
}

AlgebraElement AlgebraElement::ghost(const Graph& g, Field f, std::string_view e) {
  return path(g, f, {}, {EdgeId(e)});
}

AlgebraElement AlgebraElement::path(const Graph& g, Field f, const std::vector<EdgeId>& p,
                                    const std::vector<EdgeId>& q) {
  if (p.empty() && q.empty()) throw Error(ErrorKind::GraphMismatch, "path() needs at least one edge");
  Monomial m;
  if (!p.empty()) {
    m.p = path_from_labels(g, "", p);
    const auto r = path_range(g, m.p);
    m.q = q.empty() ? PathTerm{r, {}} : path_from_labels(g, "", q);
  } else {
    m.q = path_from_labels(g, "", q);
    m.p = PathTerm{path_range(g, m.q), {}};
  }
  if (!is_valid_monomial(g, m)) throw Error(ErrorKind::GraphMismatch, "p and q end at different vertices");
  return of(f, m);
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  if (!c.is_zero()) accumulate(terms_, m, c);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_fields(*this, o);
  merge_into(terms_, o.terms_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  if (!(c.field() == a.field_)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  AlgebraElement out(a.field_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : a.terms_) out.terms_.emplace(m, c * x);
  return out;
}

void validate(const Graph& g, const AlgebraElement& a) {
  for (const auto& [m, c] : a.terms()) {
    if (!is_valid_monomial(g, m)) throw Error(ErrorKind::GraphMismatch, "element is not over this graph");
  }
}

bool is_reduced(const Graph& g, const Monomial& m) { return !reducible(g, special_edges(g), m); }

AlgebraElement normal_form_serial(const Graph& g, const AlgebraElement& a) {
  validate(g, a);
  const auto gamma = special_edges(g);
  Terms out;
  for (const auto& [m, c] : a.terms()) reduce_into(g, gamma, m, c, out);
  AlgebraElement r(a.field());
  for (auto& [m, c] : out) r.add_term(m, c);
  return r;
}

AlgebraElement normal_form(const Graph& g, const AlgebraElement& a) {
  if (a.size() < kParallelThreshold) return normal_form_serial(g, a);
  validate(g, a);
  const auto gamma = special_edges(g);
  const std::vector<std::pair<Monomial, Scalar>> input(a.terms().begin(), a.terms().end());
  std::vector<Terms> partial(static_cast<std::size_t>(thread_count()));
  const auto n = static_cast<std::ptrdiff_t>(input.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    reduce_into(g, gamma, input[i].first, input[i].second, partial[static_cast<std::size_t>(thread_id())]);
  }
  Terms out;
  for (const auto& part : partial) merge_into(out, part);
  AlgebraElement r(a.field());
  for (auto& [m, c] : out) r.add_term(m, c);
  return r;
}

AlgebraElement multiply_serial(const Graph& g, const AlgebraElement& a, const AlgebraElement& b) {
  check_fields(a, b);
  validate(g, a);
  validate(g, b);
  Terms out;
  Monomial prod;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      if (monomial_product(x, y, prod)) accumulate(out, prod, cx * cy);
    }
  }
  AlgebraElement raw(a.field());
  for (auto& [m, c] : out) raw.add_term(m, c);
  return normal_form_serial(g, raw);
}

AlgebraElement multiply(const Graph& g, const AlgebraElement& a, const AlgebraElement& b) {
  if (a.size() * b.size() < kParallelThreshold) return multiply_serial(g, a, b);
  check_fields(a, b);
  validate(g, a);
  validate(g, b);
  const std::vector<std::pair<Monomial, Scalar>> left(a.terms().begin(), a.terms().end());
  std::vector<Terms> partial(static_cast<std::size_t>(thread_count()));
  const auto n = static_cast<std::ptrdiff_t>(left.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Terms& mine = partial[static_cast<std::size_t>(thread_id())];
    Monomial prod;
    for (const auto& [y, cy] : b.terms()) {
      if (monomial_product(left[i].first, y, prod)) accumulate(mine, prod, left[i].second * cy);
    }
  }
  Terms out;
  for (const auto& part : partial) merge_into(out, part);
  AlgebraElement raw(a.field());
  for (auto& [m, c] : out) raw.add_term(m, c);
  return normal_form(g, raw);
}

bool equal(const Graph& g, const AlgebraElement& a, const AlgebraElement& b) {
  return normal_form(g, a - b).is_zero();
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement out(a.field());
  for (const auto& [m, c] : a.terms()) out.add_term(Monomial{m.q, m.p}, c);
  return out;
}

std::map<int, AlgebraElement> degree_split(const Graph& g, const AlgebraElement& a) {
  validate(g, a);
  std::map<int, AlgebraElement> parts;
  for (const auto& [m, c] : a.terms()) {
    parts.try_emplace(m.degree(), a.field()).first->second.add_term(m, c);
  }
  return parts;
}

AlgebraElement transport(const Graph& from, const Graph& to, const AlgebraElement& a) {
  auto map_path = [&](const PathTerm& p) {
    PathTerm out;
    auto v = to.find_vertex(from.vertex(p.start));
    if (!v) throw Error(ErrorKind::GraphMismatch, "vertex '" + from.vertex(p.start) + "' missing in target graph");
    out.start = static_cast<std::uint32_t>(*v);
    for (auto e : p.edges) {
      auto f = to.find_edge(from.edge(e).id);
      if (!f) throw Error(ErrorKind::GraphMismatch, "edge '" + from.edge(e).id + "' missing in target graph");
      out.edges.push_back(static_cast<std::uint32_t>(*f));
    }
    return out;
  };
  AlgebraElement out(a.field());
  for (const auto& [m, c] : a.terms()) {
    Monomial t{map_path(m.p), map_path(m.q)};
    if (!is_valid_monomial(to, t)) throw Error(ErrorKind::GraphMismatch, "edge endpoints differ in target graph");
    out.add_term(t, c);
  }
  return out;
}

namespace {

std::string format_path(const Graph& g, const PathTerm& p) {
  if (p.edges.empty()) return g.vertex(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += '.';
    s += g.edge(p.edges[i]).id;
  }
  return s;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits `text` into edge ids at '.' boundaries so that consecutive edges
// compose. Edge ids may themselves contain dots.
std::optional<PathTerm> segment_edges(const Graph& g, const std::string& text) {
  std::vector<std::size_t> dots;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '.') dots.push_back(i);
  }
  dots.push_back(text.size());
  PathTerm path;
  std::function<bool(std::size_t, std::optional<std::size_t>)> go = [&](std::size_t begin,
                                                                        std::optional<std::size_t> at) {
    if (begin > text.size()) return true;
    for (std::size_t end : dots) {
      if (end < begin) continue;
      auto e = g.find_edge(std::string_view(text).substr(begin, end - begin));
      if (!e || (at && g.src(*e) != *at)) continue;
      path.edges.push_back(static_cast<std::uint32_t>(*e));
      if (end == text.size() || go(end + 1, g.dst(*e))) return true;
      path.edges.pop_back();
    }
    return false;
  };
  if (!go(0, std::nullopt) || path.edges.empty()) return std::nullopt;
  path.start = static_cast<std::uint32_t>(g.src(path.edges.front()));
  return path;
}

std::optional<PathTerm> parse_side(const Graph& g, const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (!g.has_edge(text)) {
    if (auto v = g.find_vertex(text)) return PathTerm{static_cast<std::uint32_t>(*v), {}};
  }
  auto p = segment_edges(g, text);
  if (!p) throw Error(ErrorKind::ParseError, "'" + text + "' is neither a vertex nor a path");
  return p;
}

Monomial parse_monomial(const Graph& g, const std::string& body) {
  // Split on the '|' at bracket depth 0.
  int depth = 0;
  std::size_t bar = std::string::npos;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[') ++depth;
    if (body[i] == ']') --depth;
    if (body[i] == '|' && depth == 0) {
      if (bar != std::string::npos) throw Error(ErrorKind::ParseError, "two '|' in '[" + body + "]'");
      bar = i;
    }
  }
  const std::string left = trim(body.substr(0, bar));
  const std::string right = bar == std::string::npos ? std::string() : trim(body.substr(bar + 1));
  auto p = parse_side(g, left);
  auto q = parse_side(g, right);
  if (!p && !q) throw Error(ErrorKind::ParseError, "empty monomial '[" + body + "]'");
  if (!p) p = PathTerm{path_range(g, *q), {}};
  if (!q) q = PathTerm{path_range(g, *p), {}};
  Monomial m{*p, *q};
  if (!is_valid_monomial(g, m)) {
    throw Error(ErrorKind::ParseError, "p and q end at different vertices in '[" + body + "]'");
  }
  return m;
}

}  // namespace

std::string format_element(const Graph& g, const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Scalar coeff = c;
    if (!first) {
      if (coeff.is_negative()) {
        s += " - ";
        coeff = -coeff;
      } else {
        s += " + ";
      }
    }
    first = false;
    s += coeff.to_string();
    s += "*[";
    s += format_path(g, m.p);
    if (!m.q.edges.empty()) {
      s += '|';
      s += format_path(g, m.q);
    }
    s += ']';
  }
  return s;
}

AlgebraElement parse_element(const Graph& g, Field f, std::string_view text) {
  AlgebraElement out(f);
  const std::string t = trim(text);
  if (t == "0") return out;
  std::size_t i = 0;
  bool any = false;
  while (i < t.size()) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i == t.size()) break;
    bool negative = false;
    if (t[i] == '+' || t[i] == '-') {
      negative = t[i] == '-';
      ++i;
    } else if (any) {
      throw Error(ErrorKind::ParseError, "expected '+' or '-' at offset " + std::to_string(i));
    }
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    const std::size_t open = t.find('[', i);
    if (open == std::string::npos) throw Error(ErrorKind::ParseError, "term without '[...]'");
    std::string coeff_text = trim(std::string_view(t).substr(i, open - i));
    Scalar coeff = Scalar::one(f);
    if (!coeff_text.empty()) {
      if (coeff_text.back() != '*') throw Error(ErrorKind::ParseError, "expected '*' before '['");
      coeff_text.pop_back();
      coeff = Scalar::parse(f, trim(coeff_text));
    }
    int depth = 0;
    std::size_t close = open;
    for (; close < t.size(); ++close) {
      if (t[close] == '[') ++depth;
      if (t[close] == ']' && --depth == 0) break;
    }
    if (close == t.size()) throw Error(ErrorKind::ParseError, "unbalanced '['");
    const Monomial m = parse_monomial(g, t.substr(open + 1, close - open - 1));
    out.add_term(m, negative ? -coeff : coeff);
    any = true;
    i = close + 1;
  }
  if (!any) throw Error(ErrorKind::ParseError, "empty element");
  return out;
}

}  // namespace lpa
