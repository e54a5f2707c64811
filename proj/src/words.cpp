#include "dgog/words.hpp"

#include "dgog/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dgog {

VertexIndex range_of(GraphOfGroups const& g, SignedEdge f) {
  auto const& e = g.edge(f.edge);
  return f.is_forward() ? e.range : e.source;
}

VertexIndex source_of(GraphOfGroups const& g, SignedEdge f) {
  auto const& e = g.edge(f.edge);
  return f.is_forward() ? e.source : e.range;
}

Embedding const& embedding_of(GraphOfGroups const& g, SignedEdge f) {
  return f.is_forward() ? g.range_embedding(f.edge) : g.source_embedding(f.edge);
}

Embedding const& opposite_embedding_of(GraphOfGroups const& g, SignedEdge f) {
  return f.is_forward() ? g.source_embedding(f.edge) : g.range_embedding(f.edge);
}

NormalWord NormalWord::identity(GraphOfGroups const& g, VertexIndex v) { return element(g, v, 0); }

NormalWord NormalWord::element(GraphOfGroups const& g, VertexIndex v, Integer const& value) {
  return NormalWord(v, v, {}, reduce(value, g.vertex_group(v)));
}

bool NormalWord::is_directed() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter const& l) { return l.edge.is_forward(); });
}

WordBuilder::WordBuilder(GraphOfGroups const& g, VertexIndex start)
    : graph_(&g), start_(start), current_(start), pending_(0) {}

WordBuilder::WordBuilder(GraphOfGroups const& g, NormalWord const& prefix)
    : graph_(&g),
      start_(prefix.range()),
      current_(prefix.source()),
      stack_(prefix.letters()),
      pending_(prefix.tail()) {}

void WordBuilder::append_element(Integer const& value) {
  pending_ = reduce(pending_ + value, graph_->vertex_group(current_));
}

void WordBuilder::append_edge(SignedEdge f) {
  GraphOfGroups const& g = *graph_;
  if (range_of(g, f) != current_) {
    throw Error(ErrorKind::NotComposable, "edge \"" + g.edge(f.edge).id + (f.is_forward() ? "" : "~") +
                                              "\" does not start at vertex \"" + g.vertex_id(current_) + "\"");
  }
  Decomposition d = decompose(pending_, embedding_of(g, f));
  Integer pushed = opposite_embedding_of(g, f).apply(d.quot);
  if (d.rep == 0 && !stack_.empty() && stack_.back().edge == f.reversed()) {
    // fbar 0 f collapses; the previous representative absorbs what was pushed through.
    Letter top = std::move(stack_.back());
    stack_.pop_back();
    current_ = range_of(g, top.edge);
    pending_ = reduce(top.rep + pushed, g.vertex_group(current_));
    return;
  }
  stack_.push_back({std::move(d.rep), f});
  current_ = source_of(g, f);
  pending_ = std::move(pushed);
}

void WordBuilder::append(NormalWord const& w) {
  if (w.range() != current_) {
    throw Error(ErrorKind::SourceMismatch, "cannot append a word at \"" + graph_->vertex_id(w.range()) +
                                               "\" after a word ending at \"" + graph_->vertex_id(current_) + "\"");
  }
  for (auto const& l : w.letters()) append(l);
  append_element(w.tail());
}

NormalWord WordBuilder::word() const { return NormalWord(start_, current_, stack_, pending_); }

NormalWord normalize(GraphOfGroups const& g, RawWord const& raw) {
  if (raw.elements.size() != raw.edges.size() + 1)
    throw Error(ErrorKind::Parse, "a word needs exactly one more group element than edges");
  VertexIndex start;
  if (!raw.edges.empty()) {
    start = range_of(g, raw.edges.front());
    if (raw.start && *raw.start != start)
      throw Error(ErrorKind::NotComposable, "first edge does not start at vertex \"" + g.vertex_id(*raw.start) + "\"");
  } else if (raw.start) {
    start = *raw.start;
  } else {
    throw Error(ErrorKind::Parse, "a word without edges needs an explicit vertex");
  }
  WordBuilder b(g, start);
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    b.append_element(raw.elements[i]);
    b.append_edge(raw.edges[i]);
  }
  b.append_element(raw.elements.back());
  return b.word();
}

NormalWord multiply(GraphOfGroups const& g, NormalWord const& a, NormalWord const& b) {
  WordBuilder builder(g, a);
  builder.append(b);
  return builder.word();
}

NormalWord invert(GraphOfGroups const& g, NormalWord const& a) {
  WordBuilder b(g, a.source());
  b.append_element(-a.tail());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    b.append_edge(it->edge.reversed());
    b.append_element(-it->rep);
  }
  return b.word();
}

RawWord to_raw(NormalWord const& w) {
  RawWord raw;
  raw.start = w.range();
  for (auto const& l : w.letters()) {
    raw.elements.push_back(l.rep);
    raw.edges.push_back(l.edge);
  }
  raw.elements.push_back(w.tail());
  return raw;
}

VertexIndex path_source(GraphOfGroups const& g, SigmaPath const& p) {
  return p.letters.empty() ? p.range : g.edge(p.letters.back().edge).source;
}

bool is_prefix(SigmaPath const& a, SigmaPath const& b) {
  return a.range == b.range && a.letters.size() <= b.letters.size() &&
         std::equal(a.letters.begin(), a.letters.end(), b.letters.begin());
}

DirectedWord::DirectedWord(NormalWord w) : word_(std::move(w)) {
  if (!word_.is_directed()) throw Error(ErrorKind::DomainViolation, "word has a reversed letter");
}

std::optional<DirectedWord> DirectedWord::from(NormalWord w) {
  if (!w.is_directed()) return std::nullopt;
  return DirectedWord(std::move(w));
}

DirectedWord DirectedWord::from_path(GraphOfGroups const& g, SigmaPath const& p, Integer const& tail) {
  WordBuilder b(g, p.range);
  for (auto const& l : p.letters) {
    if (l.rep < 0 || l.rep >= g.range_embedding(l.edge).index())
      throw Error(ErrorKind::DomainViolation, "letter representative outside the transversal");
    b.append({l.rep, {l.edge, Direction::Forward}});
  }
  b.append_element(tail);
  return DirectedWord(b.word());
}

SigmaPath q_projection(DirectedWord const& w) {
  SigmaPath p{w.range(), {}};
  p.letters.reserve(w.length());
  for (auto const& l : w.letters()) p.letters.push_back({l.rep, l.edge.edge});
  return p;
}

bool le(DirectedWord const& lambda, DirectedWord const& mu) {
  if (lambda.range() != mu.range() || lambda.length() > mu.length()) return false;
  return std::equal(lambda.letters().begin(), lambda.letters().end(), mu.letters().begin());
}

std::optional<DirectedWord> join(GraphOfGroups const& g, DirectedWord const& lambda, DirectedWord const& mu) {
  auto untailed = [&](DirectedWord const& w) {
    return DirectedWord(multiply(g, w.word(), NormalWord::element(g, w.source(), -w.tail())));
  };
  if (le(lambda, mu)) return untailed(mu);
  if (le(mu, lambda)) return untailed(lambda);
  return std::nullopt;
}

bool is_exhaustive(GraphOfGroups const& g, VertexIndex v, std::vector<DirectedWord> const& family) {
  if (family.empty()) return false;
  std::vector<SigmaPath> targets;
  std::size_t depth = 0;
  for (auto const& w : family) {
    if (w.range() != v) throw Error(ErrorKind::SourceMismatch, "family member does not have range \"" + g.vertex_id(v) + "\"");
    targets.push_back(q_projection(w));
    depth = std::max(depth, w.length());
  }
  SigmaGraph sigma = sigma_graph(g);
  SigmaPath current{v, {}};
  // Depth-first over vE_Sigma^{<= depth}; a subtree is covered once its root is some q(lambda).
  std::function<bool(VertexIndex)> covered = [&](VertexIndex at) -> bool {
    if (std::find(targets.begin(), targets.end(), current) != targets.end()) return true;
    if (current.letters.size() == depth) return false;
    for (std::size_t i : sigma.at_range[at]) {
      auto const& l = sigma.letters[i];
      current.letters.push_back(l);
      bool ok = covered(g.edge(l.edge).source);
      current.letters.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return covered(v);
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

RawWord parse_word(GraphOfGroups const& g, std::string_view text) {
  auto tokens = split_tokens(text);
  if (tokens.size() % 2 == 0)
    throw Error(ErrorKind::Parse, "word literal needs an odd number of tokens: g1 e1 ... g(n+1)");
  RawWord raw;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string const& t = tokens[i];
    if (i % 2 == 0) {
      auto at = t.find('@');
      raw.elements.push_back(parse_integer(t.substr(0, at)));
      if (at != std::string::npos) {
        if (i != 0) throw Error(ErrorKind::Parse, "only the first element may carry a vertex: '" + t + "'");
        auto v = g.find_vertex(t.substr(at + 1));
        if (!v) throw Error(ErrorKind::Parse, "unknown vertex in '" + t + "'");
        raw.start = *v;
      }
    } else {
      bool reversed = !t.empty() && t.back() == '~';
      std::string id = reversed ? t.substr(0, t.size() - 1) : t;
      auto e = g.find_edge(id);
      if (!e) throw Error(ErrorKind::Parse, "unknown edge '" + id + "'");
      raw.edges.push_back({*e, reversed ? Direction::Reversed : Direction::Forward});
    }
  }
  return raw;
}

NormalWord parse_normal_word(GraphOfGroups const& g, std::string_view text) { return normalize(g, parse_word(g, text)); }

std::string format_letters(GraphOfGroups const& g, std::vector<Letter> const& letters) {
  std::string out;
  for (auto const& l : letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l.rep) + ' ' + g.edge(l.edge.edge).id + (l.edge.is_forward() ? "" : "~");
  }
  return out;
}

std::string format_word(GraphOfGroups const& g, NormalWord const& w) {
  if (w.letters().empty()) return to_string(w.tail()) + '@' + g.vertex_id(w.range());
  return format_letters(g, w.letters()) + ' ' + to_string(w.tail());
}

}  // namespace dgog
