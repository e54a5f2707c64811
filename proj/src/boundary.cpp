#include "dgog/boundary.hpp"

#include "dgog/error.hpp"

#include <algorithm>
#include <map>

namespace dgog {

LassoPath LassoPath::make(GraphOfGroups const& g, std::vector<SigmaLetter> prefix, std::vector<SigmaLetter> cycle) {
  if (cycle.empty()) throw Error(ErrorKind::Validation, "lasso cycle must be non-empty");
  std::vector<SigmaLetter const*> all;
  for (auto const& l : prefix) all.push_back(&l);
  for (auto const& l : cycle) all.push_back(&l);
  all.push_back(&cycle.front());
  for (std::size_t i = 0; i < all.size(); ++i) {
    SigmaLetter const& l = *all[i];
    if (l.edge >= g.edge_count()) throw Error(ErrorKind::Validation, "lasso letter names an unknown edge");
    if (l.rep < 0 || l.rep >= g.range_embedding(l.edge).index())
      throw Error(ErrorKind::Validation, "lasso letter " + to_string(l.rep) + ":" + g.edge(l.edge).id +
                                             " is outside the transversal");
    if (i > 0 && g.edge(all[i - 1]->edge).source != g.edge(l.edge).range)
      throw Error(ErrorKind::NotComposable, "lasso letters do not form a path at \"" + g.edge(l.edge).id + "\"");
  }

  // Primitive root of the cycle.
  std::size_t len = cycle.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i) periodic = cycle[i] == cycle[i - p];
    if (periodic) {
      cycle.resize(p);
      break;
    }
  }
  // Absorb prefix letters into a rotated cycle.
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }

  LassoPath out;
  out.base_ = g.edge(prefix.empty() ? cycle.front().edge : prefix.front().edge).range;
  out.prefix_ = std::move(prefix);
  out.cycle_ = std::move(cycle);
  return out;
}

SigmaLetter const& LassoPath::letter(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

SigmaPath prefix_of(LassoPath const& alpha, std::size_t k) {
  SigmaPath p{alpha.base(), {}};
  p.letters.reserve(k);
  for (std::size_t i = 0; i < k; ++i) p.letters.push_back(alpha.letter(i));
  return p;
}

bool extends(LassoPath const& alpha, DirectedWord const& mu) {
  if (mu.range() != alpha.base()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    auto const& l = mu.letters()[i];
    if (!(SigmaLetter{l.rep, l.edge.edge} == alpha.letter(i))) return false;
  }
  return true;
}

std::optional<ActionSplit> decompose_action(GraphOfGroups const& g, NormalWord const& gamma, LassoPath const& alpha) {
  if (gamma.source() != alpha.base())
    throw Error(ErrorKind::SourceMismatch, "word ends at \"" + g.vertex_id(gamma.source()) +
                                               "\" but the path starts at \"" + g.vertex_id(alpha.base()) + "\"");
  auto reversed = static_cast<std::size_t>(std::count_if(gamma.letters().begin(), gamma.letters().end(),
                                                         [](Letter const& l) { return !l.edge.is_forward(); }));
  DirectedWord mu = DirectedWord::from_path(g, prefix_of(alpha, reversed));
  auto lambda = DirectedWord::from(multiply(g, gamma, mu.word()));
  if (!lambda) return std::nullopt;
  return ActionSplit{std::move(*lambda), std::move(mu)};
}

ActionResult act(GraphOfGroups const& g, NormalWord const& gamma, LassoPath const& alpha, std::size_t max_steps) {
  auto split = decompose_action(g, gamma, alpha);
  if (!split) throw Error(ErrorKind::NotInDomain, "the path is not in the domain of the word");

  // gamma alpha = q(lambda) * carry * (alpha minus its first |mu| letters).
  std::vector<SigmaLetter> out = q_projection(split->lambda).letters;
  VertexIndex at = split->lambda.source();
  Integer carry = reduce(split->lambda.tail() - split->mu.tail(), g.vertex_group(at));
  std::size_t i = split->mu.length();
  std::size_t const prefix_len = alpha.prefix().size();
  std::size_t const cycle_len = alpha.cycle().size();

  std::map<std::pair<Integer, std::size_t>, std::size_t> seen;
  while (out.size() < max_steps) {
    if (i >= prefix_len) {
      auto [it, fresh] = seen.try_emplace({carry, (i - prefix_len) % cycle_len}, out.size());
      if (!fresh) {
        std::vector<SigmaLetter> cycle(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end());
        out.resize(it->second);
        return LassoPath::make(g, std::move(out), std::move(cycle));
      }
    }
    SigmaLetter const& l = alpha.letter(i++);
    Decomposition d = decompose(carry + l.rep, g.range_embedding(l.edge));
    out.push_back({std::move(d.rep), l.edge});
    carry = g.source_embedding(l.edge).apply(d.quot);
  }
  out.resize(max_steps);
  return PrefixResult{{split->lambda.range(), std::move(out)}};
}

std::string format_path_letters(GraphOfGroups const& g, std::vector<SigmaLetter> const& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '.';
    out += to_string(letters[i].rep) + ':' + g.edge(letters[i].edge).id;
  }
  return out;
}

std::string format_lasso(GraphOfGroups const& g, LassoPath const& alpha) {
  return format_path_letters(g, alpha.prefix()) + '|' + format_path_letters(g, alpha.cycle());
}

std::string format_action(GraphOfGroups const& g, ActionResult const& result) {
  if (auto const* lasso = std::get_if<LassoPath>(&result)) return format_lasso(g, *lasso);
  return format_path_letters(g, std::get<PrefixResult>(result).letters.letters) + "...";
}

namespace {

std::vector<SigmaLetter> parse_letters(GraphOfGroups const& g, std::string_view text) {
  std::vector<SigmaLetter> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find('.', start);
    std::string_view token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    auto colon = token.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorKind::Parse, "lasso letter '" + std::string(token) + "' is not of the form h:e");
    auto edge = g.find_edge(token.substr(colon + 1));
    if (!edge) throw Error(ErrorKind::Parse, "unknown edge in lasso letter '" + std::string(token) + "'");
    out.push_back({parse_integer(std::string(token.substr(0, colon))), *edge});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

LassoPath parse_lasso(GraphOfGroups const& g, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorKind::Parse, "lasso literal must have the form prefix|cycle");
  return LassoPath::make(g, parse_letters(g, text.substr(0, bar)), parse_letters(g, text.substr(bar + 1)));
}

}  // namespace dgog
