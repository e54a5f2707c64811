#pragma once

#include "dgog/gog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgog {

enum class Direction : std::uint8_t { Forward, Reversed };

/// An edge of the doubled graph: e or its reverse ebar.
struct SignedEdge {
  EdgeIndex edge;
  Direction dir;

  SignedEdge reversed() const { return {edge, dir == Direction::Forward ? Direction::Reversed : Direction::Forward}; }
  bool is_forward() const { return dir == Direction::Forward; }
  bool operator==(SignedEdge const&) const = default;
};

VertexIndex range_of(GraphOfGroups const& g, SignedEdge f);
VertexIndex source_of(GraphOfGroups const& g, SignedEdge f);
/// alpha_f : G_f -> G_{r(f)}.
Embedding const& embedding_of(GraphOfGroups const& g, SignedEdge f);
/// alpha_fbar : G_f -> G_{s(f)}.
Embedding const& opposite_embedding_of(GraphOfGroups const& g, SignedEdge f);

/// One normalized step g f with g in the transversal for f.
struct Letter {
  Integer rep;
  SignedEdge edge;

  bool operator==(Letter const&) const = default;
};

/// A Sigma-normal word g_1 f_1 ... g_n f_n g_{n+1} of the fundamental groupoid.
///
/// Two words represent the same groupoid element iff they compare equal.
class NormalWord {
 public:
  static NormalWord identity(GraphOfGroups const& g, VertexIndex v);
  /// The length-zero word `value` at v.
  static NormalWord element(GraphOfGroups const& g, VertexIndex v, Integer const& value);

  VertexIndex range() const noexcept { return range_; }
  VertexIndex source() const noexcept { return source_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  Integer const& tail() const noexcept { return tail_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_directed() const;

  bool operator==(NormalWord const&) const = default;

 private:
  friend class WordBuilder;
  NormalWord(VertexIndex range, VertexIndex source, std::vector<Letter> letters, Integer tail)
      : range_(range), source_(source), letters_(std::move(letters)), tail_(std::move(tail)) {}

  VertexIndex range_;
  VertexIndex source_;
  std::vector<Letter> letters_;
  Integer tail_;
};

/// An unnormalized word g_1 e_1 ... e_n g_{n+1}; `start` pins the vertex when there are no edges.
struct RawWord {
  std::optional<VertexIndex> start;
  std::vector<Integer> elements;
  std::vector<SignedEdge> edges;
};

/// Incremental normalizer: feed elements and edges left to right.
class WordBuilder {
 public:
  WordBuilder(GraphOfGroups const& g, VertexIndex start);
  /// Continues after an already normalized word.
  WordBuilder(GraphOfGroups const& g, NormalWord const& prefix);

  void append_element(Integer const& value);
  /// Throws NotComposable when r(f) differs from the current vertex.
  void append_edge(SignedEdge f);
  void append(Letter const& letter) {
    append_element(letter.rep);
    append_edge(letter.edge);
  }
  void append(NormalWord const& w);

  VertexIndex current() const noexcept { return current_; }
  NormalWord word() const;

 private:
  GraphOfGroups const* graph_;
  VertexIndex start_;
  VertexIndex current_;
  std::vector<Letter> stack_;
  Integer pending_;
};

/// Throws NotComposable or Parse (element count mismatch, missing start).
NormalWord normalize(GraphOfGroups const& g, RawWord const& raw);
/// Throws SourceMismatch when s(a) != r(b).
NormalWord multiply(GraphOfGroups const& g, NormalWord const& a, NormalWord const& b);
NormalWord invert(GraphOfGroups const& g, NormalWord const& a);

RawWord to_raw(NormalWord const& w);

/// A finite path in E_Sigma starting at `range`.
struct SigmaPath {
  VertexIndex range;
  std::vector<SigmaLetter> letters;

  bool operator==(SigmaPath const&) const = default;
};

VertexIndex path_source(GraphOfGroups const& g, SigmaPath const& p);
bool is_prefix(SigmaPath const& a, SigmaPath const& b);

/// A normal word with no reversed letters: an element of the category Lambda.
class DirectedWord {
 public:
  /// Throws DomainViolation when `w` has a reversed letter.
  explicit DirectedWord(NormalWord w);
  static std::optional<DirectedWord> from(NormalWord w);
  /// The word q(p) * tail.
  static DirectedWord from_path(GraphOfGroups const& g, SigmaPath const& p, Integer const& tail = 0);

  NormalWord const& word() const noexcept { return word_; }
  VertexIndex range() const noexcept { return word_.range(); }
  VertexIndex source() const noexcept { return word_.source(); }
  std::vector<Letter> const& letters() const noexcept { return word_.letters(); }
  Integer const& tail() const noexcept { return word_.tail(); }
  std::size_t length() const noexcept { return word_.length(); }

  bool operator==(DirectedWord const&) const = default;

 private:
  NormalWord word_;
};

/// q : Lambda -> E_Sigma^*, dropping the tail.
SigmaPath q_projection(DirectedWord const& w);
/// lambda <= mu in Lambda: q(lambda) is a prefix of q(mu).
bool le(DirectedWord const& lambda, DirectedWord const& mu);
/// The larger of two comparable words with tail 0; nullopt when they have no common extension.
std::optional<DirectedWord> join(GraphOfGroups const& g, DirectedWord const& lambda, DirectedWord const& mu);
/// True iff every path of vE_Sigma^n (n the longest q-length in F) extends some q(lambda), lambda in F.
bool is_exhaustive(GraphOfGroups const& g, VertexIndex v, std::vector<DirectedWord> const& family);

/// Word literal `g1 e1 g2 e2 ... g(n+1)`; `e~` is a reversed edge and `g@v` pins the start vertex.
RawWord parse_word(GraphOfGroups const& g, std::string_view text);
NormalWord parse_normal_word(GraphOfGroups const& g, std::string_view text);
std::string format_word(GraphOfGroups const& g, NormalWord const& w);
/// Letters only, e.g. `0 e~ 1 e`; empty string for no letters.
std::string format_letters(GraphOfGroups const& g, std::vector<Letter> const& letters);

}  // namespace dgog
