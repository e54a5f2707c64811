#include "fixtures.hpp"

using namespace dgog;

namespace fixtures {

GraphOfGroups bs12() { return loop(2, 1); }

GraphOfGroups z2z3() {
  return GraphOfGroups::build({{"v", CyclicGroup::finite(2)}, {"w", CyclicGroup::finite(3)}},
                              {{"e", "v", "w", CyclicGroup::finite(1), 1, 1}});
}

GraphOfGroups rose(int k) {
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({"e" + std::to_string(i), "v", "v", CyclicGroup::infinite(), 1, 1});
  return GraphOfGroups::build({{"v", CyclicGroup::infinite()}}, edges);
}

GraphOfGroups loop(long n, long m) {
  return GraphOfGroups::build({{"v", CyclicGroup::infinite()}}, {{"e", "v", "v", CyclicGroup::infinite(), n, m}});
}

GraphOfGroups mixed() {
  auto z = CyclicGroup::infinite();
  return GraphOfGroups::build({{"a", z}, {"b", z}},
                              {{"f", "a", "b", z, 2, 3}, {"g", "b", "a", z, 1, 2}, {"h", "a", "a", z, 3, -1}});
}

GraphOfGroups finite() {
  return GraphOfGroups::build({{"p", CyclicGroup::finite(4)}, {"q", CyclicGroup::finite(6)}},
                              {{"c", "p", "q", CyclicGroup::finite(2), 2, 3}, {"d", "q", "q", CyclicGroup::finite(3), 2, 4}});
}

NormalWord word(GraphOfGroups const& g, std::string const& literal) { return parse_normal_word(g, literal); }

DirectedWord directed(GraphOfGroups const& g, std::string const& literal) { return DirectedWord(word(g, literal)); }

}  // namespace fixtures
