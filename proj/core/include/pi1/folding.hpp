#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pi1/word.hpp"

namespace pi1 {

// Folded, basepointed, core subgroup graph for a finitely generated subgroup
// of the free group on an alphabet.  Vertex 0 is the basepoint.  Immutable
// once built; all queries are const and thread-safe.
class SubgroupGraph {
 public:
  static SubgroupGraph build(const AlphabetRef& alphabet, std::span<const Word> generators);
  static SubgroupGraph build(const AlphabetRef& alphabet, std::initializer_list<Word> generators) {
    return build(alphabet, std::span<const Word>(generators.begin(), generators.size()));
  }

  // Coset graph of a transitive permutation action: perms[s][v] is the image
  // of vertex v under generator s.  The result is a degree-|perms[s]| cover.
  static SubgroupGraph from_permutation_action(const AlphabetRef& alphabet,
                                               const std::vector<std::vector<std::size_t>>& perms);

  bool member(const Word& w) const;
  std::size_t rank() const;
  std::optional<std::size_t> index() const;  // nullopt = infinite
  std::vector<Word> basis() const;

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const;
  const AlphabetRef& alphabet() const { return alphabet_; }

 private:
  SubgroupGraph() = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  AlphabetRef alphabet_;
  // out_[v][s] / in_[v][s]: target of the s-labeled edge leaving/entering v.
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

}  // namespace pi1
