#pragma once

#include "forge/ogposet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forge {

// Graded poset given by its covering relation, without orientation.
struct GradedPoset {
  std::vector<std::string> ids;
  std::vector<int> rank;
  std::vector<std::vector<int>> down;  // elements covered by x
  std::vector<std::vector<int>> up;    // elements covering x

  std::size_t size() const { return ids.size(); }
  int index(const std::string& id) const;
};

// Builds the cover lists and checks that every cover raises the rank by one.
GradedPoset make_graded(std::vector<std::string> ids, std::vector<int> rank,
                        const std::vector<std::pair<std::string, std::string>>& covers);

// Adds a least element "⊥" of rank −1 below gr₀P.
GradedPoset augment(const OgPoset& P);

struct Diamond {
  int bottom = -1;
  int mid1 = -1;
  int mid2 = -1;
  int top = -1;
};

using Path = std::vector<int>;

// The interval strictly between x and y.
std::vector<int> open_interval(const GradedPoset& G, int x, int y);

// First 2-interval that is not a diamond, if any.
std::optional<std::pair<int, int>> find_non_diamond(const GradedPoset& G);
bool is_thin(const GradedPoset& G);

Diamond diamond_at(const GradedPoset& G, int bottom, int top);  // throws NotThin
Path diamond_act(const GradedPoset& G, const Diamond& D, const Path& path);  // throws NotAPath

struct TransitivityReport {
  bool transitive = true;
  std::size_t pairs_checked = 0;
  std::size_t paths_checked = 0;
  // On failure: an interval and two covering paths in different classes.
  // On success: a sample path pair and the diamonds joining them.
  int x = -1;
  int y = -1;
  Path first;
  Path second;
  std::vector<Diamond> sequence;
};

TransitivityReport is_diamond_transitive(const GradedPoset& G);  // throws NotThin

// Thin graded poset with least element that is not diamond transitive: two diamond
// blocks sharing only their bottom and top.
GradedPoset broken_prism();

}  // namespace forge
