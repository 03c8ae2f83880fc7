#include <cassert>

#include "rsvplan/model/formulation.hpp"

namespace rsvplan::model {

VariableIndexMap::VariableIndexMap(std::size_t users, std::size_t cyber,
                                   std::size_t physical, std::size_t people,
                                   std::size_t edge, std::size_t scenarios)
    : users_(users),
      cyber_(cyber),
      physical_(physical),
      people_(people),
      edge_(edge),
      scenarios_(scenarios),
      stage1_(users * (cyber + physical + people + edge)),
      per_scenario_(users * (cyber + physical + edge + 1)) {}

int VariableIndexMap::cyber_r(std::size_t w, std::size_t v) const {
  assert(w < users_ && v < cyber_);
  return static_cast<int>(w * cyber_ + v);
}

int VariableIndexMap::physical_r(std::size_t w, std::size_t x) const {
  assert(w < users_ && x < physical_);
  return static_cast<int>(users_ * cyber_ + w * physical_ + x);
}

int VariableIndexMap::people_r(std::size_t w, std::size_t y) const {
  assert(w < users_ && y < people_);
  return static_cast<int>(users_ * (cyber_ + physical_) + w * people_ + y);
}

int VariableIndexMap::edge_r(std::size_t w, std::size_t z) const {
  assert(w < users_ && z < edge_);
  return static_cast<int>(users_ * (cyber_ + physical_ + people_) + w * edge_ +
                          z);
}

int VariableIndexMap::cyber_o(std::size_t s, std::size_t w,
                              std::size_t v) const {
  assert(s < scenarios_ && w < users_ && v < cyber_);
  return static_cast<int>(stage1_ + s * per_scenario_ + w * cyber_ + v);
}

int VariableIndexMap::physical_o(std::size_t s, std::size_t w,
                                 std::size_t x) const {
  assert(s < scenarios_ && w < users_ && x < physical_);
  return static_cast<int>(stage1_ + s * per_scenario_ + users_ * cyber_ +
                          w * physical_ + x);
}

int VariableIndexMap::edge_o(std::size_t s, std::size_t w,
                             std::size_t z) const {
  assert(s < scenarios_ && w < users_ && z < edge_);
  return static_cast<int>(stage1_ + s * per_scenario_ +
                          users_ * (cyber_ + physical_) + w * edge_ + z);
}

int VariableIndexMap::outsource(std::size_t s, std::size_t w) const {
  assert(s < scenarios_ && w < users_);
  return static_cast<int>(stage1_ + s * per_scenario_ +
                          users_ * (cyber_ + physical_ + edge_) + w);
}

std::size_t VariableIndexMap::total_variables() const {
  return stage1_ + scenarios_ * per_scenario_;
}

}  // namespace rsvplan::model
