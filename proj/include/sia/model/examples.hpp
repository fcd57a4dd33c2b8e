#pragma once

#include <string>
#include <vector>

namespace sia::model {

struct Example {
  std::string name;  // stable identifier, e.g. "slow-fast"
  std::string title;
  std::string text;  // maple-like source
  std::string citation;
};

/// Built-in example catalog (six models).
const std::vector<Example>& examples();
const Example* find_example(const std::string& name);

}  // namespace sia::model
