#pragma once

#include <string_view>
#include <vector>

namespace flagcoh::detail {

struct TranscribedFormula {
  std::string_view name;
  std::string_view text;
};

const std::vector<TranscribedFormula>& e8t_relation_text();
const std::vector<TranscribedFormula>& e8c_relation_text();
const std::vector<TranscribedFormula>& uvwx_text();

}  // namespace flagcoh::detail
