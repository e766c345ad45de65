#pragma once

#include <string>

#include "q4rank/quarticfield.hpp"

namespace q4rank::detail {

struct ClosedForm {
  std::string case_id;
  int rank = 0;
};

// Case dispatch over n's factorization shape; total over valid fields.
ClosedForm closed_form_eval(const QuarticField& K);

}  // namespace q4rank::detail
