#pragma once

#include <string>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// The two small matrices every closed-form check is written against.
ComplexMatrix example_t2();  // [[1,0],[1,1]]
ComplexMatrix example_t3();  // [[0,1,0],[0,0,2],[0,0,0]]

enum class Comparison { Equal, Less };

struct ExampleRow {
  std::string matrix;    // "T2" or "T3"
  std::string quantity;  // e.g. "gamma_sq"
  double computed = 0.0;
  double expected = 0.0;
  std::string expected_form;  // e.g. "28/13"
  Comparison comparison = Comparison::Equal;
  double tol = 1e-9;
  bool pass = false;
};

struct WorkedExamples {
  std::vector<ExampleRow> rows;
  bool all_pass() const noexcept;
};

/// Recomputes every closed-form row and compares at 1e-9 (strict rows need computed < expected).
WorkedExamples worked_examples();

}  // namespace numrad
