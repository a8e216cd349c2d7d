#pragma once

#include <string_view>

namespace lefcalc {

/// Instance document for the five-piece worked example: a complex with a
/// fixed vertex X1, a pointwise-fixed closed edge X2, a fixed open edge X3,
/// two exchanged vertices X4 and two exchanged open triangles with their
/// open edges X5, carrying ranks 1, 4, 2, 1, 3.
std::string_view paper_example_document();

}  // namespace lefcalc
