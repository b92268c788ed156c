#pragma once

#include <string>
#include <vector>

#include "zesprit/signal.hpp"

namespace zesprit {

// Signal files are headerless binary: interleaved re, im pairs as
// little-endian float64. The sample rate is not stored; callers supply it.

void write_signal(const std::string& path, const std::vector<cplx>& samples);

std::vector<cplx> read_signal(const std::string& path);

}  // namespace zesprit
