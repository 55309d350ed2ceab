#pragma once

#include <complex>

namespace cuspsl2 {

using CplxVal = std::complex<double>;

}  // namespace cuspsl2
