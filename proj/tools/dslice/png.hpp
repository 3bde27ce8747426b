#pragma once

#include <string>

#include "dslice/raster.hpp"

namespace dslice::cli {

/// True when the tool was built against libpng.
bool png_available();

/// 8-bit RGB PNG; throws std::runtime_error on I/O failure or without libpng.
void write_png(const Image& image, const std::string& path);

}  // namespace dslice::cli
