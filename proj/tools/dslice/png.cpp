#include "dslice/png.hpp"

#include <cstdio>
#include <memory>
#include <stdexcept>

#ifdef DSLICE_HAVE_PNG
#include <png.h>
#endif

namespace dslice::cli {

#ifdef DSLICE_HAVE_PNG

bool png_available() { return true; }

void write_png(const Image& image, const std::string& path) {
    std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("libpng initialisation failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("failed writing '" + path + "'");
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()), static_cast<png_uint_32>(image.height()), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const auto* data = image.bytes().data();
    const std::size_t stride = static_cast<std::size_t>(image.width()) * 3;
    for (int j = 0; j < image.height(); ++j) {
        png_write_row(png, data + static_cast<std::size_t>(j) * stride);
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

#else

bool png_available() { return false; }

void write_png(const Image&, const std::string&) {
    throw std::runtime_error("this build has no PNG support");
}

#endif

}  // namespace dslice::cli
