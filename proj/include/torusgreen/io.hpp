#ifndef TORUSGREEN_IO_HPP
#define TORUSGREEN_IO_HPP

// Whole-file text IO. Writes go through a temporary in the same directory
// followed by a rename, so readers never observe a half-written file and a
// failed write leaves any existing file untouched.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

#include <unistd.h>

#include "errors.hpp"

namespace torusgreen {

inline void write_text_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw io_error("write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw io_error("cannot move temporary file onto " + path);
    }
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path + " for reading");
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad())
        throw io_error("read failed for " + path);
    return content;
}

} // namespace torusgreen

#endif
