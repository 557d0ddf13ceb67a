#include "meyerlab/io/files.hpp"

#include "meyerlab/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace meyerlab::io {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ResourceError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw ResourceError("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ResourceError("cannot move output into place at '" + path + "': " + ec.message());
    }
}

}  // namespace meyerlab::io
